#include "toric/arith.hpp"

#include <limits>

#include "toric/errors.hpp"

namespace toric {

Integer binomial(const Integer& m, unsigned long k) {
  Integer out;
  mpz_bin_ui(out.get_mpz_t(), m.get_mpz_t(), k);
  return out;
}

Integer binomial(long m, unsigned long k) { return binomial(Integer(m), k); }

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  Rational r = value;
  r.canonicalize();
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_str();
}

Integer parse_integer(const std::string& text) {
  Integer out;
  std::string body = text;
  if (!body.empty() && body[0] == '+') body.erase(0, 1);
  if (body.empty() || out.set_str(body, 10) != 0) {
    fail(ErrorCode::kParse, "not an integer: '" + text + "'");
  }
  return out;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) fail(ErrorCode::kParse, "zero denominator: '" + text + "'");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

bool fits_int64(const Integer& value) {
  static const Integer lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const Integer hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  return value >= lo && value <= hi;
}

std::int64_t to_int64(const Integer& value) {
  if (!fits_int64(value)) fail(ErrorCode::kOverflow, "value exceeds 64-bit range: " + value.get_str());
  // mpz_get_si covers long, which is 64-bit on the supported platforms.
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return static_cast<std::int64_t>(value.get_si());
}

Integer from_int64(std::int64_t value) { return Integer(static_cast<long>(value)); }

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

bool is_integral(const Rational& value) { return value.get_den() == 1; }

}  // namespace toric
