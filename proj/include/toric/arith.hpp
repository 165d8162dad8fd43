#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace toric {

using Integer = mpz_class;
using Rational = mpq_class;

/// Binomial coefficient C(m, k) as a polynomial in m, so negative m is allowed.
Integer binomial(const Integer& m, unsigned long k);
Integer binomial(long m, unsigned long k);
Integer factorial(unsigned long n);

std::string to_string(const Integer& value);
/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Accepts "p", "-p" or "p/q"; throws kParse on malformed text or zero denominator.
Integer parse_integer(const std::string& text);
Rational parse_rational(const std::string& text);

bool fits_int64(const Integer& value);
/// Throws kOverflow when the value does not fit.
std::int64_t to_int64(const Integer& value);
Integer from_int64(std::int64_t value);

Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);
bool is_integral(const Rational& value);

}  // namespace toric
