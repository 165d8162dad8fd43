#include "toric/roots.hpp"

#include <Eigen/Core>
#include <unsupported/Eigen/Polynomials>

#include <algorithm>
#include <cmath>
#include <gmpxx.h>

#include "toric/errors.hpp"

namespace toric {

namespace {

constexpr mp_bitcnt_t kPolishBits = 256;

// Complex number over GMP floats, just enough for Horner evaluation and Newton steps.
struct BigComplex {
  mpf_class re{0, kPolishBits};
  mpf_class im{0, kPolishBits};
};

BigComplex mul(const BigComplex& a, const BigComplex& b) {
  BigComplex r;
  r.re = a.re * b.re - a.im * b.im;
  r.im = a.re * b.im + a.im * b.re;
  return r;
}

BigComplex div(const BigComplex& a, const BigComplex& b) {
  BigComplex r;
  mpf_class den(b.re * b.re + b.im * b.im, kPolishBits);
  r.re = (a.re * b.re + a.im * b.im) / den;
  r.im = (a.im * b.re - a.re * b.im) / den;
  return r;
}

// p(z) and p'(z) for integer coefficients c_0..c_d.
void horner(const std::vector<mpf_class>& c, const BigComplex& z, BigComplex& p, BigComplex& d) {
  p = BigComplex{};
  d = BigComplex{};
  for (std::size_t k = c.size(); k-- > 0;) {
    d = mul(d, z);
    d.re += p.re;
    d.im += p.im;
    p = mul(p, z);
    p.re += c[k];
  }
}

}  // namespace

std::vector<std::complex<double>> polynomial_roots(const std::vector<Rational>& coeffs) {
  std::size_t deg = coeffs.size();
  while (deg > 0 && coeffs[deg - 1] == 0) --deg;
  if (deg < 2) fail(ErrorCode::kPrecondition, "polynomial has no roots to locate (degree 0)");
  // Clear denominators so the polishing step works on exact integer coefficients.
  Integer l = 1;
  for (std::size_t k = 0; k < deg; ++k) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), coeffs[k].get_den_mpz_t());
  std::vector<mpf_class> ic;
  Eigen::VectorXd ec(static_cast<Eigen::Index>(deg));
  for (std::size_t k = 0; k < deg; ++k) {
    Rational x = coeffs[k] * l;
    ic.emplace_back(x.get_num(), kPolishBits);
    ec[static_cast<Eigen::Index>(k)] = x.get_d();
  }
  Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(ec);
  std::vector<std::complex<double>> out;
  const mpf_class eps(1e-60, kPolishBits);
  for (Eigen::Index i = 0; i < solver.roots().size(); ++i) {
    BigComplex z;
    z.re = solver.roots()[i].real();
    z.im = solver.roots()[i].imag();
    for (int it = 0; it < 100; ++it) {
      BigComplex p, d;
      horner(ic, z, p, d);
      if (d.re == 0 && d.im == 0) break;
      const BigComplex step = div(p, d);
      z.re -= step.re;
      z.im -= step.im;
      if (abs(step.re) + abs(step.im) <= eps) break;
    }
    out.emplace_back(z.re.get_d(), z.im.get_d());
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.real() == b.real() ? a.imag() < b.imag() : a.real() < b.real();
  });
  return out;
}

RootReport root_real_parts(const EhrhartPolynomial& l, double target, double tol) {
  RootReport r;
  r.target = target;
  r.tolerance = tol;
  r.roots = polynomial_roots(l.monomial_coefficients());
  r.verdict = true;
  for (const auto& z : r.roots) {
    r.real_parts.push_back(z.real());
    const double dev = std::abs(z.real() - target);
    r.max_deviation = std::max(r.max_deviation, dev);
    if (!(dev <= tol)) r.verdict = false;
  }
  return r;
}

}  // namespace toric
