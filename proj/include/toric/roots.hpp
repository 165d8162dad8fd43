#pragma once

#include <complex>
#include <vector>

#include "toric/ehrhart.hpp"

namespace toric {

// The only floating-point code in the library.

struct RootReport {
  std::vector<std::complex<double>> roots;
  std::vector<double> real_parts;
  double target = 0.0;
  double tolerance = 0.0;
  double max_deviation = 0.0;
  /// True iff every real part lies within tolerance of the target.
  bool verdict = false;
};

/// Complex roots of Σ c_k t^k (companion matrix, then Newton polishing at 256-bit precision).
std::vector<std::complex<double>> polynomial_roots(const std::vector<Rational>& coeffs);

/// Throws kPrecondition when the polynomial has degree 0.
RootReport root_real_parts(const EhrhartPolynomial& l, double target, double tol = 1e-9);

}  // namespace toric
