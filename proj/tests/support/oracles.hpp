#pragma once

// Independent reference computations for the test suites. Nothing here calls
// the library's root finder or evaluator.

#include <array>
#include <cmath>
#include <complex>
#include <string>

namespace oracle {

using Complex = std::complex<double>;

inline std::string data_path(const std::string& relative) {
  return std::string(PULLBACK_DATA_DIR) + "/" + relative;
}

/// Roots of c^3 + 2c^2 + c + 1: the real root by bisection on [-2, -1],
/// then the remaining quadratic from synthetic division and the quadratic
/// formula. Ordered real root, then the pair with negative imaginary part
/// first.
inline std::array<Complex, 3> period_three_parameters() {
  auto p = [](double c) { return ((c + 2.0) * c + 1.0) * c + 1.0; };
  double lo = -2.0;
  double hi = -1.0;  // p(-2) = -1 < 0 < p(-1) = 1
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (p(mid) < 0.0 ? lo : hi) = mid;
  }
  const double r = 0.5 * (lo + hi);
  // c^3 + 2c^2 + c + 1 = (c - r)(c^2 + b c + e)
  const double b = 2.0 + r;
  const double e = 1.0 + b * r;
  const Complex disc = std::sqrt(Complex(b * b - 4.0 * e, 0.0));
  Complex z1 = (-b - disc) / 2.0;
  Complex z2 = (-b + disc) / 2.0;
  if (z1.imag() > z2.imag()) std::swap(z1, z2);
  return {Complex(r, 0.0), z1, z2};
}

/// Jacobian determinant of G(a1, a2) = (-a2^2, a1^2 - a2^2), differentiated
/// by hand: [[0, -2 a2], [2 a1, -2 a2]].
inline Complex rabbit_jacobian_det(Complex a1, Complex a2) {
  const Complex m00 = 0.0, m01 = -2.0 * a2, m10 = 2.0 * a1, m11 = -2.0 * a2;
  return m00 * m11 - m01 * m10;
}

/// Y(alpha) - theta factored by hand for theta = 1:
/// alpha^4 - 2 alpha^3 + 2 alpha - 1 = (alpha - 1)^3 (alpha + 1).
inline Complex factored_critical_value_equation(Complex alpha) {
  return (alpha - 1.0) * (alpha - 1.0) * (alpha - 1.0) * (alpha + 1.0);
}

inline double chordal(Complex z, Complex w) {
  return 2.0 * std::abs(z - w) / std::sqrt((1.0 + std::norm(z)) * (1.0 + std::norm(w)));
}

}  // namespace oracle
