#pragma once

#include <span>
#include <vector>

#include "pullback/sphere.hpp"

namespace pullback {

/// Polynomial with complex coefficients in ascending degree. Trailing zero
/// coefficients are trimmed, so the zero polynomial has no coefficients.
class ComplexPoly {
 public:
  ComplexPoly() = default;
  explicit ComplexPoly(ComplexVector coefficients);
  ComplexPoly(std::initializer_list<Complex> coefficients);

  static ComplexPoly constant(Complex c);
  static ComplexPoly monomial(int degree, Complex c = 1.0);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  std::span<const Complex> coefficients() const { return coeffs_; }
  /// Coefficient of z^i; zero past the degree.
  Complex operator[](std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Complex{};
  }
  Complex leading() const { return coeffs_.empty() ? Complex{} : coeffs_.back(); }

  /// Sum of coefficient moduli.
  double l1_norm() const;

  /// Drops leading coefficients whose modulus is at most rel * max|c_i|.
  /// Used where leading terms cancel only up to round-off.
  ComplexPoly trimmed_relative(double rel) const;

  friend ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b);
  friend ComplexPoly operator-(const ComplexPoly& a, const ComplexPoly& b);
  friend ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b);
  friend ComplexPoly operator*(Complex s, const ComplexPoly& p);
  friend bool operator==(const ComplexPoly&, const ComplexPoly&) = default;

 private:
  void trim();
  ComplexVector coeffs_;
};

struct RootMultiplicity {
  Complex root;
  int multiplicity = 1;
};

/// Monic product of (w - r)^m. Empty input gives the constant 1.
ComplexPoly expand_from_roots(std::span<const RootMultiplicity> roots);

/// P with P' = p and P(base) = 0.
ComplexPoly antiderivative(const ComplexPoly& p, Complex base);

ComplexPoly derivative(const ComplexPoly& p);

/// Horner evaluation.
Complex eval(const ComplexPoly& p, Complex z);

/// Sum |c_i| |z|^i, the natural scale for the round-off in eval(p, z).
double eval_scale(const ComplexPoly& p, Complex z);

/// outer(inner(z)).
ComplexPoly compose(const ComplexPoly& outer, const ComplexPoly& inner);

struct RootOptions {
  // Backward-error acceptance: |p(z)| <= tol * eval_scale(p, z).
  double tol = 1e-14;
  int max_iter = 2000;
  // Candidate cluster radius (relative to max(1, |z|)) for multiple roots.
  double cluster_radius = 1e-3;
};

/// All deg(p) roots, repeated by multiplicity, ordered by real part then
/// imaginary part. Simultaneous (Aberth-Ehrlich) iteration started on a
/// circle of radius given by the Cauchy bound; clusters that form a genuine
/// multiple root are refined through the matching derivative. Throws
/// NonConvergence, or DegenerateInput for a constant polynomial.
ComplexVector roots(const ComplexPoly& p, const RootOptions& options = {});

/// Same roots, grouped: distinct values with multiplicity.
std::vector<RootMultiplicity> roots_with_multiplicity(
    const ComplexPoly& p, const RootOptions& options = {});

/// Quotient N/D of polynomials. Never reduced implicitly.
struct RationalMap {
  ComplexPoly num;
  ComplexPoly den;

  RationalMap() : den(ComplexPoly::constant(1.0)) {}
  RationalMap(ComplexPoly n, ComplexPoly d);
  static RationalMap polynomial(ComplexPoly p);

  /// max(deg N, deg D).
  int degree() const;
  bool is_polynomial() const { return den.degree() == 0; }
};

/// Evaluation on the sphere. Large |z| and z = infinity are evaluated in
/// homogeneous form so poles and infinity come back tagged, not overflowed.
SpherePoint rational_eval(const RationalMap& r, const SpherePoint& z);

/// outer o inner as a single quotient (homogenized substitution).
RationalMap compose(const RationalMap& outer, const RationalMap& inner);

/// A point of the sphere counted with multiplicity.
struct PointMultiplicity {
  SpherePoint point;
  int multiplicity = 1;
};
using CriticalPoint = PointMultiplicity;

/// Roots of N'D - ND' with multiplicity, plus infinity when the degree drop
/// shows ramification there. Multiplicities sum to 2 deg(R) - 2.
std::vector<CriticalPoint> critical_points(const RationalMap& r,
                                           const RootOptions& options = {});

/// Critical values, deduplicated at chordal tolerance `tol`.
std::vector<SpherePoint> critical_values(const RationalMap& r, double tol,
                                         const RootOptions& options = {});

/// Solutions of R(z) = target with multiplicity, infinity included.
std::vector<PointMultiplicity> preimages(const RationalMap& r,
                                         const SpherePoint& target,
                                         const RootOptions& options = {});

}  // namespace pullback
