#pragma once

#include <complex>
#include <string>
#include <vector>

namespace pullback {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// A point of the Riemann sphere: a finite complex number or the tagged
/// point at infinity. Non-finite complex inputs collapse to infinity.
class SpherePoint {
 public:
  SpherePoint() = default;
  SpherePoint(Complex z);  // NOLINT(google-explicit-constructor)
  SpherePoint(double x) : SpherePoint(Complex(x, 0.0)) {}  // NOLINT

  static SpherePoint infinity();

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }

  /// Finite value; throws DegenerateInput for the point at infinity.
  Complex value() const;

  /// Modulus, +inf for the point at infinity.
  double modulus() const;

  friend bool operator==(const SpherePoint& a, const SpherePoint& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.z_ == b.z_);
  }

 private:
  Complex z_{0.0, 0.0};
  bool infinite_ = false;
};

/// Chordal distance 2|z-w| / sqrt((1+|z|^2)(1+|w|^2)); lies in [0, 2].
double chordal_distance(const SpherePoint& a, const SpherePoint& b);

/// Index of the first point of `set` within `tol` of `p`, or -1.
int find_on_sphere(const std::vector<SpherePoint>& set, const SpherePoint& p,
                   double tol);

/// Appends `p` unless a point within `tol` is already present.
/// Returns true when the point was new.
bool insert_unique(std::vector<SpherePoint>& set, const SpherePoint& p,
                   double tol);

/// True when every point of `sub` lies within `tol` of a point of `super`.
bool is_subset(const std::vector<SpherePoint>& sub,
               const std::vector<SpherePoint>& super, double tol);

/// Mutual inclusion at tolerance `tol`.
bool same_set(const std::vector<SpherePoint>& a,
              const std::vector<SpherePoint>& b, double tol);

/// Deterministic order for reports: infinity last, then by real part
/// (bucketed at 1e-9) and imaginary part.
void sort_points(std::vector<SpherePoint>& points);

/// exp(2 pi i / 3).
Complex omega();

/// n-th roots of unity, generated by repeated multiplication with one
/// final renormalization to modulus one.
ComplexVector roots_of_unity(int n);

}  // namespace pullback
