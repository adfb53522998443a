#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pullback/poly.hpp"
#include "pullback/portrait.hpp"
#include "pullback/sphere.hpp"

namespace pullback {

using ComplexMatrix = Eigen::MatrixXcd;

/// Affine moduli coordinates (a_1, ..., a_{n+1}); a_0 = 0 is implicit.
struct ModuliVector {
  ComplexVector coords;

  std::size_t size() const { return coords.size(); }
  Complex operator[](std::size_t i) const { return coords[i]; }
  /// (a_0 = 0, a_1, ..., a_{n+1}).
  ComplexVector with_origin() const;
};

/// A point of P^n given by homogeneous coordinates (x_1 : ... : x_{n+1}).
struct ProjectivePoint {
  ComplexVector coords;
};

/// Divides by the largest-modulus coordinate, which becomes exactly 1.
/// Throws NumericalDegeneracy for the zero vector.
ProjectivePoint normalize_chart(std::span<const Complex> x);

/// Distance between two classes after normalizing both by the coordinate
/// where `a` has largest modulus: sup-norm of the difference.
double chart_distance(std::span<const Complex> a, std::span<const Complex> b);

/// Distance to the forbidden locus: min of |a_i| and |a_i - a_j| after
/// scaling to sup-norm 1. Zero exactly on the locus.
double delta_distance(std::span<const Complex> a);

inline constexpr double kDeltaThreshold = 1e-9;

/// The homogeneous degree-d endomorphism built from an all-periodic
/// polynomial portrait. Coordinates follow the portrait's finite-point
/// order; the first finite point is pinned at 0.
class GfMap {
 public:
  /// Throws HypothesisError naming the failed clause.
  static GfMap build(const RamificationPortrait& portrait);

  GfMap(int degree, std::vector<int> nu, std::vector<int> multiplicities);

  int degree() const { return degree_; }
  /// Chart dimension: n + 2 finite marked points, n + 1 coordinates.
  int n() const { return static_cast<int>(nu_.size()) - 2; }
  std::size_t dimension() const { return nu_.size() - 1; }
  const std::vector<int>& nu() const { return nu_; }
  const std::vector<int>& mu() const { return mu_; }
  const std::vector<int>& multiplicities() const { return mult_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// The monic F_a: F_a' = d prod (w - a_k)^{m_k}, F_a(a_{nu(0)}) = 0.
  ComplexPoly monic_polynomial(const ModuliVector& a) const;

  /// G_f(a) = (F_a(a_{nu(1)}), ..., F_a(a_{nu(n+1)})).
  ModuliVector eval(const ModuliVector& a) const;

  /// g_f on classes, renormalized to the max-modulus chart. Throws
  /// NumericalDegeneracy if |G_f(a)| < 1e-14 |a|^d (round-off only).
  ProjectivePoint eval_chart(const ProjectivePoint& x) const;

  /// prod_{i<j} (a_i - a_j)^{m_i + m_j} with a_0 = 0.
  Complex closed_form_J(const ModuliVector& a) const;

  /// sum_{i<j} (m_i + m_j); equals (n+1)(d-1).
  int closed_form_J_degree() const;

 private:
  int degree_;
  std::vector<int> nu_;
  std::vector<int> mu_;
  std::vector<int> mult_;
  std::vector<std::string> labels_;
};

struct JacobianResult {
  ComplexMatrix matrix;
  Complex determinant;
};

/// Central finite differences with per-coordinate step
/// step * max(1, |a_i|); determinant by partial-pivot LU.
JacobianResult jacobian(const GfMap& gf, const ModuliVector& a, double step = 1e-6);

/// Jacobian of an arbitrary map C^k -> C^k by the same scheme.
template <typename F>
ComplexMatrix finite_difference_jacobian(F&& f, const ComplexVector& x, double step) {
  const auto k = static_cast<Eigen::Index>(x.size());
  ComplexMatrix m(k, k);
  for (Eigen::Index j = 0; j < k; ++j) {
    const double h = step * std::max(1.0, std::abs(x[static_cast<std::size_t>(j)]));
    ComplexVector plus = x;
    ComplexVector minus = x;
    plus[static_cast<std::size_t>(j)] += h;
    minus[static_cast<std::size_t>(j)] -= h;
    const ComplexVector fp = f(plus);
    const ComplexVector fm = f(minus);
    for (Eigen::Index i = 0; i < k; ++i) {
      m(i, j) = (fp[static_cast<std::size_t>(i)] - fm[static_cast<std::size_t>(i)]) / (2.0 * h);
    }
  }
  return m;
}

struct JacobianCheck {
  std::size_t samples = 0;
  Complex constant;        // mean of det / J
  double relative_spread;  // max |ratio - mean| / |mean|
  double min_delta_distance;
  int j_degree = 0;
  int expected_degree = 0;
};

/// det(Jac G_f) / J over `samples` pseudo-random points with
/// delta_distance > min_delta (coordinates uniform in the polydisk of
/// radius 2).
JacobianCheck jacobian_identity_check(const GfMap& gf, std::size_t samples,
                                      std::uint64_t rng_seed, double min_delta = 0.1);

/// Uniform sample in the disk |z| <= radius.
template <typename Rng>
Complex sample_disk(Rng& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = radius * std::sqrt(u(rng));
  const double t = 2.0 * std::numbers::pi * u(rng);
  return std::polar(r, t);
}

}  // namespace pullback
