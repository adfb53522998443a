#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pullback/poly.hpp"
#include "pullback/sphere.hpp"

namespace pullback::cubic {

/// F_alpha(z) = (a z^3 + 3b z^2 + 2a) / (2b z^3 + 3a z + b) for alpha = [a:b];
/// alpha = 0 gives 3z^2/(2z^3+1), alpha = infinity gives (z^3+2)/(3z).
RationalMap family_map(const SpherePoint& alpha);

SpherePoint family_eval(const SpherePoint& alpha, const SpherePoint& z);

/// {1, omega, omega-bar}.
std::vector<SpherePoint> cube_roots_of_unity();
/// {1, omega, omega-bar, -1, -omega, -omega-bar}.
std::vector<SpherePoint> sixth_roots_of_unity();

/// The free critical point of F_alpha: alpha^2.
SpherePoint critical_point_of(const SpherePoint& alpha);
/// Its critical value F_alpha(alpha^2) = alpha (alpha^3 + 2) / (2 alpha^3 + 1).
SpherePoint critical_value_of(const SpherePoint& alpha);
/// critical_value_of as a rational map (degree 4).
RationalMap critical_value_map();
/// Recovers alpha from x = alpha^2 and y = F_alpha(x):
/// alpha = (x^2 - y) / (2xy - 2). Throws DegenerateInput at xy = 1.
Complex parameter_from(Complex x, Complex y);

/// Distance to the degeneracy set: alpha^2 a cube root of unity, or
/// 2 alpha^3 + 1 = 0.
double degeneracy_distance(Complex alpha);
inline constexpr double kDegeneracyZone = 1e-3;

struct CriticalStructureReport {
  bool excluded = false;
  bool passed = false;
  double critical_set_residual = 0.0;  // chordal, matched with multiplicity
  double value_residual = 0.0;         // F(1)=1, F(w)=w-bar, F(w-bar)=w
  std::vector<CriticalPoint> critical_points;
};

/// Critical set of F_alpha equals {1, w, w-bar, alpha^2}, all simple, and
/// 1 is fixed while w, w-bar are swapped.
CriticalStructureReport verify_critical_structure(const SpherePoint& alpha, double tol);

struct DiagramReport {
  bool excluded = false;
  bool passed = false;
  double critical_value_residual = 0.0;  // chordal, F_alpha(alpha^2) vs critical_value_of
  double recovery_residual = 0.0;        // |parameter_from(x, y) - alpha|
};

/// F_alpha(alpha^2) = critical_value_of(alpha), and alpha is recovered by
/// parameter_from.
DiagramReport verify_diagram(const SpherePoint& alpha, double tol);

struct SampleSweep {
  std::size_t requested = 0;
  std::size_t used = 0;
  std::size_t excluded = 0;
  double max_structure_residual = 0.0;
  double max_diagram_residual = 0.0;
  bool passed = false;
};

/// verify_critical_structure and verify_diagram over deterministic pseudo-random alpha in
/// the disk of radius 2; degenerate samples are skipped and counted.
SampleSweep sweep(std::size_t samples, std::uint64_t rng_seed, double tol);

struct PreimageReport {
  std::vector<SpherePoint> x_preimages;        // distinct
  std::vector<PointMultiplicity> y_preimages;  // distinct, with multiplicity
  int y_total_count = 0;                        // with multiplicity
  double x_set_residual = 0.0;  // Hausdorff (chordal) distance to the sixth roots
  double y_set_residual = 0.0;
  bool x_set_matches = false;
  bool y_set_matches = false;
  std::vector<SpherePoint> y_critical_values;
  bool y_critical_values_match = false;  // equal to the cube roots of unity
};

/// Preimages of the cube roots of unity under critical_point_of and
/// critical_value_of, by root finding; both should be the sixth roots.
PreimageReport preimages_of_cube_roots(double tol);

struct LocalDegreeReport {
  double exponent = 0.0;      // least-squares slope of log|x| on log|y|
  double coefficient = 0.0;   // exp(intercept)
  Complex mean_ratio;         // mean of x / y^2
  int winding = 0;            // turns of x while y circles once
  double fit_residual = 0.0;  // max |log|x| - fit|
  bool passed = false;
};

/// Basepoint branch of the correspondence y -> x: the root of
/// critical_value_of(alpha) = y continuous with alpha = 0, squared. Sampled
/// on circles of radius r/2 .. 2r around y = 0.
LocalDegreeReport local_degree_at_basepoint(double sample_radius = 1e-3);

}  // namespace pullback::cubic
