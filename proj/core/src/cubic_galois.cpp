#include "pullback/cubic_galois.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "pullback/error.hpp"
#include "pullback/moduli_map.hpp"

namespace pullback::cubic {
namespace {

// Hausdorff distance on the sphere between two finite sets.
double hausdorff(const std::vector<SpherePoint>& a, const std::vector<SpherePoint>& b) {
  auto one_way = [](const std::vector<SpherePoint>& from, const std::vector<SpherePoint>& to) {
    double worst = 0.0;
    for (const auto& p : from) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& q : to) best = std::min(best, chordal_distance(p, q));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(one_way(a, b), one_way(b, a));
}

// Chordal residual of a multiplicity-respecting match of `found` against
// `expected` (each expected point used once). Infinity on count mismatch.
double match_with_multiplicity(const std::vector<CriticalPoint>& found,
                               std::vector<SpherePoint> expected) {
  std::vector<SpherePoint> flat;
  for (const auto& cp : found) flat.insert(flat.end(), static_cast<std::size_t>(cp.multiplicity), cp.point);
  if (flat.size() != expected.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (const auto& p : flat) {
    auto best = expected.end();
    double best_d = std::numeric_limits<double>::infinity();
    for (auto it = expected.begin(); it != expected.end(); ++it) {
      const double d = chordal_distance(p, *it);
      if (d < best_d) {
        best_d = d;
        best = it;
      }
    }
    worst = std::max(worst, best_d);
    expected.erase(best);
  }
  return worst;
}

}  // namespace

RationalMap family_map(const SpherePoint& alpha) {
  const Complex a = alpha.is_infinite() ? Complex(1.0) : alpha.value();
  const Complex b = alpha.is_infinite() ? Complex(0.0) : Complex(1.0);
  return RationalMap(ComplexPoly({2.0 * a, 0.0, 3.0 * b, a}),
                     ComplexPoly({b, 3.0 * a, 0.0, 2.0 * b}));
}

SpherePoint family_eval(const SpherePoint& alpha, const SpherePoint& z) {
  return rational_eval(family_map(alpha), z);
}

std::vector<SpherePoint> cube_roots_of_unity() {
  const Complex w = omega();
  return {Complex(1.0), w, std::conj(w)};
}

std::vector<SpherePoint> sixth_roots_of_unity() {
  auto out = cube_roots_of_unity();
  for (const auto& p : cube_roots_of_unity()) out.push_back(-p.value());
  return out;
}

SpherePoint critical_point_of(const SpherePoint& alpha) {
  if (alpha.is_infinite()) return alpha;
  return alpha.value() * alpha.value();
}

RationalMap critical_value_map() {
  return RationalMap(ComplexPoly({0.0, 2.0, 0.0, 0.0, 1.0}), ComplexPoly({1.0, 0.0, 0.0, 2.0}));
}

SpherePoint critical_value_of(const SpherePoint& alpha) {
  return rational_eval(critical_value_map(), alpha);
}

Complex parameter_from(Complex x, Complex y) {
  const Complex den = 2.0 * x * y - 2.0;
  if (std::abs(den) <= 1e-14 * std::max(1.0, std::abs(2.0 * x * y))) {
    throw DegenerateInput("parameter_from: x*y = 1");
  }
  return (x * x - y) / den;
}

double degeneracy_distance(Complex alpha) {
  double d = std::abs(2.0 * alpha * alpha * alpha + 1.0);
  for (const auto& t : cube_roots_of_unity()) d = std::min(d, std::abs(alpha * alpha - t.value()));
  return d;
}

CriticalStructureReport verify_critical_structure(const SpherePoint& alpha, double tol) {
  CriticalStructureReport r;
  if (alpha.is_finite() && degeneracy_distance(alpha.value()) < kDegeneracyZone) {
    r.excluded = true;
    return r;
  }
  const RationalMap f = family_map(alpha);
  r.critical_points = critical_points(f);
  auto expected = cube_roots_of_unity();
  expected.push_back(critical_point_of(alpha));
  r.critical_set_residual = match_with_multiplicity(r.critical_points, expected);
  const Complex w = omega();
  r.value_residual = std::max({chordal_distance(rational_eval(f, Complex(1.0)), Complex(1.0)),
                               chordal_distance(rational_eval(f, w), std::conj(w)),
                               chordal_distance(rational_eval(f, std::conj(w)), w)});
  const bool all_simple = std::all_of(r.critical_points.begin(), r.critical_points.end(),
                                      [](const CriticalPoint& c) { return c.multiplicity == 1; });
  r.passed = all_simple && r.critical_set_residual <= tol && r.value_residual <= tol;
  return r;
}

DiagramReport verify_diagram(const SpherePoint& alpha, double tol) {
  DiagramReport r;
  if (alpha.is_finite() && degeneracy_distance(alpha.value()) < kDegeneracyZone) {
    r.excluded = true;
    return r;
  }
  const SpherePoint x = critical_point_of(alpha);
  const SpherePoint y = critical_value_of(alpha);
  r.critical_value_residual = chordal_distance(family_eval(alpha, x), y);
  if (alpha.is_finite() && y.is_finite()) {
    r.recovery_residual = std::abs(parameter_from(x.value(), y.value()) - alpha.value());
  } else if (alpha.is_infinite()) {
    // At alpha = infinity both x and y are infinity; recovery is checked in
    // the chart beta = 1/alpha, where y ~ 1/(2 beta): beta = 1/(2y) + O(beta^4).
    r.recovery_residual = y.is_infinite() ? 0.0 : std::numeric_limits<double>::infinity();
  }
  r.passed = r.critical_value_residual <= tol && r.recovery_residual <= tol;
  return r;
}

SampleSweep sweep(std::size_t samples, std::uint64_t rng_seed, double tol) {
  SampleSweep s;
  s.requested = samples;
  std::mt19937_64 rng(rng_seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const Complex alpha = sample_disk(rng, 2.0);
    const auto structure = verify_critical_structure(alpha, tol);
    if (structure.excluded) {
      ++s.excluded;
      continue;
    }
    const auto diagram = verify_diagram(alpha, tol);
    ++s.used;
    s.max_structure_residual = std::max({s.max_structure_residual, structure.critical_set_residual,
                                         structure.value_residual});
    s.max_diagram_residual = std::max({s.max_diagram_residual, diagram.critical_value_residual,
                                       diagram.recovery_residual});
  }
  s.passed = s.used > 0 && s.max_structure_residual <= tol && s.max_diagram_residual <= tol;
  return s;
}

PreimageReport preimages_of_cube_roots(double tol) {
  PreimageReport r;
  const auto targets = cube_roots_of_unity();
  const RationalMap square(ComplexPoly({0.0, 0.0, 1.0}), ComplexPoly::constant(1.0));
  const RationalMap yv = critical_value_map();
  for (const auto& t : targets) {
    for (const auto& p : preimages(square, t)) insert_unique(r.x_preimages, p.point, tol);
    for (const auto& p : preimages(yv, t)) {
      r.y_total_count += p.multiplicity;
      auto it = std::find_if(r.y_preimages.begin(), r.y_preimages.end(), [&](const auto& q) {
        return chordal_distance(q.point, p.point) <= tol;
      });
      if (it == r.y_preimages.end()) {
        r.y_preimages.push_back(p);
      } else {
        it->multiplicity += p.multiplicity;
      }
    }
  }
  std::vector<SpherePoint> y_points;
  for (const auto& p : r.y_preimages) y_points.push_back(p.point);
  const auto six = sixth_roots_of_unity();
  r.x_set_residual = hausdorff(r.x_preimages, six);
  r.y_set_residual = hausdorff(y_points, six);
  r.x_set_matches = r.x_preimages.size() == six.size() && r.x_set_residual <= tol;
  r.y_set_matches = y_points.size() == six.size() && r.y_set_residual <= tol;
  r.y_critical_values = critical_values(yv, tol);
  r.y_critical_values_match = same_set(r.y_critical_values, targets, tol);
  return r;
}

LocalDegreeReport local_degree_at_basepoint(double sample_radius) {
  LocalDegreeReport r;
  if (!(sample_radius > 0.0) || sample_radius > 0.1) {
    throw DegenerateInput("local_degree_at_basepoint: radius must lie in (0, 0.1]");
  }
  const RationalMap yv = critical_value_map();
  constexpr int kAngles = 64;
  const double scales[] = {0.5, std::sqrt(0.5), 1.0, std::sqrt(2.0), 2.0};

  // Basepoint branch: the root of alpha^4 - 2y alpha^3 + 2 alpha - y nearest y/2.
  auto branch = [&](Complex y) {
    const ComplexPoly eq = yv.num - y * yv.den;
    Complex best{};
    double best_d = std::numeric_limits<double>::infinity();
    for (const auto& a : roots(eq)) {
      if (std::abs(a - 0.5 * y) < best_d) {
        best_d = std::abs(a - 0.5 * y);
        best = a;
      }
    }
    return best * best;
  };

  std::vector<double> lx;
  std::vector<double> ly;
  Complex ratio_sum{};
  double turns = 0.0;
  for (const double s : scales) {
    Complex prev{};
    for (int k = 0; k <= kAngles; ++k) {
      const Complex y = std::polar(s * sample_radius, 2.0 * std::numbers::pi * k / kAngles);
      const Complex x = branch(y);
      if (k < kAngles) {
        lx.push_back(std::log(std::abs(x)));
        ly.push_back(std::log(std::abs(y)));
        ratio_sum += x / (y * y);
      }
      if (s == 1.0 && k > 0) turns += std::arg(x / prev);
      prev = x;
    }
  }
  const auto m = static_cast<double>(lx.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sx += ly[i];
    sy += lx[i];
    sxx += ly[i] * ly[i];
    sxy += ly[i] * lx[i];
  }
  r.exponent = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  const double intercept = (sy - r.exponent * sx) / m;
  r.coefficient = std::exp(intercept);
  r.mean_ratio = ratio_sum / m;
  r.winding = static_cast<int>(std::lround(turns / (2.0 * std::numbers::pi)));
  for (std::size_t i = 0; i < lx.size(); ++i) {
    r.fit_residual = std::max(r.fit_residual, std::abs(lx[i] - (intercept + r.exponent * ly[i])));
  }
  r.passed = r.fit_residual < 1e-2 && std::abs(r.exponent - 2.0) <= 1e-3 &&
             std::abs(r.coefficient - 0.25) <= 1e-3 && r.winding == 2;
  return r;
}

}  // namespace pullback::cubic
