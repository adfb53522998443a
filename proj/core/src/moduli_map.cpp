#include "pullback/moduli_map.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "pullback/error.hpp"

namespace pullback {

ComplexVector ModuliVector::with_origin() const {
  ComplexVector full;
  full.reserve(coords.size() + 1);
  full.push_back(Complex{});
  full.insert(full.end(), coords.begin(), coords.end());
  return full;
}

ProjectivePoint normalize_chart(std::span<const Complex> x) {
  std::size_t best = 0;
  double best_mod = -1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (std::abs(x[i]) > best_mod) {
      best_mod = std::abs(x[i]);
      best = i;
    }
  }
  if (x.empty() || best_mod == 0.0 || !std::isfinite(best_mod)) {
    throw NumericalDegeneracy("cannot normalize the zero (or non-finite) vector");
  }
  ProjectivePoint p;
  p.coords.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    p.coords.push_back(i == best ? Complex(1.0, 0.0) : x[i] / x[best]);
  }
  return p;
}

double chart_distance(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw DegenerateInput("chart_distance: dimension mismatch");
  std::size_t k = 0;
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (std::abs(a[i]) > std::abs(a[k])) k = i;
  }
  if (a[k] == Complex{} || b[k] == Complex{}) return std::numeric_limits<double>::infinity();
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    d = std::max(d, std::abs(a[i] / a[k] - b[i] / b[k]));
  }
  return d;
}

double delta_distance(std::span<const Complex> a) {
  double scale = 0.0;
  for (const auto& z : a) scale = std::max(scale, std::abs(z));
  if (scale == 0.0) return 0.0;
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < a.size(); ++i) {
    d = std::min(d, std::abs(a[i]) / scale);
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      d = std::min(d, std::abs(a[i] - a[j]) / scale);
    }
  }
  return d;
}

GfMap::GfMap(int degree, std::vector<int> nu, std::vector<int> multiplicities)
    : degree_(degree), nu_(std::move(nu)), mult_(std::move(multiplicities)) {
  if (degree_ < 2) throw HypothesisError("degree must be >= 2");
  if (nu_.size() < 2 || nu_.size() != mult_.size()) {
    throw HypothesisError("need at least two finite points and one multiplicity per point");
  }
  mu_.assign(nu_.size(), -1);
  for (std::size_t k = 0; k < nu_.size(); ++k) {
    const int t = nu_[k];
    if (t < 0 || t >= static_cast<int>(nu_.size()) || mu_[static_cast<std::size_t>(t)] >= 0) {
      throw HypothesisError("nu is not a permutation");
    }
    mu_[static_cast<std::size_t>(t)] = static_cast<int>(k);
  }
  int sum = 0;
  for (const int m : mult_) {
    if (m < 0) throw HypothesisError("negative multiplicity");
    sum += m;
  }
  if (sum != degree_ - 1) throw HypothesisError("multiplicities must sum to d-1");
  for (std::size_t k = 0; k < nu_.size(); ++k) labels_.push_back("p" + std::to_string(k));
}

GfMap GfMap::build(const RamificationPortrait& portrait) {
  if (!portrait.is_polynomial()) {
    throw HypothesisError("build_gf: portrait is not polynomial");
  }
  const auto report = validate(portrait);
  if (!report.all_critical_periodic) {
    throw HypothesisError("build_gf: not all critical points are periodic");
  }
  if (!report.is_permutation) {
    throw HypothesisError("build_gf: finite dynamics is not a permutation");
  }
  const auto& finite = portrait.finite_points();
  if (finite.size() < 2) {
    throw HypothesisError("build_gf: need at least two finite marked points");
  }
  std::vector<int> mult;
  for (const auto i : finite) mult.push_back(portrait.points()[i].multiplicity);
  GfMap gf(portrait.degree(), report.permutation->nu, std::move(mult));
  gf.labels_ = report.finite_order;
  return gf;
}

ComplexPoly GfMap::monic_polynomial(const ModuliVector& a) const {
  if (a.size() != dimension()) {
    throw DegenerateInput("moduli vector has " + std::to_string(a.size()) +
                          " coordinates, expected " + std::to_string(dimension()));
  }
  const ComplexVector full = a.with_origin();
  std::vector<RootMultiplicity> crit;
  for (std::size_t k = 0; k < full.size(); ++k) {
    if (mult_[k] > 0) crit.push_back({full[k], mult_[k]});
  }
  const ComplexPoly integrand =
      static_cast<double>(degree_) * expand_from_roots(crit);
  return antiderivative(integrand, full[static_cast<std::size_t>(nu_[0])]);
}

ModuliVector GfMap::eval(const ModuliVector& a) const {
  const ComplexPoly f = monic_polynomial(a);
  const ComplexVector full = a.with_origin();
  ModuliVector out;
  out.coords.reserve(dimension());
  for (std::size_t k = 1; k < full.size(); ++k) {
    out.coords.push_back(pullback::eval(f, full[static_cast<std::size_t>(nu_[k])]));
  }
  return out;
}

ProjectivePoint GfMap::eval_chart(const ProjectivePoint& x) const {
  double norm = 0.0;
  for (const auto& z : x.coords) norm = std::max(norm, std::abs(z));
  if (norm == 0.0) throw DegenerateInput("eval_chart: zero class");
  const ModuliVector image = eval(ModuliVector{x.coords});
  double image_norm = 0.0;
  for (const auto& z : image.coords) image_norm = std::max(image_norm, std::abs(z));
  if (image_norm < 1e-14 * std::pow(norm, degree_)) {
    throw NumericalDegeneracy("G_f(a) vanished to round-off at a nonzero point");
  }
  return normalize_chart(image.coords);
}

Complex GfMap::closed_form_J(const ModuliVector& a) const {
  const ComplexVector full = a.with_origin();
  Complex j = 1.0;
  for (std::size_t i = 0; i < full.size(); ++i) {
    for (std::size_t k = i + 1; k < full.size(); ++k) {
      const int e = mult_[i] + mult_[k];
      if (e > 0) j *= std::pow(full[i] - full[k], e);
    }
  }
  return j;
}

int GfMap::closed_form_J_degree() const {
  int deg = 0;
  for (std::size_t i = 0; i < mult_.size(); ++i) {
    for (std::size_t k = i + 1; k < mult_.size(); ++k) deg += mult_[i] + mult_[k];
  }
  return deg;
}

JacobianResult jacobian(const GfMap& gf, const ModuliVector& a, double step) {
  JacobianResult r;
  r.matrix = finite_difference_jacobian(
      [&](const ComplexVector& x) { return gf.eval(ModuliVector{x}).coords; }, a.coords, step);
  r.determinant = r.matrix.partialPivLu().determinant();
  return r;
}

JacobianCheck jacobian_identity_check(const GfMap& gf, std::size_t samples,
                                      std::uint64_t rng_seed, double min_delta) {
  if (samples == 0) throw DegenerateInput("jacobian_identity_check needs samples >= 1");
  std::mt19937_64 rng(rng_seed);
  std::vector<Complex> ratios;
  JacobianCheck check;
  check.min_delta_distance = std::numeric_limits<double>::infinity();
  while (ratios.size() < samples) {
    ModuliVector a;
    for (std::size_t i = 0; i < gf.dimension(); ++i) a.coords.push_back(sample_disk(rng, 2.0));
    const double dd = delta_distance(a.coords);
    if (dd <= min_delta) continue;
    check.min_delta_distance = std::min(check.min_delta_distance, dd);
    ratios.push_back(jacobian(gf, a).determinant / gf.closed_form_J(a));
  }
  Complex mean{};
  for (const auto& r : ratios) mean += r;
  mean /= static_cast<double>(ratios.size());
  double spread = 0.0;
  for (const auto& r : ratios) spread = std::max(spread, std::abs(r - mean));
  check.samples = ratios.size();
  check.constant = mean;
  check.relative_spread = spread / std::abs(mean);
  check.j_degree = gf.closed_form_J_degree();
  check.expected_degree = (gf.n() + 1) * (gf.degree() - 1);
  return check;
}

}  // namespace pullback
