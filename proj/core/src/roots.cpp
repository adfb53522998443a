#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "pullback/error.hpp"
#include "pullback/poly.hpp"

namespace pullback {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Positive root of |a_n| x^n - sum_{i<n} |a_i| x^i (Cauchy's bound on the
// root moduli), found by bisection.
double cauchy_bound(const ComplexPoly& p) {
  const int n = p.degree();
  const double lead = std::abs(p.leading());
  auto h = [&](double x) {
    double acc = lead;
    for (int i = n - 1; i >= 0; --i) acc = acc * x - std::abs(p[static_cast<std::size_t>(i)]);
    return acc;
  };
  double hi = 1.0;
  while (h(hi) < 0.0) hi *= 2.0;
  double lo = 0.0;
  for (int it = 0; it < 100 && hi - lo > 1e-12 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (h(mid) < 0.0 ? lo : hi) = mid;
  }
  return std::max(hi, 1e-300);
}

bool backward_small(const ComplexPoly& p, Complex z, double tol) {
  return std::abs(eval(p, z)) <= tol * eval_scale(p, z) + 1e-300;
}

// Aberth-Ehrlich iteration for a polynomial with nonzero constant term.
ComplexVector aberth(const ComplexPoly& p, const RootOptions& opt) {
  const int n = p.degree();
  if (n == 1) return {-p[0] / p[1]};
  const ComplexPoly dp = derivative(p);
  const double radius = cauchy_bound(p);
  ComplexVector z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    z[static_cast<std::size_t>(k)] =
        std::polar(radius, 2.0 * std::numbers::pi * k / n + 0.4);
  }
  std::vector<char> done(z.size(), 0);
  const double accept = std::max(opt.tol, 4.0 * kEps);
  for (int iter = 0; iter < opt.max_iter; ++iter) {
    bool all_done = true;
    for (std::size_t k = 0; k < z.size(); ++k) {
      if (done[k]) continue;
      const Complex pz = eval(p, z[k]);
      if (std::abs(pz) <= accept * eval_scale(p, z[k])) {
        done[k] = 1;
        continue;
      }
      all_done = false;
      const Complex ratio = pz / eval(dp, z[k]);
      Complex repulsion{};
      for (std::size_t j = 0; j < z.size(); ++j) {
        if (j != k) repulsion += 1.0 / (z[k] - z[j]);
      }
      Complex step = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
        // Coincident iterates or a vanishing derivative: nudge off the spot.
        step = Complex(1e-8, 1e-8) * std::max(1.0, std::abs(z[k]));
      }
      z[k] -= step;
      if (std::abs(step) <= 2.0 * kEps * std::abs(z[k])) done[k] = 1;
    }
    if (all_done) return z;
  }
  for (std::size_t k = 0; k < z.size(); ++k) {
    if (!backward_small(p, z[k], 1e3 * accept)) {
      throw NonConvergence("root finder did not converge for degree " +
                           std::to_string(n) + " polynomial after " +
                           std::to_string(opt.max_iter) + " iterations");
    }
  }
  return z;
}

ComplexPoly nth_derivative(ComplexPoly p, int m) {
  for (int i = 0; i < m; ++i) p = derivative(p);
  return p;
}

Complex newton_polish(const ComplexPoly& p, Complex z, int steps) {
  const ComplexPoly dp = derivative(p);
  for (int i = 0; i < steps; ++i) {
    const Complex d = eval(dp, z);
    if (d == Complex{}) break;
    const Complex step = eval(p, z) / d;
    if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
    z -= step;
    if (std::abs(step) <= kEps * std::abs(z)) break;
  }
  return z;
}

// Try to confirm that the cluster `members` is a single root of
// multiplicity m = members.size(). On success returns the refined centre.
bool refine_cluster(const ComplexPoly& p, const ComplexVector& members,
                    double radius, Complex& centre) {
  const int m = static_cast<int>(members.size());
  Complex c{};
  for (const auto& z : members) c += z;
  c /= static_cast<double>(m);
  const ComplexPoly q = nth_derivative(p, m - 1);
  Complex refined = newton_polish(q, c, 60);
  if (std::abs(refined - c) > radius) return false;
  // Lower derivatives must vanish at the centre up to round-off.
  ComplexPoly dj = p;
  for (int j = 0; j < m - 1; ++j) {
    const double scale = eval_scale(dj, refined);
    if (std::abs(eval(dj, refined)) > 1e-10 * scale) return false;
    dj = derivative(dj);
  }
  centre = refined;
  return true;
}

}  // namespace

std::vector<RootMultiplicity> roots_with_multiplicity(const ComplexPoly& p,
                                                      const RootOptions& opt) {
  if (p.degree() < 1) {
    throw DegenerateInput("roots() needs a polynomial of degree >= 1");
  }
  // Exact zero roots first.
  const auto c = p.coefficients();
  std::size_t zeros = 0;
  while (c[zeros] == Complex{}) ++zeros;
  ComplexPoly reduced(ComplexVector(c.begin() + static_cast<std::ptrdiff_t>(zeros), c.end()));

  std::vector<RootMultiplicity> out;
  if (zeros > 0) out.push_back({Complex{}, static_cast<int>(zeros)});
  if (reduced.degree() < 1) return out;

  ComplexVector raw = aberth(reduced, opt);

  // Single-linkage clustering at the candidate radius.
  const std::size_t n = raw.size();
  std::vector<int> group(n, -1);
  int groups = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (group[i] >= 0) continue;
    group[i] = groups;
    std::vector<std::size_t> stack{i};
    while (!stack.empty()) {
      const auto k = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        if (group[j] >= 0) continue;
        const double r = opt.cluster_radius * std::max(1.0, std::abs(raw[k]));
        if (std::abs(raw[j] - raw[k]) <= r) {
          group[j] = groups;
          stack.push_back(j);
        }
      }
    }
    ++groups;
  }

  for (int g = 0; g < groups; ++g) {
    ComplexVector members;
    for (std::size_t i = 0; i < n; ++i) {
      if (group[i] == g) members.push_back(raw[i]);
    }
    Complex centre;
    const double radius =
        opt.cluster_radius * std::max(1.0, std::abs(members.front()));
    if (members.size() > 1 && refine_cluster(reduced, members, radius, centre)) {
      out.push_back({centre, static_cast<int>(members.size())});
    } else {
      for (const auto& z : members) {
        out.push_back({members.size() > 1 ? z : newton_polish(reduced, z, 3), 1});
      }
    }
  }

  std::sort(out.begin(), out.end(), [](const RootMultiplicity& a, const RootMultiplicity& b) {
    const double ka = std::round(a.root.real() * 1e9);
    const double kb = std::round(b.root.real() * 1e9);
    if (ka != kb) return ka < kb;
    return a.root.imag() < b.root.imag();
  });
  return out;
}

ComplexVector roots(const ComplexPoly& p, const RootOptions& opt) {
  ComplexVector out;
  for (const auto& [root, mult] : roots_with_multiplicity(p, opt)) {
    out.insert(out.end(), static_cast<std::size_t>(mult), root);
  }
  return out;
}

}  // namespace pullback
