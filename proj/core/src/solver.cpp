#include "pullback/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <tuple>

#include <Eigen/Eigenvalues>

#include "pullback/error.hpp"
#include "pullback/parallel.hpp"

namespace pullback {
namespace {

double sup_norm(const ComplexVector& v) {
  double m = 0.0;
  for (const auto& z : v) m = std::max(m, std::abs(z));
  return m;
}

bool all_finite(const ComplexVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

Eigen::VectorXcd to_eigen(const ComplexVector& v) {
  Eigen::VectorXcd e(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) e(static_cast<Eigen::Index>(i)) = v[i];
  return e;
}

struct NewtonOutcome {
  ComplexVector x;
  double residual = std::numeric_limits<double>::infinity();
  bool converged = false;
};

// Damped Newton for F(x) = 0 with a finite-difference Jacobian. The step is
// halved up to 20 times until the sup-norm residual decreases.
template <typename F>
NewtonOutcome damped_newton(F&& residual_fn, ComplexVector x, double tol, int max_iter,
                            double blowup = 1e8) {
  NewtonOutcome out;
  ComplexVector r = residual_fn(x);
  double res = sup_norm(r);
  for (int iter = 0; iter < max_iter && all_finite(r); ++iter) {
    if (res <= tol) break;
    const ComplexMatrix jac = finite_difference_jacobian(residual_fn, x, 1e-6);
    const Eigen::VectorXcd delta = jac.partialPivLu().solve(-to_eigen(r));
    if (!delta.allFinite()) break;
    double lambda = 1.0;
    bool accepted = false;
    for (int halving = 0; halving <= 20; ++halving, lambda *= 0.5) {
      ComplexVector trial = x;
      for (std::size_t i = 0; i < x.size(); ++i) {
        trial[i] += lambda * delta(static_cast<Eigen::Index>(i));
      }
      ComplexVector tr = residual_fn(trial);
      const double tres = sup_norm(tr);
      if (all_finite(tr) && tres < res) {
        x = std::move(trial);
        r = std::move(tr);
        res = tres;
        accepted = true;
        break;
      }
    }
    if (!accepted || sup_norm(x) > blowup) break;
  }
  out.x = std::move(x);
  out.residual = res;
  out.converged = res <= tol && all_finite(r);
  return out;
}

}  // namespace

std::size_t FixedPointReport::off_delta_count() const {
  return static_cast<std::size_t>(std::count_if(
      records.begin(), records.end(), [](const FixedPointRecord& r) { return !r.on_delta; }));
}

FixedPointReport newton_fixed_points(const GfMap& gf, const FixedPointOptions& opt,
                                     const RamificationPortrait* portrait) {
  const std::size_t dim = gf.dimension();
  // Seeds are drawn sequentially so they do not depend on the thread count.
  std::mt19937_64 rng(opt.rng_seed);
  std::vector<ComplexVector> seeds(opt.seeds);
  for (auto& s : seeds) {
    for (std::size_t i = 0; i < dim; ++i) s.push_back(sample_disk(rng, opt.seed_radius));
  }

  auto h = [&](const ComplexVector& a) {
    ComplexVector g = gf.eval(ModuliVector{a}).coords;
    for (std::size_t i = 0; i < a.size(); ++i) g[i] -= a[i];
    return g;
  };

  std::vector<NewtonOutcome> outcomes(opt.seeds);
  parallel_for(opt.seeds, [&](std::size_t i) {
    outcomes[i] = damped_newton(h, seeds[i], opt.tol, opt.max_iter);
  });

  FixedPointReport report;
  std::vector<NewtonOutcome> converged;
  for (auto& o : outcomes) {
    if (o.converged) {
      // Residual re-checked independently of Newton's own bookkeeping.
      o.residual = sup_norm(h(o.x));
      if (o.residual <= opt.tol) {
        converged.push_back(std::move(o));
        continue;
      }
    }
    ++report.failed_seeds;
  }
  report.converged_seeds = converged.size();

  auto lex_key = [](const ComplexVector& v) {
    std::vector<std::tuple<double, double>> k;
    for (const auto& z : v) k.emplace_back(std::round(z.real() * 1e9), std::round(z.imag() * 1e9));
    return k;
  };
  std::stable_sort(converged.begin(), converged.end(), [&](const auto& a, const auto& b) {
    if (a.residual != b.residual) return a.residual < b.residual;
    return lex_key(a.x) < lex_key(b.x);
  });

  const double origin_scale = 1e-8;
  std::vector<FixedPointRecord> kept;
  for (const auto& o : converged) {
    const bool at_origin = sup_norm(o.x) < origin_scale;
    const bool duplicate = std::any_of(kept.begin(), kept.end(), [&](const FixedPointRecord& r) {
      const bool r_origin = sup_norm(r.a.coords) < origin_scale;
      if (at_origin || r_origin) return at_origin && r_origin;
      return chart_distance(r.a.coords, o.x) < opt.dedup_distance;
    });
    if (duplicate) continue;
    FixedPointRecord rec;
    rec.a = ModuliVector{o.x};
    rec.residual = o.residual;
    // The collapsed configuration a = 0 lies on the forbidden locus in every chart.
    rec.delta_distance = at_origin ? 0.0 : delta_distance(o.x);
    rec.on_delta = rec.delta_distance < opt.delta_flag;
    kept.push_back(std::move(rec));
  }

  std::stable_sort(kept.begin(), kept.end(), [&](const auto& a, const auto& b) {
    if (a.on_delta != b.on_delta) return !a.on_delta;
    return lex_key(a.a.coords) < lex_key(b.a.coords);
  });

  for (auto& rec : kept) {
    if (rec.on_delta) continue;
    rec.recovered_poly = recover_polynomial(gf, rec);
    if (portrait != nullptr) {
      const auto cert = certify_pcf(rec.recovered_poly, *portrait);
      rec.certified = cert.certified;
      rec.certification_deviation = cert.max_deviation;
    }
  }
  report.records = std::move(kept);
  return report;
}

ComplexPoly recover_polynomial(const GfMap& gf, const FixedPointRecord& record, double tol) {
  if (record.on_delta) {
    throw CorruptFixedPoint("recover_polynomial: record lies on the forbidden locus");
  }
  const ComplexPoly f = gf.monic_polynomial(record.a);
  const ComplexVector full = record.a.with_origin();
  const double scale = std::max(1.0, sup_norm(full));
  for (std::size_t k = 0; k < full.size(); ++k) {
    const Complex value = eval(f, full[static_cast<std::size_t>(gf.nu()[k])]);
    if (std::abs(value - full[k]) > tol * std::pow(scale, gf.degree())) {
      throw CorruptFixedPoint("recover_polynomial: F_a(a_nu(" + std::to_string(k) +
                              ")) differs from a_" + std::to_string(k));
    }
  }
  return f;
}

std::string to_string(OrbitStatus s) {
  switch (s) {
    case OrbitStatus::kCompleted: return "completed";
    case OrbitStatus::kStalled: return "stalled";
    case OrbitStatus::kBranchLost: return "branch_lost";
  }
  return "unknown";
}

namespace {

std::size_t max_index(const ComplexVector& x) {
  std::size_t k = 0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (std::abs(x[i]) > std::abs(x[k])) k = i;
  }
  return k;
}

ComplexVector insert_one(const ComplexVector& u, std::size_t k) {
  ComplexVector y = u;
  y.insert(y.begin() + static_cast<std::ptrdiff_t>(k), Complex(1.0, 0.0));
  return y;
}

ComplexVector drop_index(const ComplexVector& y, std::size_t k) {
  ComplexVector u = y;
  u.erase(u.begin() + static_cast<std::ptrdiff_t>(k));
  return u;
}

double nearest(const ComplexVector& x, const std::vector<ProjectivePoint>& fixed) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& f : fixed) best = std::min(best, chart_distance(f.coords, x));
  return best;
}

}  // namespace

PullbackOrbit pullback_orbit(const GfMap& gf, const ProjectivePoint& start, int steps,
                             double tol, const std::vector<ProjectivePoint>& fixed_classes) {
  if (start.coords.size() != gf.dimension()) {
    throw DegenerateInput("pullback_orbit: start has wrong dimension");
  }
  if (delta_distance(start.coords) < kDeltaThreshold) {
    throw DegenerateInput("pullback_orbit: start lies on the forbidden locus");
  }
  PullbackOrbit orbit;
  ComplexVector x = normalize_chart(start.coords).coords;
  orbit.points.push_back({x});
  orbit.distances.push_back(nearest(x, fixed_classes));
  if (gf.dimension() == 1) {
    for (int s = 0; s < steps; ++s) {
      orbit.points.push_back({x});
      orbit.distances.push_back(orbit.distances.back());
    }
    return orbit;
  }

  for (int s = 0; s < steps; ++s) {
    const std::size_t k = max_index(x);
    auto residual = [&](const ComplexVector& u) {
      const ComplexVector g = gf.eval(ModuliVector{insert_one(u, k)}).coords;
      ComplexVector r;
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (i != k) r.push_back(g[i] - g[k] * x[i]);
      }
      return r;
    };
    const NewtonOutcome sol = damped_newton(residual, drop_index(x, k), tol, 100);
    if (!sol.converged) {
      orbit.status = OrbitStatus::kStalled;
      return orbit;
    }
    const ComplexVector next = normalize_chart(insert_one(sol.x, k)).coords;
    if (chart_distance(x, next) > 0.5) {
      orbit.status = OrbitStatus::kBranchLost;
      return orbit;
    }
    x = next;
    orbit.points.push_back({x});
    orbit.distances.push_back(nearest(x, fixed_classes));
  }
  return orbit;
}

ComplexMatrix chart_jacobian(const GfMap& gf, const ProjectivePoint& x, double step) {
  const ComplexVector y = normalize_chart(x.coords).coords;
  const std::size_t k = max_index(y);
  auto chart_map = [&](const ComplexVector& u) {
    const ComplexVector g = gf.eval(ModuliVector{insert_one(u, k)}).coords;
    ComplexVector out;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (i != k) out.push_back(g[i] / g[k]);
    }
    return out;
  };
  return finite_difference_jacobian(chart_map, drop_index(y, k), step);
}

double inverse_branch_rate(const GfMap& gf, const ProjectivePoint& fixed_class) {
  const ComplexMatrix jac = chart_jacobian(gf, fixed_class);
  if (jac.rows() == 0) return 0.0;
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(jac);
  double smallest = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    smallest = std::min(smallest, std::abs(solver.eigenvalues()(i)));
  }
  return 1.0 / smallest;
}

}  // namespace pullback
