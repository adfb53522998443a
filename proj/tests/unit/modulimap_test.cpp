#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pullback/error.hpp"
#include "pullback/moduli_map.hpp"

namespace pullback {
namespace {

GfMap build(const std::string& name) {
  return GfMap::build(load_portrait(oracle::data_path("portraits/" + name)));
}

const char* const kPeriodicPortraits[] = {"rabbit.json", "period4.json", "cubic_fixed.json",
                                          "unicritical_cubic_period3.json", "cubic_two_cycles.json"};

ModuliVector random_point(std::mt19937_64& rng, std::size_t dim, double radius = 2.0) {
  ModuliVector a;
  for (std::size_t i = 0; i < dim; ++i) a.coords.push_back(sample_disk(rng, radius));
  return a;
}

double sup_norm(const ComplexVector& v) {
  double m = 0.0;
  for (const auto& z : v) m = std::max(m, std::abs(z));
  return m;
}

TEST(Build, RabbitData) {
  const GfMap gf = build("rabbit.json");
  EXPECT_EQ(gf.degree(), 2);
  EXPECT_EQ(gf.n(), 1);
  EXPECT_EQ(gf.multiplicities(), (std::vector<int>{1, 0, 0}));
  EXPECT_EQ(gf.nu(), (std::vector<int>{2, 0, 1}));
}

TEST(Build, FixedCriticalCubic) {
  const GfMap gf = build("cubic_fixed.json");
  EXPECT_EQ(gf.dimension(), 1u);
  EXPECT_EQ(gf.nu(), (std::vector<int>{0, 1}));
}

TEST(Build, RejectsUnsupportedPortraits) {
  EXPECT_THROW(build("quartic_preperiodic.json"), HypothesisError);
  EXPECT_THROW(build("cubic_rational.json"), HypothesisError);
  EXPECT_THROW(GfMap(2, {0, 0, 1}, {1, 0, 0}), HypothesisError);
}

TEST(Eval, RabbitHandExpansion) {
  const GfMap gf = build("rabbit.json");
  // F_a(z) = z^2 - a2^2, G = (F(0), F(a1)) = (-a2^2, a1^2 - a2^2).
  const ModuliVector image = gf.eval({{1.0, 1.0}});
  EXPECT_LT(std::abs(image[0] + 1.0), 1e-15);
  EXPECT_LT(std::abs(image[1]), 1e-15);

  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const ModuliVector a = random_point(rng, 2);
    const ModuliVector b = gf.eval(a);
    EXPECT_LT(std::abs(b[0] + a[1] * a[1]), 1e-13);
    EXPECT_LT(std::abs(b[1] - (a[0] * a[0] - a[1] * a[1])), 1e-13);
  }
}

TEST(Eval, OriginIsFixed) {
  for (const char* name : kPeriodicPortraits) {
    const GfMap gf = build(name);
    const ModuliVector zero{ComplexVector(gf.dimension(), Complex{})};
    EXPECT_EQ(sup_norm(gf.eval(zero).coords), 0.0) << name;
  }
}

TEST(Eval, MonicPolynomialVanishesAtPinnedTarget) {
  const GfMap gf = build("cubic_two_cycles.json");
  std::mt19937_64 rng(9);
  const ModuliVector a = random_point(rng, gf.dimension());
  const ComplexPoly f = gf.monic_polynomial(a);
  EXPECT_EQ(f.degree(), 3);
  EXPECT_LT(std::abs(f.leading() - 1.0), 1e-14);
  const ComplexVector full = a.with_origin();
  EXPECT_LT(std::abs(eval(f, full[static_cast<std::size_t>(gf.nu()[0])])), 1e-13);
}

TEST(EvalChart, RabbitSignAbsorbed) {
  const GfMap gf = build("rabbit.json");
  const ProjectivePoint image = gf.eval_chart({{1.0, 1.0}});
  EXPECT_LT(std::abs(image.coords[0] - 1.0), 1e-15);
  EXPECT_LT(std::abs(image.coords[1]), 1e-15);
}

TEST(EvalChart, ScaleInvariant) {
  std::mt19937_64 rng(21);
  for (const char* name : kPeriodicPortraits) {
    const GfMap gf = build(name);
    const ModuliVector a = random_point(rng, gf.dimension());
    ComplexVector scaled = a.coords;
    for (auto& z : scaled) z *= 2.0;
    const auto x = gf.eval_chart({a.coords});
    const auto y = gf.eval_chart({scaled});
    EXPECT_LT(chart_distance(x.coords, y.coords), 1e-12) << name;
  }
}

TEST(Jacobian, RabbitMatchesHandDerivative) {
  const GfMap gf = build("rabbit.json");
  std::mt19937_64 rng(4);
  for (int t = 0; t < 20; ++t) {
    const ModuliVector a = random_point(rng, 2);
    const JacobianResult j = jacobian(gf, a);
    EXPECT_LT(std::abs(j.matrix(0, 0)), 1e-8);
    EXPECT_LT(std::abs(j.matrix(0, 1) + 2.0 * a[1]), 1e-8);
    EXPECT_LT(std::abs(j.matrix(1, 0) - 2.0 * a[0]), 1e-8);
    EXPECT_LT(std::abs(j.matrix(1, 1) + 2.0 * a[1]), 1e-8);
    EXPECT_LT(std::abs(j.determinant - oracle::rabbit_jacobian_det(a[0], a[1])), 1e-8);
    EXPECT_LT(std::abs(gf.closed_form_J(a) - a[0] * a[1]), 1e-14);
  }
  EXPECT_LT(std::abs(jacobian(gf, {{0.0, 1.3}}).determinant), 1e-9);
}

TEST(Jacobian, DeterminantIsHomogeneous) {
  std::mt19937_64 rng(8);
  for (const char* name : kPeriodicPortraits) {
    const GfMap gf = build(name);
    const ModuliVector a = random_point(rng, gf.dimension(), 1.0);
    ModuliVector twice = a;
    for (auto& z : twice.coords) z *= 2.0;
    const int degree = static_cast<int>(gf.dimension()) * (gf.degree() - 1);
    const Complex expected = std::pow(2.0, degree) * jacobian(gf, a).determinant;
    EXPECT_LT(std::abs(jacobian(gf, twice).determinant - expected), 1e-6 * std::abs(expected)) << name;
  }
}

TEST(ClosedForm, DegreeIsDimensionTimesDegreeMinusOne) {
  for (const char* name : kPeriodicPortraits) {
    const GfMap gf = build(name);
    EXPECT_EQ(gf.closed_form_J_degree(), (gf.n() + 1) * (gf.degree() - 1)) << name;
  }
}

TEST(JacobianIdentity, RatioIsConstantOffTheLocus) {
  for (const char* name : kPeriodicPortraits) {
    const JacobianCheck c = jacobian_identity_check(build(name), 100, 17);
    EXPECT_EQ(c.samples, 100u);
    EXPECT_LT(c.relative_spread, 1e-6) << name;
    EXPECT_GT(std::abs(c.constant), 1e-6) << name;
    EXPECT_EQ(c.j_degree, c.expected_degree);
  }
  EXPECT_LT(std::abs(jacobian_identity_check(build("rabbit.json"), 100, 1).constant - 4.0), 1e-8);
  EXPECT_THROW(jacobian_identity_check(build("rabbit.json"), 0, 1), DegenerateInput);
}

TEST(JacobianProperty, NonvanishingOffTheLocus) {
  std::mt19937_64 rng(31);
  for (const char* name : kPeriodicPortraits) {
    const GfMap gf = build(name);
    int checked = 0;
    while (checked < 50) {
      const ModuliVector a = random_point(rng, gf.dimension());
      if (delta_distance(a.coords) <= 0.1) continue;
      ++checked;
      const double scale = std::pow(sup_norm(a.coords), gf.closed_form_J_degree());
      EXPECT_GT(std::abs(jacobian(gf, a).determinant), 1e-12 * scale) << name;
    }
  }
}

TEST(HomogeneityProperty, DegreeD) {
  std::mt19937_64 rng(12);
  for (const char* name : kPeriodicPortraits) {
    const GfMap gf = build(name);
    for (int t = 0; t < 20; ++t) {
      const ModuliVector a = random_point(rng, gf.dimension());
      const Complex lambda = sample_disk(rng, 2.0);
      ModuliVector scaled = a;
      for (auto& z : scaled.coords) z *= lambda;
      const ModuliVector fa = gf.eval(a);
      const ModuliVector fs = gf.eval(scaled);
      const Complex factor = std::pow(lambda, gf.degree());
      for (std::size_t i = 0; i < fa.size(); ++i) {
        EXPECT_LT(std::abs(fs[i] - factor * fa[i]), 1e-10 * std::max(1.0, std::abs(factor) * sup_norm(fa.coords)))
            << name;
      }
    }
  }
}

TEST(DeltaProperty, CollisionsMapToPredictedCollisions) {
  std::mt19937_64 rng(44);
  for (const char* name : kPeriodicPortraits) {
    const GfMap gf = build(name);
    const std::size_t points = gf.dimension() + 1;
    for (int t = 0; t < 200; ++t) {
      std::uniform_int_distribution<std::size_t> pick(0, points - 1);
      std::size_t i = pick(rng);
      std::size_t j = pick(rng);
      while (j == i) j = pick(rng);
      if (j == 0) std::swap(i, j);  // a_0 stays pinned at 0
      ComplexVector full(points);
      for (std::size_t k = 1; k < points; ++k) full[k] = sample_disk(rng, 2.0);
      full[j] = full[i];
      const ModuliVector a{ComplexVector(full.begin() + 1, full.end())};
      const ComplexVector b = gf.eval(a).with_origin();
      const auto mi = static_cast<std::size_t>(gf.mu()[i]);
      const auto mj = static_cast<std::size_t>(gf.mu()[j]);
      EXPECT_LT(std::abs(b[mi] - b[mj]), 1e-10 * std::max(1.0, sup_norm(b))) << name;
    }
  }
}

TEST(DeltaProperty, LocusIsInvariant) {
  const GfMap gf = build("period4.json");
  std::mt19937_64 rng(45);
  for (int t = 0; t < 100; ++t) {
    ModuliVector a = random_point(rng, gf.dimension());
    a.coords[1] = a.coords[2];
    EXPECT_LT(delta_distance(gf.eval(a).coords), 1e-8);
  }
}

TEST(ZeroPreimageProperty, OnlyTheOrigin) {
  std::mt19937_64 rng(46);
  std::normal_distribution<double> g(0.0, 1.0);
  for (const char* name : kPeriodicPortraits) {
    const GfMap gf = build(name);
    double smallest = 1e300;
    for (int t = 0; t < 10000; ++t) {
      ComplexVector a(gf.dimension());
      for (auto& z : a) z = Complex(g(rng), g(rng));
      const double norm = sup_norm(a);
      for (auto& z : a) z /= norm;
      smallest = std::min(smallest, sup_norm(gf.eval({a}).coords));
    }
    EXPECT_GT(smallest, 0.0) << name;
  }
}

TEST(DeltaDistance, Examples) {
  EXPECT_EQ(delta_distance(ComplexVector{1.0, 1.0}), 0.0);
  EXPECT_DOUBLE_EQ(delta_distance(ComplexVector{1.0, 0.5}), 0.5);
  EXPECT_EQ(delta_distance(ComplexVector{0.0, 2.0}), 0.0);
}

TEST(Chart, NormalizationAndDistance) {
  const auto p = normalize_chart(ComplexVector{Complex(0.0, 2.0), 1.0});
  EXPECT_EQ(p.coords[0], Complex(1.0));
  EXPECT_LT(std::abs(p.coords[1] - Complex(0.0, -0.5)), 1e-16);
  EXPECT_THROW(normalize_chart(ComplexVector{0.0, 0.0}), NumericalDegeneracy);
  EXPECT_LT(chart_distance(ComplexVector{1.0, 2.0}, ComplexVector{-3.0, -6.0}), 1e-15);
}

}  // namespace
}  // namespace pullback
