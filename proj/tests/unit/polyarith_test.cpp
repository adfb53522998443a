#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "pullback/complex_io.hpp"
#include "pullback/error.hpp"
#include "pullback/poly.hpp"

namespace pullback {
namespace {

const Complex kI(0.0, 1.0);

void expect_poly_near(const ComplexPoly& p, std::initializer_list<Complex> expected, double tol = 1e-13) {
  ASSERT_EQ(p.degree() + 1, static_cast<int>(expected.size()));
  std::size_t i = 0;
  for (const Complex& c : expected) EXPECT_LT(std::abs(p[i++] - c), tol) << "coefficient " << i - 1;
}

int total_multiplicity(const std::vector<CriticalPoint>& cps) {
  int sum = 0;
  for (const auto& c : cps) sum += c.multiplicity;
  return sum;
}

TEST(ComplexPoly, TrimsTrailingZeros) {
  EXPECT_EQ(ComplexPoly({1.0, 2.0, 0.0, 0.0}).degree(), 1);
  EXPECT_TRUE(ComplexPoly({0.0, 0.0}).is_zero());
  EXPECT_EQ(ComplexPoly().degree(), -1);
}

TEST(ExpandFromRoots, SmallCases) {
  const std::vector<RootMultiplicity> one{{0.0, 1}};
  expect_poly_near(expand_from_roots(one), {0.0, 1.0});
  const std::vector<RootMultiplicity> two{{1.0, 1}, {-1.0, 1}};
  expect_poly_near(expand_from_roots(two), {-1.0, 0.0, 1.0});
  const std::vector<RootMultiplicity> square{{2.0, 2}};
  expect_poly_near(expand_from_roots(square), {4.0, -4.0, 1.0});
  expect_poly_near(expand_from_roots({}), {1.0});
}

TEST(Antiderivative, VanishesAtBase) {
  expect_poly_near(antiderivative(ComplexPoly({0.0, 2.0}), 1.0), {-1.0, 0.0, 1.0});
  expect_poly_near(antiderivative(ComplexPoly({1.0}), 0.0), {0.0, 1.0});
  // z^3 - i^3 = z^3 + i
  expect_poly_near(antiderivative(ComplexPoly({0.0, 0.0, 3.0}), kI), {kI, 0.0, 0.0, 1.0});
}

TEST(Antiderivative, DerivativeRoundTripIsCoefficientExact) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    ComplexVector c;
    for (int i = 0; i <= trial % 12; ++i) c.emplace_back(u(rng), u(rng));
    const ComplexPoly p(c);
    const ComplexPoly back = derivative(antiderivative(p, Complex(u(rng), u(rng))));
    ASSERT_EQ(back.degree(), p.degree());
    for (int i = 0; i <= p.degree(); ++i) {
      // Division then multiplication by the same integer: at most one rounding each way.
      EXPECT_LE(std::abs(back[i] - p[i]), 4 * std::numeric_limits<double>::epsilon() * std::abs(p[i]));
    }
  }
}

TEST(Eval, HornerValues) {
  const ComplexPoly p({-1.0, 0.0, 1.0});
  EXPECT_EQ(eval(p, 2.0), Complex(3.0));
  EXPECT_EQ(eval(ComplexPoly(), Complex(5.0, -2.0)), Complex(0.0));
  EXPECT_LT(std::abs(eval(p, Complex(1.0, 1.0)) - Complex(-1.0, 2.0)), 1e-15);
}

TEST(Compose, PolynomialSubstitution) {
  // (z^2 + 1) o (z + 1) = z^2 + 2z + 2
  expect_poly_near(compose(ComplexPoly({1.0, 0.0, 1.0}), ComplexPoly({1.0, 1.0})), {2.0, 2.0, 1.0});
}

TEST(Roots, SimpleCases) {
  const auto r2 = roots(ComplexPoly({-1.0, 0.0, 1.0}));
  ASSERT_EQ(r2.size(), 2u);
  EXPECT_LT(std::abs(r2[0] + 1.0), 1e-14);
  EXPECT_LT(std::abs(r2[1] - 1.0), 1e-14);

  const auto r3 = roots(ComplexPoly({-1.0, 0.0, 0.0, 1.0}));
  ASSERT_EQ(r3.size(), 3u);
  const Complex w(-0.5, std::sqrt(3.0) / 2.0);
  EXPECT_LT(std::abs(r3[0] - std::conj(w)), 1e-14);
  EXPECT_LT(std::abs(r3[1] - w), 1e-14);
  EXPECT_LT(std::abs(r3[2] - 1.0), 1e-14);
}

TEST(Roots, PeriodThreeCubicMatchesBisectionOracle) {
  const auto expected = oracle::period_three_parameters();
  const auto found = roots(ComplexPoly({1.0, 1.0, 2.0, 1.0}));
  ASSERT_EQ(found.size(), 3u);
  // Ordered by real part: the real root first, then the pair (imaginary part ascending).
  for (std::size_t i = 0; i < 3; ++i) EXPECT_LT(std::abs(found[i] - expected[i]), 1e-12) << i;
  EXPECT_NEAR(expected[0].real(), -1.754877666246693, 1e-12);
  EXPECT_NEAR(expected[2].real(), -0.122561166876654, 1e-12);
  EXPECT_NEAR(expected[2].imag(), 0.744861766619744, 1e-12);
}

TEST(Roots, ExactMultipleRootsAreGrouped) {
  const std::vector<RootMultiplicity> input{{1.0, 3}, {-2.0, 1}, {kI, 2}};
  const auto grouped = roots_with_multiplicity(expand_from_roots(input));
  ASSERT_EQ(grouped.size(), 3u);
  for (const auto& want : input) {
    const auto hit = std::find_if(grouped.begin(), grouped.end(), [&](const RootMultiplicity& g) {
      return std::abs(g.root - want.root) < 1e-10;
    });
    ASSERT_NE(hit, grouped.end());
    EXPECT_EQ(hit->multiplicity, want.multiplicity);
  }
}

TEST(Roots, ConstantPolynomialIsRejected) {
  EXPECT_THROW(roots(ComplexPoly({3.0})), DegenerateInput);
}

TEST(RootsProperty, RecoversRandomSeparatedRoots) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 40; ++trial) {
    const int degree = 1 + trial % 10;
    std::vector<RootMultiplicity> input;
    while (static_cast<int>(input.size()) < degree) {
      const Complex z(u(rng), u(rng));
      const bool separated = std::all_of(input.begin(), input.end(), [&](const RootMultiplicity& r) {
        return std::abs(r.root - z) > 0.1;
      });
      if (separated) input.push_back({z, 1});
    }
    const ComplexPoly p = expand_from_roots(input);
    for (const auto& r : input) EXPECT_LE(std::abs(eval(p, r.root)), 1e-10 * eval_scale(p, r.root));
    const auto found = roots(p);
    ASSERT_EQ(found.size(), input.size());
    for (const auto& r : input) {
      double best = 1e300;
      for (const auto& f : found) best = std::min(best, std::abs(f - r.root));
      EXPECT_LT(best, 1e-8);
    }
  }
}

TEST(RationalEval, HandlesPolesAndInfinity) {
  const RationalMap r(ComplexPoly({0.0, 0.0, 3.0}), ComplexPoly({1.0, 0.0, 0.0, 2.0}));
  EXPECT_EQ(rational_eval(r, SpherePoint::infinity()), SpherePoint(0.0));
  const Complex pole = -std::cbrt(0.5);
  EXPECT_LT(chordal_distance(rational_eval(r, pole), SpherePoint::infinity()), 1e-12);
  const RationalMap unreduced(ComplexPoly({0.0, 1.0}), ComplexPoly({0.0, 1.0}));
  EXPECT_THROW(rational_eval(unreduced, 0.0), DegenerateInput);
  const RationalMap square = RationalMap::polynomial(ComplexPoly({0.0, 0.0, 1.0}));
  EXPECT_TRUE(rational_eval(square, SpherePoint::infinity()).is_infinite());
  EXPECT_TRUE(rational_eval(square, Complex(1e200, 0.0)).is_infinite());
}

TEST(RationalMap, RejectsZeroDenominator) {
  EXPECT_THROW(RationalMap(ComplexPoly({1.0}), ComplexPoly()), DegenerateInput);
}

TEST(CriticalPoints, PowerMap) {
  const auto cps = critical_points(RationalMap::polynomial(ComplexPoly({0.0, 0.0, 1.0})));
  ASSERT_EQ(cps.size(), 2u);
  EXPECT_LT(chordal_distance(cps[0].point, 0.0), 1e-14);
  EXPECT_EQ(cps[0].multiplicity, 1);
  EXPECT_TRUE(cps[1].point.is_infinite());
  EXPECT_EQ(cps[1].multiplicity, 1);
}

TEST(CriticalPoints, CubicFigureMap) {
  const RationalMap r(ComplexPoly({0.0, 0.0, 3.0}), ComplexPoly({1.0, 0.0, 0.0, 2.0}));
  std::vector<SpherePoint> found;
  for (const auto& c : critical_points(r)) {
    EXPECT_EQ(c.multiplicity, 1);
    found.push_back(c.point);
  }
  const Complex w = omega();
  EXPECT_TRUE(same_set(found, {0.0, 1.0, w, std::conj(w)}, 1e-12));
}

TEST(CriticalPoints, RiemannHurwitzCountOnRandomMaps) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    ComplexVector num;
    ComplexVector den;
    for (int i = 0; i <= 1 + trial % 4; ++i) num.emplace_back(u(rng), u(rng));
    for (int i = 0; i <= trial % 3; ++i) den.emplace_back(u(rng), u(rng));
    const RationalMap r{ComplexPoly(num), ComplexPoly(den)};
    if (r.degree() < 2) continue;
    EXPECT_EQ(total_multiplicity(critical_points(r)), 2 * r.degree() - 2);
  }
  // Polynomials put the remaining multiplicity at infinity.
  const auto poly = critical_points(RationalMap::polynomial(ComplexPoly({1.0, 0.0, 0.0, 0.0, 1.0})));
  EXPECT_EQ(total_multiplicity(poly), 6);
  EXPECT_TRUE(poly.back().point.is_infinite());
  EXPECT_EQ(poly.back().multiplicity, 3);
}

TEST(Preimages, CountsMultiplicityIncludingInfinity) {
  const RationalMap cube = RationalMap::polynomial(ComplexPoly({0.0, 0.0, 0.0, 1.0}));
  const auto at_zero = preimages(cube, 0.0);
  ASSERT_EQ(at_zero.size(), 1u);
  EXPECT_EQ(at_zero[0].multiplicity, 3);
  const auto at_inf = preimages(cube, SpherePoint::infinity());
  ASSERT_EQ(at_inf.size(), 1u);
  EXPECT_TRUE(at_inf[0].point.is_infinite());
  EXPECT_EQ(at_inf[0].multiplicity, 3);
  EXPECT_EQ(preimages(cube, 8.0).size(), 3u);
}

TEST(Sphere, ChordalMetricTreatsInfinityUniformly) {
  EXPECT_DOUBLE_EQ(chordal_distance(0.0, SpherePoint::infinity()), 2.0);
  EXPECT_NEAR(chordal_distance(1.0, SpherePoint::infinity()), std::sqrt(2.0), 1e-15);
  EXPECT_LT(chordal_distance(Complex(1e12, 0.0), SpherePoint::infinity()), 1e-11);
  EXPECT_NEAR(chordal_distance(Complex(0.3, 0.1), Complex(-2.0, 1.0)),
              oracle::chordal(Complex(0.3, 0.1), Complex(-2.0, 1.0)), 1e-15);
}

TEST(Sphere, RootsOfUnityHaveUnitModulus) {
  for (int n = 1; n <= 16; ++n) {
    const auto r = roots_of_unity(n);
    ASSERT_EQ(static_cast<int>(r.size()), n);
    for (const auto& z : r) {
      EXPECT_NEAR(std::abs(z), 1.0, 1e-15);
      EXPECT_LT(std::abs(std::pow(z, n) - 1.0), 1e-13);
    }
  }
}

TEST(ComplexIo, ParsesAndFormats) {
  EXPECT_EQ(parse_complex("-0.5,0.8660254"), Complex(-0.5, 0.8660254));
  EXPECT_EQ(parse_complex("2"), Complex(2.0, 0.0));
  EXPECT_TRUE(parse_sphere_point("inf").is_infinite());
  EXPECT_THROW(parse_complex("1,2,3"), InputError);
  EXPECT_THROW(parse_complex("abc"), InputError);
  const Complex z(0.1, -1.0 / 3.0);
  EXPECT_EQ(parse_complex(format_complex(z)), z);
  EXPECT_EQ(parse_complex_list("1,0; 0,1  2").size(), 3u);
}

}  // namespace
}  // namespace pullback
