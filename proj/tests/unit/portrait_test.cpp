#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pullback/error.hpp"
#include "pullback/portrait.hpp"

namespace pullback {
namespace {

RamificationPortrait load(const std::string& name) {
  return load_portrait(oracle::data_path("portraits/" + name));
}

TEST(Validate, RabbitPortrait) {
  const auto v = validate(load("rabbit.json"));
  EXPECT_EQ(v.degree, 2);
  EXPECT_EQ(v.n, 1);
  EXPECT_TRUE(v.polynomial);
  EXPECT_TRUE(v.all_critical_periodic);
  EXPECT_TRUE(v.is_permutation);
  ASSERT_TRUE(v.permutation.has_value());
  EXPECT_EQ(v.marked_count, 4);  // inf appended
}

TEST(Validate, CubicRationalPortraitIsNotPolynomial) {
  const auto v = validate(load("cubic_rational.json"));
  EXPECT_FALSE(v.polynomial);
  EXPECT_TRUE(v.all_critical_periodic);
  EXPECT_TRUE(v.is_permutation);
  EXPECT_EQ(v.n, 1);
}

TEST(Validate, PreperiodicCriticalPoint) {
  const auto portrait = load("quartic_preperiodic.json");
  const auto v = validate(portrait);
  EXPECT_FALSE(v.all_critical_periodic);
  EXPECT_FALSE(v.is_permutation);
  EXPECT_EQ(v.n, 1);  // P_f = {0, -1, 1, inf}
  EXPECT_THROW(mu_nu(portrait), HypothesisError);
}

TEST(Validate, IsPureAndRepeatable) {
  const auto portrait = load("cubic_two_cycles.json");
  EXPECT_EQ(validate(portrait).to_string(), validate(portrait).to_string());
}

TEST(OrbitOf, TailAndCycle) {
  EXPECT_EQ(orbit_of(load("rabbit.json"), "c"), (Orbit{0, 3}));
  EXPECT_EQ(orbit_of(load("quartic_preperiodic.json"), "0"), (Orbit{2, 1}));
  EXPECT_EQ(orbit_of(load("quartic_preperiodic.json"), "r+"), (Orbit{3, 1}));
  EXPECT_EQ(orbit_of(load("rabbit.json"), "inf"), (Orbit{0, 1}));
  EXPECT_THROW(orbit_of(load("rabbit.json"), "nowhere"), InputError);
}

TEST(MuNu, RabbitThreeCycle) {
  const Permutation p = mu_nu(load("rabbit.json"));
  EXPECT_EQ(p.mu, (std::vector<int>{1, 2, 0}));
  EXPECT_EQ(p.nu, (std::vector<int>{2, 0, 1}));
}

TEST(MuNu, AllFixedIsIdentity) {
  const Permutation p = mu_nu(load("cubic_fixed.json"));
  EXPECT_EQ(p.mu, (std::vector<int>{0, 1}));
  EXPECT_EQ(p.nu, p.mu);
}

TEST(MuNu, SwapIsSelfInverse) {
  const Permutation p = mu_nu(load("cubic_rational.json"));
  EXPECT_EQ(p.mu, (std::vector<int>{0, 1, 3, 2}));
  EXPECT_EQ(p.nu, p.mu);
}

TEST(MuNuProperty, InverseComposesToIdentity) {
  for (const char* name : {"rabbit.json", "period4.json", "cubic_two_cycles.json",
                           "unicritical_cubic_period3.json", "cubic_rational.json"}) {
    const Permutation p = mu_nu(load(name));
    for (std::size_t k = 0; k < p.mu.size(); ++k) {
      EXPECT_EQ(p.nu[static_cast<std::size_t>(p.mu[k])], static_cast<int>(k)) << name;
    }
  }
}

TEST(PolynomialProperty, FiniteMultiplicitiesSumToDegreeMinusOne) {
  for (const char* name : {"rabbit.json", "period4.json", "cubic_fixed.json", "cubic_two_cycles.json",
                           "unicritical_cubic_period3.json", "quartic_preperiodic.json",
                           "sextic_family.json"}) {
    const auto portrait = load(name);
    int sum = 0;
    for (const auto i : portrait.finite_points()) sum += portrait.points()[i].multiplicity;
    EXPECT_EQ(sum, portrait.degree() - 1) << name;
  }
}

TEST(Construction, RejectsBadInput) {
  EXPECT_THROW(RamificationPortrait(1, true, {{"a", "a", 0}}), InputError);
  // dangling image
  EXPECT_THROW(RamificationPortrait(2, true, {{"a", "b", 1}}), InputError);
  // multiplicity count
  EXPECT_THROW(RamificationPortrait(2, true, {{"a", "a", 1}, {"b", "b", 1}}), InputError);
  // duplicate label
  EXPECT_THROW(RamificationPortrait(2, true, {{"a", "a", 1}, {"a", "a", 0}}), InputError);
  // multiplicity out of range
  EXPECT_THROW(RamificationPortrait(2, false, {{"a", "a", 2}, {"b", "b", 0}}), InputError);
  // a finite point may not map to infinity in a polynomial portrait
  EXPECT_THROW(RamificationPortrait(2, true, {{"a", "inf", 1}}), InputError);
}

TEST(Json, StrictParsing) {
  EXPECT_THROW(load("malformed.json"), InputError);
  EXPECT_THROW(parse_portrait("{not json"), InputError);
  EXPECT_THROW(parse_portrait(R"({"degree": 2, "polynomial": true, "points": [], "extra": 1})"),
               InputError);
  EXPECT_THROW(parse_portrait(R"({"degree": "2", "polynomial": true, "points": []})"), InputError);
  EXPECT_THROW(parse_portrait(R"({"degree": 2, "points": []})"), InputError);
  EXPECT_THROW(load_portrait("/nonexistent/portrait.json"), InputError);
}

TEST(Json, RoundTrip) {
  const auto portrait = load("cubic_two_cycles.json");
  EXPECT_EQ(parse_portrait(portrait_to_json(portrait)), portrait);
}

}  // namespace
}  // namespace pullback
