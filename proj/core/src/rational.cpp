#include <algorithm>
#include <cmath>

#include "pullback/error.hpp"
#include "pullback/poly.hpp"

namespace pullback {

RationalMap::RationalMap(ComplexPoly n, ComplexPoly d)
    : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw DegenerateInput("rational map with zero denominator");
}

RationalMap RationalMap::polynomial(ComplexPoly p) {
  return RationalMap(std::move(p), ComplexPoly::constant(1.0));
}

int RationalMap::degree() const { return std::max(num.degree(), den.degree()); }

namespace {

// sum_i c_i w^(k-i): the homogeneous form of p evaluated at z = 1/w.
Complex eval_reversed(const ComplexPoly& p, int k, Complex w) {
  Complex acc{};
  const auto c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    acc = acc * w + c[i];
  }
  // acc = sum c_i w^(deg-i); pad to degree k
  for (int i = p.degree(); i < k; ++i) acc *= w;
  return acc;
}

}  // namespace

SpherePoint rational_eval(const RationalMap& r, const SpherePoint& z) {
  const int p = r.num.degree();
  const int q = r.den.degree();
  if (z.is_infinite()) {
    if (p > q) return SpherePoint::infinity();
    if (p < q) return Complex{};
    return r.num.leading() / r.den.leading();
  }
  const Complex x = z.value();
  Complex n;
  Complex d;
  if (std::abs(x) <= 1.0) {
    n = eval(r.num, x);
    d = eval(r.den, x);
  } else {
    const int k = std::max(p, q);
    const Complex w = 1.0 / x;
    n = p < 0 ? Complex{} : eval_reversed(r.num, k, w);
    d = eval_reversed(r.den, k, w);
  }
  if (d == Complex{}) {
    if (n == Complex{}) throw DegenerateInput("numerator and denominator vanish together");
    return SpherePoint::infinity();
  }
  return SpherePoint(n / d);
}

RationalMap compose(const RationalMap& outer, const RationalMap& inner) {
  // outer(N/D) = sum a_i N^i D^(k-i) / sum b_i N^i D^(k-i)
  const int k = outer.degree();
  std::vector<ComplexPoly> npow{ComplexPoly::constant(1.0)};
  std::vector<ComplexPoly> dpow{ComplexPoly::constant(1.0)};
  for (int i = 1; i <= k; ++i) {
    npow.push_back(npow.back() * inner.num);
    dpow.push_back(dpow.back() * inner.den);
  }
  ComplexPoly num;
  ComplexPoly den;
  for (int i = 0; i <= k; ++i) {
    const auto term = npow[static_cast<std::size_t>(i)] * dpow[static_cast<std::size_t>(k - i)];
    num = num + outer.num[static_cast<std::size_t>(i)] * term;
    den = den + outer.den[static_cast<std::size_t>(i)] * term;
  }
  return RationalMap(std::move(num), std::move(den));
}

std::vector<CriticalPoint> critical_points(const RationalMap& r,
                                           const RootOptions& options) {
  const int d = r.degree();
  if (d < 1) throw DegenerateInput("critical points of a constant map");
  const ComplexPoly w =
      (derivative(r.num) * r.den - r.num * derivative(r.den)).trimmed_relative(1e-14);
  std::vector<CriticalPoint> out;
  if (w.degree() >= 1) {
    for (const auto& [root, mult] : roots_with_multiplicity(w, options)) {
      out.push_back({root, mult});
    }
  }
  const int at_infinity = 2 * d - 2 - std::max(w.degree(), 0);
  if (at_infinity > 0) out.push_back({SpherePoint::infinity(), at_infinity});
  return out;
}

std::vector<SpherePoint> critical_values(const RationalMap& r, double tol,
                                         const RootOptions& options) {
  std::vector<SpherePoint> out;
  for (const auto& cp : critical_points(r, options)) {
    insert_unique(out, rational_eval(r, cp.point), tol);
  }
  return out;
}

std::vector<PointMultiplicity> preimages(const RationalMap& r,
                                         const SpherePoint& target,
                                         const RootOptions& options) {
  const int d = r.degree();
  // R(z) = t  <=>  N - t D = 0 ; R(z) = inf  <=>  D = 0.
  const ComplexPoly eq = target.is_infinite()
                             ? r.den
                             : (r.num - target.value() * r.den).trimmed_relative(1e-14);
  std::vector<PointMultiplicity> out;
  if (eq.degree() >= 1) {
    for (const auto& [root, mult] : roots_with_multiplicity(eq, options)) {
      out.push_back({root, mult});
    }
  }
  const int at_infinity = d - std::max(eq.degree(), 0);
  if (at_infinity > 0) out.push_back({SpherePoint::infinity(), at_infinity});
  return out;
}

}  // namespace pullback
