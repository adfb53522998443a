#include "pullback/const_sigma.hpp"

#include "pullback/error.hpp"
#include "pullback/orbits.hpp"

namespace pullback {
namespace {

InclusionCheck inclusion(std::string name, const std::vector<SpherePoint>& sub,
                         const std::vector<SpherePoint>& super, double tol) {
  InclusionCheck check{std::move(name), true, std::nullopt};
  for (const auto& p : sub) {
    if (find_on_sphere(super, p, tol) < 0) {
      check.holds = false;
      check.offending = p;
      break;
    }
  }
  return check;
}

std::vector<SpherePoint> image_of(const RationalMap& map, const std::vector<SpherePoint>& points,
                                  double tol) {
  std::vector<SpherePoint> out;
  for (const auto& p : points) insert_unique(out, rational_eval(map, p), tol);
  return out;
}

std::vector<SpherePoint> merged(std::vector<SpherePoint> a, const std::vector<SpherePoint>& b,
                                double tol) {
  for (const auto& p : b) insert_unique(a, p, tol);
  return a;
}

RationalMap power_map(int k) {
  return RationalMap::polynomial(ComplexPoly::monomial(k));
}

// ((n+1) z - z^(n+1)) / n
RationalMap family_polynomial(int n) {
  const double scale = 1.0 / n;
  return RationalMap::polynomial(ComplexPoly::monomial(1, (n + 1) * scale) -
                                 ComplexPoly::monomial(n + 1, scale));
}

}  // namespace

PostcriticalSet compute_postcritical(const RationalMap& map, double tol, int max_steps) {
  if (map.degree() < 1) throw DegenerateInput("postcritical set of a constant map");
  const OrbitGraph graph = critical_orbit_graph(map, tol, max_steps);
  PostcriticalSet out;
  out.closed = graph.closed;
  out.max_deviation = graph.max_deviation;
  out.diagnostics = graph.diagnostics;
  for (const int j : graph.image) {
    if (j >= 0) insert_unique(out.points, graph.points[static_cast<std::size_t>(j)], tol);
  }
  sort_points(out.points);
  return out;
}

CertificateReport check_conditions(const DecompositionInstance& instance, double tol) {
  const auto& [s, g, marked] = instance;
  if (s.degree() < 2 && g.degree() < 2) {
    throw DegenerateInput("decomposition: s or g must have degree at least 2");
  }
  if (s.degree() < 1 || g.degree() < 1) throw DegenerateInput("decomposition: constant factor");
  std::vector<SpherePoint> distinct;
  for (const auto& p : marked) insert_unique(distinct, p, tol);
  if (distinct.size() != marked.size()) throw DegenerateInput("decomposition: repeated marked point");
  if (marked.size() < 3) throw DegenerateInput("decomposition: need at least 3 marked points");

  CertificateReport r;
  r.tol = tol;
  r.s_critical_values = critical_values(s, tol);
  r.g_critical_values = critical_values(g, tol);
  r.g_of_marked = image_of(g, marked, tol);
  for (const auto& a : marked) {
    for (const auto& p : preimages(s, a)) insert_unique(r.s_preimage_of_marked, p.point, tol);
  }
  r.bound_set = merged(r.g_critical_values, r.g_of_marked, tol);
  for (auto* set : {&r.s_critical_values, &r.g_critical_values, &r.g_of_marked,
                    &r.s_preimage_of_marked, &r.bound_set}) {
    sort_points(*set);
  }

  r.s_values_in_marked = inclusion("V_s in A", r.s_critical_values, marked, tol);
  r.bound_set_in_preimage =
      inclusion("V_g and g(A) in s^-1(A)", r.bound_set, r.s_preimage_of_marked, tol);

  r.composite = compose(g, s);
  r.composite_critical_values = critical_values(r.composite, tol);
  r.decomposed_critical_values =
      merged(r.g_critical_values, image_of(g, r.s_critical_values, tol), tol);
  sort_points(r.composite_critical_values);
  sort_points(r.decomposed_critical_values);
  r.critical_values_agree = same_set(r.composite_critical_values, r.decomposed_critical_values, tol);

  r.postcritical = compute_postcritical(r.composite, tol);
  r.lower_sandwich =
      inclusion("V_g and g(V_s) in P_f", r.decomposed_critical_values, r.postcritical.points, tol);
  r.upper_sandwich = inclusion("P_f in V_g and g(A)", r.postcritical.points, r.bound_set, tol);

  r.dimension_bound = static_cast<int>(marked.size()) - 3;
  r.certified = r.s_values_in_marked.holds && r.bound_set_in_preimage.holds;
  if (!r.certified) {
    r.verdict = "sigma_f: hypotheses not satisfied";
  } else if (r.dimension_bound == 0) {
    r.verdict = "sigma_f: constant (|A|=3)";
  } else {
    r.verdict = "sigma_f: image dimension <= " + std::to_string(r.dimension_bound) +
                " (|A|=" + std::to_string(marked.size()) + ")";
  }
  return r;
}

DecompositionInstance example_quartic() {
  const Complex i(0.0, 1.0);
  const Complex shift(0.5, 0.5);
  // 2i (z - shift)^2 = 2i z^2 - 4i shift z + 2i shift^2
  ComplexPoly g({2.0 * i * shift * shift, -4.0 * i * shift, 2.0 * i});
  return {power_map(2), RationalMap::polynomial(g),
          {Complex(0.0), Complex(1.0), SpherePoint::infinity()}};
}

DecompositionInstance example_family(int n) {
  if (n < 2) throw InputError("family example needs n >= 2");
  return {power_map(n), family_polynomial(n),
          {Complex(0.0), Complex(1.0), SpherePoint::infinity()}};
}

std::vector<SpherePoint> zero_infinity_and_roots(int m) {
  std::vector<SpherePoint> out{Complex(0.0), SpherePoint::infinity()};
  for (const Complex& z : roots_of_unity(m)) out.emplace_back(z);
  return out;
}

SkinnyFamily skinny_family(int n, int k, double tol) {
  if (n < 2 || k < 1 || n % k != 0) {
    throw InputError("skinny family needs n >= 2 and k dividing n (got n=" + std::to_string(n) +
                     ", k=" + std::to_string(k) + ")");
  }
  SkinnyFamily out;
  out.n = n;
  out.k = k;
  out.m = n / k;
  out.instance = {power_map(k), family_polynomial(n), zero_infinity_and_roots(out.m)};
  out.teichmuller_dimension = n - 1;
  out.image_dimension = out.m - 1;
  out.codimension = out.teichmuller_dimension - out.image_dimension;
  out.codimension_formula = (k - 1) * out.m;

  const auto full = zero_infinity_and_roots(n);
  std::vector<SpherePoint> preimage;
  for (const auto& a : out.instance.marked) {
    for (const auto& p : preimages(out.instance.s, a)) insert_unique(preimage, p.point, tol);
  }
  out.preimage_is_full_set = same_set(preimage, full, tol);
  const auto bound = merged(critical_values(out.instance.g, tol),
                            image_of(out.instance.g, full, tol), tol);
  out.bound_set_is_full_set = same_set(bound, full, tol);
  out.expected_postcritical = full;
  if (k == 1) out.expected_postcritical.erase(out.expected_postcritical.begin());
  return out;
}

}  // namespace pullback
