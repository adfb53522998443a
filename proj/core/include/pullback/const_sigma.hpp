#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pullback/poly.hpp"
#include "pullback/sphere.hpp"

namespace pullback {

/// A factorization f = g o s together with a finite marked set A.
struct DecompositionInstance {
  RationalMap s;
  RationalMap g;
  std::vector<SpherePoint> marked;
};

/// Postcritical set of a rational map: the union of forward images of its
/// critical points. `closed` is false when the set kept growing (the map is
/// not postcritically finite, or not within `max_steps`).
struct PostcriticalSet {
  std::vector<SpherePoint> points;
  bool closed = false;
  double max_deviation = 0.0;
  std::string diagnostics;
};

PostcriticalSet compute_postcritical(const RationalMap& map, double tol, int max_steps = 64);

/// One inclusion sub-check, with the first point that violated it.
struct InclusionCheck {
  std::string name;
  bool holds = false;
  std::optional<SpherePoint> offending;
};

struct CertificateReport {
  double tol = 0.0;
  std::vector<SpherePoint> s_critical_values;
  std::vector<SpherePoint> g_critical_values;
  std::vector<SpherePoint> g_of_marked;
  std::vector<SpherePoint> s_preimage_of_marked;
  /// V_g together with g(A).
  std::vector<SpherePoint> bound_set;

  InclusionCheck s_values_in_marked;        // V_s inside A
  InclusionCheck bound_set_in_preimage;     // V_g and g(A) inside s^-1(A)

  RationalMap composite;
  std::vector<SpherePoint> composite_critical_values;  // from g o s directly
  std::vector<SpherePoint> decomposed_critical_values; // V_g and g(V_s)
  bool critical_values_agree = false;

  PostcriticalSet postcritical;
  InclusionCheck lower_sandwich;  // V_g and g(V_s) inside P_f
  InclusionCheck upper_sandwich;  // P_f inside V_g and g(A)

  int dimension_bound = 0;  // |A| - 3
  bool certified = false;
  std::string verdict;
};

/// Checks V_s inside A and V_g, g(A) inside s^-1(A). On success the image of
/// the pullback map of f = g o s has dimension at most |A| - 3, and is a
/// point when |A| = 3. Throws DegenerateInput for |A| < 3 or when both maps
/// have degree below two.
CertificateReport check_conditions(const DecompositionInstance& instance, double tol = 1e-9);

/// s = z^2, g = 2i (z - (1+i)/2)^2, A = {0, 1, inf}.
DecompositionInstance example_quartic();

/// g(z) = ((n+1) z - z^(n+1)) / n, s = z^n, A = {0, 1, inf}. Requires n >= 2.
DecompositionInstance example_family(int n);

/// {0, inf} and the m-th roots of unity.
std::vector<SpherePoint> zero_infinity_and_roots(int m);

struct SkinnyFamily {
  DecompositionInstance instance;
  int n = 0;
  int k = 0;
  int m = 0;
  int teichmuller_dimension = 0;   // n - 1
  int image_dimension = 0;         // m - 1, quoted rather than derived
  int codimension = 0;             // teichmuller_dimension - image_dimension
  int codimension_formula = 0;     // (k - 1) m
  bool preimage_is_full_set = false;     // s^-1(A_m) = A_n
  bool bound_set_is_full_set = false;    // V_g and g(A_n) give A_n
  /// A_n when k >= 2. For k = 1 the point 0 is not a critical value of s,
  /// so it drops out and the expected set is A_n without 0.
  std::vector<SpherePoint> expected_postcritical;
};

/// s = z^k, g as in example_family(n), A = A_m with n = k m. Throws
/// InputError unless k divides n, n >= 2 and k >= 1.
SkinnyFamily skinny_family(int n, int k, double tol = 1e-9);

}  // namespace pullback
