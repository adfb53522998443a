#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pullback {

/// Reserved label of the point at infinity.
inline constexpr std::string_view kInfinityLabel = "inf";

struct MarkedPoint {
  std::string label;
  std::string image_label;
  // Local degree minus one; 0 for a non-critical point.
  int multiplicity = 0;

  friend bool operator==(const MarkedPoint&, const MarkedPoint&) = default;
};

/// Finite marked dynamics of a branched cover together with critical
/// multiplicities. For polynomial portraits the point "inf" is fixed with
/// multiplicity d-1; it is appended when the input omits it.
///
/// Finite points are indexed 0..n+1 in input order, skipping "inf".
class RamificationPortrait {
 public:
  /// Validates structure (labels, references, multiplicity bounds and
  /// Riemann-Hurwitz count). Throws InputError.
  RamificationPortrait(int degree, bool polynomial, std::vector<MarkedPoint> points);

  int degree() const { return degree_; }
  bool is_polynomial() const { return polynomial_; }
  const std::vector<MarkedPoint>& points() const { return points_; }

  /// Index into points(); throws InputError for an unknown label.
  std::size_t index_of(std::string_view label) const;
  std::size_t image_index(std::size_t i) const { return image_[i]; }

  /// Indices into points() of the finite points, in order.
  const std::vector<std::size_t>& finite_points() const { return finite_; }

  friend bool operator==(const RamificationPortrait& a,
                         const RamificationPortrait& b) {
    return a.degree_ == b.degree_ && a.polynomial_ == b.polynomial_ &&
           a.points_ == b.points_;
  }

 private:
  int degree_;
  bool polynomial_;
  std::vector<MarkedPoint> points_;
  std::vector<std::size_t> image_;
  std::vector<std::size_t> finite_;
};

struct Orbit {
  int tail_length = 0;
  int cycle_length = 1;

  bool periodic() const { return tail_length == 0; }
  friend bool operator==(const Orbit&, const Orbit&) = default;
};

/// Permutation of the finite points: p_{mu[k]} = f(p_k), nu = mu^{-1}.
struct Permutation {
  std::vector<int> mu;
  std::vector<int> nu;
};

struct ValidationReport {
  int degree = 0;
  // |P_f| - 3 where P_f is the forward orbit of the critical values.
  int n = 0;
  // Number of marked points (all labels, "inf" included).
  int marked_count = 0;
  std::vector<std::string> postcritical;
  bool polynomial = false;
  bool all_critical_periodic = false;
  bool is_permutation = false;
  std::optional<Permutation> permutation;
  std::vector<std::string> finite_order;

  /// Stable key=value rendering.
  std::string to_string() const;
};

ValidationReport validate(const RamificationPortrait& portrait);

Orbit orbit_of(const RamificationPortrait& portrait, std::string_view label);

/// Throws HypothesisError when the finite dynamics is not a bijection.
Permutation mu_nu(const RamificationPortrait& portrait);

/// Strict JSON reader/writer:
///   {"degree": 2, "polynomial": true,
///    "points": [{"label": "p0", "image": "p1", "multiplicity": 1}, ...]}
/// Unknown keys, missing keys and wrong types raise InputError.
RamificationPortrait parse_portrait(std::string_view json_text);
RamificationPortrait load_portrait(const std::string& path);
std::string portrait_to_json(const RamificationPortrait& portrait);

}  // namespace pullback
