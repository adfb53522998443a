#include "pullback/portrait.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pullback/error.hpp"

namespace pullback {

RamificationPortrait::RamificationPortrait(int degree, bool polynomial,
                                           std::vector<MarkedPoint> points)
    : degree_(degree), polynomial_(polynomial), points_(std::move(points)) {
  if (degree_ < 2) {
    throw InputError("portrait degree must be >= 2, got " + std::to_string(degree_));
  }
  const auto has_inf = std::any_of(points_.begin(), points_.end(), [](const MarkedPoint& p) {
    return p.label == kInfinityLabel;
  });
  if (polynomial_ && !has_inf) {
    points_.push_back({std::string(kInfinityLabel), std::string(kInfinityLabel), degree_ - 1});
  }
  if (points_.empty()) throw InputError("portrait has no points");

  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& p = points_[i];
    if (p.label.empty()) throw InputError("empty point label");
    for (std::size_t j = 0; j < i; ++j) {
      if (points_[j].label == p.label) throw InputError("duplicate label '" + p.label + "'");
    }
    if (p.multiplicity < 0 || p.multiplicity > degree_ - 1) {
      throw InputError("multiplicity of '" + p.label + "' must lie in [0, d-1]");
    }
  }
  image_.resize(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& target = points_[i].image_label;
    const auto it = std::find_if(points_.begin(), points_.end(),
                                 [&](const MarkedPoint& q) { return q.label == target; });
    if (it == points_.end()) {
      throw InputError("point '" + points_[i].label + "' maps to unknown label '" + target + "'");
    }
    image_[i] = static_cast<std::size_t>(it - points_.begin());
    if (points_[i].label != kInfinityLabel) finite_.push_back(i);
  }

  int finite_sum = 0;
  int total_sum = 0;
  for (const auto& p : points_) {
    total_sum += p.multiplicity;
    if (p.label != kInfinityLabel) finite_sum += p.multiplicity;
  }
  if (polynomial_) {
    const auto inf = index_of(kInfinityLabel);
    if (image_[inf] != inf || points_[inf].multiplicity != degree_ - 1) {
      throw InputError("polynomial portrait: 'inf' must be fixed with multiplicity d-1");
    }
    for (const auto i : finite_) {
      if (image_[i] == inf) {
        throw InputError("polynomial portrait: finite point '" + points_[i].label +
                         "' cannot map to 'inf'");
      }
    }
    if (finite_sum != degree_ - 1) {
      throw InputError("multiplicity sum violation: finite multiplicities sum to " +
                       std::to_string(finite_sum) + ", expected d-1 = " +
                       std::to_string(degree_ - 1));
    }
  } else if (total_sum != 2 * degree_ - 2) {
    throw InputError("multiplicity sum violation: multiplicities sum to " +
                     std::to_string(total_sum) + ", expected 2d-2 = " +
                     std::to_string(2 * degree_ - 2));
  }
}

std::size_t RamificationPortrait::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].label == label) return i;
  }
  throw InputError("unknown label '" + std::string(label) + "'");
}

Orbit orbit_of(const RamificationPortrait& portrait, std::string_view label) {
  const std::size_t start = portrait.index_of(label);
  std::vector<int> seen_at(portrait.points().size(), -1);
  std::size_t cur = start;
  for (int step = 0;; ++step) {
    if (seen_at[cur] >= 0) {
      return {seen_at[cur], step - seen_at[cur]};
    }
    seen_at[cur] = step;
    cur = portrait.image_index(cur);
  }
}

Permutation mu_nu(const RamificationPortrait& portrait) {
  const auto& finite = portrait.finite_points();
  const int count = static_cast<int>(finite.size());
  std::vector<int> position(portrait.points().size(), -1);
  for (int k = 0; k < count; ++k) position[finite[static_cast<std::size_t>(k)]] = k;

  Permutation perm;
  perm.mu.assign(static_cast<std::size_t>(count), -1);
  perm.nu.assign(static_cast<std::size_t>(count), -1);
  for (int k = 0; k < count; ++k) {
    const int target = position[portrait.image_index(finite[static_cast<std::size_t>(k)])];
    if (target < 0 || perm.nu[static_cast<std::size_t>(target)] >= 0) {
      throw HypothesisError("finite dynamics of the portrait is not a permutation");
    }
    perm.mu[static_cast<std::size_t>(k)] = target;
    perm.nu[static_cast<std::size_t>(target)] = k;
  }
  return perm;
}

ValidationReport validate(const RamificationPortrait& portrait) {
  ValidationReport r;
  const auto& pts = portrait.points();
  r.degree = portrait.degree();
  r.polynomial = portrait.is_polynomial();
  r.marked_count = static_cast<int>(pts.size());

  std::vector<char> in_pf(pts.size(), 0);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].multiplicity == 0) continue;
    std::size_t cur = portrait.image_index(i);
    while (!in_pf[cur]) {
      in_pf[cur] = 1;
      cur = portrait.image_index(cur);
    }
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (in_pf[i]) r.postcritical.push_back(pts[i].label);
  }
  r.n = static_cast<int>(r.postcritical.size()) - 3;

  r.all_critical_periodic = std::all_of(pts.begin(), pts.end(), [&](const MarkedPoint& p) {
    return p.multiplicity == 0 || orbit_of(portrait, p.label).periodic();
  });
  for (const auto i : portrait.finite_points()) r.finite_order.push_back(pts[i].label);
  try {
    r.permutation = mu_nu(portrait);
    r.is_permutation = true;
  } catch (const HypothesisError&) {
    r.is_permutation = false;
  }
  return r;
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  auto join_ints = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
  };
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i];
    return s;
  };
  os << "degree=" << degree << '\n'
     << "n=" << n << '\n'
     << "marked_points=" << marked_count << '\n'
     << "postcritical=" << join(postcritical) << '\n'
     << "finite_order=" << join(finite_order) << '\n'
     << "polynomial=" << (polynomial ? "true" : "false") << '\n'
     << "all_critical_periodic=" << (all_critical_periodic ? "true" : "false") << '\n'
     << "is_permutation=" << (is_permutation ? "true" : "false") << '\n';
  if (permutation) {
    os << "mu=" << join_ints(permutation->mu) << '\n'
       << "nu=" << join_ints(permutation->nu) << '\n';
  }
  return os.str();
}

}  // namespace pullback
