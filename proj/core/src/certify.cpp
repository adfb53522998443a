#include <algorithm>
#include <functional>
#include <sstream>

#include "pullback/error.hpp"
#include "pullback/orbits.hpp"
#include "pullback/solver.hpp"

namespace pullback {

ExtractedPortrait extract_portrait(const RationalMap& map, double tol, int max_iter) {
  const OrbitGraph g = critical_orbit_graph(map, tol, max_iter);
  if (!g.closed) throw NonConvergence("extract_portrait: " + g.diagnostics);
  std::vector<std::string> labels;
  int next = 0;
  for (const auto& p : g.points) {
    labels.push_back(p.is_infinite() ? std::string(kInfinityLabel) : "q" + std::to_string(next++));
  }
  std::vector<MarkedPoint> points;
  for (std::size_t i = 0; i < g.points.size(); ++i) {
    points.push_back({labels[i], labels[static_cast<std::size_t>(g.image[i])], g.multiplicity[i]});
  }
  return {g.points, RamificationPortrait(map.degree(), map.is_polynomial(), std::move(points))};
}

std::vector<MarkedPoint> critical_closure(const RamificationPortrait& portrait) {
  const auto& pts = portrait.points();
  std::vector<char> keep(pts.size(), 0);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].multiplicity == 0) continue;
    std::size_t cur = i;
    while (!keep[cur]) {
      keep[cur] = 1;
      cur = portrait.image_index(cur);
    }
  }
  std::vector<MarkedPoint> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (keep[i]) out.push_back(pts[i]);
  }
  return out;
}

namespace {

struct Graph {
  std::vector<int> image;
  std::vector<int> mult;
  std::vector<bool> is_inf;
  std::vector<std::pair<int, int>> shape;
};

Graph to_graph(const std::vector<MarkedPoint>& pts) {
  Graph g;
  for (const auto& p : pts) {
    const auto it = std::find_if(pts.begin(), pts.end(),
                                 [&](const MarkedPoint& q) { return q.label == p.image_label; });
    g.image.push_back(it == pts.end() ? -1 : static_cast<int>(it - pts.begin()));
    g.mult.push_back(p.multiplicity);
    g.is_inf.push_back(p.label == kInfinityLabel);
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<int> seen(pts.size(), -1);
    int cur = static_cast<int>(i);
    int step = 0;
    while (cur >= 0 && seen[static_cast<std::size_t>(cur)] < 0) {
      seen[static_cast<std::size_t>(cur)] = step++;
      cur = g.image[static_cast<std::size_t>(cur)];
    }
    g.shape.push_back(cur < 0 ? std::pair{-1, -1}
                              : std::pair{seen[static_cast<std::size_t>(cur)],
                                          step - seen[static_cast<std::size_t>(cur)]});
  }
  return g;
}

}  // namespace

bool same_dynamics(const std::vector<MarkedPoint>& a, const std::vector<MarkedPoint>& b) {
  if (a.size() != b.size()) return false;
  const Graph ga = to_graph(a);
  const Graph gb = to_graph(b);
  const std::size_t n = a.size();
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  auto compatible = [&](std::size_t i, std::size_t j) {
    return ga.mult[i] == gb.mult[j] && ga.is_inf[i] == gb.is_inf[j] && ga.shape[i] == gb.shape[j];
  };
  // Edge consistency for every already-mapped pair.
  auto consistent = [&]() {
    for (std::size_t i = 0; i < n; ++i) {
      if (map[i] < 0) continue;
      const int ia = ga.image[i];
      if (ia < 0 || map[static_cast<std::size_t>(ia)] < 0) continue;
      if (gb.image[static_cast<std::size_t>(map[i])] != map[static_cast<std::size_t>(ia)]) {
        return false;
      }
    }
    return true;
  };
  std::function<bool(std::size_t)> assign = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || !compatible(i, j)) continue;
      map[i] = static_cast<int>(j);
      used[j] = 1;
      if (consistent() && assign(i + 1)) return true;
      map[i] = -1;
      used[j] = 0;
    }
    return false;
  };
  return assign(0);
}

CertificationReport certify_pcf(const RationalMap& map, const RamificationPortrait& portrait,
                                double tol, int max_iter) {
  if (map.degree() < 1) throw DegenerateInput("certify_pcf: constant map");
  CertificationReport report;
  std::ostringstream diag;
  const OrbitGraph g = critical_orbit_graph(map, tol, max_iter);
  report.max_deviation = g.max_deviation;
  for (std::size_t c = 0; c < g.critical.size(); ++c) {
    const int idx = g.critical[c];
    OrbitCertificate oc;
    oc.critical_point = g.points[static_cast<std::size_t>(idx)];
    oc.multiplicity = g.multiplicity[static_cast<std::size_t>(idx)];
    oc.closed = g.closed || c + 1 < g.critical.size();
    if (oc.closed) {
      const auto [tail, cycle] = g.orbit_shape(idx);
      oc.tail_length = tail;
      oc.cycle_length = cycle;
      // Largest closure error along this orbit.
      int cur = idx;
      for (int s = 0; s < tail + cycle && cur >= 0; ++s) {
        const auto z = rational_eval(map, g.points[static_cast<std::size_t>(cur)]);
        cur = g.image[static_cast<std::size_t>(cur)];
        if (cur >= 0) {
          oc.deviation = std::max(oc.deviation,
                                  chordal_distance(z, g.points[static_cast<std::size_t>(cur)]));
        }
      }
    }
    report.orbits.push_back(oc);
  }
  if (!g.closed) {
    diag << "NotCertified: " << g.diagnostics;
    report.diagnostics = diag.str();
    return report;
  }
  if (map.degree() != portrait.degree()) {
    diag << "NotCertified: degree " << map.degree() << " differs from portrait degree "
         << portrait.degree();
    report.diagnostics = diag.str();
    return report;
  }
  std::vector<std::string> labels;
  int next = 0;
  for (const auto& p : g.points) {
    labels.push_back(p.is_infinite() ? std::string(kInfinityLabel) : "q" + std::to_string(next++));
  }
  std::vector<MarkedPoint> numeric;
  for (std::size_t i = 0; i < g.points.size(); ++i) {
    numeric.push_back({labels[i], labels[static_cast<std::size_t>(g.image[i])], g.multiplicity[i]});
  }
  if (!same_dynamics(numeric, critical_closure(portrait))) {
    diag << "NotCertified: critical orbit dynamics does not match the portrait";
    report.diagnostics = diag.str();
    return report;
  }
  report.certified = true;
  report.diagnostics = "certified";
  return report;
}

CertificationReport certify_pcf(const ComplexPoly& f, const RamificationPortrait& portrait,
                                double tol, int max_iter) {
  return certify_pcf(RationalMap::polynomial(f), portrait, tol, max_iter);
}

}  // namespace pullback
