#include "pullback/orbits.hpp"

#include <cmath>
#include <string>

namespace pullback {

std::pair<int, int> OrbitGraph::orbit_shape(int i) const {
  std::vector<int> seen(points.size(), -1);
  int cur = i;
  for (int step = 0;; ++step) {
    if (cur < 0) return {-1, -1};
    if (seen[static_cast<std::size_t>(cur)] >= 0) {
      const int first = seen[static_cast<std::size_t>(cur)];
      return {first, step - first};
    }
    seen[static_cast<std::size_t>(cur)] = step;
    cur = image[static_cast<std::size_t>(cur)];
  }
}

OrbitGraph critical_orbit_graph(const RationalMap& map, double tol, int max_steps,
                                const RootOptions& options) {
  OrbitGraph g;
  const double sharp = std::sqrt(tol);
  auto add_point = [&](const SpherePoint& p, int mult) {
    g.points.push_back(p);
    g.image.push_back(-1);
    g.multiplicity.push_back(mult);
    return static_cast<int>(g.points.size()) - 1;
  };

  for (const auto& cp : critical_points(map, options)) {
    int idx = find_on_sphere(g.points, cp.point, tol);
    if (idx < 0) {
      idx = add_point(cp.point, cp.multiplicity);
    } else {
      g.multiplicity[static_cast<std::size_t>(idx)] += cp.multiplicity;
    }
    g.critical.push_back(idx);

    std::vector<int> walk{idx};
    int cur = idx;
    int added = 0;
    while (g.image[static_cast<std::size_t>(cur)] < 0) {
      const SpherePoint z = rational_eval(map, g.points[static_cast<std::size_t>(cur)]);
      const int j = find_on_sphere(g.points, z, tol);
      if (j < 0) {
        if (++added > max_steps) {
          g.closed = false;
          g.diagnostics += "orbit of critical point " + std::to_string(g.critical.size() - 1) +
                           " still growing after " + std::to_string(max_steps) + " steps; ";
          break;
        }
        const int k = add_point(z, 0);
        g.image[static_cast<std::size_t>(cur)] = k;
        cur = k;
        walk.push_back(k);
        continue;
      }
      // Landing on an existing point: reject convergence toward an attractor.
      const SpherePoint& q = g.points[static_cast<std::size_t>(cur)];
      bool converging = false;
      if (j == cur) {
        for (std::size_t w = 0; w + 1 < walk.size(); ++w) {
          if (chordal_distance(g.points[static_cast<std::size_t>(walk[w])], q) < sharp) {
            converging = true;
          }
        }
      } else {
        for (std::size_t p = 0; p < g.points.size(); ++p) {
          if (static_cast<int>(p) != cur && g.image[p] == j &&
              chordal_distance(g.points[p], q) < sharp) {
            converging = true;
          }
        }
      }
      if (converging) {
        g.closed = false;
        g.diagnostics += "orbit of critical point " + std::to_string(g.critical.size() - 1) +
                         " converges to an attractor without landing; ";
        break;
      }
      g.max_deviation = std::max(g.max_deviation,
                                 chordal_distance(z, g.points[static_cast<std::size_t>(j)]));
      g.image[static_cast<std::size_t>(cur)] = j;
    }
    if (!g.closed) break;
  }
  return g;
}

}  // namespace pullback
