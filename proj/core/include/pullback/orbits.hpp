#pragma once

#include <string>
#include <vector>

#include "pullback/poly.hpp"

namespace pullback {

/// Forward orbits of the critical points of a rational map, with points
/// merged on the sphere at chordal tolerance `tol`.
struct OrbitGraph {
  std::vector<SpherePoint> points;
  std::vector<int> image;         // index of R(points[i]); -1 if unknown
  std::vector<int> multiplicity;  // critical multiplicity, 0 if not critical
  std::vector<int> critical;      // indices of critical points, in input order
  double max_deviation = 0.0;     // largest chordal merge error
  bool closed = true;
  std::string diagnostics;

  /// (tail, cycle) of the orbit through point i; requires closed.
  std::pair<int, int> orbit_shape(int i) const;
};

/// A landing z = R(q) onto an existing point j is accepted only when it is
/// sharp: no other recorded preimage of j, and no earlier orbit point when
/// j == q, lies within sqrt(tol) of q. Otherwise the orbit is converging to
/// an attractor rather than closing, and the graph is marked not closed.
/// Each orbit may add at most `max_steps` new points.
OrbitGraph critical_orbit_graph(const RationalMap& map, double tol, int max_steps,
                                const RootOptions& options = {});

}  // namespace pullback
