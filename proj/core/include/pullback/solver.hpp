#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pullback/moduli_map.hpp"
#include "pullback/poly.hpp"
#include "pullback/portrait.hpp"

namespace pullback {

struct FixedPointRecord {
  ModuliVector a;
  double residual = 0.0;  // |G_f(a) - a|_inf, recomputed after Newton
  double delta_distance = 0.0;
  bool on_delta = false;
  ComplexPoly recovered_poly;  // empty when on_delta
  bool certified = false;
  double certification_deviation = 0.0;
};

struct FixedPointOptions {
  std::size_t seeds = 200;
  double tol = 1e-12;
  int max_iter = 200;
  std::uint64_t rng_seed = 1;
  double seed_radius = 2.0;
  double dedup_distance = 1e-6;
  double delta_flag = 1e-6;
};

struct FixedPointReport {
  std::vector<FixedPointRecord> records;  // distinct solutions
  std::size_t converged_seeds = 0;
  std::size_t failed_seeds = 0;

  std::size_t off_delta_count() const;
};

/// Newton on H(a) = G_f(a) - a from deterministic pseudo-random seeds in the
/// polydisk, with halving damping. Converged points are deduplicated in the
/// max-modulus chart; points near the forbidden locus are flagged and not
/// certified. When `portrait` is given, off-locus records are recovered and
/// certified against it.
FixedPointReport newton_fixed_points(const GfMap& gf, const FixedPointOptions& options,
                                     const RamificationPortrait* portrait = nullptr);

/// The monic F_a of a fixed point, checked against F_a(a_{nu(k)}) = a_k.
/// Throws CorruptFixedPoint when the check fails at `tol` (relative).
ComplexPoly recover_polynomial(const GfMap& gf, const FixedPointRecord& record,
                               double tol = 1e-9);

struct OrbitCertificate {
  SpherePoint critical_point;
  int multiplicity = 0;
  int tail_length = 0;
  int cycle_length = 0;
  double deviation = 0.0;  // chordal closure error
  bool closed = false;
};

struct CertificationReport {
  bool certified = false;
  std::vector<OrbitCertificate> orbits;
  double max_deviation = 0.0;
  std::string diagnostics;
};

/// Iterates every critical point of `map`, closes each orbit at chordal
/// tolerance `tol`, and matches the resulting marked dynamics against the
/// critical part of `portrait` (labelled functional-graph isomorphism).
CertificationReport certify_pcf(const RationalMap& map, const RamificationPortrait& portrait,
                                double tol = 1e-9, int max_iter = 200);
CertificationReport certify_pcf(const ComplexPoly& f, const RamificationPortrait& portrait,
                                double tol = 1e-9, int max_iter = 200);

struct ExtractedPortrait {
  std::vector<SpherePoint> points;
  RamificationPortrait portrait;
};

/// Numerically extracted portrait of the critical orbits of `map`
/// (labels "q0", "q1", ..., "inf"). Throws NonConvergence when an orbit does
/// not close within `max_iter`.
ExtractedPortrait extract_portrait(const RationalMap& map, double tol = 1e-9,
                                   int max_iter = 200);

/// Sub-portrait of the points reachable from critical points, critical
/// points included. The result may not satisfy the multiplicity-sum rule,
/// so it is returned as raw points.
std::vector<MarkedPoint> critical_closure(const RamificationPortrait& portrait);

/// Labelled isomorphism test between two marked dynamics.
bool same_dynamics(const std::vector<MarkedPoint>& a, const std::vector<MarkedPoint>& b);

enum class OrbitStatus { kCompleted, kStalled, kBranchLost };

std::string to_string(OrbitStatus s);

struct PullbackOrbit {
  std::vector<ProjectivePoint> points;  // points[0] = start (chart-normalized)
  std::vector<double> distances;        // to the nearest known fixed class
  OrbitStatus status = OrbitStatus::kCompleted;
};

/// x_{k+1} solves g_f(x_{k+1}) = x_k by Newton in the max-modulus chart of
/// x_k, seeded at x_k. Stops with kBranchLost if Newton lands farther than
/// 0.5 (chart distance) from x_k, and with kStalled if it fails to converge.
PullbackOrbit pullback_orbit(const GfMap& gf, const ProjectivePoint& start, int steps,
                             double tol, const std::vector<ProjectivePoint>& fixed_classes);

/// Jacobian of g_f in the max-modulus chart at `x` (finite differences).
ComplexMatrix chart_jacobian(const GfMap& gf, const ProjectivePoint& x, double step = 1e-6);

/// Spectral radius of the inverse-branch derivative at a fixed class:
/// the largest modulus among the reciprocal eigenvalues of chart_jacobian.
double inverse_branch_rate(const GfMap& gf, const ProjectivePoint& fixed_class);

}  // namespace pullback
