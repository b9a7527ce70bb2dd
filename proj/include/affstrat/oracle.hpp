#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "affstrat/ideal.hpp"
#include "affstrat/metrics.hpp"

namespace affstrat {

using CPoint = std::vector<std::complex<double>>;

/// Thresholds and budgets of the floating-point checks.
struct OracleConfig {
  /// Hard filter on max |g_i(x)| for accepted samples.
  double residual_tol = 1e-10;
  /// A K-infinity witness needs score below this at norm above far_norm.
  double witness_threshold = 1e-3;
  double far_norm = 1e3;
  /// Last radius of the K-infinity continuation.
  double final_norm = 1e4;
  int newton_iterations = 80;
  /// Newton attempts per requested sample point.
  int sample_tries = 40;
  /// Slice draws per scale in the (b) test.
  int samples_per_scale = 48;
  /// Random starts of the first continuation step.
  int lm_starts = 12;
  /// Continuation radii per decade.
  int steps_per_decade = 4;
};

struct TraceEntry {
  /// |x| (K-infinity) or the sampling scale ((b) test).
  double norm = 0;
  /// |x| nu(d_x f) or the secant-tangent sine.
  double measure = 0;
  CPoint value;
  CPoint point;
};

struct WitnessReport {
  std::string target;
  bool success = false;
  double best_score = 0;
  std::vector<TraceEntry> trace;
};

struct SampleReport {
  std::vector<CPoint> points;
  std::size_t requested = 0;
  int tries = 0;
};

/// Points of V(I) near the ball of the given radius, from Newton on random
/// square subsystems cut by random affine slices. Every point passes the
/// residual filter; fewer than `count` come back if the budget runs out.
SampleReport sample_points(const Ideal& I, std::size_t count, double radius, std::uint64_t seed,
                           const OracleConfig& cfg = {});

/// max |g(x)| over the reduced grevlex basis of I.
double residual(const Ideal& I, const CPoint& x);

/// Secant-tangent test of condition (b) for (V(X) minus V(Y), V(Y)) at x0.
/// For every scale t, points of both sets are sampled on slices
/// x_i = x0_i + c t^e (e in 1..4); the per-scale measure is the largest sine
/// between a secant and the tangent space of X at its endpoint. The score
/// is the measure at the last (smallest) scale.
WitnessReport whitney_b_violation_score(const Ideal& X, const Ideal& Y, const CPoint& x0,
                                        const std::vector<double>& scales, std::uint64_t seed,
                                        const OracleConfig& cfg = {});

/// Searches points x with b(x) = 0 and |x| growing geometrically that
/// minimize |x| nu(d_x f restricted to ker d_x b) + |f(x) - y*|, by
/// Levenberg-Marquardt continuation in the radius. Success when the score
/// drops below the threshold at a radius above far_norm.
WitnessReport kinf_witness_search(const std::vector<Polynomial>& b_rows, const std::vector<Polynomial>& f,
                                  const CPoint& target, std::uint64_t seed, const OracleConfig& cfg = {});

/// Smallest singular value via a Jacobi SVD.
double svd_nu(const CMatrix& A);

}  // namespace affstrat
