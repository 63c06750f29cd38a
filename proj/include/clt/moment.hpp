#pragma once

#include <vector>

#include "clt/levinson.hpp"

namespace clt {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool operator==(const Interval&) const = default;
};

/// Plateau bump: 1 on `plateau`, C-infinity ramps of width `delta` built from
/// S(x) = f(x)/(f(x) + f(1-x)), f(x) = exp(-1/x), zero outside `support`.
struct SmoothWeight {
  double t_scale = 0.0;
  double delta = 0.0;
  Interval support;
  Interval plateau;

  /// Plateau [T/2, T], delta = T/log T, support [T/2 - delta, T + delta].
  static SmoothWeight standard(double t_scale);
  /// Throws ConstraintError unless the support lies inside [T/4, 2T].
  void validate() const;
};

double smooth_weight(double t, const SmoothWeight& w);

/// int w by adaptive quadrature to relative 1e-8.
double w_hat_zero(const SmoothWeight& w);

struct MomentSample {
  double t = 0.0;
  double weight = 0.0;
  double value = 0.0;  // |V psi(sigma0 + it)|^2
  bool operator==(const MomentSample&) const = default;
};

struct MomentReport {
  double t_scale = 0.0;
  double grid_step = 0.0;
  std::size_t grid_points = 0;     // evaluations on the refined grid
  double numeric_moment = 0.0;     // trapezoid at grid_step
  double refined_moment = 0.0;     // trapezoid at grid_step/2
  double offset_moment = 0.0;      // grid_step grid shifted by grid_step/2
  double self_convergence = 0.0;   // |numeric - refined| / refined
  double w_hat_zero = 0.0;
  LevinsonFunctional functional = LevinsonFunctional::printed;
  double c_value = 0.0;
  double main_term = 0.0;          // c * w_hat(0)
  double ratio = 0.0;              // numeric_moment / main_term
  double c_squared = 0.0;
  double main_term_squared = 0.0;
  double ratio_squared = 0.0;
  std::size_t mollifier_terms = 0;
  bool coarse_grid_warning = false;  // grid_step > delta/10
  std::vector<MomentSample> samples;  // refined grid, only when requested

  bool operator==(const MomentReport&) const = default;
};

double default_moment_step(double t_scale);

/// int w(t) |V psi(sigma0 + it)|^2 dt on the standard weight at height T,
/// compared with c(P,Q,R,theta) w_hat(0). T <= 2e4. grid_step <= 0 picks
/// min(0.05, delta/20).
MomentReport mollified_moment_numeric(const LevinsonParams& params, double t_scale,
                                      double grid_step = 0.0, unsigned threads = 1,
                                      LevinsonFunctional functional = LevinsonFunctional::printed,
                                      bool keep_samples = false);

}  // namespace clt
