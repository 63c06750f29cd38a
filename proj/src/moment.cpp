#include "clt/moment.hpp"

#include <cmath>

#include "clt/error.hpp"
#include "clt/mollifier.hpp"
#include "clt/parallel.hpp"
#include "clt/quadrature.hpp"
#include "clt/zeta.hpp"

namespace clt {

namespace {

double ramp(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / x);
  const double b = std::exp(-1.0 / (1.0 - x));
  return a / (a + b);
}

}  // namespace

SmoothWeight SmoothWeight::standard(double t_scale) {
  if (!(t_scale > 1.0)) throw DomainError("T > 1 required");
  SmoothWeight w;
  w.t_scale = t_scale;
  w.delta = t_scale / std::log(t_scale);
  w.plateau = {t_scale / 2.0, t_scale};
  w.support = {w.plateau.lo - w.delta, w.plateau.hi + w.delta};
  return w;
}

void SmoothWeight::validate() const {
  if (!(delta > 0.0)) throw ConstraintError("delta>0 violated");
  if (support.lo < t_scale / 4.0 || support.hi > 2.0 * t_scale) {
    throw ConstraintError("support within [T/4, 2T] violated");
  }
  if (!(plateau.lo >= support.lo + delta * (1.0 - 1e-12) && plateau.hi <= support.hi - delta * (1.0 - 1e-12))) {
    throw ConstraintError("plateau must leave room for both ramps");
  }
}

double smooth_weight(double t, const SmoothWeight& w) {
  if (t <= w.support.lo || t >= w.support.hi) return 0.0;
  if (t >= w.plateau.lo && t <= w.plateau.hi) return 1.0;
  if (t < w.plateau.lo) return ramp((t - (w.plateau.lo - w.delta)) / w.delta);
  return ramp(((w.plateau.hi + w.delta) - t) / w.delta);
}

double w_hat_zero(const SmoothWeight& w) {
  auto f = [&](double t) { return smooth_weight(t, w); };
  const double left = integrate(f, w.support.lo, w.plateau.lo, 0.0, 1e-10).value;
  const double right = integrate(f, w.plateau.hi, w.support.hi, 0.0, 1e-10).value;
  return left + (w.plateau.hi - w.plateau.lo) + right;
}

double default_moment_step(double t_scale) {
  return std::min(0.05, SmoothWeight::standard(t_scale).delta / 20.0);
}

MomentReport mollified_moment_numeric(const LevinsonParams& params, double t_scale,
                                      double grid_step, unsigned threads,
                                      LevinsonFunctional functional, bool keep_samples) {
  params.validate();
  if (!(t_scale <= 2e4)) throw RangeError("T <= 2e4 required (runtime guard)");
  const SmoothWeight w = SmoothWeight::standard(t_scale);
  w.validate();
  if (grid_step <= 0.0) grid_step = default_moment_step(t_scale);

  MomentReport rep;
  rep.t_scale = t_scale;
  rep.grid_step = grid_step;
  rep.functional = functional;
  rep.coarse_grid_warning = grid_step > w.delta / 10.0;

  const MollifierSpec ms{t_scale, params.theta, params.r_shift, params.p_poly};
  const Mollifier psi(ms);
  rep.mollifier_terms = psi.term_count();
  const double sigma0 = ms.sigma0();
  const double l = ms.log_scale();
  const int order = params.q_poly.degree();

  // refined grid t_i = lo + i h/2; w vanishes with all derivatives at both
  // ends, so the trapezoid rule needs no end corrections
  const double half = grid_step / 2.0;
  const std::size_t n = static_cast<std::size_t>(std::ceil((w.support.hi - w.support.lo) / half)) + 1;
  std::vector<double> values(n, 0.0), weights(n, 0.0);
  parallel_for(n, threads, [&](std::size_t i) {
    const double t = w.support.lo + static_cast<double>(i) * half;
    const double wt = smooth_weight(t, w);
    weights[i] = wt;
    if (wt == 0.0) return;
    const Complex s(sigma0, t);
    const Complex v = v_from_taylor(zeta_taylor(s, order), params.q_poly, l);
    values[i] = std::norm(v * psi(s));
  });
  std::vector<double> even, odd, all(n);
  even.reserve(n / 2 + 1);
  odd.reserve(n / 2 + 1);
  for (std::size_t i = 0; i < n; ++i) {
    all[i] = weights[i] * values[i];
    (i % 2 == 0 ? even : odd).push_back(all[i]);
  }
  rep.grid_points = n;
  rep.numeric_moment = grid_step * pairwise_sum(even.data(), even.size());
  rep.offset_moment = grid_step * pairwise_sum(odd.data(), odd.size());
  rep.refined_moment = half * pairwise_sum(all.data(), all.size());
  rep.self_convergence = rep.refined_moment > 0.0
                             ? std::abs(rep.numeric_moment - rep.refined_moment) / rep.refined_moment
                             : 0.0;
  rep.w_hat_zero = w_hat_zero(w);
  rep.c_value = c_constant_exact(params, functional);
  rep.main_term = rep.c_value * rep.w_hat_zero;
  rep.ratio = rep.numeric_moment / rep.main_term;
  rep.c_squared = c_constant_exact(params, LevinsonFunctional::squared);
  rep.main_term_squared = rep.c_squared * rep.w_hat_zero;
  rep.ratio_squared = rep.numeric_moment / rep.main_term_squared;
  if (keep_samples) {
    rep.samples.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      rep.samples[i] = {w.support.lo + static_cast<double>(i) * half, weights[i], values[i]};
    }
  }
  return rep;
}

}  // namespace clt
