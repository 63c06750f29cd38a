#include <cmath>

#include "clt/error.hpp"
#include "clt/moment.hpp"
#include "doctest.h"

using namespace clt;

TEST_CASE("standard weight shape") {
  const double t = 3000.0;
  const auto w = SmoothWeight::standard(t);
  w.validate();
  CHECK(w.delta == doctest::Approx(t / std::log(t)));
  CHECK(w.plateau == Interval{t / 2, t});
  CHECK(smooth_weight(w.support.lo - 1.0, w) == 0.0);
  CHECK(smooth_weight(w.support.hi + 1.0, w) == 0.0);
  CHECK(smooth_weight(0.75 * t, w) == 1.0);
  CHECK(std::abs(smooth_weight(t / 2 - w.delta / 2, w) - 0.5) < 1e-12);
  CHECK(std::abs(smooth_weight(t + w.delta / 2, w) - 0.5) < 1e-12);
  double prev = 0.0;
  double max_slope = 0.0;
  for (int i = 1; i < 1000; ++i) {
    const double x = w.support.lo + w.delta * i / 1000.0;
    const double v = smooth_weight(x, w);
    REQUIRE(v >= prev);
    REQUIRE(v <= 1.0);
    max_slope = std::max(max_slope, (v - prev) * 1000.0 / w.delta);
    prev = v;
  }
  // the ramp is steepest at its midpoint, where S' = 2 in unit variables
  CHECK(max_slope * w.delta < 2.1);
}

TEST_CASE("weight validation") {
  SmoothWeight w = SmoothWeight::standard(1000.0);
  w.support.lo = 100.0;
  CHECK_THROWS_AS(w.validate(), ConstraintError);
}

TEST_CASE("w_hat(0)") {
  for (double t : {500.0, 5000.0}) {
    const auto w = SmoothWeight::standard(t);
    const double v = w_hat_zero(w);
    CHECK(v > t / 2);
    CHECK(v < t / 2 + 2 * w.delta);
    // symmetric ramps contribute delta/2 each
    CHECK(v == doctest::Approx(t / 2 + w.delta).epsilon(1e-8));
  }
  CHECK(w_hat_zero(SmoothWeight::standard(5000.0)) == doctest::Approx(3087.047856).epsilon(1e-9));
}

TEST_CASE("small moment run") {
  const auto base = LevinsonParams::baseline();
  const auto rep = mollified_moment_numeric(base, 600.0, 0.0, 1, LevinsonFunctional::printed, true);
  CHECK(rep.numeric_moment > 0.0);
  CHECK(rep.self_convergence < 1e-6);
  CHECK(std::abs(rep.offset_moment - rep.refined_moment) < 1e-9 * rep.refined_moment);
  CHECK(rep.mollifier_terms > 1);
  CHECK_FALSE(rep.coarse_grid_warning);
  CHECK(rep.main_term == doctest::Approx(rep.c_value * rep.w_hat_zero));
  CHECK(rep.ratio == doctest::Approx(rep.numeric_moment / rep.main_term));
  CHECK(rep.ratio > 0.5);
  CHECK(rep.ratio < 1.5);
  CHECK(rep.samples.size() == rep.grid_points);
  for (const auto& s : rep.samples) REQUIRE(s.value >= 0.0);

  const auto threaded = mollified_moment_numeric(base, 600.0, 0.0, 3);
  CHECK(threaded.numeric_moment == rep.numeric_moment);
  CHECK(threaded.samples.empty());

  const auto sq = mollified_moment_numeric(base, 600.0, 0.0, 1, LevinsonFunctional::squared);
  CHECK(sq.c_value == rep.c_squared);
  CHECK(sq.numeric_moment == rep.numeric_moment);
}

TEST_CASE("moment edge cases") {
  const auto base = LevinsonParams::baseline();
  // M = T^theta < 2 leaves psi = 1
  LevinsonParams tiny = base;
  tiny.theta = 0.1;
  const auto r = mollified_moment_numeric(tiny, 200.0, 0.5);
  CHECK(r.mollifier_terms == 1);
  CHECK(mollified_moment_numeric(base, 400.0, 20.0).coarse_grid_warning);
  CHECK_THROWS_AS(mollified_moment_numeric(base, 3e4), RangeError);
  CHECK(default_moment_step(5000.0) == 0.05);
}
