#include <cmath>
#include <random>

#include "clt/error.hpp"
#include "clt/zeta.hpp"
#include "doctest.h"

using namespace clt;

namespace {
double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }
}  // namespace

TEST_CASE("zeta reference values") {
  CHECK(rel(zeta(2.0), kPi * kPi / 6) < 1e-14);
  CHECK(std::abs(zeta(-2.0)) == 0.0);
  CHECK(std::abs(zeta(-4.0)) == 0.0);
  CHECK(rel(zeta(0.0), -0.5) < 1e-14);
  CHECK(std::abs(zeta(Complex(0.5, 14.134725))) < 1e-5);
  CHECK(rel(zeta(Complex(0.5, 14)), Complex(0.022241142609993589, -0.10325812326645006)) < 1e-11);
  CHECK(rel(zeta(Complex(3, 4)), Complex(0.89055490696507322, -0.0080759454243272601)) < 1e-12);
  CHECK(rel(zeta(Complex(-3.5, 2)), Complex(-0.0035609799649190723, 0.042622537314776408)) < 1e-10);
  CHECK(rel(zeta(Complex(0.3, 1000)), Complex(-0.92072449430422776, 2.2115481522301019)) < 1e-10);
  CHECK_THROWS_AS(zeta(1.0), PoleError);
}

TEST_CASE("reflection against the xi identity at Re s = -0.5") {
  std::mt19937_64 eng(2);
  std::uniform_real_distribution<double> u(-30.0, 30.0);
  for (int i = 0; i < 50; ++i) {
    const Complex s(-0.5, u(eng));
    // xi(s) = xi(1-s) rearranged for zeta(s)
    const Complex w = 1.0 - s;
    const Complex rhs = std::exp((s - 0.5) * std::log(kPi) + log_gamma(w / 2.0) - log_gamma(s / 2.0)) * zeta(w);
    REQUIRE(rel(zeta(s), rhs) < 1e-8);
  }
}

TEST_CASE("derivatives by Cauchy circles") {
  CHECK(rel(zeta_derivative(Complex(0.4, 7), 0), zeta(Complex(0.4, 7))) < 1e-10);
  const double h = 1e-4;
  const Complex fd1 = (zeta(2.0 + h) - zeta(2.0 - h)) / (2 * h);
  CHECK(rel(zeta_derivative(2.0, 1), fd1) < 1e-6);
  const Complex s(0.5, 50.0);
  const Complex fd2 = (zeta(s + h) - 2.0 * zeta(s) + zeta(s - h)) / (h * h);
  CHECK(rel(zeta_derivative(s, 2), fd2) < 1e-5);
  CHECK(rel(zeta_derivative(Complex(0.5, 20), 1), Complex(0.714506790843776, 1.0052408839470131)) < 1e-9);
  CHECK(rel(zeta_derivative(Complex(0.7, 3), 2), Complex(6.3004317306451983e-05, 0.065797246512984228)) < 1e-8);
  CHECK_THROWS_AS(zeta_derivative(Complex(1.0, 5e-4), 1), ConditioningError);
}

TEST_CASE("derivatives up to order 3 match finite differences") {
  std::mt19937_64 eng(9);
  std::uniform_real_distribution<double> re(-0.5, 2.5), im(2.0, 60.0);
  const double h = 1e-3;
  for (int i = 0; i < 20; ++i) {
    const Complex s(re(eng), im(eng));
    const Complex f[5] = {zeta(s - 2 * h), zeta(s - h), zeta(s), zeta(s + h), zeta(s + 2 * h)};
    const Complex d1 = (f[0] - 8.0 * f[1] + 8.0 * f[3] - f[4]) / (12 * h);
    const Complex d2 = (-f[0] + 16.0 * f[1] - 30.0 * f[2] + 16.0 * f[3] - f[4]) / (12 * h * h);
    const Complex d3 = (-f[0] + 2.0 * f[1] - 2.0 * f[3] + f[4]) / (2 * h * h * h);
    REQUIRE(rel(zeta_derivative(s, 1), d1) < 1e-5);
    REQUIRE(rel(zeta_derivative(s, 2), d2) < 1e-5);
    REQUIRE(rel(zeta_derivative(s, 3), d3) < 1e-4);  // the stencil is only O(h^2)
  }
}

TEST_CASE("jets agree with Cauchy derivatives") {
  const Complex s(0.35, 400.0);
  const Taylor jet = zeta_taylor(s, 3);
  for (int k = 0; k <= 3; ++k) CHECK(rel(jet.derivative(k), zeta_derivative(s, k)) < 1e-9);
}

TEST_CASE("xi functional equation and paths") {
  const Complex s(0.3, 7.0);
  CHECK(std::abs(xi_completed(s) - xi_completed(1.0 - s)) < 1e-8 * std::abs(xi_completed(s)));
  CHECK(xi_completed(0.0) == xi_completed(1.0));
  CHECK(rel(xi_completed(0.0), 0.5) < 1e-15);
  const Complex w(0.7, 3.0);
  CHECK(rel(xi_completed(w, XiPath::direct), xi_completed(w, XiPath::continued)) < 1e-8);
  std::mt19937_64 eng(4);
  std::uniform_real_distribution<double> u(-7.0, 7.0);
  int n = 0;
  while (n < 50) {
    const Complex z(u(eng), u(eng));
    if (std::abs(z) > 10.0) continue;
    ++n;
    const Complex a = xi_completed(z, XiPath::continued);
    REQUIRE(std::abs(a - xi_completed(1.0 - z, XiPath::continued)) < 1e-8 * std::max(1.0, std::abs(a)));
  }
}

TEST_CASE("Hardy Z") {
  CHECK(std::abs(std::abs(hardy_z(0.0)) - std::abs(zeta(0.5))) < 1e-13);
  CHECK(std::abs(hardy_z(14.134725)) < 1e-4);
  // the phase convention makes this minus the Riemann-Siegel Z
  CHECK(hardy_z(50.0) == doctest::Approx(0.340735005955024982).epsilon(1e-10));
  std::mt19937_64 eng(8);
  std::uniform_real_distribution<double> u(0.0, 1000.0);
  for (int i = 0; i < 100; ++i) REQUIRE(std::isfinite(hardy_z(u(eng))));
}

TEST_CASE("zero scans") {
  const auto rep = count_critical_zeros(0.0, 100.0, 0.05);
  CHECK(rep.zero_count == 29);
  REQUIRE(rep.zeros.size() == 29);
  CHECK(rep.zeros.front() == doctest::Approx(14.134725141734694).epsilon(1e-8));
  CHECK(rep.zeros.back() == doctest::Approx(98.831194218193692).epsilon(1e-8));
  CHECK(rep.estimate_n_t == doctest::Approx(28.127).epsilon(1e-4));
  CHECK_FALSE(rep.coarse_step_warning);
  for (std::size_t i = 0; i < rep.zeros.size(); ++i) {
    const double r = rep.zeros[i];
    CHECK(std::abs(hardy_z(r)) < 1e-4);
    CHECK(hardy_z(r - 1e-6) * hardy_z(r + 1e-6) < 0.0);
    if (i) CHECK(rep.zeros[i] > rep.zeros[i - 1]);
  }
  CHECK(count_critical_zeros(0.0, 14.0, 0.05).zero_count == 0);
  CHECK(count_critical_zeros(5.0, 5.0, 0.05).zero_count == 0);
  CHECK(count_critical_zeros(0.0, 30.0, 0.6).coarse_step_warning);
  for (double t : {50.0, 100.0, 200.0}) {
    const auto r = count_critical_zeros(0.0, t, 0.05);
    CHECK(std::abs(static_cast<double>(r.zero_count) - r.estimate_n_t) <= 2.0 + 0.5 * std::log(t));
  }
  CHECK(count_critical_zeros(0.0, 100.0, 0.05, 3) == rep);
}
