#include <cmath>
#include <numeric>

#include "clt/arithmetic.hpp"
#include "clt/dirichlet.hpp"
#include "clt/error.hpp"
#include "clt/zeta.hpp"
#include "doctest.h"

using namespace clt;

namespace {
double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }
const Complex I(0.0, 1.0);
}  // namespace

TEST_CASE("character axioms") {
  for (std::uint64_t q = 1; q <= 40; ++q) {
    const auto chars = enumerate_characters(q);
    REQUIRE(chars.size() == euler_phi(q));
    REQUIRE(character_count(q) == chars.size());
    CHECK(chars.front().is_principal());
    for (const auto& chi : chars) {
      for (std::uint64_t n = 0; n < q; ++n) {
        const bool unit = std::gcd(n, q) == 1;
        REQUIRE((chi(static_cast<std::int64_t>(n)) == 0.0) == !unit);
        if (unit) REQUIRE(std::abs(std::abs(chi(static_cast<std::int64_t>(n))) - 1.0) < 1e-12);
        for (std::uint64_t m = 0; m < q; ++m) {
          const auto mn = static_cast<std::int64_t>((m * n) % q);
          REQUIRE(std::abs(chi(mn) - chi(static_cast<std::int64_t>(m)) * chi(static_cast<std::int64_t>(n))) < 1e-12);
        }
      }
      REQUIRE((chi.parity() == 0) == (std::abs(chi(static_cast<std::int64_t>(q) - 1) - 1.0) < 1e-12 || q == 1));
      REQUIRE(q % chi.conductor() == 0);
      REQUIRE(conductor(chi) == chi.conductor());
      REQUIRE(std::abs(chi(-1) - chi(static_cast<std::int64_t>(q) - 1)) < 1e-15);
    }
  }
}

TEST_CASE("small moduli") {
  const auto one = enumerate_characters(1);
  REQUIRE(one.size() == 1);
  for (int n = -5; n < 5; ++n) CHECK(one[0](n) == Complex(1.0));
  const auto three = enumerate_characters(3);
  REQUIRE(three.size() == 2);
  CHECK(std::abs(three[1](2) + 1.0) < 1e-15);
  CHECK(three[1].conductor() == 3);
  const auto eight = enumerate_characters(8);
  REQUIRE(eight.size() == 4);
  int conductor_four = 0;
  for (const auto& chi : eight) {
    CHECK(chi.is_real());
    if (chi.conductor() == 4) {
      ++conductor_four;
      // agrees with the character mod 4 on odd residues
      for (int n = 1; n < 8; n += 2) CHECK(std::abs(chi(n) - enumerate_characters(4)[1](n)) < 1e-15);
    }
  }
  CHECK(conductor_four == 1);
  CHECK(enumerate_characters(12)[0].conductor() == 1);
}

TEST_CASE("orthogonality") {
  for (std::uint64_t q = 1; q <= 30; ++q) {
    const auto chars = enumerate_characters(q);
    for (std::size_t a = 0; a < chars.size(); ++a) {
      for (std::size_t b = 0; b < chars.size(); ++b) {
        Complex s = 0.0;
        for (std::uint64_t n = 0; n < q; ++n) {
          s += chars[a](static_cast<std::int64_t>(n)) * std::conj(chars[b](static_cast<std::int64_t>(n)));
        }
        REQUIRE(std::abs(s - (a == b ? static_cast<double>(euler_phi(q)) : 0.0)) < 1e-10);
      }
    }
  }
}

TEST_CASE("Gauss sums") {
  CHECK(std::abs(gauss_sum(enumerate_characters(1)[0]) - 1.0) < 1e-15);
  CHECK(std::abs(gauss_sum(enumerate_characters(3)[1]) - I * std::sqrt(3.0)) < 1e-14);
  for (std::uint64_t q = 1; q <= 50; ++q) {
    for (const auto& chi : enumerate_characters(q)) {
      if (!chi.is_primitive()) continue;
      REQUIRE(std::abs(std::abs(gauss_sum(chi)) - std::sqrt(static_cast<double>(q))) < 1e-10);
      REQUIRE(std::abs(std::abs(epsilon_factor(chi)) - 1.0) < 1e-10);
    }
  }
  for (std::uint64_t q = 1; q <= 30; ++q) {
    for (const auto& chi : enumerate_characters(q)) {
      const auto bar = chi.conj();
      const Complex tau = gauss_sum(chi), tau_bar = gauss_sum(bar);
      REQUIRE(std::abs(std::conj(tau) - chi(-1) * tau_bar) < 1e-10);
      for (std::uint64_t n = 1; n <= q; ++n) {
        Complex twist = 0.0;
        for (std::uint64_t a = 1; a <= q; ++a) {
          twist += bar(static_cast<std::int64_t>(a)) *
                   additive_character(static_cast<double>((a * n) % q) / static_cast<double>(q));
        }
        if (std::gcd(n, q) == 1) REQUIRE(std::abs(chi(static_cast<std::int64_t>(n)) * tau_bar - twist) < 1e-10);
        if (chi.is_primitive()) REQUIRE(std::abs(chi(static_cast<std::int64_t>(n)) - twist / tau_bar) < 1e-10);
      }
    }
  }
}

TEST_CASE("epsilon factor") {
  CHECK(std::abs(epsilon_factor(enumerate_characters(1)[0]) - 1.0) < 1e-15);
  CHECK(std::abs(epsilon_factor(enumerate_characters(3)[1]) - 1.0) < 1e-14);
  CHECK_THROWS_AS(epsilon_factor(enumerate_characters(8)[0]), DomainError);
}

TEST_CASE("theta series") {
  const auto chi1 = enumerate_characters(1)[0];
  CHECK(theta_nu_literal(1.0, chi1).real() == doctest::Approx(1.0864348112133080).epsilon(1e-14));
  for (const auto& chi : enumerate_characters(5)) {
    if (chi.parity() == 1) CHECK(std::abs(theta_nu_literal(Complex(1.3, 0.2), chi)) < 1e-15);
  }
  for (const auto& chi : enumerate_characters(5)) {
    if (!chi.is_primitive() || chi.parity() != 0) continue;
    const Complex z = 2.0;
    const Complex lhs = theta_nu(z, chi);
    const Complex rhs = epsilon_factor(chi) * std::pow(z, -0.5) * theta_nu(1.0 / z, chi.conj());
    CHECK(std::abs(lhs - rhs) < 1e-8);
  }
  for (const auto& chi : enumerate_characters(7)) {
    if (!chi.is_primitive()) continue;
    const Complex z(0.7, 0.4);
    const Complex rhs = epsilon_factor(chi) * std::pow(z, -(0.5 + chi.parity())) * theta_nu(1.0 / z, chi.conj());
    CHECK(std::abs(theta_nu(z, chi) - rhs) < 1e-8);
  }
  CHECK_THROWS_AS(theta_nu(Complex(0.0, 1.0), enumerate_characters(5)[1]), DomainError);
}

TEST_CASE("L-function values") {
  CHECK(rel(l_function(2.0, enumerate_characters(1)[0]), zeta(2.0)) < 1e-10);
  CHECK(rel(l_function(1.0, enumerate_characters(4)[1]), kPi / 4) < 1e-12);
  const auto leg5 = enumerate_characters(5)[2];
  REQUIRE(leg5.is_real());
  CHECK(rel(l_function(2.0, leg5), 0.70621140325974097) < 1e-12);
  CHECK(rel(l_function(Complex(0.5, 10), leg5), Complex(0.07006227548987666, 0.25541118768749355)) < 1e-10);
  CHECK(rel(l_function(Complex(0.3, 5), enumerate_characters(3)[1]), Complex(2.18983253564633, -0.13675938629153883)) < 1e-10);
  CHECK_THROWS_AS(l_function(1.0, enumerate_characters(6)[0]), PoleError);
  // imprimitive mod 15 induced from the character mod 5: Euler factor at 3
  for (const auto& chi : enumerate_characters(15)) {
    if (chi.conductor() != 5) continue;
    const auto prim = chi.primitive_inducing();
    const Complex s(0.6, 3.0);
    CHECK(rel(l_function(s, chi), l_function(s, prim) * (1.0 - prim(3) * std::pow(3.0, -s))) < 1e-10);
  }
}

TEST_CASE("trivial zeros and the strip") {
  for (std::uint64_t q = 3; q <= 20; ++q) {
    for (const auto& chi : enumerate_characters(q)) {
      if (!chi.is_primitive() || chi.is_principal()) continue;
      REQUIRE(std::abs(l_function(-static_cast<double>(chi.parity()), chi)) < 1e-12);
      for (double sigma : {0.2, 0.5, 0.8}) {
        const Complex s(sigma, 6.0);
        REQUIRE(rel(l_function(s, chi), l_function_series(s, chi)) < 1e-7);
      }
    }
  }
}

TEST_CASE("completed L-function") {
  for (const auto& chi : enumerate_characters(5)) {
    if (!chi.is_primitive()) continue;
    const Complex s(0.3, 2.0);
    CHECK(std::abs(xi_completed_l(s, chi) - epsilon_factor(chi) * xi_completed_l(1.0 - s, chi.conj())) < 1e-8);
    const double k = chi.parity();
    const Complex direct = l_function_series(2.0, chi) * complex_gamma((2.0 + k) / 2.0) * std::pow(5.0 / kPi, (2.0 + k) / 2.0);
    CHECK(rel(xi_completed_l(2.0, chi), direct) < 1e-8);
    CHECK(std::abs(xi_completed_l(std::conj(s), chi.conj()) - std::conj(xi_completed_l(s, chi))) < 1e-10);
  }
  CHECK_THROWS_AS(xi_completed_l(0.5, enumerate_characters(5)[0]), DomainError);
  CHECK_THROWS_AS(xi_completed_l(0.5, enumerate_characters(8)[0]), DomainError);
}
