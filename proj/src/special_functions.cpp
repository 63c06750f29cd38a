#include "clt/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "clt/error.hpp"

namespace clt {
namespace {

constexpr double kLogSqrt2Pi = 0.91893853320467274178032973640562;
constexpr double kLogPi = 1.14472988584940017414342735135305;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// B_2 .. B_40
constexpr std::array<double, kBernoulliCount> kBernoulli = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
    -7709321041217.0 / 510.0,
    2577687858367.0 / 6.0,
    -26315271553053477373.0 / 1919190.0,
    2929993913841559.0 / 6.0,
    -261082718496449122051.0 / 13530.0,
};

Complex stirling(Complex w) {
  // |w| >= 15 here, so ten correction terms reach ~1e-26.
  const Complex inv = 1.0 / w;
  const Complex inv2 = inv * inv;
  Complex corr = 0.0;
  Complex pow = inv;
  for (int k = 1; k <= 10; ++k) {
    corr += kBernoulli[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * pow;
    pow *= inv2;
  }
  return (w - 0.5) * std::log(w) - w + kLogSqrt2Pi + corr;
}

}  // namespace

double bernoulli_even(int k) {
  if (k < 1 || k > kBernoulliCount) throw RangeError("Bernoulli index out of table");
  return kBernoulli[k - 1];
}

bool is_nonpositive_integer(Complex z, double tol) noexcept {
  if (std::abs(z.imag()) > tol) return false;
  const double r = std::round(z.real());
  return r <= 0.0 && std::abs(z.real() - r) <= tol;
}

double sin_pi(double x) noexcept {
  double r = std::fmod(x, 2.0);  // (-2, 2)
  if (r > 1.0) r -= 2.0;
  if (r < -1.0) r += 2.0;
  if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
  if (r == 0.5) return 1.0;
  if (r == -0.5) return -1.0;
  return std::sin(kPi * r);
}

double cos_pi(double x) noexcept { return sin_pi(x + 0.5); }

Complex sin_pi(Complex z) noexcept {
  const double x = z.real();
  const double y = z.imag();
  return {sin_pi(x) * std::cosh(kPi * y), cos_pi(x) * std::sinh(kPi * y)};
}

Complex log_sin_pi(Complex z) {
  double x = std::fmod(z.real(), 2.0);
  const double y = z.imag();
  if (std::abs(y) <= 15.0) {
    const Complex v = sin_pi(Complex(x, y));
    if (v == 0.0) throw PoleError("log sin(pi z) at an integer");
    return std::log(v);
  }
  const Complex zr(x, y);
  const Complex i(0.0, 1.0);
  if (y > 0.0) {
    // sin(pi z) = e^{-i pi z} (e^{2 i pi z} - 1) / (2i)
    return -i * kPi * zr + std::log((std::exp(2.0 * i * kPi * zr) - 1.0) / (2.0 * i));
  }
  return i * kPi * zr + std::log((1.0 - std::exp(-2.0 * i * kPi * zr)) / (2.0 * i));
}

Complex log_gamma(Complex z) {
  if (is_nonpositive_integer(z)) throw PoleError("Gamma has a pole at a nonpositive integer");
  if (z.real() < 0.5) {
    return kLogPi - log_sin_pi(z) - log_gamma(1.0 - z);
  }
  Complex w = z;
  Complex shift = 0.0;
  while (std::abs(w) < 15.0) {
    shift += std::log(w);
    w += 1.0;
  }
  return stirling(w) - shift;
}

Complex complex_gamma(Complex z) {
  if (is_nonpositive_integer(z)) throw PoleError("Gamma has a pole at a nonpositive integer");
  if (z.imag() == 0.0 && z.real() > 0.0 && z.real() < 170.0) return std::tgamma(z.real());
  return std::exp(log_gamma(z));
}

Complex reciprocal_gamma(Complex z) {
  if (is_nonpositive_integer(z)) return 0.0;
  if (z.imag() == 0.0 && z.real() > 0.0 && z.real() < 170.0) return 1.0 / std::tgamma(z.real());
  return std::exp(-log_gamma(z));
}

Complex lower_incomplete_gamma_series(Complex s, double x) {
  Complex term = 1.0 / s;
  Complex sum = term;
  for (int n = 1; n < 100000; ++n) {
    term *= x / (s + static_cast<double>(n));
    sum += term;
    if (std::abs(term) < kEps * std::abs(sum)) break;
  }
  return sum * std::exp(-x + s * std::log(x));
}

namespace {

Complex upper_continued_fraction(Complex s, double x) {
  constexpr double tiny = 1e-300;
  Complex b = x + 1.0 - s;
  Complex c = 1.0 / tiny;
  Complex d = 1.0 / b;
  Complex h = d;
  for (int i = 1; i < 1'000'000; ++i) {
    const Complex an = -static_cast<double>(i) * (static_cast<double>(i) - s);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const Complex del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 4.0 * kEps) {
      return std::exp(-x + s * std::log(x)) * h;
    }
  }
  throw AccuracyError("incomplete gamma continued fraction did not converge");
}

}  // namespace

Complex upper_incomplete_gamma(Complex s, double x) {
  if (!(x > 0.0)) throw DomainError("upper_incomplete_gamma requires x > 0");
  if (x >= std::abs(s) + 1.0 || is_nonpositive_integer(s, 1e-6)) {
    return upper_continued_fraction(s, x);
  }
  return complex_gamma(s) - lower_incomplete_gamma_series(s, x);
}

Complex additive_character(double x) noexcept {
  const double f = x - std::floor(x);
  return {cos_pi(2.0 * f), sin_pi(2.0 * f)};
}

}  // namespace clt
