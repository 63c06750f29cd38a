#pragma once

#include <complex>

namespace clt {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// True when z is (numerically) one of 0, -1, -2, ...
bool is_nonpositive_integer(Complex z, double tol = 0.0) noexcept;

/// sin(pi x), cos(pi x) with exact zeros at integers and half-integers.
double sin_pi(double x) noexcept;
double cos_pi(double x) noexcept;
Complex sin_pi(Complex z) noexcept;

/// log(sin(pi z)) that stays finite for |Im z| in the thousands.
/// The imaginary part is only defined modulo 2 pi.
Complex log_sin_pi(Complex z);

/// log Gamma(z). For Re z >= 1/2 this is the principal branch continuous
/// from the positive axis; left of that the reflection formula fixes it only
/// modulo 2 pi i, which is harmless for every caller (all exponentiate).
/// Throws PoleError at nonpositive integers.
Complex log_gamma(Complex z);

/// Gamma(z), relative accuracy ~1e-13 for |z| <= 200. Throws PoleError at
/// nonpositive integers.
Complex complex_gamma(Complex z);

/// 1/Gamma(z), entire; exactly zero at the poles of Gamma.
Complex reciprocal_gamma(Complex z);

/// Gamma(s, x) = int_x^inf t^{s-1} e^{-t} dt for x > 0. Continued fraction
/// when x >= |s| + 1 (or s sits on a pole of Gamma), otherwise
/// Gamma(s) minus the lower series.
Complex upper_incomplete_gamma(Complex s, double x);

/// gamma(s, x) = int_0^x t^{s-1} e^{-t} dt by its power series; Re s > 0.
Complex lower_incomplete_gamma_series(Complex s, double x);

/// e(x) = exp(2 pi i x).
Complex additive_character(double x) noexcept;

/// Even-index Bernoulli numbers B_2, B_4, ..., B_{2k}; index 0 holds B_2.
inline constexpr int kBernoulliCount = 20;
double bernoulli_even(int k);  // returns B_{2k}, 1 <= k <= kBernoulliCount

}  // namespace clt
