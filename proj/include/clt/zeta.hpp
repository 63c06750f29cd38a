#pragma once

#include <array>
#include <vector>

#include "clt/special_functions.hpp"

namespace clt {

inline constexpr int kMaxDerivativeOrder = 8;

/// Truncated Taylor expansion f(s + e) = sum_j coeff[j] e^j, j <= order.
struct Taylor {
  int order = 0;
  std::array<Complex, kMaxDerivativeOrder + 1> coeff{};

  /// j-th derivative, coeff[j] * j!.
  Complex derivative(int j) const;
};

/// Riemann zeta. Euler-Maclaurin for Re s >= 0, reflection through the
/// functional equation for Re s < 0. Throws PoleError at s = 1.
Complex zeta(Complex s);

/// Taylor coefficients of zeta about s up to `order` (<= 8), from the
/// Euler-Maclaurin formula evaluated in truncated power-series arithmetic.
/// Valid for Re s > -20.
Taylor zeta_taylor(Complex s, int order);

/// Euler-Maclaurin truncation point used for s.
int euler_maclaurin_cutoff(Complex s);

/// k-th derivative by the Cauchy integral on a circle of radius
/// min(0.25, |s-1|/2) with 64 (order+1) trapezoid nodes.
/// Throws ConditioningError when |s - 1| < 1e-3.
Complex zeta_derivative(Complex s, int order);

enum class XiPath { direct, continued };

/// xi(s) = s(s-1)/2 pi^{-s/2} Gamma(s/2) zeta(s).
/// `direct` multiplies the factors; `continued` sums the incomplete-gamma
/// series at z = 1, which never touches zeta.
Complex xi_completed(Complex s, XiPath path = XiPath::direct);

/// Hardy's Z(t) with the phase of H(1/2+it) = (s(s-1)/2) pi^{-s/2} Gamma(s/2).
/// Since s(s-1)/2 < 0 on the line this is minus the usual Riemann-Siegel Z.
/// Throws AccuracyError if the imaginary residue exceeds 1e-6.
double hardy_z(double t);

struct ZeroScanReport {
  double t_min = 0.0;
  double t_max = 0.0;
  double step = 0.0;
  std::size_t zero_count = 0;
  std::vector<double> zeros;
  std::vector<double> residuals;  // Z at each refined ordinate
  double estimate_n_t = 0.0;      // (T/2pi) log(T/2pi) - T/2pi
  double estimate_leading = 0.0;  // (T/2pi) log T
  bool coarse_step_warning = false;

  bool operator==(const ZeroScanReport&) const = default;
};

/// Sign-change scan of Z on a uniform grid, each change bisected to 1e-7.
ZeroScanReport count_critical_zeros(double t_min, double t_max, double step,
                                    unsigned threads = 1);

double riemann_von_mangoldt_estimate(double t);
double riemann_von_mangoldt_leading(double t);

}  // namespace clt
