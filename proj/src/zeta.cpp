#include "clt/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "clt/error.hpp"
#include "clt/parallel.hpp"

namespace clt {
namespace {

constexpr double kLogPi = 1.14472988584940017414342735135305;
constexpr double kLog2 = 0.69314718055994530941723212145818;
constexpr int kBernoulliTerms = 16;

const std::vector<double>& log_table() {
  static const std::vector<double> table = [] {
    std::vector<double> v(200'001);
    v[0] = 0.0;
    for (std::size_t n = 1; n < v.size(); ++n) v[n] = std::log(static_cast<double>(n));
    return v;
  }();
  return table;
}

inline double log_n(std::size_t n) {
  const auto& t = log_table();
  return n < t.size() ? t[n] : std::log(static_cast<double>(n));
}

using Coeffs = std::array<Complex, kMaxDerivativeOrder + 1>;

// a * b truncated at `order`.
Coeffs mul(const Coeffs& a, const Coeffs& b, int order) {
  Coeffs r{};
  for (int i = 0; i <= order; ++i) {
    if (a[i] == 0.0) continue;
    for (int j = 0; i + j <= order; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// base * exp(-e * lg) expanded in e.
Coeffs exp_series(Complex base, double lg, int order) {
  Coeffs r{};
  Complex term = base;
  for (int j = 0; j <= order; ++j) {
    r[j] = term;
    term *= -lg / (j + 1.0);
  }
  return r;
}

// (w + e)
Coeffs linear(Complex w, int order) {
  Coeffs r{};
  r[0] = w;
  if (order >= 1) r[1] = 1.0;
  return r;
}

Taylor zeta_em(Complex s, int order) {
  const int big_n = euler_maclaurin_cutoff(s);
  Coeffs acc{};
  const double sigma = s.real();
  const double t = s.imag();
  for (int n = 1; n < big_n; ++n) {
    const double ln = log_n(static_cast<std::size_t>(n));
    const double mag = std::exp(-sigma * ln);
    const Complex base(mag * std::cos(t * ln), -mag * std::sin(t * ln));
    if (order == 0) {
      acc[0] += base;
      continue;
    }
    Complex term = base;
    for (int j = 0; j <= order; ++j) {
      acc[j] += term;
      term *= -ln / (j + 1.0);
    }
  }
  const double ln_n = log_n(static_cast<std::size_t>(big_n));
  const Complex n_pow = std::exp(-s * ln_n);  // N^{-s}
  // N^{1-s} / (s - 1)
  const Coeffs head = exp_series(n_pow * static_cast<double>(big_n), ln_n, order);
  Coeffs inv{};
  const Complex w = s - 1.0;
  Complex p = 1.0 / w;
  for (int j = 0; j <= order; ++j) {
    inv[j] = p;
    p *= -1.0 / w;
  }
  const Coeffs tail1 = mul(head, inv, order);
  const Coeffs e_pow = exp_series(n_pow, ln_n, order);  // N^{-s-e}
  for (int j = 0; j <= order; ++j) acc[j] += tail1[j] + 0.5 * e_pow[j];

  // Bernoulli corrections B_{2k}/(2k)! (s)_{2k-1} N^{-s-2k+1}.
  Coeffs rising = linear(s, order);
  double fact = 2.0;  // (2k)!
  double n_scale = 1.0 / big_n;
  for (int k = 1; k <= kBernoulliTerms; ++k) {
    const Coeffs term = mul(rising, e_pow, order);
    const double c = bernoulli_even(k) / fact * n_scale;
    double biggest = 0.0;
    for (int j = 0; j <= order; ++j) {
      acc[j] += c * term[j];
      biggest = std::max(biggest, std::abs(c * term[j]));
    }
    if (biggest < 1e-18 * std::max(1.0, std::abs(acc[0]))) break;
    rising = mul(rising, linear(s + (2.0 * k - 1.0), order), order);
    rising = mul(rising, linear(s + 2.0 * k, order), order);
    fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
    n_scale /= static_cast<double>(big_n) * big_n;
  }
  Taylor out;
  out.order = order;
  out.coeff = acc;
  return out;
}

bool is_negative_even_integer(Complex s) {
  if (s.imag() != 0.0 || s.real() >= 0.0) return false;
  const double h = s.real() / 2.0;
  return h == std::floor(h);
}

}  // namespace

Complex Taylor::derivative(int j) const {
  double f = 1.0;
  for (int k = 2; k <= j; ++k) f *= k;
  return coeff[j] * f;
}

int euler_maclaurin_cutoff(Complex s) {
  const double reach = std::abs(s) + 2.0 * kBernoulliTerms;
  return std::max(24, static_cast<int>(std::ceil(0.6 * reach)));
}

Taylor zeta_taylor(Complex s, int order) {
  if (order < 0 || order > kMaxDerivativeOrder) {
    throw DomainError("derivative order must lie in [0, " + std::to_string(kMaxDerivativeOrder) + "]");
  }
  if (s == Complex(1.0, 0.0)) throw PoleError("zeta has a pole at s = 1");
  if (s.real() <= -20.0) throw DomainError("zeta_taylor requires Re s > -20");
  return zeta_em(s, order);
}

Complex zeta(Complex s) {
  if (s == Complex(1.0, 0.0)) throw PoleError("zeta has a pole at s = 1");
  if (s.real() >= 0.0) return zeta_em(s, 0).coeff[0];
  if (is_negative_even_integer(s)) return 0.0;
  // zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
  const Complex log_factor =
      s * kLog2 + (s - 1.0) * kLogPi + log_sin_pi(s / 2.0) + log_gamma(1.0 - s);
  return std::exp(log_factor) * zeta_em(1.0 - s, 0).coeff[0];
}

Complex zeta_derivative(Complex s, int order) {
  if (order < 0 || order > kMaxDerivativeOrder) {
    throw DomainError("derivative order must lie in [0, " + std::to_string(kMaxDerivativeOrder) + "]");
  }
  const double dist = std::abs(s - 1.0);
  if (dist < 1e-3) throw ConditioningError("zeta_derivative too close to the pole at s = 1");
  const double r = std::min(0.25, dist / 2.0);
  const int nodes = 64 * (order + 1);
  Complex acc = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const double frac = static_cast<double>(j) / nodes;
    const Complex unit = additive_character(frac);
    const Complex back = additive_character(-frac * order);
    acc += zeta(s + r * unit) * back;
  }
  double fact = 1.0;
  for (int k = 2; k <= order; ++k) fact *= k;
  return acc * (fact / (nodes * std::pow(r, order)));
}

Complex xi_completed(Complex s, XiPath path) {
  if (path == XiPath::direct) {
    if (s == Complex(0.0, 0.0) || s == Complex(1.0, 0.0)) return 0.5;
    if (is_negative_even_integer(s)) return xi_completed(1.0 - s, XiPath::direct);
    const Complex pre = 0.5 * s * (s - 1.0);
    return pre * std::exp(-0.5 * s * kLogPi + log_gamma(0.5 * s)) * zeta(s);
  }
  // xi(s) = 1/2 + s(s-1)/2 [pi^{-s/2} sum n^{-s} Gamma(s/2, pi n^2)
  //                         + pi^{-(1-s)/2} sum n^{s-1} Gamma((1-s)/2, pi n^2)]
  Complex sum = 0.0;
  const Complex a = 0.5 * s;
  const Complex b = 0.5 * (1.0 - s);
  for (int n = 1; n < 1000; ++n) {
    const double x = kPi * n * n;
    const double ln = std::log(static_cast<double>(n));
    const Complex term = std::exp(-s * ln - a * kLogPi) * upper_incomplete_gamma(a, x) +
                         std::exp((s - 1.0) * ln - b * kLogPi) * upper_incomplete_gamma(b, x);
    sum += term;
    if (x > std::abs(s) + 2.0 && std::abs(term) < 1e-18 * std::max(1.0, std::abs(sum))) break;
  }
  return 0.5 + 0.5 * s * (s - 1.0) * sum;
}

double hardy_z(double t) {
  const Complex s(0.5, t);
  const double phase = kPi - 0.5 * t * kLogPi + log_gamma(Complex(0.25, 0.5 * t)).imag();
  const Complex zeta_value = zeta(s);
  const Complex z = Complex(std::cos(phase), std::sin(phase)) * zeta_value;
  if (std::abs(z.imag()) >= 1e-6 * std::max(1.0, std::abs(zeta_value))) {
    throw AccuracyError("Hardy Z lost accuracy: imaginary residue " + std::to_string(z.imag()));
  }
  return z.real();
}

double riemann_von_mangoldt_estimate(double t) {
  if (t <= 0.0) return 0.0;
  const double u = t / (2.0 * kPi);
  return u * std::log(u) - u;
}

double riemann_von_mangoldt_leading(double t) {
  if (t <= 1.0) return 0.0;
  return t / (2.0 * kPi) * std::log(t);
}

ZeroScanReport count_critical_zeros(double t_min, double t_max, double step, unsigned threads) {
  if (!(t_min >= 0.0) || !(t_max >= t_min)) throw DomainError("zero scan needs 0 <= t_min <= t_max");
  if (!(step > 0.0)) throw DomainError("zero scan step must be positive");
  ZeroScanReport report;
  report.t_min = t_min;
  report.t_max = t_max;
  report.step = step;
  report.coarse_step_warning = step > 0.5;
  report.estimate_n_t = riemann_von_mangoldt_estimate(t_max);
  report.estimate_leading = riemann_von_mangoldt_leading(t_max);
  if (t_max == t_min) return report;

  const auto intervals = static_cast<std::size_t>(std::ceil((t_max - t_min) / step - 1e-9));
  std::vector<double> grid(intervals + 1);
  for (std::size_t k = 0; k < intervals; ++k) grid[k] = t_min + static_cast<double>(k) * step;
  grid[intervals] = t_max;
  std::vector<double> values(grid.size());
  parallel_for(grid.size(), threads, [&](std::size_t k) { values[k] = hardy_z(grid[k]); });

  std::vector<std::pair<double, double>> brackets;
  for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
    if (values[k] == 0.0) {
      brackets.emplace_back(grid[k], grid[k]);
    } else if (values[k] * values[k + 1] < 0.0) {
      brackets.emplace_back(grid[k], grid[k + 1]);
    }
  }
  report.zeros.resize(brackets.size());
  report.residuals.resize(brackets.size());
  parallel_for(brackets.size(), threads, [&](std::size_t i) {
    auto [lo, hi] = brackets[i];
    if (lo == hi) {
      report.zeros[i] = lo;
      report.residuals[i] = 0.0;
      return;
    }
    double f_lo = hardy_z(lo);
    while (hi - lo > 1e-7) {
      const double mid = 0.5 * (lo + hi);
      const double f_mid = hardy_z(mid);
      if (f_mid == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((f_mid < 0.0) == (f_lo < 0.0)) {
        lo = mid;
        f_lo = f_mid;
      } else {
        hi = mid;
      }
    }
    report.zeros[i] = 0.5 * (lo + hi);
    report.residuals[i] = hardy_z(report.zeros[i]);
  });
  report.zero_count = report.zeros.size();
  return report;
}

}  // namespace clt
