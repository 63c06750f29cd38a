#include "clt/mollifier.hpp"

#include <cmath>
#include <string>

#include "clt/error.hpp"

namespace clt {

namespace {

bool near(double a, double b) { return std::abs(a - b) <= 1e-12; }

std::uint64_t floor_length(double x) {
  // M = T^theta often lands a hair below an integer
  const double r = std::round(x);
  if (std::abs(x - r) <= 1e-9 * std::max(1.0, r)) return static_cast<std::uint64_t>(r);
  return static_cast<std::uint64_t>(std::floor(x));
}

double unit_log_ratio(double y, double n) {
  const double ly = std::log(y);
  if (ly <= 0.0) return 1.0;
  return std::log(y / n) / ly;
}

}  // namespace

double MollifierSpec::m_length() const { return std::pow(t_scale, theta); }
double MollifierSpec::log_scale() const { return std::log(t_scale); }
double MollifierSpec::sigma0() const { return 0.5 - r_shift / log_scale(); }

void MollifierSpec::validate() const {
  if (!(t_scale > 1.0)) throw ConstraintError("T>1 violated");
  if (!(theta > 0.0 && theta < 1.0)) throw ConstraintError("0<theta<1 violated");
  if (!(r_shift > 0.0)) throw ConstraintError("sigma0<1/2 violated (R must be positive)");
  if (!near(p_poly(0.0), 0.0)) throw ConstraintError("P(0)=0 violated");
  if (!near(p_poly(1.0), 1.0)) throw ConstraintError("P(1)=1 violated");
}

Mollifier::Mollifier(const MollifierSpec& spec, const FactorSieve& sieve) : spec_(spec) {
  spec_.validate();
  const double m = spec_.m_length();
  const std::uint64_t top = floor_length(m);
  if (top > sieve.limit()) throw RangeError("M = " + std::to_string(m) + " beyond sieve limit");
  if (m < 2.0) {
    h_.push_back(1);
    weight_.push_back(spec_.p_poly(1.0));
    log_h_.push_back(0.0);
    return;
  }
  const double log_m = std::log(m);
  for (std::uint64_t h = 1; h <= top; ++h) {
    const int mu = sieve.mobius(h);
    if (mu == 0) continue;
    const double lh = std::log(static_cast<double>(h));
    h_.push_back(static_cast<std::uint32_t>(h));
    weight_.push_back(mu * spec_.p_poly(std::max(0.0, (log_m - lh) / log_m)));
    log_h_.push_back(lh);
  }
}

Complex Mollifier::operator()(Complex s) const {
  const Complex e = 0.5 + s - spec_.sigma0();
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < h_.size(); ++i) {
    const double mag = weight_[i] * std::exp(-e.real() * log_h_[i]);
    const double ph = -e.imag() * log_h_[i];
    re += mag * std::cos(ph);
    im += mag * std::sin(ph);
  }
  return {re, im};
}

Complex psi_mollifier(Complex s, const MollifierSpec& spec) { return Mollifier(spec)(s); }

Complex v_from_taylor(const Taylor& jet, const Polynomial& q_poly, double log_scale) {
  Complex v = 0.0;
  double scale = 1.0;
  for (int j = 0; j <= q_poly.degree(); ++j) {
    v += q_poly.coefficient(j) * scale * jet.derivative(j);
    scale *= -1.0 / log_scale;
  }
  return v;
}

Complex v_smoothed_zeta(Complex s, const Polynomial& q_poly, double log_scale) {
  if (q_poly.degree() > kMaxDerivativeOrder) {
    throw DomainError("deg Q <= " + std::to_string(kMaxDerivativeOrder) + " required");
  }
  if (!(log_scale > 0.0)) throw DomainError("L must be positive");
  if (std::abs(s - 1.0) < 1e-3) throw PoleError("V(s) evaluated at the pole s = 1");
  return v_from_taylor(zeta_taylor(s, q_poly.degree()), q_poly, log_scale);
}

void WuCoefficientSpec::validate() const {
  if (!near(p1(0.0), 0.0)) throw ConstraintError("P1(0)=0 violated");
  if (!near(p2(0.0), 0.0)) throw ConstraintError("P2(0)=0 violated");
  if (!near(p(0.0), 0.0)) throw ConstraintError("P(0)=0 violated");
  if (!near(p1(1.0), 1.0)) throw ConstraintError("P1(1)=1 violated");
  if (!(y_length >= 1.0)) throw ConstraintError("y>=1 violated");
}

double wu_coefficients(std::uint64_t n, const WuCoefficientSpec& spec, WuArgument mode,
                       const FactorSieve& sieve) {
  if (n == 0 || static_cast<double>(n) > spec.y_length * (1.0 + 1e-15)) {
    throw RangeError("a(n) requires 1 <= n <= y");
  }
  const int mu = sieve.mobius(n);
  if (mu == 0) return 0.0;
  const double x = unit_log_ratio(spec.y_length, static_cast<double>(n));
  const double ly = std::log(spec.y_length);
  const double cap = std::pow(spec.y_length, 0.75);
  double inner = 0.0;
  for (const auto& [p, e] : sieve.factorize(n)) {
    (void)e;
    if (static_cast<double>(p) > cap) continue;
    inner += mode == WuArgument::literal ? spec.p(x) : spec.p(std::log(static_cast<double>(p)) / ly);
  }
  return mu * (spec.p1(x) + spec.p2(x) * inner);
}

std::vector<double> wu_coefficient_table(const WuCoefficientSpec& spec, WuArgument mode,
                                         const FactorSieve& sieve) {
  const std::uint64_t top = floor_length(spec.y_length);
  if (top > sieve.limit()) throw RangeError("y beyond sieve limit");
  std::vector<double> a(top + 1, 0.0);
  for (std::uint64_t n = 1; n <= top; ++n) a[n] = wu_coefficients(n, spec, mode, sieve);
  return a;
}

Complex b_polynomial(Complex s, const DirichletCharacter& chi, std::span<const double> coeffs,
                     double y_length) {
  const std::uint64_t top = y_length < 2.0 ? 1 : floor_length(y_length);
  if (coeffs.size() <= top) throw RangeError("coefficient table shorter than y");
  Complex sum = 0.0;
  for (std::uint64_t n = 1; n <= top; ++n) {
    if (coeffs[n] == 0.0) continue;
    const Complex c = chi(static_cast<std::int64_t>(n));
    if (c == 0.0) continue;
    sum += c * coeffs[n] * std::exp(-s * std::log(static_cast<double>(n)));
  }
  return sum;
}

}  // namespace clt
