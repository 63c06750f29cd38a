#include "clt/afe.hpp"

#include <cmath>

#include "clt/error.hpp"
#include "clt/quadrature.hpp"

namespace clt {
namespace {

constexpr double kLogPi = 1.14472988584940017414342735135305;

// Chebyshev interpolant of u -> V(e^u) on consecutive panels.
class LogInterpolant {
 public:
  static constexpr int kDegree = 32;
  static constexpr double kWidth = 0.5;

  LogInterpolant(const AfeKernel& kernel, double u_max) {
    panels_ = static_cast<int>(std::ceil(u_max / kWidth)) + 1;
    coeffs_.resize(static_cast<std::size_t>(panels_) * kDegree);
    std::vector<Complex> f(kDegree);
    for (int p = 0; p < panels_; ++p) {
      const double mid = (p + 0.5) * kWidth;
      for (int j = 0; j < kDegree; ++j) {
        const double xj = std::cos(kPi * (j + 0.5) / kDegree);
        f[j] = kernel(std::exp(mid + 0.5 * kWidth * xj));
      }
      for (int k = 0; k < kDegree; ++k) {
        Complex c = 0.0;
        for (int j = 0; j < kDegree; ++j) c += f[j] * std::cos(kPi * k * (j + 0.5) / kDegree);
        c *= 2.0 / kDegree;
        if (k == 0) c *= 0.5;
        coeffs_[static_cast<std::size_t>(p) * kDegree + k] = c;
      }
    }
  }

  Complex operator()(double u) const {
    int p = static_cast<int>(u / kWidth);
    p = std::clamp(p, 0, panels_ - 1);
    const double y = (u - (p + 0.5) * kWidth) / (0.5 * kWidth);
    const Complex* c = &coeffs_[static_cast<std::size_t>(p) * kDegree];
    Complex b1 = 0.0, b2 = 0.0;
    for (int k = kDegree - 1; k >= 1; --k) {
      const Complex b0 = 2.0 * y * b1 - b2 + c[k];
      b2 = b1;
      b1 = b0;
    }
    return y * b1 - b2 + c[0];
  }

 private:
  int panels_ = 0;
  std::vector<Complex> coeffs_;
};

// sum_{m n <= X} m^{-a_m} n^{-a_n} V(mn), with a_m, a_n the full complex exponents.
Complex double_sum(Complex exp_m, Complex exp_n, const std::vector<Complex>& v_table,
                   std::uint64_t limit) {
  std::vector<Complex> b(limit + 1);
  for (std::uint64_t n = 1; n <= limit; ++n) {
    b[n] = std::exp(-exp_n * std::log(static_cast<double>(n)));
  }
  Complex total = 0.0;
  for (std::uint64_t m = 1; m <= limit; ++m) {
    const Complex am = std::exp(-exp_m * std::log(static_cast<double>(m)));
    Complex inner = 0.0;
    const std::uint64_t top = limit / m;
    for (std::uint64_t n = 1, x = m; n <= top; ++n, x += m) inner += b[n] * v_table[x];
    total += am * inner;
  }
  return total;
}

std::vector<Complex> tabulate(const AfeKernel& kernel, std::uint64_t limit) {
  const LogInterpolant interp(kernel, std::log(static_cast<double>(limit)));
  std::vector<Complex> table(limit + 1);
  for (std::uint64_t x = 1; x <= limit; ++x) table[x] = interp(std::log(static_cast<double>(x)));
  return table;
}

}  // namespace

void AfeParams::validate() const {
  if (!(alpha.real() < 0.5) || !(beta.real() < 0.5)) {
    throw DomainError("approximate functional equation needs Re(alpha), Re(beta) < 1/2");
  }
  if (alpha + beta == Complex(0.0, 0.0)) {
    throw DomainError("alpha + beta = 0 makes p(s) degenerate; use alpha + beta = 1e-6 instead");
  }
  if (!(t >= 10.0)) throw DomainError("approximate functional equation is evaluated for t >= 10");
  if (!(contour_height_cap > 0.0)) throw DomainError("contour height cap must be positive");
}

std::uint64_t afe_default_truncation(double t) {
  return static_cast<std::uint64_t>(std::ceil(1000.0 * t * t));
}

Complex afe_weight(Complex s, Complex alpha, Complex beta) {
  const Complex ab2 = (alpha + beta) * (alpha + beta);
  return std::exp(s * s) * (ab2 - 4.0 * s * s) / ab2;
}

Complex afe_gamma_ratio(Complex s, double t, Complex alpha, Complex beta) {
  const Complex it(0.0, t);
  return std::exp(-s * kLogPi + log_gamma((0.5 + alpha + s + it) / 2.0) +
                  log_gamma((0.5 + beta + s - it) / 2.0) - log_gamma((0.5 + alpha + it) / 2.0) -
                  log_gamma((0.5 + beta - it) / 2.0));
}

Complex afe_x_factor(Complex alpha, Complex beta, double t) {
  const Complex it(0.0, t);
  return std::exp((alpha + beta) * kLogPi + log_gamma((0.5 - alpha - it) / 2.0) +
                  log_gamma((0.5 - beta + it) / 2.0) - log_gamma((0.5 + alpha + it) / 2.0) -
                  log_gamma((0.5 + beta - it) / 2.0));
}

AfeKernel::AfeKernel(Complex alpha, Complex beta, double t, double cap) {
  static const GaussLegendreRule rule = gauss_legendre(20);
  constexpr double width = 0.5;
  const int panels = static_cast<int>(std::ceil(2.0 * cap / width));
  const double h = 2.0 * cap / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = -cap + (p + 0.5) * h;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      const double y = mid + 0.5 * h * rule.nodes[j];
      const Complex s(1.0, y);
      // ds = i dy, and the 1/(2 pi i) leaves 1/(2 pi).
      const Complex w = 0.5 * h * rule.weights[j] / (2.0 * kPi) * afe_weight(s, alpha, beta) / s *
                        afe_gamma_ratio(s, t, alpha, beta);
      if (std::abs(w) < 1e-300) continue;
      heights_.push_back(y);
      weights_.push_back(w);
    }
  }
}

Complex AfeKernel::operator()(double x) const {
  const double lx = std::log(x);
  Complex acc = 0.0;
  const double inv_x = 1.0 / x;
  for (std::size_t k = 0; k < weights_.size(); ++k) {
    const double ph = -heights_[k] * lx;
    acc += weights_[k] * Complex(std::cos(ph), std::sin(ph));
  }
  return acc * inv_x;
}

Complex afe_v(double x, double t, Complex alpha, Complex beta, double cap) {
  if (!(x > 0.0)) throw DomainError("V(x, t) needs x > 0");
  return AfeKernel(alpha, beta, t, cap)(x);
}

AfeTerms afe_terms(const AfeParams& params) {
  params.validate();
  AfeTerms out;
  out.truncation_length = params.truncation_length == 0 ? afe_default_truncation(params.t)
                                                        : params.truncation_length;
  const Complex a = params.alpha;
  const Complex b = params.beta;
  const Complex it(0.0, params.t);
  const std::uint64_t limit = out.truncation_length;
  {
    const AfeKernel kernel(a, b, params.t, params.contour_height_cap);
    out.first_sum = double_sum(0.5 + a + it, 0.5 + b - it, tabulate(kernel, limit), limit);
  }
  {
    const AfeKernel kernel(-b, -a, params.t, params.contour_height_cap);
    out.second_sum = double_sum(0.5 - b + it, 0.5 - a - it, tabulate(kernel, limit), limit);
  }
  out.x_factor = afe_x_factor(a, b, params.t);
  out.total = out.first_sum + out.x_factor * out.second_sum;
  return out;
}

Complex afe_pair(const AfeParams& params) { return afe_terms(params).total; }

}  // namespace clt
