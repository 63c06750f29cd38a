#pragma once

#include <cstdint>
#include <vector>

#include "clt/special_functions.hpp"

namespace clt {

/// Inputs of the approximate functional equation for
/// zeta(1/2 + alpha + it) zeta(1/2 + beta - it).
struct AfeParams {
  Complex alpha{};
  Complex beta{};
  double t = 0.0;
  /// Sums run over m n <= truncation_length; 0 selects afe_default_truncation(t).
  std::uint64_t truncation_length = 0;
  /// The contour Re s = 1 is cut at |Im s| <= contour_height_cap.
  double contour_height_cap = 40.0;

  void validate() const;
};

/// 1000 t^2. V_{alpha,beta}(x, t) is ~1e5 at small x for |alpha+beta| ~ 1e-3
/// and only becomes negligible once x is a few hundred times t^2.
std::uint64_t afe_default_truncation(double t);

/// G(s) = e^{s^2} ((alpha+beta)^2 - 4 s^2) / (alpha+beta)^2.
Complex afe_weight(Complex s, Complex alpha, Complex beta);

/// Gamma ratio g_{alpha,beta}(s, t).
Complex afe_gamma_ratio(Complex s, double t, Complex alpha, Complex beta);

/// X_{alpha,beta,t}.
Complex afe_x_factor(Complex alpha, Complex beta, double t);

/// V_{alpha,beta}(x, t) = (1/2 pi i) int_{(1)} G(s)/s g(s,t) x^{-s} ds, cut at
/// |Im s| <= cap and integrated with 20-point Gauss-Legendre panels of width 1/2.
class AfeKernel {
 public:
  AfeKernel(Complex alpha, Complex beta, double t, double cap = 40.0);

  Complex operator()(double x) const;
  std::size_t node_count() const noexcept { return weights_.size(); }

 private:
  std::vector<double> heights_;
  std::vector<Complex> weights_;
};

Complex afe_v(double x, double t, Complex alpha, Complex beta, double cap = 40.0);

struct AfeTerms {
  Complex first_sum{};
  Complex second_sum{};
  Complex x_factor{};
  Complex total{};  // first_sum + x_factor * second_sum
  std::uint64_t truncation_length = 0;
};

AfeTerms afe_terms(const AfeParams& params);

/// Right-hand side of the approximate functional equation.
Complex afe_pair(const AfeParams& params);

}  // namespace clt
