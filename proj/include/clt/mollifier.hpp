#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "clt/arithmetic.hpp"
#include "clt/dirichlet.hpp"
#include "clt/polynomial.hpp"
#include "clt/zeta.hpp"

namespace clt {

/// (T, theta, R, P) with M = T^theta, L = log T, sigma0 = 1/2 - R/L.
struct MollifierSpec {
  double t_scale = 0.0;
  double theta = 0.5;
  double r_shift = 1.3;
  Polynomial p_poly{0.0, 1.0};

  double m_length() const;
  double log_scale() const;
  double sigma0() const;
  /// Throws ConstraintError naming the violated condition.
  void validate() const;
};

/// psi(s) = sum_{h <= M} mu(h) h^{-(1/2 + s - sigma0)} P(log(M/h)/log M).
/// The squarefree h and their weights are tabulated once at construction.
class Mollifier {
 public:
  explicit Mollifier(const MollifierSpec& spec, const FactorSieve& sieve = default_sieve());

  Complex operator()(Complex s) const;
  std::size_t term_count() const noexcept { return h_.size(); }
  const MollifierSpec& spec() const noexcept { return spec_; }

 private:
  MollifierSpec spec_;
  std::vector<std::uint32_t> h_;
  std::vector<double> weight_;  // mu(h) P(...)
  std::vector<double> log_h_;
};

Complex psi_mollifier(Complex s, const MollifierSpec& spec);

/// sum_j q_j (-1/L)^j zeta^{(j)}(s). deg Q <= 8.
Complex v_smoothed_zeta(Complex s, const Polynomial& q_poly, double log_scale);
/// Same combination from an existing jet of zeta at s.
Complex v_from_taylor(const Taylor& jet, const Polynomial& q_poly, double log_scale);

struct WuCoefficientSpec {
  Polynomial p1;
  Polynomial p2;
  Polynomial p;
  double y_length = 1.0;

  void validate() const;
};

/// `literal` evaluates every polynomial at log(y/n)/log y as printed;
/// `prime_log` evaluates the inner P at log(p)/log y instead.
enum class WuArgument { literal, prime_log };

double wu_coefficients(std::uint64_t n, const WuCoefficientSpec& spec,
                       WuArgument mode = WuArgument::literal,
                       const FactorSieve& sieve = default_sieve());

/// a(0..floor(y)) with a(0) = 0.
std::vector<double> wu_coefficient_table(const WuCoefficientSpec& spec,
                                         WuArgument mode = WuArgument::literal,
                                         const FactorSieve& sieve = default_sieve());

/// B(s, chi) = sum_{n <= y} chi(n) a(n) n^{-s}; coeffs[n] = a(n).
Complex b_polynomial(Complex s, const DirichletCharacter& chi, std::span<const double> coeffs,
                     double y_length);

}  // namespace clt
