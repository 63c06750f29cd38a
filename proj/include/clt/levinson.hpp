#pragma once

#include <string>
#include <vector>

#include "clt/polynomial.hpp"

namespace clt {

struct LevinsonParams {
  Polynomial p_poly{0.0, 1.0};
  Polynomial q_poly{1.0, -1.0};
  double r_shift = 1.3;
  double theta = 0.5;

  /// Throws ConstraintError naming the violated condition, e.g. "P(0)=0 violated".
  void validate() const;
  static LevinsonParams baseline() { return {}; }
  bool operator==(const LevinsonParams&) const = default;
};

/// `printed` integrates the x-derivative itself,
///   c = 1 + (1/theta) int int e^{2Rv} (d/dx e^{R theta x} P(x+u) Q(v + theta x))|_0 du dv.
/// `squared` integrates its square, the classical Levinson-Conrey integrand.
enum class LevinsonFunctional { printed, squared };

const char* functional_name(LevinsonFunctional f);
LevinsonFunctional parse_functional(const std::string& name);

/// Closed form via monomial integrals and I_m = int_0^1 e^{2Rv} v^m dv.
double c_constant_exact(const LevinsonParams& params,
                        LevinsonFunctional functional = LevinsonFunctional::printed);

/// Nested adaptive Gauss-Kronrod with a central difference (h = 1e-6) for the
/// x-derivative. Throws AccuracyError past 10^6 integrand evaluations.
double c_constant_quadrature(const LevinsonParams& params, double tol = 1e-10,
                             LevinsonFunctional functional = LevinsonFunctional::printed);

/// 1 - log(c)/R. Throws DomainError for c < 1 or R <= 0.
double kappa_lower_bound(double c_value, double r_shift);

/// int_0^1 e^{a v} v^m dv for m = 0..max_power.
std::vector<Complex> exp_moments(Complex a, int max_power);

/// int_0^1 e^{a v} f(v) dv.
Complex exp_weighted_integral(const Polynomial& f, Complex a);

struct ShiftedParams {
  Complex alpha = 0.0;
  Complex beta = 0.0;
  double m_length = 0.0;
  double t_scale = 0.0;

  /// |alpha|, |beta| <= 10/log T; M, T > 1.
  void validate() const;
};

/// c(alpha, beta) = 1 + (1/theta) d^2/dxdy M^{-beta x - alpha y}
///   int_0^1 int_0^1 T^{-v(alpha+beta)} P(x+u) P(y+u) du dv at x = y = 0.
Complex shifted_c(const ShiftedParams& shift, const Polynomial& p_poly, double theta);

/// Q(-(1/L) d/dalpha) Q(-(1/L) d/dbeta) c(alpha, beta) at alpha = beta = -R/L,
/// differences on a 5-point stencil with step 0.2/L.
double shifted_c_q_operator(const Polynomial& p_poly, const Polynomial& q_poly, double r_shift,
                            double theta, double t_scale);

/// One additive piece of a published polynomial, e.g. {"-0.617", "x(1-x)"}.
struct PolynomialTerm {
  std::string coefficient;  // "" for an implicit +1
  std::string basis;
  Polynomial basis_poly;
};

struct RegisteredPolynomial {
  std::string symbol;  // "P_1", "Q", ...
  std::vector<PolynomialTerm> terms;
  std::string quoted;  // the published text, stored verbatim

  Polynomial expanded() const;
  /// Concatenated coefficient and basis text, "x-0.617x(1-x)-...".
  std::string render() const;
  /// "P_1(x)=" + render().
  std::string provenance() const;
};

struct PublishedTuple {
  std::string name;
  std::string source;
  RegisteredPolynomial q;
  RegisteredPolynomial p1;  // the mollifier's main polynomial (P for Levinson)
  std::vector<RegisteredPolynomial> extra;  // P_2 and the inner P for Wu
  double r_shift = 0.0;
  std::string theta_text;
  double theta_nominal = 0.0;
  std::string claim_label;  // "c", "kappa(chi)", "kappa*(chi)"
  double claimed_kappa = 0.0;
  double claimed_c = 0.0;   // 0 when no c is printed
  bool not_reproducible_here = false;

  /// (P_1, Q, R) at theta = min(theta_nominal, 1/2).
  LevinsonParams levinson_params() const;
};

std::vector<PublishedTuple> published_tuples();

struct PublishedClaim {
  double c = 2.35;
  double kappa = 0.35;
  bool operator==(const PublishedClaim&) const = default;
};

/// Everything the `constant` command reports. The claim and the deviation
/// are filled only for Levinson's baseline tuple.
struct ConstantReport {
  LevinsonParams params;
  LevinsonFunctional functional = LevinsonFunctional::printed;
  double c_exact = 0.0;
  double c_quadrature = 0.0;
  double kappa_bound = 0.0;
  double c_squared = 0.0;
  double kappa_squared = 0.0;
  bool has_claim = false;
  PublishedClaim claim;
  double deviation = 0.0;         // c_exact - claim.c
  bool published_discrepancy = false;  // |deviation| > 0.12
  std::string note;

  bool operator==(const ConstantReport&) const = default;
};

ConstantReport constant_report(const LevinsonParams& params, double tol = 1e-10,
                               LevinsonFunctional functional = LevinsonFunctional::printed);

}  // namespace clt
