#include "clt/levinson.hpp"

#include <cmath>
#include <cstdio>
#include <functional>

#include "clt/error.hpp"
#include "clt/quadrature.hpp"

namespace clt {

namespace {

bool near(double a, double b) { return std::abs(a - b) <= 1e-12; }

// int_0^1 f(u) g(u) du
double unit_inner(const Polynomial& f, const Polynomial& g) { return (f * g).integral_unit(); }

Polynomial term_poly(std::initializer_list<double> c) { return Polynomial(c); }

}  // namespace

void LevinsonParams::validate() const {
  if (!near(p_poly(0.0), 0.0)) throw ConstraintError("P(0)=0 violated");
  if (!near(p_poly(1.0), 1.0)) throw ConstraintError("P(1)=1 violated");
  if (!near(q_poly(0.0), 1.0)) throw ConstraintError("Q(0)=1 violated");
  if (!(r_shift > 0.0) || !std::isfinite(r_shift)) throw ConstraintError("R>0 violated");
  if (!(theta > 0.0 && theta <= 0.5)) throw ConstraintError("0<theta<=1/2 violated");
}

const char* functional_name(LevinsonFunctional f) {
  return f == LevinsonFunctional::printed ? "printed" : "squared";
}

LevinsonFunctional parse_functional(const std::string& name) {
  if (name == "printed") return LevinsonFunctional::printed;
  if (name == "squared") return LevinsonFunctional::squared;
  throw ParseError("unknown functional '" + name + "' (expected printed or squared)");
}

std::vector<Complex> exp_moments(Complex a, int max_power) {
  std::vector<Complex> out(static_cast<std::size_t>(max_power) + 1);
  if (a == 0.0) {
    for (int m = 0; m <= max_power; ++m) out[m] = 1.0 / (m + 1.0);
    return out;
  }
  // Downward recurrence I_{m-1} = (e^a - a I_m)/m damps the starting error by
  // |a|/m per step; the top value comes from the everywhere-convergent series
  // I_m = sum_k a^k / (k! (m+k+1)).
  const int top = max_power + 40 + static_cast<int>(std::ceil(2.0 * std::abs(a)));
  Complex term = 1.0, series = 0.0;
  for (int k = 0; k < 400; ++k) {
    const Complex add = term / static_cast<double>(top + k + 1);
    series += add;
    if (std::abs(add) <= 1e-18 * std::abs(series)) break;
    term *= a / static_cast<double>(k + 1);
  }
  const Complex ea = std::exp(a);
  Complex cur = series;
  for (int m = top; m > 0; --m) {
    if (m <= max_power) out[m] = cur;
    cur = (ea - a * cur) / static_cast<double>(m);
  }
  out[0] = cur;
  return out;
}

Complex exp_weighted_integral(const Polynomial& f, Complex a) {
  const auto moments = exp_moments(a, f.degree());
  Complex s = 0.0;
  for (int m = 0; m <= f.degree(); ++m) s += f.coefficient(m) * moments[m];
  return s;
}

double c_constant_exact(const LevinsonParams& params, LevinsonFunctional functional) {
  params.validate();
  const double r = params.r_shift, th = params.theta;
  const Polynomial& p = params.p_poly;
  const Polynomial& q = params.q_poly;
  const Polynomial dp = p.derivative();
  // x-derivative at 0: P(u) Qt(v) + P'(u) Q(v), Qt = R theta Q + theta Q'
  const Polynomial qt = q * (r * th) + q.derivative() * th;
  const Complex a = 2.0 * r;
  double inner;
  if (functional == LevinsonFunctional::printed) {
    inner = p.integral_unit() * exp_weighted_integral(qt, a).real() +
            dp.integral_unit() * exp_weighted_integral(q, a).real();
  } else {
    inner = unit_inner(p, p) * exp_weighted_integral(qt * qt, a).real() +
            2.0 * unit_inner(p, dp) * exp_weighted_integral(qt * q, a).real() +
            unit_inner(dp, dp) * exp_weighted_integral(q * q, a).real();
  }
  return 1.0 + inner / th;
}

double c_constant_quadrature(const LevinsonParams& params, double tol,
                             LevinsonFunctional functional) {
  params.validate();
  if (!(tol >= 1e-12)) throw DomainError("tol >= 1e-12 required");
  constexpr std::size_t kBudget = 1'000'000;
  const long double r = params.r_shift, th = params.theta;
  const Polynomial& p = params.p_poly;
  const Polynomial& q = params.q_poly;
  auto horner = [](const Polynomial& poly, long double x) {
    long double acc = 0.0L;
    const auto& c = poly.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
  };
  // extended precision keeps the difference quotient's rounding near 1e-13
  auto g = [&](long double x, long double u, long double v) {
    return std::exp(r * th * x) * horner(p, x + u) * horner(q, v + th * x);
  };
  constexpr long double h = 1e-6L;
  std::size_t used = 0;
  auto integrand_u = [&](double v) {
    auto f = [&](double u) {
      const long double d = (g(h, u, v) - g(-h, u, v)) / (2.0L * h);
      const long double val = functional == LevinsonFunctional::printed ? d : d * d;
      return static_cast<double>(std::exp(2.0L * r * static_cast<long double>(v)) * val);
    };
    if (used >= kBudget) throw AccuracyError("quadrature exceeded 10^6 evaluations");
    const auto res = integrate(f, 0.0, 1.0, 0.25 * tol * params.theta, 0.25 * tol, kBudget - used);
    used += res.evaluations;
    return res.value;
  };
  const auto outer = integrate(integrand_u, 0.0, 1.0, 0.5 * tol * params.theta, 0.5 * tol, kBudget);
  used += outer.evaluations;
  if (used > kBudget) throw AccuracyError("quadrature exceeded 10^6 evaluations");
  return 1.0 + outer.value / params.theta;
}

double kappa_lower_bound(double c_value, double r_shift) {
  if (!(r_shift > 0.0)) throw DomainError("R > 0 required");
  if (!(c_value >= 1.0)) throw DomainError("c >= 1 required for the kappa bound");
  return 1.0 - std::log(c_value) / r_shift;
}

void ShiftedParams::validate() const {
  if (!(t_scale > 1.0)) throw ConstraintError("T>1 violated");
  if (!(m_length > 1.0)) throw ConstraintError("M>1 violated");
  const double cap = 10.0 / std::log(t_scale) * (1.0 + 1e-12);
  if (std::abs(alpha) > cap) throw ConstraintError("|alpha|<=10/log T violated");
  if (std::abs(beta) > cap) throw ConstraintError("|beta|<=10/log T violated");
}

Complex shifted_c(const ShiftedParams& shift, const Polynomial& p_poly, double theta) {
  shift.validate();
  if (!(theta > 0.0 && theta < 1.0)) throw ConstraintError("0<theta<1 violated");
  // d/dx d/dy of M^{-beta x - alpha y} P(x+u) P(y+u) at 0 is
  // (P' - beta log M P)(P' - alpha log M P).
  const Polynomial dp = p_poly.derivative();
  const double lm = std::log(shift.m_length);
  const Complex a = shift.alpha, b = shift.beta;
  const Complex u_part = a * b * lm * lm * unit_inner(p_poly, p_poly) -
                         (a + b) * lm * unit_inner(p_poly, dp) + unit_inner(dp, dp);
  const Complex v_part = exp_moments(-(a + b) * std::log(shift.t_scale), 0)[0];
  return 1.0 + v_part * u_part / theta;
}

double shifted_c_q_operator(const Polynomial& p_poly, const Polynomial& q_poly, double r_shift,
                            double theta, double t_scale) {
  const double l = std::log(t_scale);
  const double h = 0.2 / l;
  const double m = std::pow(t_scale, theta);
  const double base = -r_shift / l;
  // Q(-(1/L) d/da) as a linear combination of derivatives; derivatives up to
  // order 4 from the 5-point stencil (exact for the polynomial-in-shift part
  // of low degree, O(h^2) otherwise).
  static constexpr double kStencil[5][5] = {
      {0, 0, 1, 0, 0},
      {1.0 / 12, -8.0 / 12, 0, 8.0 / 12, -1.0 / 12},
      {-1.0 / 12, 16.0 / 12, -30.0 / 12, 16.0 / 12, -1.0 / 12},
      {-0.5, 1.0, 0, -1.0, 0.5},
      {1, -4, 6, -4, 1}};
  if (q_poly.degree() > 4) throw DomainError("deg Q <= 4 required for the 5-point stencil");
  double weights[5] = {0, 0, 0, 0, 0};
  double scale = 1.0;
  for (int j = 0; j <= q_poly.degree(); ++j) {
    const double hj = std::pow(h, j);
    for (int k = 0; k < 5; ++k) weights[k] += q_poly.coefficient(j) * scale * kStencil[j][k] / hj;
    scale *= -1.0 / l;
  }
  double total = 0.0;
  for (int i = 0; i < 5; ++i) {
    for (int k = 0; k < 5; ++k) {
      if (weights[i] == 0.0 || weights[k] == 0.0) continue;
      const ShiftedParams sp{base + (i - 2) * h, base + (k - 2) * h, m, t_scale};
      total += weights[i] * weights[k] * shifted_c(sp, p_poly, theta).real();
    }
  }
  return total;
}

Polynomial RegisteredPolynomial::expanded() const {
  Polynomial out;
  for (const auto& t : terms) {
    double c = 1.0;
    if (t.coefficient == "-") c = -1.0;
    else if (!t.coefficient.empty() && t.coefficient != "+") c = std::stod(t.coefficient);
    out = out + t.basis_poly * c;
  }
  return out;
}

std::string RegisteredPolynomial::render() const {
  std::string s;
  for (const auto& t : terms) s += t.coefficient + t.basis;
  return s;
}

std::string RegisteredPolynomial::provenance() const { return symbol + "(x)=" + quoted; }

LevinsonParams PublishedTuple::levinson_params() const {
  LevinsonParams lp;
  lp.p_poly = p1.expanded();
  lp.q_poly = q.expanded();
  lp.r_shift = r_shift;
  lp.theta = std::min(theta_nominal, 0.5);
  return lp;
}

std::vector<PublishedTuple> published_tuples() {
  const Polynomial one = term_poly({1});
  const Polynomial x = term_poly({0, 1});
  const Polynomial x2 = term_poly({0, 0, 1});
  const Polynomial x3 = term_poly({0, 0, 0, 1});
  const Polynomial x1mx = term_poly({0, 1, -1});
  const Polynomial x21mx = term_poly({0, 0, 1, -1});
  const Polynomial x31mx = term_poly({0, 0, 0, 1, -1});

  std::vector<PublishedTuple> out;

  PublishedTuple lev;
  lev.name = "levinson_baseline";
  lev.source = "Levinson (1974), via Young's simplified proof";
  lev.q = {"Q", {{"", "1", one}, {"-", "x", x}}, "1-x"};
  lev.p1 = {"P", {{"", "x", x}}, "x"};
  lev.r_shift = 1.3;
  lev.theta_text = "0.5";
  lev.theta_nominal = 0.5;
  lev.claim_label = "kappa";
  lev.claimed_kappa = 0.35;
  lev.claimed_c = 2.35;
  out.push_back(lev);

  PublishedTuple wu;
  wu.name = "wu_kappa";
  wu.source = "Wu (2018), Dirichlet L-functions, all zeros on the line";
  wu.q = {"Q",
          {{"", "1", one},
           {"-0.642", "x", x},
           {"-1.227", "(x^2/2-x^3/3)", term_poly({0, 0, 0.5, -1.0 / 3})},
           {"-5.178", "(x^3/3-x^4/2+x^5/5)", term_poly({0, 0, 0, 1.0 / 3, -0.5, 0.2})}},
          "1-0.642x-1.227(x^2/2-x^3/3)-5.178(x^3/3-x^4/2+x^5/5)"};
  wu.p1 = {"P_1",
           {{"", "x", x}, {"-0.617", "x(1-x)", x1mx}, {"-0.125", "x^2(1-x)", x21mx},
            {"-0.148", "x^3(1-x)", x31mx}},
           "x-0.617x(1-x)-0.125x^2(1-x)-0.148x^3(1-x)"};
  wu.extra = {{"P_2", {{"", "x", x}}, "x"},
              {"P", {{"1.55", "x", x}, {"-1.564", "x^2", x2}, {"+0.177", "x^3", x3}},
               "1.55x-1.564x^2+0.177x^3"}};
  wu.r_shift = 1.3;
  wu.theta_text = "4/7-\\epsilon";
  wu.theta_nominal = 4.0 / 7.0;
  wu.claim_label = "kappa(chi)";
  wu.claimed_kappa = 0.4172;
  wu.not_reproducible_here = true;
  out.push_back(wu);

  PublishedTuple wus = wu;
  wus.name = "wu_kappa_star";
  wus.source = "Wu (2018), Dirichlet L-functions, simple zeros on the line";
  wus.q = {"Q", {{"", "1", one}, {"-1.032", "x", x}}, "1-1.032x"};
  wus.p1 = {"P_1",
            {{"", "x", x}, {"-0.525", "x(1-x)", x1mx}, {"-0.183", "x^2(1-x)", x21mx},
             {"-0.085", "x^3(1-x)", x31mx}},
            "x-0.525x(1-x)-0.183x^2(1-x)-0.085x^3(1-x)"};
  wus.extra = {{"P_2", {{"", "x", x}}, "x"},
               {"P", {{"0.838", "x", x}, {"-0.938", "x^2", x2}, {"-0.084", "x^3", x3}},
                "0.838x-0.938x^2-0.084x^3"}};
  wus.r_shift = 1.116;
  wus.claim_label = "kappa*(chi)";
  wus.claimed_kappa = 0.4074;
  out.push_back(wus);
  return out;
}

ConstantReport constant_report(const LevinsonParams& params, double tol,
                               LevinsonFunctional functional) {
  ConstantReport rep;
  rep.params = params;
  rep.functional = functional;
  rep.c_exact = c_constant_exact(params, functional);
  rep.c_quadrature = c_constant_quadrature(params, tol, functional);
  rep.kappa_bound = kappa_lower_bound(rep.c_exact, params.r_shift);
  rep.c_squared = c_constant_exact(params, LevinsonFunctional::squared);
  rep.kappa_squared = kappa_lower_bound(rep.c_squared, params.r_shift);
  if (params == LevinsonParams::baseline()) {
    rep.has_claim = true;
    rep.deviation = rep.c_exact - rep.claim.c;
    rep.published_discrepancy = std::abs(rep.deviation) > 0.12;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "printed claim c=2.35, kappa>=0.35; computed c=%.6f, kappa=%.6f (%s form). "
                  "The squared integrand gives c=%.6f, kappa=%.6f.",
                  rep.c_exact, rep.kappa_bound, functional_name(functional), rep.c_squared,
                  rep.kappa_squared);
    rep.note = buf;
  }
  return rep;
}

}  // namespace clt
