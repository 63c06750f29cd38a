#include "clt/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "clt/arithmetic.hpp"
#include "clt/error.hpp"
#include "clt/zeta.hpp"

namespace clt {
namespace {

constexpr std::uint32_t kNotUnit = std::numeric_limits<std::uint32_t>::max();
constexpr std::uint64_t kMaxModulus = 1'000'000;

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

// One cyclic factor of (Z/q)^*, living on residues mod a prime power.
struct CyclicFactor {
  std::uint64_t modulus;
  std::uint64_t order;
  std::vector<std::uint32_t> log;  // discrete log of a mod `modulus`
  std::uint64_t generator_mod_q;   // residue mod q with log 1 here, 0 elsewhere
};

struct GroupStructure {
  std::uint64_t q = 1;
  std::vector<CyclicFactor> factors;
  std::uint64_t exponent_lcm = 1;  // lcm of the factor orders

  std::size_t size() const {
    std::size_t n = 1;
    for (const auto& f : factors) n *= f.order;
    return n;
  }
};

std::uint64_t primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  const auto fac = default_sieve().factorize(p - 1);
  for (std::uint64_t g = 2;; ++g) {
    bool ok = true;
    for (const auto& [r, e] : fac) {
      if (pow_mod(g, (p - 1) / r, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
}

// Residue mod q congruent to g mod m and to 1 mod q/m (gcd(m, q/m) = 1).
std::uint64_t lift(std::uint64_t g, std::uint64_t m, std::uint64_t q) {
  const std::uint64_t rest = q / m;
  for (std::uint64_t x = g % m; x < q; x += m) {
    if (x % rest == 1 % rest) return x;
  }
  throw DomainError("CRT lift failed");
}

GroupStructure build_structure(std::uint64_t q) {
  if (q < 1 || q > kMaxModulus) {
    throw DomainError("character modulus must lie in [1, " + std::to_string(kMaxModulus) + "]");
  }
  GroupStructure gs;
  gs.q = q;
  if (q == 1) return gs;
  for (const auto& [p, e] : default_sieve().factorize(q)) {
    std::uint64_t m = 1;
    for (int i = 0; i < e; ++i) m *= p;
    if (p == 2) {
      if (e == 1) continue;
      CyclicFactor sign{m, 2, std::vector<std::uint32_t>(m, kNotUnit), 0};
      for (std::uint64_t a = 1; a < m; a += 2) sign.log[a] = (a % 4 == 3) ? 1 : 0;
      sign.generator_mod_q = lift(m - 1, m, q);
      gs.factors.push_back(std::move(sign));
      if (e >= 3) {
        CyclicFactor five{m, m / 4, std::vector<std::uint32_t>(m, kNotUnit), 0};
        std::uint64_t v = 1;
        for (std::uint64_t k = 0; k < m / 4; ++k) {
          five.log[v] = static_cast<std::uint32_t>(k);
          five.log[m - v] = static_cast<std::uint32_t>(k);
          v = v * 5 % m;
        }
        five.generator_mod_q = lift(5, m, q);
        gs.factors.push_back(std::move(five));
      }
      continue;
    }
    std::uint64_t g = primitive_root(p);
    if (e >= 2 && pow_mod(g, p - 1, p * p) == 1) g += p;
    const std::uint64_t order = m / p * (p - 1);
    CyclicFactor f{m, order, std::vector<std::uint32_t>(m, kNotUnit), 0};
    std::uint64_t v = 1;
    for (std::uint64_t k = 0; k < order; ++k) {
      f.log[v] = static_cast<std::uint32_t>(k);
      v = v * g % m;
    }
    f.generator_mod_q = lift(g, m, q);
    gs.factors.push_back(std::move(f));
  }
  for (const auto& f : gs.factors) gs.exponent_lcm = std::lcm(gs.exponent_lcm, f.order);
  return gs;
}

std::vector<std::uint64_t> exponents_of(const GroupStructure& gs, std::size_t index) {
  std::vector<std::uint64_t> ex(gs.factors.size());
  for (std::size_t i = 0; i < gs.factors.size(); ++i) {
    ex[i] = index % gs.factors[i].order;
    index /= gs.factors[i].order;
  }
  return ex;
}

std::size_t index_of(const GroupStructure& gs, const std::vector<std::uint64_t>& ex) {
  std::size_t index = 0;
  for (std::size_t i = gs.factors.size(); i-- > 0;) index = index * gs.factors[i].order + ex[i];
  return index;
}

std::vector<std::uint64_t> orders_of(const GroupStructure& gs) {
  std::vector<std::uint64_t> o;
  for (const auto& f : gs.factors) o.push_back(f.order);
  return o;
}

DirichletCharacter make_character(const GroupStructure& gs, std::size_t index) {
  const std::uint64_t q = gs.q;
  const auto ex = exponents_of(gs, index);
  std::vector<Complex> values(q, Complex(0.0, 0.0));
  if (q == 1) {
    values[0] = 1.0;
    return DirichletCharacter(1, std::move(values), 0, {}, {});
  }
  const std::uint64_t big_l = gs.exponent_lcm;
  for (std::uint64_t a = 1; a < q; ++a) {
    if (std::gcd(a, q) != 1) continue;
    std::uint64_t num = 0;
    for (std::size_t i = 0; i < gs.factors.size(); ++i) {
      const auto& f = gs.factors[i];
      const std::uint64_t lg = f.log[a % f.modulus];
      num = (num + (ex[i] * lg % f.order) * (big_l / f.order)) % big_l;
    }
    values[a] = additive_character(static_cast<double>(num) / static_cast<double>(big_l));
  }
  return DirichletCharacter(q, std::move(values), index, ex, orders_of(gs));
}

// Recover the index of a character mod q from its value table.
std::size_t label(const GroupStructure& gs, const std::vector<Complex>& values) {
  std::vector<std::uint64_t> ex(gs.factors.size());
  for (std::size_t i = 0; i < gs.factors.size(); ++i) {
    const auto& f = gs.factors[i];
    const Complex v = values[f.generator_mod_q];
    double turns = std::arg(v) / (2.0 * kPi);
    if (turns < 0) turns += 1.0;
    ex[i] = static_cast<std::uint64_t>(std::llround(turns * static_cast<double>(f.order))) % f.order;
  }
  return index_of(gs, ex);
}

std::vector<std::uint64_t> divisors(std::uint64_t q) {
  std::vector<std::uint64_t> d;
  for (std::uint64_t k = 1; k * k <= q; ++k) {
    if (q % k == 0) {
      d.push_back(k);
      if (k * k != q) d.push_back(q / k);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

std::uint64_t least_quasiperiod(std::uint64_t q, const std::vector<Complex>& values) {
  for (const std::uint64_t d : divisors(q)) {
    bool ok = true;
    for (std::uint64_t a = 1; a <= q && ok; a += d) {
      if (std::gcd(a, q) != 1) continue;
      if (std::abs(values[a % q] - 1.0) > 1e-9) ok = false;
    }
    if (ok) return d;
  }
  return q;
}

// (e^z - 1)/z
Complex phi1(Complex z) {
  if (std::abs(z) < 0.5) {
    Complex term = 1.0, sum = 1.0;
    for (int k = 2; k < 40; ++k) {
      term *= z / static_cast<double>(k);
      sum += term;
      if (std::abs(term) < 1e-18) break;
    }
    return sum;
  }
  return (std::exp(z) - 1.0) / z;
}

}  // namespace

DirichletCharacter::DirichletCharacter(std::uint64_t modulus, std::vector<Complex> values,
                                       std::size_t index, std::vector<std::uint64_t> exponents,
                                       std::vector<std::uint64_t> orders)
    : modulus_(modulus),
      values_(std::move(values)),
      index_(index),
      exponents_(std::move(exponents)),
      orders_(std::move(orders)) {
  if (values_.size() != modulus_) throw DomainError("character table length must equal modulus");
  parity_ = (modulus_ <= 2 || values_[modulus_ - 1].real() > 0.0) ? 0 : 1;
  conductor_ = least_quasiperiod(modulus_, values_);
}

bool DirichletCharacter::is_real() const noexcept {
  return std::all_of(values_.begin(), values_.end(),
                     [](Complex v) { return std::abs(v.imag()) < 1e-12; });
}

Complex DirichletCharacter::operator()(std::int64_t n) const noexcept {
  const auto q = static_cast<std::int64_t>(modulus_);
  std::int64_t r = n % q;
  if (r < 0) r += q;
  return values_[static_cast<std::size_t>(r)];
}

DirichletCharacter DirichletCharacter::conj() const {
  std::vector<Complex> v(values_.size());
  std::transform(values_.begin(), values_.end(), v.begin(), [](Complex c) { return std::conj(c); });
  std::vector<std::uint64_t> ex(exponents_.size());
  std::size_t index = 0;
  for (std::size_t i = exponents_.size(); i-- > 0;) {
    ex[i] = (orders_[i] - exponents_[i]) % orders_[i];
    index = index * orders_[i] + ex[i];
  }
  return DirichletCharacter(modulus_, std::move(v), index, std::move(ex), orders_);
}

DirichletCharacter DirichletCharacter::primitive_inducing() const {
  if (is_primitive()) return *this;
  const std::uint64_t d = conductor_;
  std::vector<Complex> v(d, Complex(0.0, 0.0));
  if (d == 1) {
    v[0] = 1.0;
    return DirichletCharacter(1, std::move(v), 0, {}, {});
  }
  for (std::uint64_t r = 1; r < d; ++r) {
    if (std::gcd(r, d) != 1) continue;
    std::uint64_t b = r;
    while (std::gcd(b, modulus_) != 1) b += d;
    v[r] = values_[b % modulus_];
  }
  const GroupStructure gs = build_structure(d);
  const std::size_t idx = label(gs, v);
  return make_character(gs, idx);
}

std::size_t character_count(std::uint64_t q) { return build_structure(q).size(); }

DirichletCharacter dirichlet_character(std::uint64_t q, std::size_t index) {
  const GroupStructure gs = build_structure(q);
  if (index >= gs.size()) throw RangeError("character index out of range for modulus " + std::to_string(q));
  return make_character(gs, index);
}

std::vector<DirichletCharacter> enumerate_characters(std::uint64_t q) {
  const GroupStructure gs = build_structure(q);
  std::vector<DirichletCharacter> out;
  out.reserve(gs.size());
  for (std::size_t i = 0; i < gs.size(); ++i) out.push_back(make_character(gs, i));
  return out;
}

std::uint64_t conductor(const DirichletCharacter& chi) { return chi.conductor(); }

Complex gauss_sum(const DirichletCharacter& chi) {
  const std::uint64_t q = chi.modulus();
  Complex acc = 0.0;
  for (std::uint64_t a = 1; a <= q; ++a) {
    acc += chi(static_cast<std::int64_t>(a)) *
           additive_character(static_cast<double>(a % q) / static_cast<double>(q));
  }
  return acc;
}

Complex epsilon_factor(const DirichletCharacter& chi) {
  if (!chi.is_primitive()) throw DomainError("epsilon factor is defined for primitive characters");
  const Complex i_kappa = chi.parity() == 0 ? Complex(1.0, 0.0) : Complex(0.0, 1.0);
  return gauss_sum(chi) / (i_kappa * std::sqrt(static_cast<double>(chi.modulus())));
}

namespace {

template <class Coefficient>
Complex theta_sum(Complex z, const DirichletCharacter& chi, Coefficient coefficient) {
  if (!(z.real() > 0.0)) throw DomainError("theta series needs Re(z) > 0");
  if (!chi.is_primitive()) throw DomainError("theta series is defined for primitive characters");
  const double q = static_cast<double>(chi.modulus());
  const int kappa = chi.parity();
  Complex acc = coefficient(0) * (kappa == 0 ? 1.0 : 0.0);
  for (std::int64_t n = 1; n < 10'000'000; ++n) {
    const double nd = static_cast<double>(n);
    const Complex decay = std::exp(-kPi * nd * nd * z / q);
    const double nk = kappa == 0 ? 1.0 : nd;
    const Complex term = nk * decay * (coefficient(n) + (kappa == 0 ? 1.0 : -1.0) * coefficient(-n));
    acc += term;
    const double bound = nk * std::abs(decay);
    if (kPi * nd * nd * z.real() / q > 1.0 && bound < 1e-17 * std::max(1.0, std::abs(acc))) break;
  }
  return acc;
}

}  // namespace

Complex theta_nu_literal(Complex z, const DirichletCharacter& chi) {
  return theta_sum(z, chi, [](std::int64_t) { return Complex(1.0, 0.0); });
}

Complex theta_nu(Complex z, const DirichletCharacter& chi) {
  return theta_sum(z, chi, [&](std::int64_t n) { return chi(n); });
}

Complex xi_completed_l(Complex s, const DirichletCharacter& chi) {
  if (chi.is_principal() || !chi.is_primitive()) {
    throw DomainError("xi(s, chi) continuation needs a primitive non-principal character");
  }
  const double q = static_cast<double>(chi.modulus());
  const double kappa = chi.parity();
  const double log_q_pi = std::log(q / kPi);
  const Complex a = 0.5 * (s + kappa);
  const Complex b = 0.5 * (1.0 - s + kappa);
  Complex first = 0.0, second = 0.0;
  for (std::int64_t n = 1; n < 100000; ++n) {
    const double nd = static_cast<double>(n);
    const double x = kPi * nd * nd / q;
    const double ln = std::log(nd);
    const Complex cn = chi(n);
    Complex t1 = 0.0, t2 = 0.0;
    if (cn != 0.0) {
      t1 = cn * std::exp(-s * ln) * upper_incomplete_gamma(a, x);
      t2 = std::conj(cn) * std::exp((s - 1.0) * ln) * upper_incomplete_gamma(b, x);
      first += t1;
      second += t2;
    }
    if (x > std::abs(s) + 2.0 && cn != 0.0 &&
        std::abs(t1) + std::abs(t2) < 1e-18 * std::max(1.0, std::abs(first) + std::abs(second))) {
      break;
    }
  }
  return std::exp(a * log_q_pi) * first + epsilon_factor(chi) * std::exp(b * log_q_pi) * second;
}

Complex l_function_series(Complex s, const DirichletCharacter& chi) {
  const std::uint64_t q = chi.modulus();
  if (q == 1) return zeta(s);
  const bool principal = chi.is_principal();
  if (principal && s == Complex(1.0, 0.0)) throw PoleError("L(s, chi_0) has a pole at s = 1");
  if (s.real() <= -20.0) throw DomainError("l_function_series requires Re s > -20");
  constexpr int kTerms = 16;
  const int big_n = std::max(24, static_cast<int>(std::ceil(0.6 * (std::abs(s) + 2.0 * kTerms))));
  const double qd = static_cast<double>(q);

  Complex head = 0.0;
  const std::uint64_t top = q * static_cast<std::uint64_t>(big_n);
  for (std::uint64_t n = 1; n <= top; ++n) {
    const Complex c = chi(static_cast<std::int64_t>(n));
    if (c == 0.0) continue;
    head += c * std::exp(-s * std::log(static_cast<double>(n)));
  }

  const Complex q_pow = std::exp(-s * std::log(qd));
  const double nd = static_cast<double>(big_n);
  const Complex n_pow_1ms = std::exp((1.0 - s) * std::log(nd));
  Complex tail = 0.0;
  for (std::uint64_t a = 1; a <= q; ++a) {
    const Complex c = chi(static_cast<std::int64_t>(a));
    if (c == 0.0) continue;
    const double x = nd + static_cast<double>(a) / qd;
    const double lx = std::log(x);
    const Complex x_pow = std::exp(-s * lx);
    Complex piece = 0.0;
    if (principal) {
      piece += x_pow * x / (s - 1.0);
    } else {
      // sum_a chi(a) = 0 lets the pole term become N^{1-s} [(x/N)^{1-s} - 1]/(s-1).
      const double ell = std::log1p(static_cast<double>(a) / (qd * nd));
      piece += -n_pow_1ms * ell * phi1((1.0 - s) * ell);
    }
    piece += 0.5 * x_pow;
    Complex rising = s;
    double fact = 2.0;
    Complex x_scale = x_pow / x;
    for (int k = 1; k <= kTerms; ++k) {
      const Complex term = bernoulli_even(k) / fact * rising * x_scale;
      piece += term;
      if (std::abs(term) < 1e-18 * std::max(1.0, std::abs(piece))) break;
      rising *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
      fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
      x_scale /= x * x;
    }
    tail += c * piece;
  }
  return head + q_pow * tail;
}

Complex l_function(Complex s, const DirichletCharacter& chi) {
  if (chi.modulus() == 1) return zeta(s);
  if (chi.is_principal() && s == Complex(1.0, 0.0)) throw PoleError("L(s, chi_0) has a pole at s = 1");
  if (!chi.is_primitive()) {
    const DirichletCharacter prim = chi.primitive_inducing();
    Complex value = l_function(s, prim);
    for (const auto& [p, e] : default_sieve().factorize(chi.modulus())) {
      if (prim.modulus() % p == 0) continue;
      value *= 1.0 - prim(static_cast<std::int64_t>(p)) * std::exp(-s * std::log(static_cast<double>(p)));
    }
    return value;
  }
  if (s.real() > 1.0) return l_function_series(s, chi);
  const double q = static_cast<double>(chi.modulus());
  const Complex a = 0.5 * (s + static_cast<double>(chi.parity()));
  return xi_completed_l(s, chi) * reciprocal_gamma(a) * std::exp(-a * std::log(q / kPi));
}

}  // namespace clt
