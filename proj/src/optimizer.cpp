#include "clt/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "clt/error.hpp"
#include "clt/parallel.hpp"

namespace clt {

namespace {

constexpr double kInfeasible = std::numeric_limits<double>::infinity();

// uniform on [0, 1) from the top 53 bits, identical on every platform
double unit_draw(std::mt19937_64& eng) { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }

class Embedding {
 public:
  explicit Embedding(const SearchSpace& s) : s_(s) {}

  bool r_free() const { return s_.r_max > s_.r_min; }
  // Q'(x) = a_0 + sum_{j>=1} a_j (x(1-x))^j, a_0 = -1 unless deg Q >= 2
  int q_free() const { return (s_.q_degree >= 2 ? 1 : 0) + (s_.q_degree - 1) / 2; }
  int dim() const { return (s_.p_degree - 1) + q_free() + (r_free() ? 1 : 0); }

  Polynomial q_basis(int j) const {
    Polynomial w{1.0};
    for (int k = 0; k < j; ++k) w = w * Polynomial{0.0, 1.0, -1.0};
    std::vector<double> c(w.coefficients().size() + 1, 0.0);
    for (std::size_t k = 0; k < w.coefficients().size(); ++k) c[k + 1] = w.coefficients()[k] / (k + 1.0);
    return Polynomial(std::move(c));
  }

  LevinsonParams decode(const std::vector<double>& z) const {
    std::vector<double> p(static_cast<std::size_t>(s_.p_degree) + 1, 0.0);
    std::size_t i = 0;
    double ps = 0.0;
    for (int k = 2; k <= s_.p_degree; ++k) ps += (p[k] = z[i++]);
    p[1] = 1.0 - ps;
    const double a0 = s_.q_degree >= 2 ? z[i++] : -1.0;
    Polynomial q{1.0, a0};
    for (int j = 1; 2 * j + 1 <= s_.q_degree; ++j) q = q + q_basis(j) * z[i++];
    LevinsonParams lp;
    lp.p_poly = Polynomial(std::move(p));
    lp.q_poly = std::move(q);
    lp.r_shift = r_free() ? s_.r_min + (s_.r_max - s_.r_min) * 0.5 * (1.0 + std::sin(z[i])) : s_.r_min;
    lp.theta = s_.theta;
    return lp;
  }

  // exact for the baseline, the only point ever embedded
  std::vector<double> encode(const LevinsonParams& lp) const {
    std::vector<double> z;
    for (int k = 2; k <= s_.p_degree; ++k) z.push_back(lp.p_poly.coefficient(k));
    if (s_.q_degree >= 2) z.push_back(lp.q_poly.coefficient(1));
    for (int j = 1; 2 * j + 1 <= s_.q_degree; ++j) z.push_back(0.0);
    if (r_free()) {
      const double r = std::clamp(lp.r_shift, s_.r_min, s_.r_max);
      z.push_back(std::asin(std::clamp(2.0 * (r - s_.r_min) / (s_.r_max - s_.r_min) - 1.0, -1.0, 1.0)));
    }
    return z;
  }

  double objective(const std::vector<double>& z) const {
    const LevinsonParams lp = decode(z);
    const double c = c_constant_exact(lp, s_.functional);
    if (!std::isfinite(c) || c < 1.0) return kInfeasible;
    return -kappa_lower_bound(c, lp.r_shift);
  }

 private:
  const SearchSpace& s_;
};

struct Descent {
  std::vector<double> best;
  double value = kInfeasible;
  std::size_t evaluations = 0;
};

Descent nelder_mead(const Embedding& emb, std::vector<double> start, std::size_t budget) {
  const std::size_t n = start.size();
  Descent out;
  auto f = [&](const std::vector<double>& z) {
    ++out.evaluations;
    return emb.objective(z);
  };
  if (n == 0) {
    out.value = f(start);
    out.best = std::move(start);
    return out;
  }
  std::vector<std::vector<double>> x(n + 1, start);
  std::vector<double> fx(n + 1);
  for (std::size_t i = 0; i < n; ++i) x[i + 1][i] += start[i] == 0.0 ? 0.1 : 0.1 * std::max(1.0, std::abs(start[i]));
  for (std::size_t i = 0; i <= n; ++i) fx[i] = f(x[i]);
  std::vector<std::size_t> order(n + 1);
  auto point = [&](const std::vector<double>& c, const std::vector<double>& w, double t) {
    std::vector<double> r(n);
    for (std::size_t k = 0; k < n; ++k) r[k] = c[k] + t * (w[k] - c[k]);
    return r;
  };
  while (out.evaluations < budget) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fx[a] < fx[b]; });
    std::vector<std::vector<double>> xs(n + 1);
    std::vector<double> fs(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      xs[i] = std::move(x[order[i]]);
      fs[i] = fx[order[i]];
    }
    x = std::move(xs);
    fx = std::move(fs);
    double diameter = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
      double d = 0.0;
      for (std::size_t k = 0; k < n; ++k) d = std::max(d, std::abs(x[i][k] - x[0][k]));
      diameter = std::max(diameter, d);
    }
    if (diameter < 1e-8) break;
    std::vector<double> c(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) c[k] += x[i][k] / static_cast<double>(n);
    }
    const auto xr = point(c, x[n], -1.0);
    const double fr = f(xr);
    if (fr < fx[0]) {
      const auto xe = point(c, x[n], -2.0);
      const double fe = f(xe);
      if (fe < fr) {
        x[n] = xe;
        fx[n] = fe;
      } else {
        x[n] = xr;
        fx[n] = fr;
      }
      continue;
    }
    if (fr < fx[n - 1]) {
      x[n] = xr;
      fx[n] = fr;
      continue;
    }
    const bool outside = fr < fx[n];
    const auto xc = outside ? point(c, xr, 0.5) : point(c, x[n], 0.5);
    const double fc = f(xc);
    if (outside ? fc <= fr : fc < fx[n]) {
      x[n] = xc;
      fx[n] = fc;
      continue;
    }
    for (std::size_t i = 1; i <= n; ++i) {
      x[i] = point(x[0], x[i], 0.5);
      fx[i] = f(x[i]);
    }
  }
  const auto best = std::min_element(fx.begin(), fx.end()) - fx.begin();
  out.best = x[static_cast<std::size_t>(best)];
  out.value = fx[static_cast<std::size_t>(best)];
  return out;
}

}  // namespace

void SearchSpace::validate() const {
  if (p_degree < 1 || p_degree > 6) throw ConfigError("p_degree must lie in [1, 6]");
  if (q_degree < 1 || q_degree > 6) throw ConfigError("q_degree must lie in [1, 6]");
  if (!(r_min > 0.0) || !(r_max >= r_min) || !std::isfinite(r_max)) {
    throw ConfigError("degenerate R range: need 0 < r_min <= r_max");
  }
  if (!(theta > 0.0 && theta <= 0.5)) throw ConfigError("theta must lie in (0, 1/2]");
  if (restarts < 1 || restarts > 64) throw ConfigError("restarts must lie in [1, 64]");
  if (max_evaluations_per_restart < 1) throw ConfigError("evaluation budget must be positive");
}

int SearchSpace::dimension() const { return Embedding(*this).dim(); }

OptimizationReport optimize_kappa(const SearchSpace& space, unsigned threads) {
  space.validate();
  const Embedding emb(space);
  const std::size_t dim = static_cast<std::size_t>(emb.dim());

  std::vector<std::vector<double>> starts;
  LevinsonParams base = LevinsonParams::baseline();
  base.theta = space.theta;
  starts.push_back(emb.encode(base));
  std::mt19937_64 eng(space.seed);
  while (starts.size() < static_cast<std::size_t>(space.restarts)) {
    std::vector<double> z(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      const bool is_r = emb.r_free() && k + 1 == dim;
      z[k] = is_r ? (unit_draw(eng) - 0.5) * std::acos(-1.0) : 2.0 * unit_draw(eng) - 1.0;
    }
    starts.push_back(std::move(z));
  }

  std::vector<Descent> results(starts.size());
  parallel_for(starts.size(), threads, [&](std::size_t i) {
    results[i] = nelder_mead(emb, starts[i], space.max_evaluations_per_restart);
  });

  OptimizationReport rep;
  rep.functional = space.functional;
  std::size_t best = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    rep.evaluations += results[i].evaluations;
    rep.restart_trace.push_back({static_cast<int>(i), -results[i].value});
    if (results[i].value < results[best].value) best = i;
  }
  if (!std::isfinite(results[best].value)) throw AccuracyError("no feasible point with c >= 1 found");
  rep.best_params = emb.decode(results[best].best);
  rep.best_c = c_constant_exact(rep.best_params, space.functional);
  rep.best_kappa = kappa_lower_bound(rep.best_c, rep.best_params.r_shift);
  return rep;
}

std::vector<std::pair<double, double>> grid_scan_r(const Polynomial& p_poly,
                                                   const Polynomial& q_poly, double theta,
                                                   std::vector<double> r_grid,
                                                   LevinsonFunctional functional) {
  if (r_grid.empty()) throw DomainError("R grid must be nonempty");
  std::sort(r_grid.begin(), r_grid.end());
  std::vector<std::pair<double, double>> out;
  out.reserve(r_grid.size());
  for (double r : r_grid) {
    if (!(r > 0.0)) throw DomainError("R grid must be positive");
    const LevinsonParams lp{p_poly, q_poly, r, theta};
    out.emplace_back(r, kappa_lower_bound(c_constant_exact(lp, functional), r));
  }
  return out;
}

}  // namespace clt
