#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <queue>
#include <utility>
#include <vector>

#include "clt/error.hpp"

namespace clt {

template <class Value>
struct QuadResult {
  Value value{};
  double error = 0.0;
  std::size_t evaluations = 0;
};

namespace detail {

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1].
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class Value>
double magnitude(const Value& v) {
  using std::abs;
  return abs(v);
}

template <class F, class Value>
std::pair<Value, double> gk15(F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const Value fc = f(c);
  Value resk = fc * kWgk[7];
  Value resg = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const Value f1 = f(c - dx);
    const Value f2 = f(c + dx);
    resk += (f1 + f2) * kWgk[j];
    if (j % 2 == 1) resg += (f1 + f2) * kWg[j / 2];
  }
  resk *= h;
  resg *= h;
  return {resk, magnitude(resk - resg)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) quadrature of f over [a, b].
/// Stops once the summed error estimate falls below
/// max(abs_tol, rel_tol * |I|); throws AccuracyError after `max_evals`.
template <class F>
auto integrate(F f, double a, double b, double abs_tol, double rel_tol = 0.0,
               std::size_t max_evals = 1'000'000) {
  using Value = std::decay_t<decltype(f(a))>;
  struct Piece {
    double a, b;
    Value value;
    double error;
    bool operator<(const Piece& o) const { return error < o.error; }
  };
  QuadResult<Value> out;
  if (a == b) return out;
  std::priority_queue<Piece> heap;
  auto [v0, e0] = detail::gk15<F, Value>(f, a, b);
  out.evaluations = 15;
  heap.push({a, b, v0, e0});
  Value total = v0;
  double err = e0;
  while (err > std::max(abs_tol, rel_tol * detail::magnitude(total))) {
    if (out.evaluations + 30 > max_evals) {
      throw AccuracyError("adaptive quadrature did not converge within the evaluation budget");
    }
    Piece worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    auto [vl, el] = detail::gk15<F, Value>(f, worst.a, mid);
    auto [vr, er] = detail::gk15<F, Value>(f, mid, worst.b);
    out.evaluations += 30;
    heap.push({worst.a, mid, vl, el});
    heap.push({mid, worst.b, vr, er});
    total += (vl + vr) - worst.value;
    err += (el + er) - worst.error;
    if (mid <= worst.a || mid >= worst.b) break;
  }
  // Final re-sum from the pieces so incremental drift never reaches the caller.
  total = Value{};
  err = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  out.value = total;
  out.error = err;
  return out;
}

/// n-point Gauss-Legendre rule on [-1, 1] (Newton on P_n).
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

inline GaussLegendreRule gauss_legendre(int n) {
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  constexpr double pi = 3.141592653589793238462643383279502884;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

}  // namespace clt
