#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "clt/levinson.hpp"

namespace clt {

/// Free coordinates are (p_2..p_d, a_0, a_1.., R). The constraints hold by
/// construction: p_1 = 1 - sum_{k>=2} p_k, and Q(0) = 1 with
/// Q'(x) = a_0 + sum_{j>=1} a_j (x(1-x))^j, the symmetric family that
/// contains 1 - x and Wu's Q. a_0 is fixed at -1 for deg Q = 1, so the
/// degree-(1,1) space is Levinson's (x, 1 - x) with R alone free.
/// R enters as r_min + (r_max - r_min)(1 + sin z)/2.
struct SearchSpace {
  int p_degree = 1;
  int q_degree = 1;
  double r_min = 1.3;
  double r_max = 1.3;
  double theta = 0.5;
  int restarts = 1;
  std::uint64_t seed = 0;
  LevinsonFunctional functional = LevinsonFunctional::printed;
  std::size_t max_evaluations_per_restart = 20000;

  /// Throws ConfigError.
  void validate() const;
  int dimension() const;
};

struct RestartRecord {
  int seed_index = 0;
  double kappa = 0.0;
  bool operator==(const RestartRecord&) const = default;
};

struct OptimizationReport {
  LevinsonParams best_params;
  double best_kappa = 0.0;
  double best_c = 0.0;
  std::size_t evaluations = 0;
  std::vector<RestartRecord> restart_trace;
  LevinsonFunctional functional = LevinsonFunctional::printed;

  bool operator==(const OptimizationReport&) const = default;
};

/// Nelder-Mead on -kappa (reflection 1, expansion 2, contraction 1/2,
/// shrink 1/2, stop at simplex diameter 1e-8). Restart 0 starts from
/// Levinson's baseline; the others from mt19937_64 draws. Restarts run on
/// `threads` workers and the best kappa wins, ties to the lowest index.
OptimizationReport optimize_kappa(const SearchSpace& space, unsigned threads = 1);

/// (R, kappa) pairs sorted by R.
std::vector<std::pair<double, double>> grid_scan_r(
    const Polynomial& p_poly, const Polynomial& q_poly, double theta, std::vector<double> r_grid,
    LevinsonFunctional functional = LevinsonFunctional::printed);

}  // namespace clt
