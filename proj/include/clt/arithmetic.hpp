#pragma once

#include <cstdint>
#include <vector>

namespace clt {

/// Smallest-prime-factor table on [0, limit]. Immutable after construction,
/// so a single instance may be shared freely between threads.
///
/// Every query beyond `limit()` throws RangeError; nothing is ever factored
/// by trial division outside the table.
class FactorSieve {
 public:
  static constexpr std::uint32_t kDefaultLimit = 10'000'000;

  explicit FactorSieve(std::uint32_t limit = kDefaultLimit);

  std::uint32_t limit() const noexcept { return limit_; }
  std::uint32_t smallest_prime_factor(std::uint64_t n) const;
  bool is_prime(std::uint64_t n) const;

  /// Prime factorization as (prime, exponent) pairs in increasing order.
  std::vector<std::pair<std::uint32_t, int>> factorize(std::uint64_t n) const;

  int mobius(std::uint64_t n) const;
  double von_mangoldt(std::uint64_t n) const;
  std::uint64_t euler_phi(std::uint64_t n) const;

  /// psi(x) = sum_{n <= x} Lambda(n), accumulated with Neumaier summation.
  double chebyshev_psi(double x) const;

 private:
  void check(std::uint64_t n) const;

  std::uint32_t limit_;
  std::vector<std::uint32_t> spf_;
};

/// Process-wide sieve. The limit is read once from CLT_SIEVE_LIMIT when set,
/// otherwise FactorSieve::kDefaultLimit.
const FactorSieve& default_sieve();

int mobius(std::uint64_t n);
double von_mangoldt(std::uint64_t n);
double chebyshev_psi(double x);
std::uint64_t euler_phi(std::uint64_t n);

/// Neumaier (improved Kahan) accumulator.
class CompensatedSum {
 public:
  void add(double x) noexcept;
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace clt
