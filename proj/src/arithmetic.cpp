#include "clt/arithmetic.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "clt/error.hpp"

namespace clt {

void CompensatedSum::add(double x) noexcept {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x)) {
    comp_ += (sum_ - t) + x;
  } else {
    comp_ += (x - t) + sum_;
  }
  sum_ = t;
}

FactorSieve::FactorSieve(std::uint32_t limit) : limit_(limit), spf_(std::size_t(limit) + 1, 0) {
  if (limit < 2) throw RangeError("sieve limit must be at least 2");
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] != 0) continue;
    spf_[i] = static_cast<std::uint32_t>(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) {
      if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
    }
  }
}

void FactorSieve::check(std::uint64_t n) const {
  if (n < 1 || n > limit_) {
    throw RangeError("argument " + std::to_string(n) + " outside sieve range [1, " +
                     std::to_string(limit_) + "]");
  }
}

std::uint32_t FactorSieve::smallest_prime_factor(std::uint64_t n) const {
  check(n);
  return n == 1 ? 1 : spf_[n];
}

bool FactorSieve::is_prime(std::uint64_t n) const {
  check(n);
  return n >= 2 && spf_[n] == n;
}

std::vector<std::pair<std::uint32_t, int>> FactorSieve::factorize(std::uint64_t n) const {
  check(n);
  std::vector<std::pair<std::uint32_t, int>> out;
  while (n > 1) {
    const std::uint32_t p = spf_[n];
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  return out;
}

int FactorSieve::mobius(std::uint64_t n) const {
  check(n);
  int sign = 1;
  while (n > 1) {
    const std::uint32_t p = spf_[n];
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  return sign;
}

double FactorSieve::von_mangoldt(std::uint64_t n) const {
  check(n);
  if (n == 1) return 0.0;
  const std::uint32_t p = spf_[n];
  while (n % p == 0) n /= p;
  return n == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

std::uint64_t FactorSieve::euler_phi(std::uint64_t n) const {
  std::uint64_t phi = n;
  for (const auto& [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

double FactorSieve::chebyshev_psi(double x) const {
  if (!(x >= 0.0)) throw DomainError("chebyshev_psi requires x >= 0");
  const auto top = static_cast<std::uint64_t>(std::floor(x));
  if (top > limit_) check(top);
  // Only prime powers contribute, so walk the primes and their powers.
  CompensatedSum acc;
  for (std::uint64_t p = 2; p <= top; ++p) {
    if (spf_[p] != p) continue;
    const double lp = std::log(static_cast<double>(p));
    for (std::uint64_t pk = p; pk <= top; pk *= p) {
      acc.add(lp);
      if (pk > top / p) break;
    }
  }
  return acc.value();
}

const FactorSieve& default_sieve() {
  static const FactorSieve sieve = [] {
    std::uint32_t limit = FactorSieve::kDefaultLimit;
    if (const char* env = std::getenv("CLT_SIEVE_LIMIT")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v >= 2 && v <= 2'000'000'000ULL) {
        limit = static_cast<std::uint32_t>(v);
      }
    }
    return FactorSieve(limit);
  }();
  return sieve;
}

int mobius(std::uint64_t n) { return default_sieve().mobius(n); }
double von_mangoldt(std::uint64_t n) { return default_sieve().von_mangoldt(n); }
double chebyshev_psi(double x) { return default_sieve().chebyshev_psi(x); }
std::uint64_t euler_phi(std::uint64_t n) { return default_sieve().euler_phi(n); }

}  // namespace clt
