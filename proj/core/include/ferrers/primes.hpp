#pragma once

#include <shared_mutex>
#include <vector>

#include "ferrers/numeric.hpp"

namespace ferrers {

// One term p_alpha^beta of a factorization; alpha is a 1-based prime index
// (alpha = 1 is the prime 2), beta the exponent.
struct FactorTerm {
  u64 alpha = 0;
  u64 beta = 0;

  bool operator==(const FactorTerm&) const = default;
};

// Factorization of n >= 1 into prime-index terms, alphas strictly
// increasing. The empty term list represents n = 1.
struct Factorization {
  std::vector<FactorTerm> terms;

  bool operator==(const Factorization&) const = default;
};

// Growable Eratosthenes sieve with 1-based prime indexing (p_1 = 2).
//
// The sieved limit doubles on demand, so nth_prime / prime_index /
// factorize are total for any argument the machine can hold a sieve for;
// running out of memory is an environment failure, not a domain error.
//
// Queries take a shared lock and growth takes an exclusive lock, so any
// mix of concurrent calls returns correct results.
class PrimeTable {
 public:
  PrimeTable() = default;
  explicit PrimeTable(u64 initial_limit) { ensure_limit(initial_limit); }

  PrimeTable(const PrimeTable&) = delete;
  PrimeTable& operator=(const PrimeTable&) = delete;

  // Largest value the sieve currently covers.
  u64 limit() const;

  // Number of primes currently sieved.
  u64 size() const;

  // p_k under 1-based indexing; k >= 1.
  u64 nth_prime(u64 k);

  // Index k with nth_prime(k) == p. Throws NotPrimeError if p is
  // composite or p < 2.
  u64 prime_index(u64 p);

  // pi(x): number of primes <= x. Real x is floored; x < 2 yields 0.
  u64 prime_count(double x);

  // pi(m) for integer m.
  u64 prime_count_floor(u64 m);

  bool is_prime(u64 n);

  // Trial division over sieved primes; n >= 1. The result's alphas are
  // strictly increasing and recompose to n.
  Factorization factorize(u64 n);

  // Grow the sieve (doubling) until it covers at least min_limit.
  void ensure_limit(u64 min_limit);

 private:
  void ensure_count(u64 k);
  void grow_locked(u64 min_limit);

  mutable std::shared_mutex mutex_;
  u64 limit_ = 0;
  std::vector<u64> primes_;
};

// Process-wide table shared by the convenience functions below and by the
// diagram/bounds modules.
PrimeTable& shared_prime_table();

u64 nth_prime(u64 k);
u64 prime_index(u64 p);
u64 prime_count(double x);
Factorization factorize(u64 n);

}  // namespace ferrers
