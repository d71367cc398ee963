#include "ferrers/primes.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <mutex>
#include <stdexcept>

#include "ferrers/errors.hpp"

namespace ferrers {

namespace {

constexpr u64 kMinLimit = 64;

// Upper bound on p_k (Rosser-style) used to size the sieve before an
// nth_prime query; the doubling loop below corrects any shortfall.
u64 nth_prime_limit_guess(u64 k) {
  if (k < 6) return 16;
  double kd = static_cast<double>(k);
  double guess = kd * (std::log(kd) + std::log(std::log(kd)));
  return static_cast<u64>(guess) + 2;
}

}  // namespace

u64 PrimeTable::limit() const {
  std::shared_lock lock(mutex_);
  return limit_;
}

u64 PrimeTable::size() const {
  std::shared_lock lock(mutex_);
  return primes_.size();
}

void PrimeTable::ensure_limit(u64 min_limit) {
  {
    std::shared_lock lock(mutex_);
    if (limit_ >= min_limit) return;
  }
  std::unique_lock lock(mutex_);
  grow_locked(min_limit);
}

void PrimeTable::grow_locked(u64 min_limit) {
  if (limit_ >= min_limit) return;
  if (min_limit > (u64{1} << 62)) {
    throw std::length_error("prime table: requested limit is beyond any sievable range");
  }
  u64 new_limit = std::max(limit_, kMinLimit);
  while (new_limit < min_limit) new_limit *= 2;

  // Full re-sieve; doubling keeps the amortized cost at the final size.
  std::vector<bool> composite(new_limit + 1, false);
  std::vector<u64> primes;
  for (u64 i = 2; i <= new_limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    if (i <= new_limit / i) {
      for (u64 j = i * i; j <= new_limit; j += i) composite[j] = true;
    }
  }
  primes_ = std::move(primes);
  limit_ = new_limit;
}

void PrimeTable::ensure_count(u64 k) {
  {
    std::shared_lock lock(mutex_);
    if (primes_.size() >= k) return;
  }
  std::unique_lock lock(mutex_);
  if (primes_.size() >= k) return;
  grow_locked(nth_prime_limit_guess(k));
  while (primes_.size() < k) grow_locked(limit_ * 2);
}

u64 PrimeTable::nth_prime(u64 k) {
  if (k == 0) throw DomainError("nth_prime: index is 1-based, got 0");
  ensure_count(k);
  std::shared_lock lock(mutex_);
  return primes_[k - 1];
}

u64 PrimeTable::prime_index(u64 p) {
  if (p < 2) throw NotPrimeError(p);
  ensure_limit(p);
  std::shared_lock lock(mutex_);
  auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
  if (it == primes_.end() || *it != p) throw NotPrimeError(p);
  return static_cast<u64>(it - primes_.begin()) + 1;
}

u64 PrimeTable::prime_count(double x) {
  if (std::isnan(x) || x < 2.0) return 0;
  if (x >= 9.2e18) {
    throw std::length_error("prime_count: x is beyond any sievable range");
  }
  return prime_count_floor(static_cast<u64>(std::floor(x)));
}

u64 PrimeTable::prime_count_floor(u64 m) {
  if (m < 2) return 0;
  ensure_limit(m);
  std::shared_lock lock(mutex_);
  return std::upper_bound(primes_.begin(), primes_.end(), m) - primes_.begin();
}

bool PrimeTable::is_prime(u64 n) {
  if (n < 2) return false;
  ensure_limit(n);
  std::shared_lock lock(mutex_);
  return std::binary_search(primes_.begin(), primes_.end(), n);
}

Factorization PrimeTable::factorize(u64 n) {
  if (n == 0) throw DomainError("factorize: n must be >= 1");
  Factorization result;
  if (n == 1) return result;

  u64 rem = n;
  ensure_limit(std::max<u64>(isqrt(n), 2));
  {
    std::shared_lock lock(mutex_);
    for (std::size_t i = 0; i < primes_.size(); ++i) {
      u64 p = primes_[i];
      if (p > rem / p) break;
      if (rem % p != 0) continue;
      u64 beta = 0;
      while (rem % p == 0) {
        rem /= p;
        ++beta;
      }
      result.terms.push_back({static_cast<u64>(i) + 1, beta});
    }
  }
  if (rem > 1) {
    // rem has no prime divisor <= sqrt(n), so it is prime.
    result.terms.push_back({prime_index(rem), 1});
  }
  return result;
}

PrimeTable& shared_prime_table() {
  static PrimeTable table;
  return table;
}

u64 nth_prime(u64 k) { return shared_prime_table().nth_prime(k); }
u64 prime_index(u64 p) { return shared_prime_table().prime_index(p); }
u64 prime_count(double x) { return shared_prime_table().prime_count(x); }
Factorization factorize(u64 n) { return shared_prime_table().factorize(n); }

}  // namespace ferrers
