#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>
#include <thread>
#include <vector>

#include "ferrers/errors.hpp"
#include "ferrers/primes.hpp"
#include "oracles.hpp"

using ferrers::u64;

TEST_CASE("nth_prime matches the fixed small values") {
  CHECK(ferrers::nth_prime(1) == 2);
  CHECK(ferrers::nth_prime(2) == 3);
  CHECK(ferrers::nth_prime(3) == 5);
  CHECK(ferrers::nth_prime(10) == 29);
  CHECK_THROWS_AS(ferrers::nth_prime(0), ferrers::DomainError);
}

TEST_CASE("prime_index inverts nth_prime and rejects composites") {
  CHECK(ferrers::prime_index(2) == 1);
  CHECK(ferrers::prime_index(5) == 3);
  CHECK_THROWS_AS(ferrers::prime_index(4), ferrers::NotPrimeError);
  CHECK_THROWS_AS(ferrers::prime_index(1), ferrers::NotPrimeError);
  CHECK_THROWS_AS(ferrers::prime_index(0), ferrers::NotPrimeError);
  try {
    ferrers::prime_index(9);
    FAIL("expected NotPrimeError");
  } catch (const ferrers::NotPrimeError& e) {
    CHECK(e.value() == 9);
  }
}

TEST_CASE("prime_count floors real arguments") {
  CHECK(ferrers::prime_count(1) == 0);
  CHECK(ferrers::prime_count(0) == 0);
  CHECK(ferrers::prime_count(2) == 1);
  CHECK(ferrers::prime_count(2.999) == 1);
  CHECK(ferrers::prime_count(10) == 4);
  CHECK(ferrers::prime_count(10.99) == 4);
  CHECK(ferrers::prime_count(100) == 25);
  CHECK(ferrers::prime_count(-5.0) == 0);
}

TEST_CASE("factorize matches the fixed examples") {
  using ferrers::FactorTerm;
  CHECK(ferrers::factorize(10).terms ==
        std::vector<FactorTerm>{{1, 1}, {3, 1}});
  CHECK(ferrers::factorize(4).terms == std::vector<FactorTerm>{{1, 2}});
  CHECK(ferrers::factorize(1).terms.empty());
  CHECK(ferrers::factorize(2).terms == std::vector<FactorTerm>{{1, 1}});
  CHECK_THROWS_AS(ferrers::factorize(0), ferrers::DomainError);
}

TEST_CASE("factorize terms recompose to n and keep alphas increasing") {
  ferrers::PrimeTable table;
  constexpr u64 kLimit = 1000000;
  table.ensure_limit(kLimit);
  for (u64 n = 1; n <= kLimit; ++n) {
    ferrers::Factorization fac = table.factorize(n);
    u64 product = 1;
    u64 prev_alpha = 0;
    for (const ferrers::FactorTerm& term : fac.terms) {
      REQUIRE(term.alpha > prev_alpha);
      REQUIRE(term.beta >= 1);
      prev_alpha = term.alpha;
      u64 p = table.nth_prime(term.alpha);
      for (u64 e = 0; e < term.beta; ++e) product *= p;
    }
    REQUIRE(product == n);
  }
}

TEST_CASE("prime_index round-trips over the first 10^4 primes") {
  for (u64 k = 1; k <= 10000; ++k) {
    REQUIRE(ferrers::prime_index(ferrers::nth_prime(k)) == k);
  }
}

TEST_CASE("prime_count agrees with a trial-division oracle up to 10^4") {
  u64 running = 0;
  for (u64 x = 0; x <= 10000; ++x) {
    if (oracle::is_prime(x)) ++running;
    REQUIRE(ferrers::prime_count(static_cast<double>(x)) == running);
  }
}

TEST_CASE("prime_count evaluated at the k-th prime returns k") {
  for (u64 k = 1; k <= 2000; ++k) {
    u64 p = ferrers::nth_prime(k);
    REQUIRE(ferrers::shared_prime_table().prime_count_floor(p) == k);
    REQUIRE(ferrers::shared_prime_table().prime_count_floor(p - 1) == k - 1);
  }
}

TEST_CASE("is_prime agrees with the oracle up to 2000") {
  ferrers::PrimeTable table;
  for (u64 n = 0; n <= 2000; ++n) {
    REQUIRE(table.is_prime(n) == oracle::is_prime(n));
  }
}

TEST_CASE("the table grows on demand and reports its limit") {
  ferrers::PrimeTable table(100);
  CHECK(table.limit() >= 100);
  u64 before = table.limit();
  CHECK(table.nth_prime(100000) == 1299709);
  CHECK(table.limit() >= 1299709);
  CHECK(table.limit() > before);
  CHECK(table.size() >= 100000);
}

TEST_CASE("concurrent growth and queries return serial answers") {
  constexpr u64 kCount = 4000;
  std::vector<u64> expected(kCount + 1, 0);
  u64 found = 0;
  u64 n = 1;
  while (found < kCount) {
    ++n;
    if (oracle::is_prime(n)) expected[++found] = n;
  }

  ferrers::PrimeTable table;
  std::atomic<int> failures{0};
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&, t] {
      std::mt19937_64 rng(1234 + t);
      std::vector<u64> ks(kCount);
      std::iota(ks.begin(), ks.end(), u64{1});
      std::shuffle(ks.begin(), ks.end(), rng);
      for (u64 k : ks) {
        if (t % 2 == 0) {
          if (table.nth_prime(k) != expected[k]) {
            failures.fetch_add(1);
            return;
          }
        } else {
          if (table.prime_count_floor(expected[k]) != k) {
            failures.fetch_add(1);
            return;
          }
        }
      }
    });
  }
  for (std::thread& th : threads) th.join();
  CHECK(failures.load() == 0);
}
