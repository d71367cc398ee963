#pragma once

#include <cassert>
#include <compare>
#include <vector>

#include "ferrers/numeric.hpp"
#include "ferrers/primes.hpp"

namespace ferrers {

// A Ferrers diagram in canonical form: row lengths sorted nonincreasing,
// every row >= 1. The empty diagram is the image of n = 1.
//
// A row of length k stands for one factor p_k, so the diagram is exactly
// the multiset {alpha_i with multiplicity beta_i} of a factorization.
class Partition {
 public:
  Partition() = default;

  // Canonicalizes (sorts nonincreasing). Throws DomainError on a zero row.
  explicit Partition(std::vector<u64> rows);

  // Trusted fast path for rows already sorted nonincreasing with no zeros.
  static Partition from_nonincreasing(std::vector<u64> rows);

  const std::vector<u64>& rows() const noexcept { return rows_; }
  bool empty() const noexcept { return rows_.empty(); }

  // Equality is figure equality: same row lengths with the same
  // multiplicities. Ordering is lexicographic on the canonical rows.
  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<u64> rows_;
};

// Number of rows (0 for the empty diagram).
inline u64 height(const Partition& d) { return d.rows().size(); }

// Length of the longest row (0 for the empty diagram).
inline u64 width(const Partition& d) {
  return d.empty() ? 0 : d.rows().front();
}

// Containment order: with bottom-left corners aligned, g covers f with no
// protruding squares. Componentwise <= on the canonical row sequences.
bool is_subfigure(const Partition& f, const Partition& g);

// F(n): beta_i rows of length alpha_i for each factor p_{alpha_i}^{beta_i}.
Partition to_diagram(u64 n);
Partition to_diagram(u64 n, PrimeTable& table);

// F^{-1}(d): product of nth_prime(r) over the rows r. Exact in 128 bits;
// throws OverflowError beyond that.
u128 from_diagram(const Partition& d);
u128 from_diagram(const Partition& d, PrimeTable& table);

}  // namespace ferrers
