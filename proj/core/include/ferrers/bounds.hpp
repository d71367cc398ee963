#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ferrers/diagram.hpp"
#include "ferrers/numeric.hpp"

namespace ferrers {

struct RectDims {
  u64 height_i = 0;
  u64 width_j = 0;
};

// Number of distinct subfigures of an i x j rectangle: C(i + j, j),
// computed exactly. Throws OverflowError when the binomial exceeds 128
// bits.
u128 count_subfigures_rect(RectDims r);

// Every canonical partition f with is_subfigure(f, g), each exactly once,
// in lexicographic order on the row sequences. Includes the empty
// partition and g itself. The caller picks desk-scale g; the list has
// C(height + width, width) entries for rectangles.
std::vector<Partition> enumerate_subfigures(const Partition& g);

// floor(lg x) for real x >= 1, computed from the binary representation
// (bit length for integers, exponent extraction above 2^64) rather than a
// rounded log. Throws DomainError for x < 1 or non-finite x.
u64 floor_lg(double x);

// The lower bound floor(lg x) / lg(floor(lg x) + 1) on pi(x) for x >= 2.
// Throws DomainError below 2, where the expression degenerates to 0/0.
double pi_lower_bound(double x);

// The same bound evaluated at x = 2^h, i.e. h / lg(h + 1), for h >= 1.
// Covers exponents far beyond double range (2^h overflows IEEE doubles at
// h = 1024).
double pi_lower_bound_pow2(u64 h);

// Per-x record of the chain 2^h <= |M| <= C(h+w, w) <= (h+1)^w and the
// bound pi(x) >= floor(lg x)/lg(floor(lg x)+1), where M is the set of
// integers in [1, x] (each a subfigure of the h x w rectangle).
//
// chain_ok and bound_ok are always decided in exact integer arithmetic;
// binom/power carry the exact values only while they fit in 128 bits and
// are empty beyond that (at x = 10^6 the power has ~10^5 digits).
struct BoundReport {
  double x = 0.0;
  u64 h = 0;
  u64 w = 0;
  double bound_value = 0.0;
  u64 m_size = 0;
  std::optional<u128> binom;
  std::optional<u128> power;
  bool chain_ok = false;
  bool bound_ok = false;
};

// Fills every field for x >= 2. Throws DomainError below 2.
BoundReport bound_report(double x);

std::string to_json(const BoundReport& report);

// Outcome of a brute-force sweep; the swept claim held everywhere iff
// counterexamples is empty.
struct VerificationReport {
  std::string range_description;
  u64 cases_checked = 0;
  std::vector<std::string> counterexamples;

  bool ok() const { return counterexamples.empty(); }
};

std::string to_json(const VerificationReport& report);

// Monotonicity sweep: for every (a, b) in [1, n_max]^2, record a
// counterexample whenever F(a) is a subfigure of F(b) but a > b.
VerificationReport verify_lemma1(u64 n_max);

// Counting sweep: for every (i, j) in [0, i_max] x [0, j_max], enumerate
// the subfigures of the i x j rectangle and check the list against
// C(i + j, j): the count matches, entries are strictly increasing (hence
// distinct), and each entry is a subfigure of the rectangle.
VerificationReport verify_lemma2(u64 i_max, u64 j_max);

struct TheoremSweepOptions {
  u64 x_max = 2;
  // Worker threads; 1 runs the same chunked pipeline inline. Output is
  // byte-identical for every value.
  unsigned jobs = 1;
  // When set, receives the CSV header and one row per case:
  // x,h,w,m_size,binom,power,bound_value,bound_ok,chain_ok
  std::ostream* csv = nullptr;
};

// Bound + chain sweep over every integer x in [2, x_max], plus the
// witness claims behind it: the running maxima of height/width over
// F([1, x]) equal floor(lg x) and pi(x), attained at 2^h and p_w.
VerificationReport verify_theorem(const TheoremSweepOptions& options);
VerificationReport verify_theorem(u64 x_max);

}  // namespace ferrers
