#include "ferrers/diagram.hpp"

#include <algorithm>
#include <functional>

#include "ferrers/errors.hpp"

namespace ferrers {

Partition::Partition(std::vector<u64> rows) {
  for (u64 r : rows) {
    if (r == 0) throw DomainError("partition: row lengths must be >= 1");
  }
  std::sort(rows.begin(), rows.end(), std::greater<u64>());
  rows_ = std::move(rows);
}

Partition Partition::from_nonincreasing(std::vector<u64> rows) {
  assert(std::is_sorted(rows.begin(), rows.end(), std::greater<u64>()));
  assert(rows.empty() || rows.back() >= 1);
  Partition p;
  p.rows_ = std::move(rows);
  return p;
}

bool is_subfigure(const Partition& f, const Partition& g) {
  const std::vector<u64>& a = f.rows();
  const std::vector<u64>& b = g.rows();
  if (a.size() > b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Partition to_diagram(u64 n, PrimeTable& table) {
  Factorization fac = table.factorize(n);
  std::vector<u64> rows;
  // Terms come with alphas strictly increasing; walk them backwards so the
  // row list is nonincreasing.
  for (auto it = fac.terms.rbegin(); it != fac.terms.rend(); ++it) {
    rows.insert(rows.end(), it->beta, it->alpha);
  }
  return Partition::from_nonincreasing(std::move(rows));
}

Partition to_diagram(u64 n) { return to_diagram(n, shared_prime_table()); }

u128 from_diagram(const Partition& d, PrimeTable& table) {
  u128 n = 1;
  for (u64 r : d.rows()) {
    if (!checked_mul(n, table.nth_prime(r), n)) {
      throw OverflowError("from_diagram: product exceeds 128 bits");
    }
  }
  return n;
}

u128 from_diagram(const Partition& d) {
  return from_diagram(d, shared_prime_table());
}

}  // namespace ferrers
