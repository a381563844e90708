#pragma once
//
// ValueMultiset: an order-free multiset of nonnegative reals with exact,
// arbitrarily large multiplicities. Carries function values and singular
// values throughout the library.
//

#include <span>
#include <vector>

#include "macaevlab/bigcount.hpp"
#include "macaevlab/errors.hpp"

namespace macaev {

struct ValueMultiset {
  struct Entry {
    double value;    // >= 0, finite
    BigCount count;  // >= 1
  };

  std::vector<Entry> entries;

  ValueMultiset() = default;

  // All counts 1; values must be nonnegative.
  static ValueMultiset from_values(std::span<const double> values);
  // Absolute values of a signed sequence, zeros dropped.
  static ValueMultiset from_abs_values(std::span<const double> values);

  void add(double value, BigCount count);

  bool empty() const { return entries.empty(); }
  BigCount total_count() const;
  ValueMultiset scaled(double a) const;  // a >= 0
};

// Sorted by value descending, equal values merged, zero-count entries
// impossible by construction. Total count is preserved.
ValueMultiset rearrange(const ValueMultiset& v);

}  // namespace macaev
