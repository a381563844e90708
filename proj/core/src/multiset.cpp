#include "macaevlab/multiset.hpp"

#include <algorithm>
#include <cmath>

namespace macaev {

namespace {
void check_value(double v) {
  if (!std::isfinite(v) || v < 0.0) {
    throw InputError("ValueMultiset: values must be finite and nonnegative");
  }
}
}  // namespace

ValueMultiset ValueMultiset::from_values(std::span<const double> values) {
  ValueMultiset m;
  m.entries.reserve(values.size());
  for (double v : values) m.add(v, 1);
  return m;
}

ValueMultiset ValueMultiset::from_abs_values(std::span<const double> values) {
  ValueMultiset m;
  m.entries.reserve(values.size());
  for (double v : values) {
    double a = std::abs(v);
    if (a != 0.0) m.add(a, 1);
  }
  return m;
}

void ValueMultiset::add(double value, BigCount count) {
  check_value(value);
  if (count.is_zero()) throw InputError("ValueMultiset: zero count");
  entries.push_back({value, std::move(count)});
}

BigCount ValueMultiset::total_count() const {
  BigCount total;
  for (const auto& e : entries) total += e.count;
  return total;
}

ValueMultiset ValueMultiset::scaled(double a) const {
  if (!(a >= 0.0)) throw InputError("ValueMultiset: negative scale");
  ValueMultiset out;
  out.entries.reserve(entries.size());
  for (const auto& e : entries) out.entries.push_back({e.value * a, e.count});
  return out;
}

ValueMultiset rearrange(const ValueMultiset& v) {
  ValueMultiset out = v;
  std::sort(out.entries.begin(), out.entries.end(),
            [](const auto& a, const auto& b) { return a.value > b.value; });
  // Merge adjacent equal values.
  std::vector<ValueMultiset::Entry> merged;
  merged.reserve(out.entries.size());
  for (auto& e : out.entries) {
    if (!merged.empty() && merged.back().value == e.value) {
      merged.back().count += e.count;
    } else {
      merged.push_back(std::move(e));
    }
  }
  out.entries = std::move(merged);
  return out;
}

}  // namespace macaev
