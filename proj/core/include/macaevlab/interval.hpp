#pragma once
//
// Closed interval [lo, hi] carrying a certified enclosure of a real value.
// Norms that route through the asymptotic harmonic path return one of these
// instead of a bare double; exact-path results have lo == hi.
//

#include <algorithm>
#include <cmath>

#include "macaevlab/errors.hpp"

namespace macaev {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  static Interval exact(double v) { return {v, v}; }
  static Interval bounds(double lo, double hi) {
    if (!(lo <= hi)) throw InvariantViolation("Interval: lo > hi");
    return {lo, hi};
  }

  double mid() const { return 0.5 * (lo + hi); }
  double width() const { return hi - lo; }
  bool is_exact() const { return lo == hi; }
  bool contains(double v) const { return lo <= v && v <= hi; }

  Interval operator+(const Interval& o) const { return {lo + o.lo, hi + o.hi}; }
  Interval& operator+=(const Interval& o) {
    lo += o.lo;
    hi += o.hi;
    return *this;
  }
  // Enclosure of the difference; only meaningful when the true values obey
  // the same ordering the caller expects (used for H(k+m) - H(k)).
  Interval operator-(const Interval& o) const { return {lo - o.hi, hi - o.lo}; }

  // Scale by a nonnegative factor.
  Interval scaled(double a) const {
    if (a < 0) throw InputError("Interval: negative scale");
    return {lo * a, hi * a};
  }
  // Divide by a positive factor.
  Interval divided(double a) const {
    if (!(a > 0)) throw InputError("Interval: nonpositive divisor");
    return {lo / a, hi / a};
  }
  // [c/hi, c/lo] for c >= 0, lo > 0.
  static Interval ratio(double c, const Interval& denom) {
    if (!(denom.lo > 0) || c < 0) throw InputError("Interval: ratio domain");
    return {c / denom.hi, c / denom.lo};
  }

  // Pointwise max, valid for enclosing max(x, y).
  static Interval max(const Interval& a, const Interval& b) {
    return {std::max(a.lo, b.lo), std::max(a.hi, b.hi)};
  }

  // Symmetric relative widening, for floating-point slack.
  Interval widened_rel(double rel) const {
    double pad_lo = std::abs(lo) * rel;
    double pad_hi = std::abs(hi) * rel;
    return {lo - pad_lo, hi + pad_hi};
  }
};

}  // namespace macaev
