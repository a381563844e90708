#include "macaevlab/schedule.hpp"

#include <cmath>

namespace macaev {

Schedule::Schedule(std::vector<std::int64_t> h) : h_(std::move(h)) {
  partial_.resize(h_.size() + 1);
  partial_[0] = 0;
  std::int64_t prev = 1;
  for (std::size_t i = 0; i < h_.size(); ++i) {
    if (h_[i] < 1) throw InputError("schedule: terms must be >= 1");
    if (h_[i] < prev) throw InputError("schedule: terms must be nondecreasing");
    prev = h_[i];
    partial_[i + 1] = partial_[i] + h_[i];
  }
}

Schedule Schedule::constant(std::int64_t value, int length) {
  return Schedule(std::vector<std::int64_t>(static_cast<std::size_t>(length), value));
}

std::int64_t Schedule::h(int k) const {
  if (k < 1 || k > length()) throw InputError("schedule: index out of range");
  return h_[static_cast<std::size_t>(k - 1)];
}

std::int64_t Schedule::S(int p) const {
  if (p < 0 || p > length()) throw InputError("schedule: partial sum index out of range");
  return partial_[static_cast<std::size_t>(p)];
}

bool schedule_condition_holds(const NormingFunction& phi, std::int64_t s_prev, std::int64_t h,
                              int n) {
  double log2_h = std::log2(static_cast<double>(h));
  double log2_m = static_cast<double>(s_prev) + log2_h;
  // s_prev is exact; the h term carries a couple of ulps.
  Interval rank_norm = phi_rank_log2(phi, log2_m, 4e-16 * (std::abs(log2_h) + 1.0));
  return rank_norm.hi / static_cast<double>(h) <= 1.0 / static_cast<double>(n);
}

Schedule build_schedule(const NormingFunction& phi, int n_max, std::int64_t h_cap) {
  if (n_max < 1) throw InputError("build_schedule: n_max must be >= 1");
  if (!phi.projection_norm_sublinear()) {
    throw InputError("build_schedule: " + phi.to_string() +
                     " has phi(m)/m bounded away from 0; no schedule exists");
  }
  std::vector<std::int64_t> h;
  std::int64_t s = 0;
  for (int k = 1; k <= 2 * n_max; ++k) {
    int n = (k + 1) / 2;
    std::int64_t lo = h.empty() ? 1 : h.back();
    std::int64_t chosen = -1;
    if (schedule_condition_holds(phi, s, lo, n)) {
      chosen = lo;
    } else {
      // The condition is monotone in h for every sublinear family:
      // bracket by doubling, then bisect for the minimal satisfying h.
      std::int64_t hi = lo;
      while (true) {
        if (hi > h_cap / 2) throw ResourceCapError("build_schedule: h cap exceeded at k=" +
                                                   std::to_string(k));
        hi *= 2;
        if (schedule_condition_holds(phi, s, hi, n)) break;
      }
      std::int64_t bad = std::max<std::int64_t>(lo, hi / 2);
      // invariant: condition fails at `bad`, holds at `hi`
      while (hi - bad > 1) {
        std::int64_t mid = bad + (hi - bad) / 2;
        if (schedule_condition_holds(phi, s, mid, n)) {
          hi = mid;
        } else {
          bad = mid;
        }
      }
      chosen = hi;
    }
    h.push_back(chosen);
    s += chosen;
  }
  return Schedule(std::move(h));
}

}  // namespace macaev
