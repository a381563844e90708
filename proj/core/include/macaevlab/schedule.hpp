#pragma once
//
// Cutoff schedules (h_k): nondecreasing positive integers with partial sums
// S(p) = h_1 + ... + h_p. build_schedule picks each h_k greedily minimal so
// that the rank-phi inequality
//
//   odd k = 2n-1:   phi(2^S(2n-2) * h) / h <= 1/n
//   even k = 2n:    phi(2^S(2n-1) * h) / h <= 1/n
//
// holds (phi(m) the norm of a rank-m projection). Norming functions with
// phi(m)/m not vanishing (trace) admit no schedule and are rejected.
//

#include <cstdint>
#include <vector>

#include "macaevlab/norming.hpp"

namespace macaev {

class Schedule {
 public:
  explicit Schedule(std::vector<std::int64_t> h);
  static Schedule constant(std::int64_t value, int length);

  int length() const { return static_cast<int>(h_.size()); }
  std::int64_t h(int k) const;  // 1-based
  std::int64_t S(int p) const;  // S(0) = 0
  const std::vector<std::int64_t>& values() const { return h_; }

 private:
  std::vector<std::int64_t> h_;
  std::vector<std::int64_t> partial_;  // partial_[p] = S(p)
};

// Terms h_1 .. h_{2 n_max}; search capped at h_cap per term.
Schedule build_schedule(const NormingFunction& phi, int n_max,
                        std::int64_t h_cap = 1'000'000'000'000LL);

// The inequality test used by the schedule search, exposed for oracles:
// upper end of phi(2^s_prev * h) / h compared against 1/n.
bool schedule_condition_holds(const NormingFunction& phi, std::int64_t s_prev, std::int64_t h,
                              int n);

}  // namespace macaev
