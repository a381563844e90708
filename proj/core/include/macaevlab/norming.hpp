#pragma once
//
// Rearrangement-invariant norms on value multisets.
//
// A NormingFunction is a symmetric gauge: permutation invariant, absolutely
// homogeneous, monotone under entrywise domination, and normalized so that
// a single 1 has norm 1. Supported families:
//
//   macaev       sum_k f*(k)/k                      (Lorentz (inf,1))
//   dual_plus    sup_k (sum_{j<=k} f*(j)) / H_k     (dual of macaev)
//   schatten:p   (sum_k f*(k)^p)^(1/p), p >= 1
//   trace        sum_k f*(k)
//   kyfan:k      sum of the k largest values
//

#include <cstdint>
#include <string>

#include "macaevlab/interval.hpp"
#include "macaevlab/multiset.hpp"

namespace macaev {

class NormingFunction {
 public:
  enum class Family { macaev, dual_plus, schatten, trace, kyfan };

  static NormingFunction macaev() { return NormingFunction(Family::macaev); }
  static NormingFunction dual_plus() { return NormingFunction(Family::dual_plus); }
  static NormingFunction schatten(double p);
  static NormingFunction trace() { return NormingFunction(Family::trace); }
  static NormingFunction kyfan(std::uint64_t k);

  // "macaev" | "dual_plus" | "trace" | "schatten:p" | "kyfan:k"
  static NormingFunction parse(const std::string& spec);
  std::string to_string() const;

  Family family() const { return family_; }
  double schatten_p() const { return p_; }
  std::uint64_t kyfan_k() const { return k_; }

  // Dual norming function; throws InputError where the dual falls outside
  // the supported families (kyfan k >= 2).
  NormingFunction dual() const;

  // Whether phi(m)/m -> 0, phi(m) the norm of m ones. False exactly for
  // trace and schatten(1).
  bool projection_norm_sublinear() const;

  friend bool operator==(const NormingFunction& a, const NormingFunction& b) {
    return a.family_ == b.family_ && a.p_ == b.p_ && a.k_ == b.k_;
  }

 private:
  explicit NormingFunction(Family f, double p = 0.0, std::uint64_t k = 0)
      : family_(f), p_(p), k_(k) {}
  Family family_;
  double p_;
  std::uint64_t k_;
};

// sum_k f*(k)/k. A block of m copies of a, preceded by k earlier values,
// contributes a * (H_{k+m} - H_k).
Interval macaev_norm(const ValueMultiset& v);

// sup_k S(k)/H(k) over partial sums S of the decreasing rearrangement.
// The sup is scanned at block boundaries plus the first position inside
// each block; full_scan forces the O(total count) reference scan instead
// (requires the total count to be machine-sized).
Interval dual_plus_norm(const ValueMultiset& v, bool full_scan = false);

// Dispatch on the family; the macaev case agrees exactly with macaev_norm.
Interval gauge_norm(const ValueMultiset& v, const NormingFunction& phi);

// Norm of m ones, via closed forms that accept huge m:
// macaev H_m, schatten m^(1/p), trace m, kyfan min(m,k), dual_plus m/H_m.
Interval phi_rank(const NormingFunction& phi, const BigCount& m);

// phi_rank driven by log2(m) alone, for schedule searches where m = 2^S * h
// would be expensive to materialize. Supported for sublinear families.
Interval phi_rank_log2(const NormingFunction& phi, double log2_m, double log2_abs_err);

}  // namespace macaev
