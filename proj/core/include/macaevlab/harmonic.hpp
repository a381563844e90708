#pragma once
//
// Harmonic numbers H_m = 1 + 1/2 + ... + 1/m with certified enclosures.
//
// Below kExactThreshold the value comes from a compensated-summation table
// and is reported as exact (its rounding error is far below the 1e-12
// relative tolerance used by callers). Above it we use
//
//   H_m = ln m + gamma + 1/(2m) - 1/(12 m^2) + theta/(120 m^4),  theta in (0,1),
//
// where the truncation remainder has the sign and size of the first omitted
// term, so [f(m), f(m) + 1/(120 m^4)] encloses H_m before floating-point
// slack is added. Multiplicities like 2^(10^6) never fit a machine word;
// the BigCount and log2 entry points serve those.
//

#include <cstdint>

#include "macaevlab/bigcount.hpp"
#include "macaevlab/interval.hpp"

namespace macaev::harmonic {

inline constexpr double kEulerGamma = 0.57721566490153286061;
inline constexpr std::uint64_t kExactThreshold = 1'000'000;

// H_0 = 0 by convention.
Interval eval(std::uint64_t m);
Interval eval(const BigCount& m);

// Asymptotic path driven by log2(m) alone, for m too large to materialize.
// `log2_abs_err` bounds the absolute error of the supplied log2(m).
Interval eval_log2(double log2_m, double log2_abs_err);

// H(upto) - H(from), from <= upto. Exact when both ends sit in the table.
Interval range(const BigCount& from, const BigCount& upto);

}  // namespace macaev::harmonic
