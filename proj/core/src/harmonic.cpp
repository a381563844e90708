#include "macaevlab/harmonic.hpp"

#include <cmath>
#include <mutex>
#include <vector>

namespace macaev::harmonic {

namespace {

// Prefix table H_0..H_kExactThreshold, built once on first use.
const std::vector<double>& table() {
  static std::vector<double> t;
  static std::once_flag flag;
  std::call_once(flag, [] {
    t.resize(kExactThreshold + 1);
    t[0] = 0.0;
    double sum = 0.0, comp = 0.0;  // Kahan
    for (std::uint64_t k = 1; k <= kExactThreshold; ++k) {
      double term = 1.0 / static_cast<double>(k) - comp;
      double next = sum + term;
      comp = (next - sum) - term;
      sum = next;
      t[k] = sum;
    }
  });
  return t;
}

Interval asymptotic(double ln_m, double m_inv, double ln_abs_err) {
  double v = ln_m + kEulerGamma + 0.5 * m_inv - m_inv * m_inv / 12.0;
  double trunc = m_inv * m_inv * m_inv * m_inv / 120.0;
  // ln error, series-evaluation rounding, gamma rounding.
  double slack = ln_abs_err + 4e-16 * std::abs(v) + 1e-16;
  return Interval::bounds(v - slack, v + trunc + slack);
}

}  // namespace

Interval eval(std::uint64_t m) {
  if (m <= kExactThreshold) return Interval::exact(table()[m]);
  double md = static_cast<double>(m);
  return asymptotic(std::log(md), 1.0 / md, 2e-16 * std::abs(std::log(md)));
}

Interval eval(const BigCount& m) {
  if (m.fits_u64()) return eval(m.as_u64());
  double ln_m = m.log_natural();
  // Mantissa is exact; the error is the log rounding itself.
  return asymptotic(ln_m, 0.0, 4e-16 * std::abs(ln_m));
}

Interval eval_log2(double log2_m, double log2_abs_err) {
  double ln_m = log2_m * M_LN2;
  double m_inv = log2_m < 63.0 ? std::exp2(-log2_m) : 0.0;
  if (log2_m < 20.0) {
    // Small enough to resolve exactly.
    return eval(static_cast<std::uint64_t>(std::llround(std::exp2(log2_m))));
  }
  return asymptotic(ln_m, m_inv, (log2_abs_err + 2e-16 * std::abs(log2_m)) * M_LN2);
}

Interval range(const BigCount& from, const BigCount& upto) {
  if (upto < from) throw InputError("harmonic::range: upto < from");
  if (upto.fits_u64() && upto.as_u64() <= kExactThreshold) {
    const auto& t = table();
    return Interval::exact(t[upto.as_u64()] - t[from.as_u64()]);
  }
  return eval(upto) - eval(from);
}

}  // namespace macaev::harmonic
