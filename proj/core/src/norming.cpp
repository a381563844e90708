#include "macaevlab/norming.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "macaevlab/harmonic.hpp"

namespace macaev {

NormingFunction NormingFunction::schatten(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw InputError("schatten: p must be >= 1");
  return NormingFunction(Family::schatten, p);
}

NormingFunction NormingFunction::kyfan(std::uint64_t k) {
  if (k < 1) throw InputError("kyfan: k must be >= 1");
  return NormingFunction(Family::kyfan, 0.0, k);
}

NormingFunction NormingFunction::parse(const std::string& spec) {
  if (spec == "macaev") return macaev();
  if (spec == "dual_plus") return dual_plus();
  if (spec == "trace") return trace();
  auto colon = spec.find(':');
  if (colon != std::string::npos) {
    std::string head = spec.substr(0, colon), tail = spec.substr(colon + 1);
    try {
      if (head == "schatten") return schatten(std::stod(tail));
      if (head == "kyfan") return kyfan(std::stoull(tail));
    } catch (const std::logic_error&) {
      throw InputError("norm spec: bad parameter in '" + spec + "'");
    }
  }
  throw InputError("norm spec: unknown family '" + spec + "'");
}

std::string NormingFunction::to_string() const {
  switch (family_) {
    case Family::macaev:
      return "macaev";
    case Family::dual_plus:
      return "dual_plus";
    case Family::trace:
      return "trace";
    case Family::schatten:
      return "schatten:" + std::to_string(p_);
    case Family::kyfan:
      return "kyfan:" + std::to_string(k_);
  }
  return "?";
}

NormingFunction NormingFunction::dual() const {
  switch (family_) {
    case Family::macaev:
      return dual_plus();
    case Family::dual_plus:
      return macaev();
    case Family::trace:
      return kyfan(1);
    case Family::schatten:
      if (p_ == 1.0) return kyfan(1);
      return schatten(p_ / (p_ - 1.0));
    case Family::kyfan:
      if (k_ == 1) return trace();
      throw InputError("dual of kyfan:k with k >= 2 is unsupported");
  }
  throw InputError("dual: unknown family");
}

bool NormingFunction::projection_norm_sublinear() const {
  if (family_ == Family::trace) return false;
  if (family_ == Family::schatten && p_ == 1.0) return false;
  return true;
}

Interval macaev_norm(const ValueMultiset& v) {
  ValueMultiset r = rearrange(v);
  Interval total = Interval::exact(0.0);
  BigCount cum;
  for (const auto& e : r.entries) {
    BigCount next = cum + e.count;
    if (e.value != 0.0) total += harmonic::range(cum, next).scaled(e.value);
    cum = std::move(next);
  }
  return total;
}

namespace {

// S(k)/H(k) as an interval, numerator saturating to +inf for huge counts.
Interval ratio_at(double partial_sum, const BigCount& k) {
  Interval h = harmonic::eval(k);
  if (!std::isfinite(partial_sum)) {
    return Interval::bounds(std::numeric_limits<double>::infinity(),
                            std::numeric_limits<double>::infinity());
  }
  return Interval::ratio(partial_sum, h);
}

Interval dual_plus_block_scan(const ValueMultiset& r) {
  Interval best = Interval::exact(0.0);
  BigCount cum;
  double sum = 0.0;
  bool first = true;
  for (const auto& e : r.entries) {
    // First position inside the block.
    Interval inside = ratio_at(sum + e.value, cum + 1);
    // Block boundary. Guard 0 * inf for zero values with huge counts.
    BigCount boundary = cum + e.count;
    double block_total = e.value == 0.0 ? sum : sum + e.value * e.count.to_double();
    Interval at_boundary = ratio_at(block_total, boundary);
    Interval cand = Interval::max(inside, at_boundary);
    best = first ? cand : Interval::max(best, cand);
    first = false;
    cum = std::move(boundary);
    sum = block_total;
  }
  return best;
}

Interval dual_plus_full_scan(const ValueMultiset& r) {
  BigCount total = r.total_count();
  if (!total.fits_u64() || total.as_u64() > 50'000'000) {
    throw ResourceCapError("dual_plus_norm: full scan needs a machine-sized total count");
  }
  Interval best = Interval::exact(0.0);
  bool first = true;
  std::uint64_t k = 0;
  double sum = 0.0;
  for (const auto& e : r.entries) {
    for (std::uint64_t i = 0, n = e.count.as_u64(); i < n; ++i) {
      ++k;
      sum += e.value;
      Interval cand = ratio_at(sum, k);
      best = first ? cand : Interval::max(best, cand);
      first = false;
    }
  }
  return best;
}

Interval schatten_norm(const ValueMultiset& r, double p) {
  // Direct path when nothing can overflow; log-sum-exp otherwise.
  bool small = true;
  for (const auto& e : r.entries) {
    if (!e.count.fits_u64() || e.count.as_u64() > (std::uint64_t{1} << 52)) small = false;
  }
  if (small) {
    double sum = 0.0;
    for (const auto& e : r.entries) {
      sum += static_cast<double>(e.count.as_u64()) * std::pow(e.value, p);
    }
    if (std::isfinite(sum)) return Interval::exact(std::pow(sum, 1.0 / p)).widened_rel(4e-15);
  }
  double max_log = -std::numeric_limits<double>::infinity();
  std::vector<double> logs;
  logs.reserve(r.entries.size());
  for (const auto& e : r.entries) {
    if (e.value == 0.0) continue;
    double l = e.count.log_natural() + p * std::log(e.value);
    logs.push_back(l);
    max_log = std::max(max_log, l);
  }
  if (logs.empty()) return Interval::exact(0.0);
  double acc = 0.0;
  for (double l : logs) acc += std::exp(l - max_log);
  double log_norm = (max_log + std::log(acc)) / p;
  double v = std::exp(log_norm);
  if (!std::isfinite(v)) {
    return Interval::bounds(std::numeric_limits<double>::max(),
                            std::numeric_limits<double>::infinity());
  }
  return Interval::exact(v).widened_rel(1e-13);
}

Interval trace_norm(const ValueMultiset& r) {
  double sum = 0.0;
  for (const auto& e : r.entries) {
    if (e.value != 0.0) sum += e.value * e.count.to_double();
  }
  return Interval::exact(sum);
}

Interval kyfan_norm(const ValueMultiset& r, std::uint64_t k) {
  double sum = 0.0;
  BigCount taken;
  BigCount want{k};
  for (const auto& e : r.entries) {
    if (taken >= want) break;
    BigCount remaining = want - taken;
    BigCount take = std::min(remaining, e.count);
    sum += e.value * take.to_double();
    taken += take;
  }
  return Interval::exact(sum);
}

}  // namespace

Interval dual_plus_norm(const ValueMultiset& v, bool full_scan) {
  ValueMultiset r = rearrange(v);
  if (r.empty()) return Interval::exact(0.0);
  return full_scan ? dual_plus_full_scan(r) : dual_plus_block_scan(r);
}

Interval gauge_norm(const ValueMultiset& v, const NormingFunction& phi) {
  switch (phi.family()) {
    case NormingFunction::Family::macaev:
      return macaev_norm(v);
    case NormingFunction::Family::dual_plus:
      return dual_plus_norm(v);
    case NormingFunction::Family::schatten:
      return schatten_norm(rearrange(v), phi.schatten_p());
    case NormingFunction::Family::trace:
      return trace_norm(v);
    case NormingFunction::Family::kyfan:
      return kyfan_norm(rearrange(v), phi.kyfan_k());
  }
  throw InputError("gauge_norm: unsupported family");
}

Interval phi_rank(const NormingFunction& phi, const BigCount& m) {
  if (m.is_zero()) throw InputError("phi_rank: m must be >= 1");
  switch (phi.family()) {
    case NormingFunction::Family::macaev:
      return harmonic::eval(m);
    case NormingFunction::Family::trace:
      return Interval::exact(m.to_double());
    case NormingFunction::Family::schatten: {
      double p = phi.schatten_p();
      if (m.fits_u64()) {
        return Interval::exact(std::pow(static_cast<double>(m.as_u64()), 1.0 / p))
            .widened_rel(4e-15);
      }
      return Interval::exact(std::exp(m.log_natural() / p)).widened_rel(1e-13);
    }
    case NormingFunction::Family::kyfan: {
      BigCount k{phi.kyfan_k()};
      return Interval::exact(std::min(m, k).to_double());
    }
    case NormingFunction::Family::dual_plus:
      return Interval::ratio(m.to_double(), harmonic::eval(m));
  }
  throw InputError("phi_rank: unsupported family");
}

Interval phi_rank_log2(const NormingFunction& phi, double log2_m, double log2_abs_err) {
  switch (phi.family()) {
    case NormingFunction::Family::macaev:
      return harmonic::eval_log2(log2_m, log2_abs_err);
    case NormingFunction::Family::schatten: {
      double p = phi.schatten_p();
      double v = std::exp2(log2_m / p);
      double slack = (log2_abs_err / p) * M_LN2 + 4e-16;
      if (!std::isfinite(v)) {
        return Interval::bounds(std::numeric_limits<double>::max(),
                                std::numeric_limits<double>::infinity());
      }
      return Interval::exact(v).widened_rel(slack);
    }
    case NormingFunction::Family::kyfan: {
      double kd = static_cast<double>(phi.kyfan_k());
      double v = log2_m >= 64 ? kd : std::min(std::exp2(log2_m), kd);
      return Interval::exact(v);
    }
    case NormingFunction::Family::dual_plus: {
      double md = std::exp2(log2_m);
      return Interval::ratio(md, harmonic::eval_log2(log2_m, log2_abs_err));
    }
    case NormingFunction::Family::trace:
      return Interval::exact(std::exp2(log2_m));
  }
  throw InputError("phi_rank_log2: unsupported family");
}

}  // namespace macaev
