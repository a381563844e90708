#pragma once
//
// Two-sided estimate report: certified lower bound (when a certificate is
// available) against the optimizer's upper bound. An inverted sandwich is
// an internal-consistency failure, never a tolerable outcome.
//

#include <optional>

#include "macaevlab/certificate.hpp"
#include "macaevlab/kphi.hpp"

namespace macaev {

struct SandwichReport {
  std::optional<double> lower;  // absent when no certificate applies
  Interval upper;
  MinimaxResult details;
  // upper.hi - lower when both present
  std::optional<double> gap() const {
    if (!lower) return std::nullopt;
    return upper.hi - *lower;
  }
};

SandwichReport sandwich(const GroupSpec& g, const NormingFunction& phi, int radius,
                        const DualCertificate* cert = nullptr,
                        OptimMethod method = OptimMethod::automatic,
                        const OptimOptions& opts = {}, const BallIndex* prebuilt = nullptr);

}  // namespace macaev
