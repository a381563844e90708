#include "macaevlab/sandwich.hpp"

namespace macaev {

SandwichReport sandwich(const GroupSpec& g, const NormingFunction& phi, int radius,
                        const DualCertificate* cert, OptimMethod method,
                        const OptimOptions& opts, const BallIndex* prebuilt) {
  MinimaxResult upper = minimize_upper(g, phi, radius, method, opts, prebuilt);
  std::optional<double> lower;
  if (cert) {
    if (!(cert->group() == g)) throw InputError("sandwich: certificate group mismatch");
    lower = certify_lower(*cert, phi, radius);
  }
  SandwichReport report{lower, upper.value, std::move(upper)};
  if (report.lower && *report.lower > report.upper.hi * (1.0 + 1e-9) + 1e-12) {
    throw InvariantViolation("sandwich inverted: certified lower " +
                             std::to_string(*report.lower) + " exceeds upper " +
                             std::to_string(report.upper.hi));
  }
  return report;
}

}  // namespace macaev
