#include "macaevlab/crosscheck.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace macaev {

namespace {

// Smallest radius whose ball contains the support.
int covering_radius(const FiniteFunction& f, std::size_t ball_cap) {
  for (int r = 0;; ++r) {
    BallIndex b = ball(f.group(), r, ball_cap);
    bool all = true;
    for (const auto& [x, v] : f.support()) {
      if (b.find(x) < 0) {
        all = false;
        break;
      }
    }
    if (all) return r;
  }
}

}  // namespace

CrosscheckReport regular_representation_crosscheck(const FiniteFunction& f,
                                                   const NormingFunction& phi,
                                                   std::size_t ball_cap) {
  const GroupSpec& g = f.group();
  for (const auto& [x, v] : f.support()) {
    if (v < 0.0 || v > 1.0) throw InputError("crosscheck: requires 0 <= f <= 1");
  }
  int radius = covering_radius(f, ball_cap);
  BallIndex b = ball(g, radius + 1, ball_cap);
  std::int64_t n = static_cast<std::int64_t>(b.size());
  if (n > 4096) throw ResourceCapError("crosscheck: dense SVD limited to 4096 elements");

  CrosscheckReport report;
  for (const auto& gen : g.generators()) {
    // [lambda(g), M_f] e_x = (f(x) - f(g x)) e_{g x}
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
    for (std::int64_t i = 0; i < n; ++i) {
      Element gx = g.multiply(gen, b.elements[static_cast<std::size_t>(i)]);
      double value = f.at(b.elements[static_cast<std::size_t>(i)]) - f.at(gx);
      if (value == 0.0) continue;
      auto jdx = b.find(gx);
      if (jdx < 0) throw InvariantViolation("crosscheck: ball misses a translate");
      c(jdx, i) = value;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(c);
    std::vector<double> operator_sv(svd.singularValues().data(),
                                    svd.singularValues().data() + svd.singularValues().size());
    std::sort(operator_sv.begin(), operator_sv.end(), std::greater<double>());

    FiniteFunction left_diff = left_translate(f, gen) - f;
    std::vector<double> function_sv;
    function_sv.reserve(left_diff.support_size());
    for (const auto& [x, v] : left_diff.support()) function_sv.push_back(std::abs(v));
    std::sort(function_sv.begin(), function_sv.end(), std::greater<double>());

    double deviation = 0.0;
    std::size_t m = std::max(operator_sv.size(), function_sv.size());
    for (std::size_t i = 0; i < m; ++i) {
      double a = i < operator_sv.size() ? operator_sv[i] : 0.0;
      double bb = i < function_sv.size() ? function_sv[i] : 0.0;
      deviation = std::max(deviation, std::abs(a - bb));
    }

    CrosscheckEntry entry{gen, deviation,
                          gauge_norm(ValueMultiset::from_abs_values(operator_sv), phi),
                          gauge_norm(abs_value_multiset(left_diff), phi)};
    report.worst_deviation = std::max(report.worst_deviation, deviation);
    report.per_generator.push_back(std::move(entry));
  }
  report.ok = report.worst_deviation <= 1e-12;
  return report;
}

}  // namespace macaev
