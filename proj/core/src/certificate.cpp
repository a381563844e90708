#include "macaevlab/certificate.hpp"

#include <cmath>

#include "macaevlab/harmonic.hpp"

namespace macaev {

std::string action_name(ActionSide a) { return a == ActionSide::left ? "left" : "right"; }

ActionSide parse_action(const std::string& name) {
  if (name == "left") return ActionSide::left;
  if (name == "right") return ActionSide::right;
  throw InputError("action must be 'left' or 'right'");
}

double F2WitnessComponent::eval(const Element& e) const {
  const auto& w = e.data;
  if (w.empty() || w.size() > static_cast<std::size_t>(depth)) return 0.0;
  for (auto l : w) {
    if (l <= 0) return 0.0;  // not a positive word
  }
  std::int64_t indexing = side == ActionSide::left ? w.front() : w.back();
  if (indexing != letter) return 0.0;
  return std::exp2(-static_cast<double>(w.size()));
}

DualCertificate::DualCertificate(GroupSpec group, ActionSide action,
                                 std::vector<Component> components, int residual_radius,
                                 int verify_radius)
    : group_(std::move(group)),
      action_(action),
      components_(std::move(components)),
      residual_radius_(residual_radius) {
  if (components_.size() != group_.generators().size()) {
    throw InputError("certificate: one component per generator required");
  }
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (!(components_[i].generator == group_.generators()[i])) {
      throw InputError("certificate: component order must match the generating set");
    }
  }
  if (residual_radius_ < 1) throw InputError("certificate: residual radius must be >= 1");
  int check_radius = std::min(residual_radius_, verify_radius);
  double err = max_divergence_error(check_radius);
  if (!(err <= 1e-14)) {
    throw InvariantViolation("certificate: divergence identity fails on B_" +
                             std::to_string(check_radius) + " (max error " +
                             std::to_string(err) + ")");
  }
}

double DualCertificate::component_value(std::size_t ci, const Element& x) const {
  const Component& c = components_.at(ci);
  if (c.analytic) return c.analytic->eval(x);
  if (c.table) return c.table->at(x);
  return 0.0;
}

double DualCertificate::divergence_at(const Element& x) const {
  double sum = 0.0;
  for (std::size_t ci = 0; ci < components_.size(); ++ci) {
    if (components_[ci].is_zero()) continue;
    const Element& k = components_[ci].generator;
    Element translated = action_ == ActionSide::right
                             ? group_.multiply(x, group_.inverse(k))  // (alpha(k^-1) f)(x) = f(x k^-1)
                             : group_.multiply(k, x);                 // (beta(k^-1) f)(x) = f(k x)
    sum += component_value(ci, translated) - component_value(ci, x);
  }
  return sum;
}

double DualCertificate::max_divergence_error(int radius, std::size_t ball_cap) const {
  BallIndex b = ball(group_, radius, ball_cap);
  const Element e = group_.identity();
  double worst = 0.0;
  for (const auto& x : b.elements) {
    double expected = x == e ? 1.0 : 0.0;
    worst = std::max(worst, std::abs(divergence_at(x) - expected));
  }
  return worst;
}

namespace {

Interval analytic_dual_norm(const F2WitnessComponent& comp, const NormingFunction& phi_dual) {
  switch (phi_dual.family()) {
    case NormingFunction::Family::dual_plus:
      return f2_witness_dual_plus_norm();
    case NormingFunction::Family::macaev: {
      // sum_k 2^-k (H(2^k - 1) - H(2^(k-1) - 1)), tail dominated by
      // 2^-K (ln 2 + 1) since each bracket is < ln 2 + 1.
      constexpr int kBlocks = 64;
      Interval sum = Interval::exact(0.0);
      for (int k = 1; k <= kBlocks; ++k) {
        BigCount hi_count = BigCount::pow2(k) - BigCount{1};
        BigCount lo_count = k == 1 ? BigCount{0} : BigCount::pow2(k - 1) - BigCount{1};
        sum += harmonic::range(lo_count, hi_count).scaled(std::exp2(-k));
      }
      double tail = std::exp2(-kBlocks) * (M_LN2 + 1.0);
      return Interval::bounds(sum.lo, sum.hi + tail);
    }
    case NormingFunction::Family::kyfan: {
      return gauge_norm(f2_witness_value_multiset(std::max(comp.depth, 64)), phi_dual);
    }
    case NormingFunction::Family::schatten: {
      double q = phi_dual.schatten_p();
      if (q == 1.0) throw InputError("witness dual norm diverges in the trace norm");
      // sum_k 2^(k-1) 2^(-kq) = r/(2(1-r)), r = 2^(1-q)
      double r = std::exp2(1.0 - q);
      return Interval::exact(std::pow(0.5 * r / (1.0 - r), 1.0 / q)).widened_rel(1e-14);
    }
    case NormingFunction::Family::trace:
      throw InputError("witness dual norm diverges in the trace norm");
  }
  throw InputError("unsupported dual family");
}

}  // namespace

Interval DualCertificate::component_dual_norm(std::size_t ci, const NormingFunction& phi_dual) const {
  const Component& c = components_.at(ci);
  if (c.is_zero()) return Interval::exact(0.0);
  if (c.analytic) return analytic_dual_norm(*c.analytic, phi_dual);
  return gauge_norm(abs_value_multiset(*c.table), phi_dual);
}

Interval DualCertificate::dual_norm_sum(const NormingFunction& phi) const {
  NormingFunction dual = phi.dual();
  Interval sum = Interval::exact(0.0);
  for (std::size_t ci = 0; ci < components_.size(); ++ci) {
    sum += component_dual_norm(ci, dual);
  }
  return sum;
}

DualCertificate build_f2_witness(int depth, ActionSide side) {
  // Depth 1 truncates the flow before it can cancel at the length-1 words.
  if (depth < 2) throw InputError("witness depth must be >= 2");
  GroupSpec g = GroupSpec::free_group(2);
  // Right action: the identity needs the last-letter flows attached to the
  // inverse generators (so that alpha(k^-1) prepends nothing and appends
  // the positive letter). Left action: first-letter flows on the positive
  // generators.
  std::vector<DualCertificate::Component> comps;
  for (const auto& gen : g.generators()) {
    DualCertificate::Component c;
    c.generator = gen;
    bool positive = gen.data.size() == 1 && gen.data[0] > 0;
    int letter = static_cast<int>(std::abs(gen.data[0]));
    if (side == ActionSide::left && positive) {
      c.analytic = F2WitnessComponent{letter, depth, side};
    } else if (side == ActionSide::right && !positive) {
      c.analytic = F2WitnessComponent{letter, depth, side};
    }
    comps.push_back(std::move(c));
  }
  int rr = depth - 1;
  // Full pointwise verification on large free-group balls is exponential;
  // cap the constructed check and let callers verify deeper explicitly.
  int verify_radius = std::min(rr, 7);
  return DualCertificate(std::move(g), side, std::move(comps), rr, verify_radius);
}

DualCertificate z_halfline_certificate(std::int64_t T) {
  if (T < 1) throw InputError("halfline certificate: T must be >= 1");
  GroupSpec g = GroupSpec::free_abelian(1);
  FiniteFunction f(g);
  for (std::int64_t x = 0; x <= T; ++x) f.set(Element{GroupFamily::free_abelian, {x}}, -1.0);
  std::vector<DualCertificate::Component> comps;
  for (const auto& gen : g.generators()) {
    DualCertificate::Component c;
    c.generator = gen;
    if (gen.data[0] == 1) c.table = f;
    comps.push_back(std::move(c));
  }
  int rr = static_cast<int>(T);
  return DualCertificate(std::move(g), ActionSide::right, std::move(comps), rr,
                         std::min<int>(rr, 4000));
}

double certify_lower(const DualCertificate& cert, const NormingFunction& phi, int R) {
  if (R >= cert.residual_radius()) {
    throw InputError("certify_lower: support radius " + std::to_string(R) +
                     " must stay below the residual radius " +
                     std::to_string(cert.residual_radius()));
  }
  Interval sum = cert.dual_norm_sum(phi);
  if (!(sum.hi > 0.0)) throw InvariantViolation("certify_lower: empty certificate");
  return 1.0 / sum.hi;
}

double k4_constant(const DualCertificate& cert, const NormingFunction& phi) {
  Interval sum = cert.dual_norm_sum(phi);
  if (!(sum.hi > 0.0)) throw InvariantViolation("k4_constant: empty certificate");
  return sum.hi;
}

Interval f2_witness_dual_plus_norm() {
  // Ratios at block boundaries N = 2^k - 1: (k/2). The sup over all N is
  // 1/(2 ln 2): within a block the partial sum is linear in the position
  // while log2(N+1)/2 is concave with equality at both block ends, and
  // H_N > ln(N+1). Deep boundary ratios give the certified lower end.
  double lo = 0.0;
  for (int k = 1; k <= 16384; k *= 2) {
    BigCount count = BigCount::pow2(k) - BigCount{1};
    Interval h = harmonic::eval(count);
    lo = std::max(lo, (0.5 * k) / h.hi);
  }
  double hi = 0.5 / M_LN2;
  hi = std::nextafter(std::nextafter(hi, 1.0), 1.0);
  return Interval::bounds(lo, hi);
}

Interval f2_witness_dual_plus_norm_truncated(int depth) {
  return dual_plus_norm(f2_witness_value_multiset(depth));
}

ValueMultiset f2_witness_value_multiset(int depth) {
  if (depth < 1 || depth > 1024) throw InputError("witness multiset depth out of range");
  ValueMultiset m;
  for (int k = 1; k <= depth; ++k) {
    m.add(std::exp2(-k), k == 1 ? BigCount{1} : BigCount::pow2(k - 1));
  }
  return m;
}

}  // namespace macaev
