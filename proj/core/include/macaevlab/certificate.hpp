#pragma once
//
// Dual flow certificates: per-generator dual functions f_k satisfying
//
//   sum_{k in K} (action(k^-1) f_k - f_k) = delta_e     exactly on B_rr,
//
// with rr the residual radius. Summation by parts then gives, for every f
// supported in B_R (R < rr) with f(e) = 1,
//
//   1 = sum_k <action(k) f - f, f_k>
//     <= max_k |action(k) f - f|_Phi * sum_k |f_k|_{Phi^d},
//
// so 1 / sum_k |f_k|_{Phi^d} is a certified lower bound on the minimax
// objective. Interval dual norms keep the bound valid under floating error:
// certified values always use the interval's upper end.
//
// The free-group witness is a pair of exponentially decaying flows on the
// positive words, carried analytically (closed-form values plus rigorous
// norm bounds for the untruncated family). Both translation-action
// conventions are realized: the first-letter flow satisfies the identity
// under the left action, the last-letter flow under the right action.
//

#include <optional>
#include <vector>

#include "macaevlab/ball.hpp"
#include "macaevlab/finite_function.hpp"
#include "macaevlab/norming.hpp"

namespace macaev {

enum class ActionSide { left, right };

std::string action_name(ActionSide a);
ActionSide parse_action(const std::string& name);

// One flow of the free-group witness, evaluated in closed form: nonzero on
// positive words w with 1 <= |w| <= depth whose indexing letter matches,
// with value 2^-|w|.
struct F2WitnessComponent {
  int letter;       // 1 or 2
  int depth;        // truncation depth
  ActionSide side;  // left: first-letter indexed; right: last-letter indexed

  double eval(const Element& e) const;
};

class DualCertificate {
 public:
  struct Component {
    Element generator;
    std::optional<FiniteFunction> table;
    std::optional<F2WitnessComponent> analytic;
    bool is_zero() const { return !table && !analytic; }
  };

  // Verifies the divergence identity pointwise on B_min(rr, verify_radius)
  // at construction; throws InvariantViolation when it fails.
  DualCertificate(GroupSpec group, ActionSide action, std::vector<Component> components,
                  int residual_radius, int verify_radius);

  const GroupSpec& group() const { return group_; }
  ActionSide action() const { return action_; }
  int residual_radius() const { return residual_radius_; }
  const std::vector<Component>& components() const { return components_; }

  double component_value(std::size_t ci, const Element& x) const;
  // sum_k (action(k^-1) f_k - f_k)(x)
  double divergence_at(const Element& x) const;
  // max over B_radius of |divergence - delta_e|
  double max_divergence_error(int radius, std::size_t ball_cap = kDefaultBallCap) const;

  Interval component_dual_norm(std::size_t ci, const NormingFunction& phi_dual) const;
  // sum_k |f_k|_{Phi^d} for the given primal Phi
  Interval dual_norm_sum(const NormingFunction& phi) const;

 private:
  GroupSpec group_;
  ActionSide action_;
  std::vector<Component> components_;
  int residual_radius_;
};

// The free-group witness on free:2 with standard generators; residual
// radius depth - 1.
DualCertificate build_f2_witness(int depth, ActionSide side = ActionSide::right);

// Trace-norm certificate on Z: f = -indicator([0, T]) attached to the +1
// generator; divergence delta_0 - delta_{T+1}, residual radius T. Its dual
// (sup) norm is 1, so the certified trace lower bound is 1.
DualCertificate z_halfline_certificate(std::int64_t T);

// 1 / sum_k upper(|f_k|_{Phi^d}); valid for every f supported in B_R with
// f(e) = 1 when R < residual radius.
double certify_lower(const DualCertificate& cert, const NormingFunction& phi, int R);

// C = sum_k upper(|f_k|_{Phi^d}): the uniform-norm constant with
// |f|_inf <= C * objective(f) for f supported well inside the residual
// radius (every translate of the identity used must stay exact).
double k4_constant(const DualCertificate& cert, const NormingFunction& phi);

// Dual-plus norm of one untruncated witness flow: scan lower bound plus the
// rigorous upper bound 1/(2 ln 2) (partial sums of the rearrangement are
// dominated by log2(N+1)/2 while H_N > ln(N+1)).
Interval f2_witness_dual_plus_norm();
// Same norm for the depth-D truncation (approaches the untruncated value
// from below as D grows).
Interval f2_witness_dual_plus_norm_truncated(int depth);
// Value multiset of one flow at the given truncation depth.
ValueMultiset f2_witness_value_multiset(int depth);

}  // namespace macaev
