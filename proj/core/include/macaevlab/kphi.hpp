#pragma once
//
// Upper bounds for the Cayley minimax invariant
//
//   c_Phi(G, K, R) = inf { max_{g in K} |alpha(g)f - f|_Phi :
//                          f supported in B_R, f(e) = 1 }
//
// by direct optimization over the ball. Any feasible point is a valid upper
// bound, so non-convergence is never an error. The objective is a max of
// gauge norms of linear images of f: convex and nonsmooth.
//

#include <cstdint>
#include <string>

#include "macaevlab/ball.hpp"
#include "macaevlab/finite_function.hpp"
#include "macaevlab/norming.hpp"

namespace macaev {

// max_{g in K} |alpha(g)f - f|_Phi, K the group's generating set.
Interval objective(const FiniteFunction& f, const NormingFunction& phi);

// Values clamped to [0, 1]; requires f(e) = 1. Clamping is 1-Lipschitz on
// each difference value, so the clamped objective is at most twice the
// original for any gauge norm.
FiniteFunction truncate_positive(const FiniteFunction& f);

// f(v) = clamp(1 - (depth(v) - plateau)/slope, 0, 1) on the ball.
FiniteFunction radial_ramp(const BallIndex& b, int plateau, int slope);

enum class OptimMethod { subgradient, profile_family, coordinate, automatic };

OptimMethod parse_method(const std::string& name);
std::string method_name(OptimMethod m);

struct OptimOptions {
  std::uint64_t seed = 1;       // recorded for reproducibility
  int iterations = 600;
  std::size_t ball_cap = kDefaultBallCap;
};

struct MinimaxResult {
  Interval value;          // objective(minimizer), recomputed at report time
  FiniteFunction minimizer;
  int radius;
  NormingFunction phi;
  std::string method;
  int iterations;
};

// Feasible minimizer and its objective value: an upper bound on
// c_Phi(G, K, R). Deterministic given method and options. The value never
// exceeds objective(delta_e), the fallback start. A prebuilt ball of
// radius + 1 (e.g. from the CLI cache) skips the internal BFS.
MinimaxResult minimize_upper(const GroupSpec& g, const NormingFunction& phi, int radius,
                             OptimMethod method = OptimMethod::automatic,
                             const OptimOptions& opts = {},
                             const BallIndex* prebuilt = nullptr);

}  // namespace macaev
