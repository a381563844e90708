#include "macaevlab/kphi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>

#include "macaevlab/harmonic.hpp"

namespace macaev {

Interval objective(const FiniteFunction& f, const NormingFunction& phi) {
  const GroupSpec& g = f.group();
  if (g.generators().empty()) throw InputError("objective: empty generating set");
  Interval best = Interval::exact(0.0);
  bool first = true;
  for (const auto& gen : g.generators()) {
    FiniteFunction diff = translate(f, gen) - f;
    Interval n = gauge_norm(abs_value_multiset(diff), phi);
    best = first ? n : Interval::max(best, n);
    first = false;
  }
  return best;
}

FiniteFunction truncate_positive(const FiniteFunction& f) {
  const Element e = f.group().identity();
  if (f.at(e) != 1.0) throw InputError("truncate_positive: requires f(e) = 1");
  FiniteFunction out(f.group());
  for (const auto& [x, v] : f.support()) out.set(x, std::clamp(v, 0.0, 1.0));
  return out;
}

FiniteFunction radial_ramp(const BallIndex& b, int plateau, int slope) {
  if (plateau < 0 || slope < 1) throw InputError("radial_ramp: need plateau >= 0, slope >= 1");
  FiniteFunction f(b.group);
  for (std::size_t i = 0; i < b.size(); ++i) {
    double v = 1.0 - static_cast<double>(b.depth[i] - plateau) / slope;
    f.set(b.elements[i], std::clamp(v, 0.0, 1.0));
  }
  return f;
}

OptimMethod parse_method(const std::string& name) {
  if (name == "subgradient") return OptimMethod::subgradient;
  if (name == "profile" || name == "profile_family") return OptimMethod::profile_family;
  if (name == "coordinate") return OptimMethod::coordinate;
  if (name == "auto" || name == "automatic") return OptimMethod::automatic;
  throw InputError("unknown optimizer method '" + name + "'");
}

std::string method_name(OptimMethod m) {
  switch (m) {
    case OptimMethod::subgradient:
      return "subgradient";
    case OptimMethod::profile_family:
      return "profile_family";
    case OptimMethod::coordinate:
      return "coordinate";
    case OptimMethod::automatic:
      return "automatic";
  }
  return "?";
}

namespace {

// Optimizer workspace over ball(R+1): functions are dense vectors indexed by
// ball order, support restricted to the first `free_dim` entries (depth <= R).
struct Workspace {
  const BallIndex& b;
  std::size_t free_dim;                       // first index with depth R+1
  std::vector<std::vector<std::int32_t>> reverse;  // reverse[g][y] = x with x*gen = y

  explicit Workspace(const BallIndex& ball_ref, int radius)
      : b(ball_ref), free_dim(static_cast<std::size_t>(ball_ref.layer_begin(radius + 1))) {
    reverse.assign(b.adjacency.size(), std::vector<std::int32_t>(b.size(), -1));
    for (std::size_t gi = 0; gi < b.adjacency.size(); ++gi) {
      for (std::size_t x = 0; x < b.size(); ++x) {
        std::int32_t y = b.adjacency[gi][x];
        if (y >= 0) reverse[gi][y] = static_cast<std::int32_t>(x);
      }
    }
  }

  // diff[x] = f(x*gen) - f(x) over the whole ball.
  void difference(const std::vector<double>& f, std::size_t gi, std::vector<double>& out) const {
    const auto& adj = b.adjacency[gi];
    out.resize(b.size());
    for (std::size_t x = 0; x < b.size(); ++x) {
      double fx = f[x];
      std::int32_t y = adj[x];
      out[x] = (y >= 0 ? f[y] : 0.0) - fx;
    }
  }
};

double vector_gauge_norm(std::vector<double> y, const NormingFunction& phi) {
  for (auto& v : y) v = std::abs(v);
  std::sort(y.begin(), y.end(), std::greater<double>());
  while (!y.empty() && y.back() == 0.0) y.pop_back();
  switch (phi.family()) {
    case NormingFunction::Family::macaev: {
      double s = 0.0;
      for (std::size_t k = 0; k < y.size(); ++k) s += y[k] / static_cast<double>(k + 1);
      return s;
    }
    case NormingFunction::Family::trace:
      return std::accumulate(y.begin(), y.end(), 0.0);
    case NormingFunction::Family::schatten: {
      double p = phi.schatten_p(), s = 0.0;
      for (double v : y) s += std::pow(v, p);
      return std::pow(s, 1.0 / p);
    }
    case NormingFunction::Family::kyfan: {
      double s = 0.0;
      for (std::size_t k = 0; k < std::min<std::size_t>(y.size(), phi.kyfan_k()); ++k) s += y[k];
      return s;
    }
    case NormingFunction::Family::dual_plus: {
      double best = 0.0, s = 0.0;
      for (std::size_t k = 0; k < y.size(); ++k) {
        s += y[k];
        best = std::max(best, s / harmonic::eval(k + 1).mid());
      }
      return best;
    }
  }
  throw InputError("vector_gauge_norm: unsupported family");
}

double full_objective(const Workspace& ws, const std::vector<double>& f,
                      const NormingFunction& phi, std::size_t* argmax_gen = nullptr) {
  double best = -1.0;
  std::vector<double> diff;
  for (std::size_t gi = 0; gi < ws.b.adjacency.size(); ++gi) {
    ws.difference(f, gi, diff);
    double n = vector_gauge_norm(diff, phi);
    if (n > best) {
      best = n;
      if (argmax_gen) *argmax_gen = gi;
    }
  }
  return best;
}

// Subgradient of the gauge norm at y: weights on the sorted order, ties in
// |y| broken by ball index, sign-aligned. Zero entries get weight zero.
std::vector<double> norm_subgradient(const std::vector<double>& y, const NormingFunction& phi) {
  std::vector<std::size_t> order(y.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&y](std::size_t a, std::size_t b) {
    return std::abs(y[a]) > std::abs(y[b]);
  });
  std::vector<double> w(y.size(), 0.0);
  auto sgn = [](double v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); };
  switch (phi.family()) {
    case NormingFunction::Family::macaev: {
      for (std::size_t r = 0; r < order.size(); ++r) {
        std::size_t i = order[r];
        if (y[i] != 0.0) w[i] = sgn(y[i]) / static_cast<double>(r + 1);
      }
      break;
    }
    case NormingFunction::Family::trace: {
      for (std::size_t i = 0; i < y.size(); ++i) w[i] = sgn(y[i]);
      break;
    }
    case NormingFunction::Family::schatten: {
      double p = phi.schatten_p(), np = 0.0;
      for (double v : y) np += std::pow(std::abs(v), p);
      np = std::pow(np, 1.0 / p);
      if (np == 0.0) break;
      for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] != 0.0) w[i] = sgn(y[i]) * std::pow(std::abs(y[i]) / np, p - 1.0);
      }
      break;
    }
    case NormingFunction::Family::kyfan: {
      for (std::size_t r = 0; r < std::min<std::size_t>(order.size(), phi.kyfan_k()); ++r) {
        std::size_t i = order[r];
        if (y[i] != 0.0) w[i] = sgn(y[i]);
      }
      break;
    }
    case NormingFunction::Family::dual_plus: {
      double best = 0.0, s = 0.0;
      std::size_t best_k = 0;
      for (std::size_t k = 0; k < order.size(); ++k) {
        s += std::abs(y[order[k]]);
        double r = s / harmonic::eval(k + 1).mid();
        if (r > best) {
          best = r;
          best_k = k + 1;
        }
      }
      if (best_k == 0) break;
      double hk = harmonic::eval(best_k).mid();
      for (std::size_t r = 0; r < best_k; ++r) {
        std::size_t i = order[r];
        if (y[i] != 0.0) w[i] = sgn(y[i]) / hk;
      }
      break;
    }
  }
  return w;
}

void subgradient_descent(const Workspace& ws, const NormingFunction& phi, int iterations,
                         std::vector<double>& f, double& best_val, std::vector<double>& best_f) {
  std::vector<double> diff, grad(ws.b.size());
  for (int it = 0; it < iterations; ++it) {
    std::size_t gi = 0;
    double val = full_objective(ws, f, phi, &gi);
    if (val < best_val) {
      best_val = val;
      best_f = f;
    }
    ws.difference(f, gi, diff);
    std::vector<double> w = norm_subgradient(diff, phi);
    // Chain rule through diff: grad(v) = w(v g^-1) - w(v), support-restricted.
    std::fill(grad.begin(), grad.end(), 0.0);
    const auto& rev = ws.reverse[gi];
    for (std::size_t v = 0; v < ws.free_dim; ++v) {
      double gv = -w[v];
      if (rev[v] >= 0) gv += w[rev[v]];
      grad[v] = gv;
    }
    grad[0] = 0.0;  // f(e) stays pinned at 1
    double gnorm2 = 0.0;
    for (double v : grad) gnorm2 += v * v;
    if (gnorm2 < 1e-30) break;
    double target = 0.97 * best_val;
    double step = (val - target) / gnorm2;
    if (step <= 0) step = 1e-3 / std::sqrt(gnorm2);
    for (std::size_t v = 1; v < ws.free_dim; ++v) f[v] -= step * grad[v];
  }
  double final_val = full_objective(ws, f, phi);
  if (final_val < best_val) {
    best_val = final_val;
    best_f = f;
  }
}

void profile_scan(const Workspace& ws, const NormingFunction& phi, int radius, double& best_val,
                  std::vector<double>& best_f) {
  std::vector<double> f(ws.b.size(), 0.0);
  for (int plateau = 0; plateau <= radius; ++plateau) {
    for (int slope = 1; slope + plateau <= radius + 1; ++slope) {
      for (std::size_t i = 0; i < ws.b.size(); ++i) {
        double v = 1.0 - static_cast<double>(ws.b.depth[i] - plateau) / slope;
        f[i] = i < ws.free_dim ? std::clamp(v, 0.0, 1.0) : 0.0;
      }
      double val = full_objective(ws, f, phi);
      if (val < best_val) {
        best_val = val;
        best_f = f;
      }
    }
  }
}

void coordinate_descent(const Workspace& ws, const NormingFunction& phi, int passes,
                        std::vector<double>& f, double& best_val, std::vector<double>& best_f) {
  for (int pass = 0; pass < passes; ++pass) {
    for (std::size_t i = 1; i < ws.free_dim; ++i) {
      // Golden-section on the convex single-coordinate restriction.
      double lo = f[i] - 1.0, hi = f[i] + 1.0;
      constexpr double kInvPhi = 0.6180339887498949;
      double x1 = hi - kInvPhi * (hi - lo), x2 = lo + kInvPhi * (hi - lo);
      auto eval_at = [&](double v) {
        double saved = f[i];
        f[i] = v;
        double r = full_objective(ws, f, phi);
        f[i] = saved;
        return r;
      };
      double f1 = eval_at(x1), f2 = eval_at(x2);
      for (int step = 0; step < 24; ++step) {
        if (f1 <= f2) {
          hi = x2;
          x2 = x1;
          f2 = f1;
          x1 = hi - kInvPhi * (hi - lo);
          f1 = eval_at(x1);
        } else {
          lo = x1;
          x1 = x2;
          f1 = f2;
          x2 = lo + kInvPhi * (hi - lo);
          f2 = eval_at(x2);
        }
      }
      double cand = 0.5 * (lo + hi);
      if (eval_at(cand) <= full_objective(ws, f, phi)) f[i] = cand;
    }
    double val = full_objective(ws, f, phi);
    if (val < best_val) {
      best_val = val;
      best_f = f;
    }
  }
}

}  // namespace

MinimaxResult minimize_upper(const GroupSpec& g, const NormingFunction& phi, int radius,
                             OptimMethod method, const OptimOptions& opts,
                             const BallIndex* prebuilt) {
  if (radius < 0) throw InputError("minimize_upper: radius must be >= 0");
  if (prebuilt && (!(prebuilt->group == g) || prebuilt->radius != radius + 1)) {
    throw InputError("minimize_upper: prebuilt ball does not match group and radius + 1");
  }
  std::optional<BallIndex> owned;
  if (!prebuilt) owned = ball(g, radius + 1, opts.ball_cap);
  const BallIndex& b = prebuilt ? *prebuilt : *owned;
  Workspace ws(b, radius);

  // delta_e start: always feasible, so its value caps the result.
  std::vector<double> f(b.size(), 0.0);
  f[0] = 1.0;
  double best_val = full_objective(ws, f, phi);
  std::vector<double> best_f = f;
  int iterations = 0;

  if (radius > 0) {
    switch (method) {
      case OptimMethod::profile_family:
        profile_scan(ws, phi, radius, best_val, best_f);
        break;
      case OptimMethod::subgradient:
        subgradient_descent(ws, phi, opts.iterations, f, best_val, best_f);
        iterations = opts.iterations;
        break;
      case OptimMethod::coordinate: {
        coordinate_descent(ws, phi, 3, f, best_val, best_f);
        break;
      }
      case OptimMethod::automatic: {
        profile_scan(ws, phi, radius, best_val, best_f);
        f = best_f;  // warm start
        subgradient_descent(ws, phi, opts.iterations, f, best_val, best_f);
        iterations = opts.iterations;
        break;
      }
    }
  }

  FiniteFunction minimizer(g);
  for (std::size_t i = 0; i < ws.free_dim; ++i) minimizer.set(b.elements[i], best_f[i]);
  MinimaxResult res{objective(minimizer, phi), std::move(minimizer), radius, phi,
                    method_name(method), iterations};
  return res;
}

}  // namespace macaev
