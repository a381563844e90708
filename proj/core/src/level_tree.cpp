#include "macaevlab/level_tree.hpp"

#include <algorithm>

namespace macaev {

LevelTree::LevelTree(Schedule schedule, TreeSide side, std::int64_t depth_max)
    : schedule_(std::move(schedule)), side_(side), depth_max_(depth_max) {
  if (depth_max_ < 0) throw InputError("level tree: negative depth");
  if (depth_max_ > schedule_.S(schedule_.length())) {
    throw InputError("level tree: depth exceeds the schedule's total length");
  }
}

int LevelTree::children_at(std::int64_t depth) const {
  if (depth < 0 || depth >= depth_max_) throw InputError("level tree: depth out of range");
  if (depth == 0) return 2;  // root order 2 in both trees
  // Locate p with S(p) <= depth < S(p+1).
  int lo = 0, hi = schedule_.length();
  while (hi - lo > 1) {
    int mid = (lo + hi) / 2;
    if (schedule_.S(mid) <= depth) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  bool p_even = lo % 2 == 0;
  bool single_child = side_ == TreeSide::X ? p_even : !p_even;
  return single_child ? 1 : 2;
}

std::int64_t LevelTree::width_exponent(std::int64_t depth) const {
  if (depth < 0 || depth > depth_max_) throw InputError("level tree: depth out of range");
  if (depth == 0) return 0;
  // 1 for the root plus the length of every branching region inside [1, depth).
  std::int64_t e = 1;
  for (int p = 0; p < schedule_.length(); ++p) {
    bool branch_region = side_ == TreeSide::X ? p % 2 == 1 : p % 2 == 0;
    if (!branch_region) continue;
    std::int64_t from = std::max<std::int64_t>(schedule_.S(p), 1);
    std::int64_t to = std::min<std::int64_t>(schedule_.S(p + 1), depth);
    if (to > from) e += to - from;
    if (schedule_.S(p) >= depth) break;
  }
  return e;
}

BigCount LevelTree::width(std::int64_t depth) const {
  return BigCount::pow2(static_cast<std::uint64_t>(width_exponent(depth)));
}

std::pair<LevelTree, LevelTree> LevelTree::build_pair(const Schedule& schedule,
                                                      std::int64_t depth) {
  return {LevelTree(schedule, TreeSide::X, depth), LevelTree(schedule, TreeSide::Y, depth)};
}

DiagonalRamp DiagonalRamp::for_schedule(const Schedule& s, TreeSide side, int n) {
  if (n < 1) throw InputError("ramp: n must be >= 1");
  int odd = 2 * n - 1, even = 2 * n;
  if (side == TreeSide::X) {
    if (s.length() < odd) throw InputError("ramp: schedule too short for this n");
    return {side, n, s.S(odd - 1), s.h(odd)};
  }
  if (s.length() < even) throw InputError("ramp: schedule too short for this n");
  return {side, n, s.S(even - 1), s.h(even)};
}

double DiagonalRamp::profile(std::int64_t depth) const {
  if (depth <= plateau_end) return 1.0;
  double v = 1.0 - static_cast<double>(depth - plateau_end) / static_cast<double>(slope);
  return std::max(v, 0.0);
}

double DiagonalRamp::step(std::int64_t depth) const {
  if (depth >= plateau_end && depth < support_end()) return 1.0 / static_cast<double>(slope);
  return 0.0;
}

ValueMultiset commutator_spectrum(const LevelTree& tree, const DiagonalRamp& ramp, int j) {
  if (j != 1 && j != 2) throw InputError("commutator_spectrum: j must be 1 or 2");
  if (ramp.side != tree.side()) throw InputError("commutator_spectrum: ramp/tree side mismatch");
  if (tree.depth_max() < ramp.support_end()) {
    throw InputError("commutator_spectrum: tree too shallow for the ramp support");
  }
  // Total width over [plateau_end, support_end), summed per region with
  // constant branching: geometric within branching chunks, linear within
  // non-branching ones. On the matched side the whole range is a single
  // non-branching region; the chunked walk keeps the count exact either way.
  std::int64_t from = ramp.plateau_end;
  std::int64_t to = ramp.support_end();
  BigCount multiplicity;
  std::int64_t d = from;
  while (d < to) {
    int children = tree.children_at(d);
    std::int64_t chunk_end = d + 1;
    while (chunk_end < to && tree.children_at(chunk_end) == children) ++chunk_end;
    std::uint64_t len = static_cast<std::uint64_t>(chunk_end - d);
    std::uint64_t e = static_cast<std::uint64_t>(tree.width_exponent(d));
    if (children == 1) {
      multiplicity += BigCount::pow2(e) * len;
    } else {
      multiplicity += BigCount::pow2(e + len) - BigCount::pow2(e);
    }
    d = chunk_end;
  }
  ValueMultiset spectrum;
  if (!multiplicity.is_zero()) {
    spectrum.add(ramp.step(ramp.plateau_end), multiplicity);
  }
  return spectrum;
}

Interval commutator_ideal_norm(const ValueMultiset& spectrum, const NormingFunction& phi) {
  return gauge_norm(spectrum, phi);
}

}  // namespace macaev
