#pragma once
//
// Symbolic description of the complementary-branching rooted tree pair.
// Branching depends only on the depth, so level widths determine every
// singular-value multiset exactly; widths are powers of two tracked by
// exponent, which is what makes the construction checkable at true scale
// (level counts like 2^48 and far beyond).
//
//   X tree: one child per vertex on [S(2k-2), S(2k-1)), two otherwise
//   Y tree: one child per vertex on [S(2k-1), S(2k)),   two otherwise
//   both roots have two children
//
// At every depth >= 1 exactly one of the two trees branches.
//

#include <utility>

#include "macaevlab/interval.hpp"
#include "macaevlab/multiset.hpp"
#include "macaevlab/schedule.hpp"

namespace macaev {

enum class TreeSide { X, Y };

class LevelTree {
 public:
  // depth_max limits queries; must stay within the schedule's total S.
  LevelTree(Schedule schedule, TreeSide side, std::int64_t depth_max);

  TreeSide side() const { return side_; }
  std::int64_t depth_max() const { return depth_max_; }
  const Schedule& schedule() const { return schedule_; }

  // Children per vertex at this depth (1 or 2); valid for depth < depth_max.
  int children_at(std::int64_t depth) const;
  bool branching_at(std::int64_t depth) const { return children_at(depth) == 2; }
  // width(depth) = 2^width_exponent(depth); valid for depth <= depth_max.
  std::int64_t width_exponent(std::int64_t depth) const;
  BigCount width(std::int64_t depth) const;

  static std::pair<LevelTree, LevelTree> build_pair(const Schedule& schedule,
                                                    std::int64_t depth);

 private:
  Schedule schedule_;
  TreeSide side_;
  std::int64_t depth_max_;
};

// Diagonal cutoff profile: 1 up to the plateau end, then a linear ramp of
// the given slope length, 0 from plateau_end + slope on. The X-side profile
// for index n has plateau S(2n-2) and slope h_{2n-1}; the Y side uses
// S(2n-1) and h_{2n}. Profiles increase pointwise with n.
struct DiagonalRamp {
  TreeSide side;
  int n;
  std::int64_t plateau_end;
  std::int64_t slope;

  static DiagonalRamp for_schedule(const Schedule& s, TreeSide side, int n);

  double profile(std::int64_t depth) const;
  // profile(d) - profile(d+1), computed in closed form: exactly 1/slope on
  // the decreasing range, 0 elsewhere.
  double step(std::int64_t depth) const;
  std::int64_t support_end() const { return plateau_end + slope; }
};

// Value multiset of A - S_j^* A S_j for the diagonal ramp A on the tree:
// the step value 1/slope with multiplicity = total width over the
// decreasing depth range. Requires matching sides and
// tree.depth_max() >= ramp.support_end(). The isometry index j does not
// affect the diagonal; it is accepted for interface parity with the
// explicit slice.
ValueMultiset commutator_spectrum(const LevelTree& tree, const DiagonalRamp& ramp, int j);

// Phi-norm of a commutator spectrum (interval when huge multiplicities
// route through the asymptotic harmonic path).
Interval commutator_ideal_norm(const ValueMultiset& spectrum, const NormingFunction& phi);

}  // namespace macaev
