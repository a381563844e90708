#pragma once
//
// Materialized finite slice of a level tree: explicit vertices to a fixed
// depth with the shift isometries S_1, S_2 as vertex -> child assignments.
// {S_1 v, S_2 v} is exactly the child set of v, so S_1 v = S_2 v precisely
// at single-child vertices. Slices exist for cross-validating the symbolic
// level-count arithmetic and for the tensor-orbit simulation; they stay
// small by design.
//

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "macaevlab/level_tree.hpp"

namespace macaev {

class SparseSlice {
 public:
  // children_per_depth[d] in {1, 2}: children of every vertex at depth d.
  // Vertices exist at depths 0..children_per_depth.size().
  static SparseSlice build(std::vector<int> children_per_depth,
                           std::int64_t vertex_cap = 1 << 22);
  static SparseSlice from_tree(const LevelTree& tree, std::int64_t depth,
                               std::int64_t vertex_cap = 1 << 22);

  int depth() const { return static_cast<int>(children_.size()); }
  std::int64_t vertex_count() const { return offsets_.back(); }
  std::int64_t level_width(int d) const;
  std::int64_t level_offset(int d) const { return offsets_.at(static_cast<std::size_t>(d)); }
  int depth_of(std::int64_t v) const;
  int children_at(int d) const { return children_.at(static_cast<std::size_t>(d)); }

  // S_j v, or -1 when v sits at the top level. j in {1, 2}.
  std::int64_t child(std::int64_t v, int j) const;

  // Value multiset of A - S_j^* A S_j on the slice; requires the ramp to
  // vanish strictly before the top level so truncation is invisible.
  ValueMultiset commutator_spectrum_explicit(const DiagonalRamp& ramp, int j) const;

  // Singular values of the commutator [S_j, A] on the slice, via dense SVD.
  std::vector<double> commutator_singular_values(const DiagonalRamp& ramp, int j) const;

 private:
  std::vector<int> children_;
  std::vector<std::int64_t> offsets_;  // offsets_[d] = first vertex id of depth d
};

// Free-monoid orbit of the tensor pair R_j = S_j (x) T_j applied to the
// root tensor. Words are letter strings over '1','2' (empty = root); the
// image of a word is an elementary tensor recorded as a vertex pair.
struct TensorOrbit {
  int max_word_len = 0;
  struct Entry {
    std::string word;
    std::int64_t x_vertex;
    std::int64_t y_vertex;
  };
  std::vector<Entry> entries;  // by length, then generation order
  std::unordered_map<std::string, std::size_t> index;
  bool injective = true;
  std::string collision_a, collision_b;  // two words hitting the same tensor

  double coefficient_or_zero(const std::unordered_map<std::string, double>& a,
                             const std::string& w) const {
    auto it = a.find(w);
    return it == a.end() ? 0.0 : it->second;
  }
};

// Applies all words of length <= max_word_len; requires both slices at
// least that deep. Distinctness of the images is recorded, not assumed:
// a non-complementary slice pair produces a detected collision.
TensorOrbit tensor_orbit(const SparseSlice& x_slice, const SparseSlice& y_slice,
                         int max_word_len);

struct DiagonalTensorBound {
  double bound;          // |a(root)| / (2 * upper witness norm)
  double pairing_value;  // the telescoping pairing, equal to a(root)
  double witness_norm_upper;
};

// Lower bound on max_j |[R_j, A]| in the Macaev norm, for A diagonal in any
// orthonormal basis extending the orbit with orbit coefficients a
// (a(root) = 1 required). The first-letter witness flows pair against the
// prepend action w -> j w; the telescoping pairing collapses to a(root),
// and the dual-norm bound on the flows yields the constant.
DiagonalTensorBound diagonal_tensor_lower_bound(const TensorOrbit& orbit,
                                                const std::unordered_map<std::string, double>& a,
                                                int witness_depth);

// Multiset {|a(w) - a(jw)|} of singular values of [R_j, diag(a)] on the
// orbit, for direct confirmation of the bound.
ValueMultiset orbit_commutator_multiset(const TensorOrbit& orbit,
                                        const std::unordered_map<std::string, double>& a, int j);

}  // namespace macaev
