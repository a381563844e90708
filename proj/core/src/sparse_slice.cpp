#include "macaevlab/sparse_slice.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "macaevlab/certificate.hpp"

namespace macaev {

SparseSlice SparseSlice::build(std::vector<int> children_per_depth, std::int64_t vertex_cap) {
  SparseSlice s;
  for (int c : children_per_depth) {
    if (c != 1 && c != 2) throw InputError("slice: children per depth must be 1 or 2");
  }
  s.children_ = std::move(children_per_depth);
  s.offsets_.resize(s.children_.size() + 2);
  s.offsets_[0] = 0;
  std::int64_t width = 1;
  for (std::size_t d = 0; d <= s.children_.size(); ++d) {
    s.offsets_[d + 1] = s.offsets_[d] + width;
    if (s.offsets_[d + 1] > vertex_cap) throw ResourceCapError("slice: vertex cap exceeded");
    if (d < s.children_.size()) width *= s.children_[d];
  }
  return s;
}

SparseSlice SparseSlice::from_tree(const LevelTree& tree, std::int64_t depth,
                                   std::int64_t vertex_cap) {
  if (depth > tree.depth_max()) throw InputError("slice: deeper than the tree");
  std::vector<int> children;
  children.reserve(static_cast<std::size_t>(depth));
  for (std::int64_t d = 0; d < depth; ++d) children.push_back(tree.children_at(d));
  return build(std::move(children), vertex_cap);
}

std::int64_t SparseSlice::level_width(int d) const {
  return offsets_.at(static_cast<std::size_t>(d) + 1) - offsets_.at(static_cast<std::size_t>(d));
}

int SparseSlice::depth_of(std::int64_t v) const {
  if (v < 0 || v >= vertex_count()) throw InputError("slice: vertex out of range");
  auto it = std::upper_bound(offsets_.begin(), offsets_.end() - 1, v);
  return static_cast<int>(it - offsets_.begin()) - 1;
}

std::int64_t SparseSlice::child(std::int64_t v, int j) const {
  if (j != 1 && j != 2) throw InputError("slice: isometry index must be 1 or 2");
  int d = depth_of(v);
  if (d >= depth()) return -1;
  std::int64_t i = v - level_offset(d);
  std::int64_t ci = children_[static_cast<std::size_t>(d)] == 2 ? 2 * i + (j - 1) : i;
  return level_offset(d + 1) + ci;
}

ValueMultiset SparseSlice::commutator_spectrum_explicit(const DiagonalRamp& ramp, int j) const {
  if (j != 1 && j != 2) throw InputError("slice: isometry index must be 1 or 2");
  if (ramp.support_end() > depth()) {
    throw InputError("slice: ramp must vanish before the top level");
  }
  ValueMultiset spectrum;
  for (int d = 0; d < depth(); ++d) {
    double step = ramp.step(d);
    if (step == 0.0) continue;
    for (std::int64_t i = 0; i < level_width(d); ++i) spectrum.add(step, 1);
  }
  return rearrange(spectrum);
}

std::vector<double> SparseSlice::commutator_singular_values(const DiagonalRamp& ramp,
                                                            int j) const {
  std::int64_t n = vertex_count();
  if (n > 4096) throw ResourceCapError("slice: dense SVD limited to 4096 vertices");
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
  for (std::int64_t v = 0; v < n; ++v) {
    std::int64_t cv = child(v, j);
    if (cv < 0) continue;
    int d = depth_of(v);
    c(cv, v) = ramp.profile(d) - ramp.profile(d + 1);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(c);
  std::vector<double> sv(svd.singularValues().data(),
                         svd.singularValues().data() + svd.singularValues().size());
  return sv;
}

TensorOrbit tensor_orbit(const SparseSlice& x_slice, const SparseSlice& y_slice,
                         int max_word_len) {
  if (max_word_len < 0) throw InputError("orbit: negative word length");
  if (x_slice.depth() < max_word_len || y_slice.depth() < max_word_len) {
    throw InputError("orbit: slices not deep enough for word length " +
                     std::to_string(max_word_len));
  }
  TensorOrbit orbit;
  orbit.max_word_len = max_word_len;
  orbit.entries.push_back({"", 0, 0});
  orbit.index.emplace("", 0);
  std::unordered_map<std::int64_t, std::string> seen;  // packed pair -> word
  auto pack = [&y_slice](std::int64_t x, std::int64_t y) {
    return x * (y_slice.vertex_count() + 1) + y;
  };
  seen.emplace(pack(0, 0), "");
  std::size_t level_begin = 0;
  for (int len = 1; len <= max_word_len; ++len) {
    std::size_t level_end = orbit.entries.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (int j = 1; j <= 2; ++j) {
        // R_j prepends the letter: the new image is (S_j x, T_j y).
        TensorOrbit::Entry parent = orbit.entries[i];
        std::string word = std::to_string(j) + parent.word;
        std::int64_t x = x_slice.child(parent.x_vertex, j);
        std::int64_t y = y_slice.child(parent.y_vertex, j);
        auto [it, fresh] = seen.emplace(pack(x, y), word);
        if (!fresh && orbit.injective) {
          orbit.injective = false;
          orbit.collision_a = it->second;
          orbit.collision_b = word;
        }
        orbit.index.emplace(word, orbit.entries.size());
        orbit.entries.push_back({std::move(word), x, y});
      }
    }
    level_begin = level_end;
  }
  return orbit;
}

DiagonalTensorBound diagonal_tensor_lower_bound(const TensorOrbit& orbit,
                                                const std::unordered_map<std::string, double>& a,
                                                int witness_depth) {
  auto root = a.find("");
  if (root == a.end() || root->second != 1.0) {
    throw InputError("diagonal bound: coefficients must have a(root) = 1");
  }
  int max_len = 0;
  for (const auto& [w, v] : a) {
    if (!orbit.index.count(w)) throw InputError("diagonal bound: support outside the orbit");
    if (v != 0.0) max_len = std::max(max_len, static_cast<int>(w.size()));
  }
  if (witness_depth <= max_len) {
    throw InputError("diagonal bound: witness depth must exceed the support length");
  }

  // Telescoping pairing sum_{j,w} (a(w) - a(jw)) 2^(-|w|-1); every nonzero
  // term involves a support word or its parent.
  std::unordered_map<std::string, bool> visited;
  double pairing_total = 0.0;
  auto accumulate = [&](const std::string& w) {
    if (static_cast<int>(w.size()) + 1 > witness_depth) return;
    if (visited.count(w)) return;
    visited.emplace(w, true);
    double aw = orbit.coefficient_or_zero(a, w);
    double weight = std::exp2(-static_cast<double>(w.size()) - 1.0);
    for (int j = 1; j <= 2; ++j) {
      double ajw = orbit.coefficient_or_zero(a, std::to_string(j) + w);
      pairing_total += (aw - ajw) * weight;
    }
  };
  for (const auto& [w, v] : a) {
    accumulate(w);
    if (!w.empty()) accumulate(w.substr(1));
  }
  if (std::abs(pairing_total - root->second) > 1e-12) {
    throw InvariantViolation("diagonal bound: pairing identity failed (" +
                             std::to_string(pairing_total) + ")");
  }

  double upper = f2_witness_dual_plus_norm().hi;
  return DiagonalTensorBound{std::abs(root->second) / (2.0 * upper), pairing_total, upper};
}

ValueMultiset orbit_commutator_multiset(const TensorOrbit& orbit,
                                        const std::unordered_map<std::string, double>& a,
                                        int j) {
  if (j != 1 && j != 2) throw InputError("orbit commutator: j must be 1 or 2");
  ValueMultiset m;
  for (const auto& entry : orbit.entries) {
    double aw = orbit.coefficient_or_zero(a, entry.word);
    double ajw = orbit.coefficient_or_zero(a, std::to_string(j) + entry.word);
    double v = std::abs(aw - ajw);
    if (v != 0.0) m.add(v, 1);
  }
  return rearrange(m);
}

}  // namespace macaev
