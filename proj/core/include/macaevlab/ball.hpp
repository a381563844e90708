#pragma once
//
// BallIndex: the radius-R ball of a group's right Cayley graph, with a
// deterministic element order (breadth-first, lexicographic canonical form
// within a layer) and a per-generator adjacency table.
//

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "macaevlab/group.hpp"

namespace macaev {

inline constexpr std::size_t kDefaultBallCap = 2'000'000;

struct BallIndex {
  GroupSpec group;
  int radius = 0;
  std::vector<Element> elements;               // BFS order
  std::vector<std::int32_t> depth;             // word length per element
  std::vector<std::vector<std::int32_t>> adjacency;  // [gen][i] = index of elements[i]*gen, -1 outside
  std::unordered_map<Element, std::int32_t, ElementHash> index;

  std::int32_t find(const Element& e) const {
    auto it = index.find(e);
    return it == index.end() ? -1 : it->second;
  }
  std::size_t size() const { return elements.size(); }
  // First index of the given depth layer (layers are contiguous).
  std::int32_t layer_begin(int d) const;
};

// Complete, duplicate-free B_R = all products of at most R generators.
// Throws ResourceCapError past max_elements.
BallIndex ball(const GroupSpec& g, int radius, std::size_t max_elements = kDefaultBallCap);

}  // namespace macaev
