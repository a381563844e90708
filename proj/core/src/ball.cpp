#include "macaevlab/ball.hpp"

#include <algorithm>

namespace macaev {

std::int32_t BallIndex::layer_begin(int d) const {
  auto it = std::lower_bound(depth.begin(), depth.end(), static_cast<std::int32_t>(d));
  return static_cast<std::int32_t>(it - depth.begin());
}

BallIndex ball(const GroupSpec& g, int radius, std::size_t max_elements) {
  if (radius < 0) throw InputError("ball: radius must be >= 0");
  if (g.generators().empty()) throw InputError("ball: empty generating set");

  BallIndex b{g, radius, {}, {}, {}, {}};
  b.elements.push_back(g.identity());
  b.depth.push_back(0);
  b.index.emplace(g.identity(), 0);

  std::size_t layer_start = 0;
  for (int d = 1; d <= radius; ++d) {
    std::size_t layer_end = b.elements.size();
    std::vector<Element> next;
    for (std::size_t i = layer_start; i < layer_end; ++i) {
      for (const auto& gen : g.generators()) {
        Element prod = g.multiply(b.elements[i], gen);
        if (b.index.count(prod)) continue;
        b.index.emplace(prod, -1);  // mark seen; real index assigned after sort
        next.push_back(std::move(prod));
      }
    }
    std::sort(next.begin(), next.end());
    for (auto& e : next) {
      if (b.elements.size() >= max_elements) {
        throw ResourceCapError("ball: element cap " + std::to_string(max_elements) +
                               " exceeded at radius " + std::to_string(d));
      }
      b.index[e] = static_cast<std::int32_t>(b.elements.size());
      b.elements.push_back(std::move(e));
      b.depth.push_back(d);
    }
    layer_start = layer_end;
  }

  b.adjacency.resize(g.generators().size());
  for (std::size_t gi = 0; gi < g.generators().size(); ++gi) {
    auto& row = b.adjacency[gi];
    row.resize(b.elements.size());
    for (std::size_t i = 0; i < b.elements.size(); ++i) {
      row[i] = b.find(g.multiply(b.elements[i], g.generators()[gi]));
    }
  }
  return b;
}

}  // namespace macaev
