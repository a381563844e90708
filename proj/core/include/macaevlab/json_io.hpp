#pragma once
//
// JSON codecs for the file formats the tools exchange:
//
//   value multiset   [[value, "count"]] with counts as decimal strings
//   function support [["word", value]]
//   certificate      {group, generators, action, functions, residual_radius,
//                     dual_norms, phi}
//   embedding        {source, target, M, pairs: [["src", "tgt"]]}
//   schedule dump    {phi, h, S, levels: [...]} with widths as decimal strings
//   ball cache       content-addressed by (group spec, radius)
//

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "macaevlab/ball.hpp"
#include "macaevlab/certificate.hpp"
#include "macaevlab/embedding.hpp"
#include "macaevlab/level_tree.hpp"

namespace macaev::io {

using nlohmann::json;

json multiset_to_json(const ValueMultiset& v);
ValueMultiset multiset_from_json(const json& j);

json function_support_to_json(const FiniteFunction& f);  // sorted by canonical form
FiniteFunction function_support_from_json(const GroupSpec& g, const json& j);

// dual_norms are written for the given phi; loading recomputes them and
// rejects files whose stored intervals disagree.
json certificate_to_json(const DualCertificate& cert, const NormingFunction& phi);
DualCertificate certificate_from_json(const json& j);

json embedding_to_json(const EmbeddingMap& rho);
EmbeddingMap embedding_from_json(const json& j, std::size_t ball_cap = kDefaultBallCap);

// Per-level dump of the complementary tree pair, truncated to max_levels.
json schedule_dump(const NormingFunction& phi, const Schedule& s, const LevelTree& x_tree,
                   const LevelTree& y_tree, std::int64_t max_levels);

// Ball cache: stable key and whole-ball files; loaders return nullopt on
// any mismatch or parse failure so callers can rebuild.
std::string ball_cache_key(const GroupSpec& g, int radius);
json ball_to_json(const BallIndex& b);
std::optional<BallIndex> ball_from_json(const json& j, const GroupSpec& g, int radius);

json interval_to_json(const Interval& v);

}  // namespace macaev::io
