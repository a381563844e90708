#include "macaevlab/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace macaev::io {

json interval_to_json(const Interval& v) { return json{{"lo", v.lo}, {"hi", v.hi}}; }

json multiset_to_json(const ValueMultiset& v) {
  json arr = json::array();
  for (const auto& e : rearrange(v).entries) {
    arr.push_back(json::array({e.value, e.count.to_decimal()}));
  }
  return arr;
}

ValueMultiset multiset_from_json(const json& j) {
  if (!j.is_array()) throw InputError("multiset json: expected an array");
  ValueMultiset v;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2) {
      throw InputError("multiset json: entries are [value, \"count\"]");
    }
    double value = item[0].get<double>();
    BigCount count = item[1].is_string() ? BigCount::from_decimal(item[1].get<std::string>())
                                         : BigCount{item[1].get<std::uint64_t>()};
    v.add(value, std::move(count));
  }
  return v;
}

json function_support_to_json(const FiniteFunction& f) {
  std::vector<std::pair<Element, double>> items(f.support().begin(), f.support().end());
  std::sort(items.begin(), items.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  json arr = json::array();
  for (const auto& [e, v] : items) {
    arr.push_back(json::array({f.group().element_str(e), v}));
  }
  return arr;
}

FiniteFunction function_support_from_json(const GroupSpec& g, const json& j) {
  if (!j.is_array()) throw InputError("support json: expected an array");
  FiniteFunction f(g);
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2) {
      throw InputError("support json: entries are [\"word\", value]");
    }
    f.set(g.parse_element(item[0].get<std::string>()), item[1].get<double>());
  }
  return f;
}

namespace {

// Largest radius (up to rr) whose ball stays comfortably enumerable, for
// divergence verification of table certificates loaded from files.
int safe_verify_radius(const GroupSpec& g, int rr) {
  int best = 0;
  for (int r = 1; r <= std::min(rr, 4000); ++r) {
    try {
      BallIndex b = ball(g, r, 100000);
      (void)b;
      best = r;
    } catch (const ResourceCapError&) {
      break;
    }
  }
  return std::max(best, 1);
}

}  // namespace

json certificate_to_json(const DualCertificate& cert, const NormingFunction& phi) {
  const GroupSpec& g = cert.group();
  json functions = json::array();
  bool analytic_emitted = false;
  for (const auto& c : cert.components()) {
    if (c.analytic) {
      if (!analytic_emitted) {
        functions.push_back(json{{"analytic", "f2_witness"}, {"depth", c.analytic->depth}});
        analytic_emitted = true;
      }
    } else if (c.table) {
      functions.push_back(json{{"generator", g.element_str(c.generator)},
                               {"support", function_support_to_json(*c.table)}});
    }
  }
  json gens = json::array();
  for (const auto& gen : g.generators()) gens.push_back(g.element_str(gen));
  NormingFunction dual = phi.dual();
  json norms = json::array();
  for (std::size_t ci = 0; ci < cert.components().size(); ++ci) {
    Interval nv = cert.component_dual_norm(ci, dual);
    norms.push_back(json::array({nv.lo, nv.hi}));
  }
  return json{{"group", g.to_string()},       {"generators", gens},
              {"action", action_name(cert.action())}, {"functions", functions},
              {"residual_radius", cert.residual_radius()}, {"dual_norms", norms},
              {"phi", phi.to_string()}};
}

DualCertificate certificate_from_json(const json& j) {
  GroupSpec g = GroupSpec::parse(j.at("group").get<std::string>());
  ActionSide action = parse_action(j.at("action").get<std::string>());
  int rr = j.at("residual_radius").get<int>();

  if (j.contains("generators")) {
    const auto& gens = j.at("generators");
    if (gens.size() != g.generators().size()) {
      throw InvariantViolation("certificate file: generator list disagrees with the group spec");
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (!(g.parse_element(gens[i].get<std::string>()) == g.generators()[i])) {
        throw InvariantViolation("certificate file: generator list disagrees with the group spec");
      }
    }
  }

  std::optional<DualCertificate> cert;
  const auto& functions = j.at("functions");
  bool has_analytic = false;
  for (const auto& fn : functions) {
    if (fn.contains("analytic")) has_analytic = true;
  }
  if (has_analytic) {
    if (functions.size() != 1) {
      throw InputError("certificate file: analytic witness cannot be mixed with tables");
    }
    const auto& fn = functions[0];
    if (fn.at("analytic").get<std::string>() != "f2_witness") {
      throw InputError("certificate file: unknown analytic family");
    }
    int depth = fn.at("depth").get<int>();
    cert = build_f2_witness(depth, action);
    if (!(cert->group() == g)) {
      throw InputError("certificate file: f2_witness requires free:2 with standard generators");
    }
    if (cert->residual_radius() != rr) {
      throw InvariantViolation("certificate file: residual radius disagrees with the witness depth");
    }
  } else {
    std::vector<DualCertificate::Component> comps;
    for (const auto& gen : g.generators()) comps.push_back({gen, std::nullopt, std::nullopt});
    for (const auto& fn : functions) {
      Element gen = g.parse_element(fn.at("generator").get<std::string>());
      auto it = std::find(g.generators().begin(), g.generators().end(), gen);
      if (it == g.generators().end()) {
        throw InputError("certificate file: component generator not in the generating set");
      }
      std::size_t ci = static_cast<std::size_t>(it - g.generators().begin());
      comps[ci].table = function_support_from_json(g, fn.at("support"));
    }
    cert = DualCertificate(g, action, std::move(comps), rr, safe_verify_radius(g, rr));
  }

  if (j.contains("dual_norms") && j.contains("phi")) {
    NormingFunction phi = NormingFunction::parse(j.at("phi").get<std::string>());
    NormingFunction dual = phi.dual();
    const auto& norms = j.at("dual_norms");
    if (norms.size() != cert->components().size()) {
      throw InvariantViolation("certificate file: dual_norms length mismatch");
    }
    for (std::size_t ci = 0; ci < norms.size(); ++ci) {
      Interval actual = cert->component_dual_norm(ci, dual);
      double lo = norms[ci][0].get<double>(), hi = norms[ci][1].get<double>();
      double tol = 1e-9 * std::max(1.0, std::abs(actual.hi));
      if (std::abs(lo - actual.lo) > tol || std::abs(hi - actual.hi) > tol) {
        throw InvariantViolation("certificate file: stored dual norms disagree with recomputation");
      }
    }
  }
  return std::move(*cert);
}

json embedding_to_json(const EmbeddingMap& rho) {
  json pairs = json::array();
  for (const auto& [s, t] : rho.pairs()) {
    pairs.push_back(json::array({rho.source().element_str(s), rho.target().element_str(t)}));
  }
  return json{{"source", rho.source().to_string()},
              {"target", rho.target().to_string()},
              {"M", rho.lipschitz_m()},
              {"pairs", pairs}};
}

EmbeddingMap embedding_from_json(const json& j, std::size_t ball_cap) {
  GroupSpec source = GroupSpec::parse(j.at("source").get<std::string>());
  GroupSpec target = GroupSpec::parse(j.at("target").get<std::string>());
  int m = j.at("M").get<int>();
  std::vector<std::pair<Element, Element>> pairs;
  for (const auto& p : j.at("pairs")) {
    pairs.emplace_back(source.parse_element(p[0].get<std::string>()),
                       target.parse_element(p[1].get<std::string>()));
  }
  return EmbeddingMap::from_pairs(std::move(source), std::move(target), m, pairs, ball_cap);
}

json schedule_dump(const NormingFunction& phi, const Schedule& s, const LevelTree& x_tree,
                   const LevelTree& y_tree, std::int64_t max_levels) {
  json h = json::array(), partial = json::array();
  for (int k = 1; k <= s.length(); ++k) h.push_back(s.h(k));
  for (int p = 0; p <= s.length(); ++p) partial.push_back(s.S(p));
  json levels = json::array();
  std::int64_t top = std::min<std::int64_t>(max_levels, x_tree.depth_max());
  for (std::int64_t d = 0; d < top; ++d) {
    levels.push_back(json{{"d", d},
                          {"branching_X", x_tree.branching_at(d)},
                          {"branching_Y", y_tree.branching_at(d)},
                          {"width_X", x_tree.width(d).to_decimal()},
                          {"width_Y", y_tree.width(d).to_decimal()}});
  }
  return json{{"phi", phi.to_string()}, {"h", h}, {"S", partial}, {"levels", levels}};
}

std::string ball_cache_key(const GroupSpec& g, int radius) {
  std::string material = g.to_string() + "|R=" + std::to_string(radius);
  // FNV-1a, stable across runs and platforms.
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char c : material) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return std::string(buf);
}

json ball_to_json(const BallIndex& b) {
  json elements = json::array();
  for (const auto& e : b.elements) elements.push_back(b.group.element_str(e));
  json depths = json::array();
  for (auto d : b.depth) depths.push_back(d);
  return json{{"group", b.group.to_string()},
              {"radius", b.radius},
              {"elements", elements},
              {"depth", depths}};
}

std::optional<BallIndex> ball_from_json(const json& j, const GroupSpec& g, int radius) {
  try {
    if (j.at("group").get<std::string>() != g.to_string()) return std::nullopt;
    if (j.at("radius").get<int>() != radius) return std::nullopt;
    const auto& elements = j.at("elements");
    const auto& depths = j.at("depth");
    if (elements.size() != depths.size() || elements.empty()) return std::nullopt;
    BallIndex b{g, radius, {}, {}, {}, {}};
    b.elements.reserve(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) {
      Element e = g.parse_element(elements[i].get<std::string>());
      b.depth.push_back(depths[i].get<std::int32_t>());
      b.index.emplace(e, static_cast<std::int32_t>(i));
      b.elements.push_back(std::move(e));
    }
    if (!(b.elements[0] == g.identity())) return std::nullopt;
    b.adjacency.resize(g.generators().size());
    for (std::size_t gi = 0; gi < g.generators().size(); ++gi) {
      auto& row = b.adjacency[gi];
      row.resize(b.elements.size());
      for (std::size_t i = 0; i < b.elements.size(); ++i) {
        row[i] = b.find(g.multiply(b.elements[i], g.generators()[gi]));
      }
    }
    return b;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace macaev::io
