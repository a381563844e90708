#include "macaevlab/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace macaev {

namespace {

// Elements expressible as a product of exactly m generators.
std::unordered_set<Element, ElementHash> exact_products(const GroupSpec& g, int m,
                                                        std::size_t cap) {
  std::unordered_set<Element, ElementHash> layer{g.identity()};
  for (int step = 0; step < m; ++step) {
    std::unordered_set<Element, ElementHash> next;
    for (const auto& e : layer) {
      for (const auto& gen : g.generators()) {
        next.insert(g.multiply(e, gen));
        if (next.size() > cap) throw ResourceCapError("embedding: K^M product set too large");
      }
    }
    layer = std::move(next);
  }
  return layer;
}

}  // namespace

const Element& EmbeddingMap::apply(const Element& h) const {
  auto it = forward_.find(h);
  if (it == forward_.end()) throw InputError("embedding: element outside table domain");
  return it->second;
}

const Element* EmbeddingMap::preimage(const Element& y) const {
  auto it = backward_.find(y);
  return it == backward_.end() ? nullptr : &it->second;
}

void EmbeddingMap::validate(std::size_t ball_cap) {
  if (lipschitz_m_ < 1) throw InputError("embedding: M must be >= 1");
  forward_.clear();
  backward_.clear();
  for (const auto& [s, t] : pairs_) {
    if (!forward_.emplace(s, t).second) throw InputError("embedding: duplicate source element");
    if (!backward_.emplace(t, s).second) throw InputError("embedding: not injective");
  }
  if (!forward_.count(source_.identity())) throw InputError("embedding: identity not in domain");
  if (!(forward_.at(source_.identity()) == target_.identity())) {
    throw InputError("embedding: must map identity to identity");
  }

  // Domain must be a full source ball so that radius bookkeeping is sound.
  int radius = 0;
  while (true) {
    BallIndex b = ball(source_, radius, ball_cap);
    if (b.size() == pairs_.size()) {
      bool all = true;
      for (const auto& e : b.elements) {
        if (!forward_.count(e)) {
          all = false;
          break;
        }
      }
      if (all) break;
    }
    if (b.size() > pairs_.size()) throw InputError("embedding: domain is not a full source ball");
    ++radius;
  }
  domain_radius_ = radius;

  // Exact-M Lipschitz on all adjacent pairs inside the domain.
  auto km = exact_products(target_, lipschitz_m_, ball_cap);
  for (const auto& [h, image] : pairs_) {
    Element image_inv = target_.inverse(image);
    for (const auto& gen : source_.generators()) {
      Element hg = source_.multiply(h, gen);
      auto it = forward_.find(hg);
      if (it == forward_.end()) continue;
      Element step = target_.multiply(image_inv, it->second);
      if (!km.count(step)) {
        throw InputError("embedding: Lipschitz constant M=" + std::to_string(lipschitz_m_) +
                         " violated at '" + source_.element_str(h) + "' * '" +
                         source_.element_str(gen) + "'");
      }
    }
  }
}

EmbeddingMap EmbeddingMap::from_pairs(GroupSpec source, GroupSpec target, int lipschitz_m,
                                      const std::vector<std::pair<Element, Element>>& pairs,
                                      std::size_t ball_cap) {
  EmbeddingMap rho(std::move(source), std::move(target), lipschitz_m);
  rho.pairs_ = pairs;
  std::sort(rho.pairs_.begin(), rho.pairs_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  rho.validate(ball_cap);
  return rho;
}

EmbeddingMap EmbeddingMap::generator_inclusion(const GroupSpec& source, const GroupSpec& target,
                                               int domain_radius, std::size_t ball_cap) {
  bool word_source = source.family() == GroupFamily::free_group ||
                     source.family() == GroupFamily::free_monoid;
  if (!word_source || target.family() != GroupFamily::free_group) {
    throw InputError("generator_inclusion: needs word-based source and free target");
  }
  if (source.rank() > target.rank()) throw InputError("generator_inclusion: target rank too small");
  BallIndex b = ball(source, domain_radius, ball_cap);
  std::vector<std::pair<Element, Element>> pairs;
  pairs.reserve(b.size());
  for (const auto& e : b.elements) {
    Element image{GroupFamily::free_group, e.data};
    pairs.emplace_back(e, std::move(image));
  }
  return from_pairs(source, target, 1, pairs, ball_cap);
}

EmbeddingMap EmbeddingMap::identity_reexpression(const GroupSpec& source, const GroupSpec& target,
                                                 int domain_radius, std::size_t ball_cap) {
  if (source.family() != target.family() || source.rank() != target.rank()) {
    throw InputError("identity_reexpression: groups must coincide");
  }
  // Express each source generator in the target generating set.
  int m = 0;
  int probe = 1;
  for (;; ++probe) {
    BallIndex tb = ball(target, probe, ball_cap);
    bool all = true;
    int worst = 0;
    for (const auto& gen : source.generators()) {
      auto idx = tb.find(gen);
      if (idx < 0) {
        all = false;
        break;
      }
      worst = std::max(worst, static_cast<int>(tb.depth[idx]));
    }
    if (all) {
      m = worst;
      break;
    }
    if (probe > 16) throw InputError("identity_reexpression: generators not expressible");
  }
  BallIndex b = ball(source, domain_radius, ball_cap);
  std::vector<std::pair<Element, Element>> pairs;
  pairs.reserve(b.size());
  for (const auto& e : b.elements) pairs.emplace_back(e, e);
  return from_pairs(source, target, std::max(m, 1), pairs, ball_cap);
}

FiniteFunction pullback(const FiniteFunction& f_on_target, const EmbeddingMap& rho) {
  if (!(f_on_target.group() == rho.target())) throw InputError("pullback: group mismatch");
  FiniteFunction out(rho.source());
  for (const auto& [y, v] : f_on_target.support()) {
    if (const Element* h = rho.preimage(y)) out.set(*h, v);
  }
  return out;
}

double transfer_bound(const EmbeddingMap& rho) {
  if (!rho.target().symmetric()) throw InputError("transfer_bound: target generators not symmetric");
  double k = static_cast<double>(rho.target().generators().size());
  return rho.lipschitz_m() * std::pow(k, rho.lipschitz_m());
}

TransferredBound transfer_lower(const DualCertificate& source_cert, const EmbeddingMap& rho,
                                const NormingFunction& phi, std::size_t ball_cap) {
  if (!(source_cert.group() == rho.source())) {
    throw InputError("transfer_lower: certificate lives on a different source group");
  }
  double factor = transfer_bound(rho);

  // Support radii of pullbacks: the certificate covers source radius
  // rr - 1; pullback differences also need one spare layer of the table.
  int source_cap = std::min(source_cert.residual_radius() - 1, rho.domain_radius() - 1);
  if (source_cap < 0) throw InputError("transfer_lower: domain or certificate too shallow");

  BallIndex sb = ball(rho.source(), rho.domain_radius(), ball_cap);
  int target_reach = rho.lipschitz_m() * rho.domain_radius();
  BallIndex tb = ball(rho.target(), target_reach, ball_cap);

  // s_max(r) = deepest source element mapping into the target r-ball.
  std::vector<int> max_source_at(target_reach + 1, -1);
  for (const auto& [h, image] : rho.pairs()) {
    auto hi = sb.find(h);
    auto ti = tb.find(image);
    if (hi < 0 || ti < 0) throw InvariantViolation("transfer_lower: table outside balls");
    int td = tb.depth[ti];
    max_source_at[td] = std::max(max_source_at[td], static_cast<int>(sb.depth[hi]));
  }
  int valid_r = -1;
  int s_max = -1;
  for (int r = 0; r <= target_reach; ++r) {
    s_max = std::max(s_max, max_source_at[r]);
    if (s_max <= source_cap) {
      valid_r = r;
    } else {
      break;
    }
  }
  if (valid_r < 0) throw InvariantViolation("transfer_lower: no valid target radius");

  double src = certify_lower(source_cert, phi, source_cap);
  return TransferredBound{src / factor, src, factor, valid_r};
}

}  // namespace macaev
