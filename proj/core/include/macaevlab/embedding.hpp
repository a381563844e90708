#pragma once
//
// Injective Lipschitz embeddings between groups, given as finite tables on
// a full source ball, and the transfer of certified lower bounds through
// them with the explicit factor M * |K|^M.
//
// The Lipschitz condition is verified at construction in the form matched
// to right translation: for adjacent pairs in the domain,
//
//   rho(h)^-1 rho(h g_p)  is a product of exactly M target generators.
//
// Then for any f on the target, each difference (f o rho)(h g_p) - (f o rho)(h)
// is pointwise dominated by (sum_{t in K^M} |alpha(t) f - f|) o rho, and the
// pullback of a sum of at most |K|^M terms, each of norm at most
// M * max_k |alpha(k) f - f|_Phi, gives the factor. The bound holds for
// every norming function.
//

#include <unordered_map>
#include <vector>

#include "macaevlab/ball.hpp"
#include "macaevlab/certificate.hpp"
#include "macaevlab/finite_function.hpp"

namespace macaev {

class EmbeddingMap {
 public:
  // Table must cover a full source ball, map identity to identity, be
  // injective, and satisfy the exact-M Lipschitz condition above.
  static EmbeddingMap from_pairs(GroupSpec source, GroupSpec target, int lipschitz_m,
                                 const std::vector<std::pair<Element, Element>>& pairs,
                                 std::size_t ball_cap = kDefaultBallCap);

  // Letter-wise inclusion (free:n into free:m, n <= m; monoid:n into free:n
  // or free:m). M = 1.
  static EmbeddingMap generator_inclusion(const GroupSpec& source, const GroupSpec& target,
                                          int domain_radius,
                                          std::size_t ball_cap = kDefaultBallCap);

  // Identity map between the same group with two generating sets; M is the
  // word length needed to express the source generators in the target set.
  static EmbeddingMap identity_reexpression(const GroupSpec& source, const GroupSpec& target,
                                            int domain_radius,
                                            std::size_t ball_cap = kDefaultBallCap);

  const GroupSpec& source() const { return source_; }
  const GroupSpec& target() const { return target_; }
  int lipschitz_m() const { return lipschitz_m_; }
  int domain_radius() const { return domain_radius_; }
  const std::vector<std::pair<Element, Element>>& pairs() const { return pairs_; }

  bool in_domain(const Element& h) const { return forward_.count(h) > 0; }
  const Element& apply(const Element& h) const;
  const Element* preimage(const Element& y) const;

 private:
  EmbeddingMap(GroupSpec s, GroupSpec t, int m) : source_(std::move(s)), target_(std::move(t)), lipschitz_m_(m) {}
  void validate(std::size_t ball_cap);

  GroupSpec source_;
  GroupSpec target_;
  int lipschitz_m_;
  int domain_radius_ = 0;
  std::vector<std::pair<Element, Element>> pairs_;  // deterministic order
  std::unordered_map<Element, Element, ElementHash> forward_;
  std::unordered_map<Element, Element, ElementHash> backward_;
};

// (f o rho)(h) = f(rho(h)). The value multiset is a sub-multiset of f's by
// injectivity, so |f o rho|_Phi <= |f|_Phi for every norming function.
FiniteFunction pullback(const FiniteFunction& f_on_target, const EmbeddingMap& rho);

// M * |K_target|^M. Requires a symmetric target generating set.
double transfer_bound(const EmbeddingMap& rho);

struct TransferredBound {
  double value;             // source certified bound / factor
  double source_bound;
  double factor;
  int valid_target_radius;  // largest target support radius the chain covers
};

// Push a source certificate through the embedding: a positive certified
// lower bound for the target objective, valid for target functions
// supported in B_{valid_target_radius} with f(e) = 1.
TransferredBound transfer_lower(const DualCertificate& source_cert, const EmbeddingMap& rho,
                                const NormingFunction& phi,
                                std::size_t ball_cap = kDefaultBallCap);

}  // namespace macaev
