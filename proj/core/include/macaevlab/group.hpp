#pragma once
//
// Built-in finitely generated groups with canonical element forms:
//
//   free:n        reduced words, letters +-1..+-n
//   zd:d          integer vectors (l1 word metric for unit generators)
//   lamplighter   Z/2 wreath Z, element = (lit positions, head position)
//   heisenberg    upper unitriangular 3x3 integer matrices, (x, y, z)
//   monoid:n      free monoid, positive words, no inverses
//
// Elements are canonical: equality is representation equality. Generating
// sets are explicit element lists, closed under inverses when symmetric.
//

#include <cstdint>
#include <string>
#include <vector>

#include "macaevlab/errors.hpp"

namespace macaev {

enum class GroupFamily { free_group, free_abelian, lamplighter, heisenberg, free_monoid };

std::string family_name(GroupFamily f);

struct Element {
  GroupFamily family{GroupFamily::free_group};
  // free_group/free_monoid: letter sequence, i-th generator = +i, inverse = -i
  // free_abelian: d coordinates
  // lamplighter: [head position, lit positions ascending...]
  // heisenberg: [x, y, z]
  std::vector<std::int64_t> data;

  bool operator==(const Element&) const = default;
  // Deterministic total order: word length first, then lexicographic.
  bool operator<(const Element& o) const {
    if (family != o.family) return family < o.family;
    if (data.size() != o.data.size()) return data.size() < o.data.size();
    return data < o.data;
  }
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
      h ^= v;
      h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(e.family));
    for (auto v : e.data) mix(static_cast<std::uint64_t>(v));
    return static_cast<std::size_t>(h);
  }
};

class GroupSpec {
 public:
  static GroupSpec free_group(int n);
  static GroupSpec free_abelian(int d);
  static GroupSpec lamplighter();
  static GroupSpec heisenberg();
  static GroupSpec free_monoid(int n);

  // "free:2", "zd:3", "lamplighter", "heisenberg", "monoid:2", optionally
  // followed by ";gens=w1,w2,..." (words or tuple forms; colon-separated
  // coordinates for zd, e.g. "gens=2,3" on zd:1 or "gens=1:0,1:1" on zd:2).
  // Custom generating sets are closed under inverses except for monoids.
  static GroupSpec parse(const std::string& spec);
  std::string to_string() const;

  GroupFamily family() const { return family_; }
  int rank() const { return rank_; }
  const std::vector<Element>& generators() const { return generators_; }
  bool symmetric() const { return symmetric_; }

  // Replaces the generating set (symmetrized unless the family is a monoid).
  GroupSpec with_generators(std::vector<Element> gens) const;

  Element identity() const;
  Element multiply(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;

  // Canonical element from a generator-letter word ("abA", "e"; lamplighter
  // letters t/T/s; heisenberg x/X/y/Y/z/Z; zd letters map to unit vectors).
  Element from_letters(const std::string& word) const;
  // Letters or the family's tuple form ("(1,-2)", "1:-2", "(2;0,3)").
  Element parse_element(const std::string& text) const;
  std::string element_str(const Element& e) const;

  bool operator==(const GroupSpec& o) const {
    return family_ == o.family_ && rank_ == o.rank_ && generators_ == o.generators_;
  }

 private:
  GroupSpec(GroupFamily f, int rank) : family_(f), rank_(rank) {}
  void use_default_generators();
  void check_element(const Element& e) const;

  GroupFamily family_;
  int rank_;
  std::vector<Element> generators_;
  bool symmetric_ = true;
  bool custom_gens_ = false;
};

}  // namespace macaev
