#pragma once
//
// Finitely supported real functions on a group, plus the right and left
// translation actions
//
//   (alpha(g) f)(x) = f(x g)      (beta(g) f)(x) = f(g^-1 x)
//
// and the bilinear pairing <f, h> = sum_x f(x) h(x). No explicit zeros are
// ever stored.
//

#include <unordered_map>

#include "macaevlab/group.hpp"
#include "macaevlab/multiset.hpp"

namespace macaev {

class FiniteFunction {
 public:
  using Support = std::unordered_map<Element, double, ElementHash>;

  explicit FiniteFunction(GroupSpec group) : group_(std::move(group)) {}
  static FiniteFunction delta(const GroupSpec& g, const Element& at) {
    FiniteFunction f(g);
    f.set(at, 1.0);
    return f;
  }
  static FiniteFunction delta_identity(const GroupSpec& g) { return delta(g, g.identity()); }

  const GroupSpec& group() const { return group_; }
  double at(const Element& e) const {
    auto it = values_.find(e);
    return it == values_.end() ? 0.0 : it->second;
  }
  void set(const Element& e, double v) {
    if (v == 0.0) {
      values_.erase(e);
    } else {
      values_[e] = v;
    }
  }
  void add(const Element& e, double v) { set(e, at(e) + v); }

  std::size_t support_size() const { return values_.size(); }
  const Support& support() const { return values_; }

  FiniteFunction operator-(const FiniteFunction& o) const;
  FiniteFunction scaled(double a) const;

 private:
  GroupSpec group_;
  Support values_;
};

// (alpha(g) f)(x) = f(x g); support moves to support(f) * g^-1.
FiniteFunction translate(const FiniteFunction& f, const Element& g);
// (beta(g) f)(x) = f(g^-1 x); support moves to g * support(f).
FiniteFunction left_translate(const FiniteFunction& f, const Element& g);
// f~(x) = f(x^-1).
FiniteFunction inversion(const FiniteFunction& f);

// sum_x f(x) h(x); requires identical group specs.
double pairing(const FiniteFunction& f, const FiniteFunction& h);

// Multiset of |f(x)| over the support.
ValueMultiset abs_value_multiset(const FiniteFunction& f);

}  // namespace macaev
