#include "macaevlab/finite_function.hpp"

#include <cmath>

namespace macaev {

FiniteFunction FiniteFunction::operator-(const FiniteFunction& o) const {
  if (!(group_ == o.group_)) throw InputError("function difference: group mismatch");
  FiniteFunction out = *this;
  for (const auto& [e, v] : o.values_) out.add(e, -v);
  return out;
}

FiniteFunction FiniteFunction::scaled(double a) const {
  FiniteFunction out(group_);
  for (const auto& [e, v] : values_) out.set(e, a * v);
  return out;
}

FiniteFunction translate(const FiniteFunction& f, const Element& g) {
  const GroupSpec& G = f.group();
  Element ginv = G.inverse(g);
  FiniteFunction out(G);
  for (const auto& [x, v] : f.support()) out.set(G.multiply(x, ginv), v);
  return out;
}

FiniteFunction left_translate(const FiniteFunction& f, const Element& g) {
  const GroupSpec& G = f.group();
  FiniteFunction out(G);
  for (const auto& [x, v] : f.support()) out.set(G.multiply(g, x), v);
  return out;
}

FiniteFunction inversion(const FiniteFunction& f) {
  const GroupSpec& G = f.group();
  FiniteFunction out(G);
  for (const auto& [x, v] : f.support()) out.set(G.inverse(x), v);
  return out;
}

double pairing(const FiniteFunction& f, const FiniteFunction& h) {
  if (!(f.group() == h.group())) throw InputError("pairing: group mismatch");
  const FiniteFunction& small = f.support_size() <= h.support_size() ? f : h;
  const FiniteFunction& large = f.support_size() <= h.support_size() ? h : f;
  double sum = 0.0;
  for (const auto& [e, v] : small.support()) sum += v * large.at(e);
  return sum;
}

ValueMultiset abs_value_multiset(const FiniteFunction& f) {
  ValueMultiset m;
  m.entries.reserve(f.support_size());
  for (const auto& [e, v] : f.support()) {
    double a = std::abs(v);
    if (a != 0.0) m.add(a, 1);
  }
  return m;
}

}  // namespace macaev
