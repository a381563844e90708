#pragma once
//
// Bridge between the operator picture and the function picture: for the
// left regular representation lambda and the multiplication operator M_f,
// the commutator [lambda(g), M_f] maps e_x to (f(x) - f(gx)) e_{gx}, so its
// singular values are exactly the values of the left difference of f. The
// crosscheck materializes the operator on a ball large enough to contain
// the support and its translates, computes true singular values by dense
// SVD, and compares them against |beta(g) f - f| as multisets.
//

#include <vector>

#include "macaevlab/finite_function.hpp"
#include "macaevlab/norming.hpp"
#include "macaevlab/ball.hpp"

namespace macaev {

struct CrosscheckEntry {
  Element generator;
  double max_singular_deviation;  // worst multiset mismatch
  Interval operator_norm;         // |[lambda(g), M_f]|_Phi from the SVD
  Interval function_norm;         // |beta(g) f - f|_Phi
};

struct CrosscheckReport {
  std::vector<CrosscheckEntry> per_generator;
  double worst_deviation = 0.0;
  bool ok = false;  // worst deviation <= 1e-12
};

// Requires 0 <= f <= 1 (the positive-contraction setting) and a finitely
// supported f whose support sits inside a ball the cap allows.
CrosscheckReport regular_representation_crosscheck(const FiniteFunction& f,
                                                   const NormingFunction& phi,
                                                   std::size_t ball_cap = kDefaultBallCap);

}  // namespace macaev
