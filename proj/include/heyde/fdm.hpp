#pragma once

#include <vector>

#include "heyde/group.hpp"
#include "heyde/rational.hpp"
#include "heyde/rng.hpp"

namespace heyde {

// Total function Y -> Q with exact rational values, one per group element.
struct GroupFunction {
  Group group;
  RatVec values;

  GroupFunction(Group g, RatVec v);
  const Rational& at(const Elem& y) const { return values[group.index_of(y)]; }

  friend bool operator==(const GroupFunction& a, const GroupFunction& b) {
    return a.group == b.group && a.values == b.values;
  }
};

// Delta_h f(y) = f(y + h) - f(y).
GroupFunction finite_difference(const GroupFunction& f, const Elem& h);
GroupFunction iterated_difference(const GroupFunction& f, const Elem& h, int times);

// Delta_h^{n+1} f = 0 for every h in Y.
bool is_polynomial(const GroupFunction& f, int n);

// On a finite group a polynomial is constant; verifies that implication for
// this f (vacuously true when no n <= |Y| makes f polynomial).
bool lemma2_finite_check(const GroupFunction& f);

// The six shifts produced by the three difference substitutions.
struct CascadeShifts {
  Elem l11, l12, l13, l21, l22, l31;
};
CascadeShifts cascade_shifts(const GroupMap& eps, const Elem& k1, const Elem& k2, const Elem& k3);

// phi1(u+v) + phi2(u + eps v) - phi1(u-v) - phi2(u - eps v).
Rational residual(const GroupFunction& phi1, const GroupFunction& phi2, const GroupMap& eps,
                  const Elem& u, const Elem& v);

// Exact operator identity behind the difference cascade: the triple
// difference of phi1 along (l11, l21, l31) at u+v equals the signed sum of
// the residual over the eight shifted argument pairs generated by the three
// substitutions. Holds for arbitrary phi1, phi2.
bool cascade_identity_check(const GroupFunction& phi1, const GroupFunction& phi2,
                            const GroupMap& eps, const Elem& k1, const Elem& k2, const Elem& k3,
                            const Elem& u, const Elem& v);

// B = (I + eps)W  ∩  (I - eps)W  ∩  W^(2).
Subgroup subgroup_b(const GroupMap& eps, const Subgroup& w);

GroupFunction random_function(const Group& g, std::int64_t max_abs_num, std::int64_t max_den,
                              Rng& rng);

}  // namespace heyde
