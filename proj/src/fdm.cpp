#include "heyde/fdm.hpp"

#include <algorithm>
#include <set>

namespace heyde {

GroupFunction::GroupFunction(Group g, RatVec v) : group(std::move(g)), values(std::move(v)) {
  if (static_cast<std::int64_t>(values.size()) != group.order())
    fail(Errc::dimension_mismatch, "function needs one value per group element");
}

GroupFunction finite_difference(const GroupFunction& f, const Elem& h) {
  const Group& g = f.group;
  RatVec out(g.order());
  for (std::int64_t i = 0; i < g.order(); ++i)
    out[i] = f.values[g.index_of(g.add(g.element(i), h))] - f.values[i];
  return GroupFunction(g, std::move(out));
}

GroupFunction iterated_difference(const GroupFunction& f, const Elem& h, int times) {
  GroupFunction cur = f;
  for (int i = 0; i < times; ++i) cur = finite_difference(cur, h);
  return cur;
}

bool is_polynomial(const GroupFunction& f, int n) {
  if (n < 0) fail(Errc::precondition, "polynomial degree bound must be >= 0");
  const Group& g = f.group;
  for (std::int64_t hi = 0; hi < g.order(); ++hi) {
    GroupFunction d = iterated_difference(f, g.element(hi), n + 1);
    if (!std::all_of(d.values.begin(), d.values.end(), [](const Rational& v) { return v == 0; }))
      return false;
  }
  return true;
}

bool lemma2_finite_check(const GroupFunction& f) {
  bool constant = std::all_of(f.values.begin(), f.values.end(),
                              [&](const Rational& v) { return v == f.values[0]; });
  for (int n = 0; n <= f.group.order(); ++n) {
    if (is_polynomial(f, n)) return constant;
  }
  return true;  // premise never holds
}

CascadeShifts cascade_shifts(const GroupMap& eps, const Elem& k1, const Elem& k2, const Elem& k3) {
  const Group& g = eps.source();
  CascadeShifts s;
  s.l11 = g.add(k1, eps.apply(k1));            // (I + eps) k1
  s.l12 = g.scale(2, eps.apply(k1));           // 2 eps k1
  s.l13 = g.sub(eps.apply(k1), k1);            // (eps - I) k1
  s.l21 = g.scale(2, k2);                      // 2 k2
  s.l22 = g.add(k2, eps.apply(k2));            // (I + eps) k2
  s.l31 = g.sub(k3, eps.apply(k3));            // (I - eps) k3
  return s;
}

Rational residual(const GroupFunction& phi1, const GroupFunction& phi2, const GroupMap& eps,
                  const Elem& u, const Elem& v) {
  const Group& g = phi1.group;
  Elem ev = eps.apply(v);
  return phi1.at(g.add(u, v)) + phi2.at(g.add(u, ev)) - phi1.at(g.sub(u, v)) -
         phi2.at(g.sub(u, ev));
}

bool cascade_identity_check(const GroupFunction& phi1, const GroupFunction& phi2,
                            const GroupMap& eps, const Elem& k1, const Elem& k2, const Elem& k3,
                            const Elem& u, const Elem& v) {
  const Group& g = phi1.group;
  CascadeShifts s = cascade_shifts(eps, k1, k2, k3);

  GroupFunction d = finite_difference(
      finite_difference(finite_difference(phi1, s.l11), s.l21), s.l31);
  Rational lhs = d.at(g.add(u, v));

  // Substitutions shift (u,v) by (eps k1, k1), (k2, k2), (-eps k3, k3); the
  // "minus the previous equation" step toggles each shift on or off with an
  // alternating sign.
  Rational rhs = 0;
  for (int s1 = 0; s1 <= 1; ++s1) {
    for (int s2 = 0; s2 <= 1; ++s2) {
      for (int s3 = 0; s3 <= 1; ++s3) {
        Elem du = u, dv = v;
        if (s1) {
          du = g.add(du, eps.apply(k1));
          dv = g.add(dv, k1);
        }
        if (s2) {
          du = g.add(du, k2);
          dv = g.add(dv, k2);
        }
        if (s3) {
          du = g.sub(du, eps.apply(k3));
          dv = g.add(dv, k3);
        }
        int sign = ((3 - s1 - s2 - s3) % 2 == 0) ? 1 : -1;
        rhs += sign * residual(phi1, phi2, eps, du, dv);
      }
    }
  }
  return lhs == rhs;
}

Subgroup subgroup_b(const GroupMap& eps, const Subgroup& w) {
  const Group& g = eps.source();
  GroupMap id = GroupMap::identity(g);
  auto image_of = [&](const GroupMap& f) {
    std::set<std::int64_t> idx;
    for (std::int64_t i : w.indices()) idx.insert(g.index_of(f.apply(g.element(i))));
    return idx;
  };
  std::set<std::int64_t> plus = image_of(id.plus(eps));
  std::set<std::int64_t> minus = image_of(id.minus(eps));
  std::set<std::int64_t> twice = image_of(GroupMap::mul_by(g, 2));

  std::vector<std::int64_t> out;
  for (std::int64_t i : plus) {
    if (minus.count(i) && twice.count(i)) out.push_back(i);
  }
  return Subgroup::from_sorted_indices(g, std::move(out));
}

GroupFunction random_function(const Group& g, std::int64_t max_abs_num, std::int64_t max_den,
                              Rng& rng) {
  RatVec v(g.order());
  for (auto& x : v) x = rng.rational(max_abs_num, max_den);
  return GroupFunction(g, std::move(v));
}

}  // namespace heyde
