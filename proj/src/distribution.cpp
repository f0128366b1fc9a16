#include "heyde/distribution.hpp"

#include <algorithm>

namespace heyde {

RationalDistribution::RationalDistribution(Group group, RatVec masses)
    : group_(std::move(group)), masses_(std::move(masses)) {
  if (static_cast<std::int64_t>(masses_.size()) != group_.order())
    fail(Errc::dimension_mismatch, "mass vector must have one entry per group element");
  Rational total = 0;
  for (const Rational& m : masses_) {
    if (m < 0) fail(Errc::precondition, "masses must be nonnegative");
    total += m;
  }
  if (total != 1) fail(Errc::precondition, "masses must sum to exactly 1");
}

RationalDistribution RationalDistribution::point_mass(const Group& g, const Elem& x) {
  RatVec m(g.order(), 0);
  m[g.index_of(g.canon(x))] = 1;
  return RationalDistribution(g, std::move(m));
}

RationalDistribution RationalDistribution::haar(const Subgroup& k) {
  const Group& g = k.parent();
  RatVec m(g.order(), 0);
  Rational w = rat(1, k.size());
  for (std::int64_t idx : k.indices()) m[idx] = w;
  return RationalDistribution(g, std::move(m));
}

RationalDistribution convolve(const RationalDistribution& a, const RationalDistribution& b) {
  if (!(a.group() == b.group())) fail(Errc::group_mismatch, "convolution needs a common group");
  const Group& g = a.group();
  RatVec m(g.order(), 0);
  for (std::int64_t i = 0; i < g.order(); ++i) {
    if (a.mass_at(i) == 0) continue;
    Elem x = g.element(i);
    for (std::int64_t j = 0; j < g.order(); ++j) {
      if (b.mass_at(j) == 0) continue;
      m[g.index_of(g.add(x, g.element(j)))] += a.mass_at(i) * b.mass_at(j);
    }
  }
  return RationalDistribution(g, std::move(m));
}

RationalDistribution reflect(const RationalDistribution& a) {
  const Group& g = a.group();
  RatVec m(g.order());
  for (std::int64_t i = 0; i < g.order(); ++i) m[g.index_of(g.neg(g.element(i)))] = a.mass_at(i);
  return RationalDistribution(g, std::move(m));
}

RationalDistribution symmetrize(const RationalDistribution& a) { return convolve(a, reflect(a)); }

RationalDistribution pushforward(const RationalDistribution& a, const GroupMap& f) {
  if (!(f.source() == a.group())) fail(Errc::group_mismatch, "pushforward needs f defined on mu's group");
  RatVec m(f.target().order(), 0);
  for (std::int64_t i = 0; i < a.group().order(); ++i) {
    if (a.mass_at(i) == 0) continue;
    m[f.target().index_of(f.apply(a.group().element(i)))] += a.mass_at(i);
  }
  return RationalDistribution(f.target(), std::move(m));
}

std::vector<Elem> support(const RationalDistribution& a) {
  std::vector<Elem> out;
  for (std::int64_t i = 0; i < a.group().order(); ++i)
    if (a.mass_at(i) != 0) out.push_back(a.group().element(i));
  return out;
}

Subgroup unit_set(const RationalDistribution& a) {
  const Group& g = a.group();
  const std::vector<Elem> supp = support(a);
  std::vector<std::int64_t> idx;
  for (std::int64_t yi = 0; yi < g.order(); ++yi) {
    Elem y = g.element(yi);
    bool all_one = true;
    for (const Elem& x : supp) {
      if (!pairing(g, x, y).is_zero()) {
        all_one = false;
        break;
      }
    }
    if (all_one) idx.push_back(yi);
  }
  return Subgroup::from_sorted_indices(g, std::move(idx));
}

Subgroup translation_stabilizer(const RationalDistribution& a) {
  const Group& g = a.group();
  std::vector<std::int64_t> idx;
  for (std::int64_t ki = 0; ki < g.order(); ++ki) {
    Elem k = g.element(ki);
    bool fixes = true;
    for (std::int64_t i = 0; i < g.order(); ++i) {
      if (a.mass_at(g.index_of(g.add(g.element(i), k))) != a.mass_at(i)) {
        fixes = false;
        break;
      }
    }
    if (fixes) idx.push_back(ki);
  }
  return Subgroup::from_sorted_indices(g, std::move(idx));
}

namespace {

CharValue char_value(const RationalDistribution& a, const Elem& y, const Subgroup& stabilizer) {
  const Group& g = a.group();
  bool all_one = true;
  std::complex<double> sum = 0;
  for (std::int64_t i = 0; i < g.order(); ++i) {
    if (a.mass_at(i) == 0) continue;
    Turn t = pairing(g, g.element(i), y);
    if (!t.is_zero()) all_one = false;
    sum += to_double(a.mass_at(i)) * turn_to_complex(t);
  }
  if (all_one) return {std::complex<double>(1.0, 0.0), Exact::one};
  for (std::int64_t ki : stabilizer.indices()) {
    if (!pairing(g, g.element(ki), y).is_zero()) return {std::complex<double>(0.0, 0.0), Exact::zero};
  }
  return {sum, Exact::none};
}

}  // namespace

CharValue char_fn(const RationalDistribution& a, const Elem& y) {
  if (y.size() != a.group().factors())
    fail(Errc::group_mismatch, "dual argument must match the group's factor count");
  return char_value(a, a.group().canon(y), translation_stabilizer(a));
}

std::vector<CharValue> char_table(const RationalDistribution& a) {
  const Group& g = a.group();
  Subgroup stab = translation_stabilizer(a);
  std::vector<CharValue> out;
  out.reserve(g.order());
  for (std::int64_t yi = 0; yi < g.order(); ++yi) out.push_back(char_value(a, g.element(yi), stab));
  return out;
}

RationalDistribution random_distribution(const Group& g, std::int64_t max_den, Rng& rng) {
  std::int64_t q = rng.in_range(1, max_den);
  // Composition of q into N nonnegative parts via sorted cut points.
  std::vector<std::int64_t> cuts{0, q};
  for (std::int64_t i = 1; i < g.order(); ++i) cuts.push_back(rng.in_range(0, q));
  std::sort(cuts.begin(), cuts.end());
  RatVec m(g.order());
  for (std::int64_t i = 0; i < g.order(); ++i) m[i] = rat(cuts[i + 1] - cuts[i], q);
  return RationalDistribution(g, std::move(m));
}

}  // namespace heyde
