#pragma once

#include <complex>
#include <vector>

#include "heyde/group.hpp"
#include "heyde/rational.hpp"
#include "heyde/rng.hpp"

namespace heyde {

// Probability distribution on a finite Abelian group with exact rational
// masses indexed by canonical element order.
class RationalDistribution {
 public:
  RationalDistribution(Group group, RatVec masses);

  static RationalDistribution point_mass(const Group& g, const Elem& x);
  static RationalDistribution haar(const Subgroup& k);

  const Group& group() const { return group_; }
  const RatVec& masses() const { return masses_; }
  const Rational& mass(const Elem& x) const { return masses_[group_.index_of(x)]; }
  const Rational& mass_at(std::int64_t index) const { return masses_[index]; }

  friend bool operator==(const RationalDistribution& a, const RationalDistribution& b) {
    return a.group_ == b.group_ && a.masses_ == b.masses_;
  }

 private:
  Group group_;
  RatVec masses_;
};

RationalDistribution convolve(const RationalDistribution& a, const RationalDistribution& b);
RationalDistribution reflect(const RationalDistribution& a);
RationalDistribution symmetrize(const RationalDistribution& a);  // a * reflect(a)
RationalDistribution pushforward(const RationalDistribution& a, const GroupMap& f);

std::vector<Elem> support(const RationalDistribution& a);

// {y : mu^(y) = 1}, via the exact support test: all of sigma(mu) pairs
// trivially with y. No tolerance involved.
Subgroup unit_set(const RationalDistribution& a);

// {k : mu * E_k = mu}. A translation by k with (k,y) != 1 forces mu^(y) = 0,
// which is the exact-zero certificate used by char_fn.
Subgroup translation_stabilizer(const RationalDistribution& a);

enum class Exact { none, zero, one };

struct CharValue {
  std::complex<double> value;
  Exact exact = Exact::none;
};

CharValue char_fn(const RationalDistribution& a, const Elem& y);

// All dual values at once; computes the stabilizer a single time.
std::vector<CharValue> char_table(const RationalDistribution& a);

// Random distribution whose masses are multiples of 1/q for a random q with
// 1 <= q <= max_den.
RationalDistribution random_distribution(const Group& g, std::int64_t max_den, Rng& rng);

}  // namespace heyde
