#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "heyde/rational.hpp"

namespace heyde::linalg {

RatMat identity(std::size_t n);
RatMat transpose(const RatMat& a);
RatMat mul(const RatMat& a, const RatMat& b);
RatVec mul(const RatMat& a, const RatVec& v);
RatMat add(const RatMat& a, const RatMat& b);
RatMat scale(const Rational& c, const RatMat& a);
Rational dot(const RatVec& a, const RatVec& b);
bool is_zero(const RatMat& a);
bool is_zero(const RatVec& a);

// Reduced row echelon form, in place semantics on a copy.
struct Echelon {
  RatMat rows;
  std::vector<int> pivot_cols;
  int rank = 0;
};
Echelon rref(RatMat a);

// Exact solution set of A x = b: a particular solution (free variables 0)
// plus a basis of the homogeneous solutions.
struct AffineSolution {
  bool consistent = false;
  RatVec particular;
  std::vector<RatVec> nullspace;
};
AffineSolution solve(const RatMat& a, const RatVec& b);

Rational det(RatMat a);
bool invertible(const RatMat& a);
std::optional<RatMat> inverse(const RatMat& a);

}  // namespace heyde::linalg
