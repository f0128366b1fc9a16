#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heyde/distribution.hpp"
#include "heyde/group.hpp"

namespace heyde {

// Exact joint law of (L1, L2) = (xi1 + xi2, xi1 + delta xi2) on X x X.
class JointDistribution {
 public:
  JointDistribution(Group group, RatVec masses);

  const Group& group() const { return group_; }
  const Rational& mass(const Elem& a, const Elem& b) const {
    return masses_[group_.index_of(a) * group_.order() + group_.index_of(b)];
  }
  const RatVec& masses() const { return masses_; }

  RationalDistribution l1_marginal() const;
  RationalDistribution l2_marginal() const;

 private:
  Group group_;
  RatVec masses_;  // index a * N + b
};

JointDistribution joint(const RationalDistribution& mu1, const RationalDistribution& mu2,
                        const GroupMap& delta);

// P(L1=a, L2=b) = P(L1=a, L2=-b) for all a, b — the exact finite-group form
// of conditional symmetry, with no conditioning on null atoms.
struct SymmetryResult {
  bool symmetric = false;
  std::optional<std::pair<Elem, Elem>> counterexample;  // violating (a, b)
};
SymmetryResult is_conditionally_symmetric(const RationalDistribution& mu1,
                                          const RationalDistribution& mu2, const GroupMap& delta);

// Functional equation mu1^(u+v) mu2^(u+eps v) = mu1^(u-v) mu2^(u-eps v) on
// the full dual grid, eps the adjoint of delta.
struct FeqResult {
  bool ok = false;
  double max_residual = 0.0;
  std::optional<std::pair<Elem, Elem>> argmax;  // (u, v) attaining the max
};
FeqResult satisfies_feq(const RationalDistribution& mu1, const RationalDistribution& mu2,
                        const GroupMap& delta, double tol = 1e-9);

bool lemma1_agrees(const RationalDistribution& mu1, const RationalDistribution& mu2,
                   const GroupMap& delta);

// Affine description of { mu1 : symmetry holds } for fixed mu2, intersected
// with the probability simplex. `particular` is the lexicographically least
// vertex when the intersection is nonempty; `basis` spans the homogeneous
// directions of the defining linear system.
struct PartnerSolution {
  bool feasible = false;
  std::optional<RationalDistribution> particular;
  std::vector<RatVec> basis;
};
PartnerSolution solve_partner(const RationalDistribution& mu2, const GroupMap& delta);

// All vertices of the same polytope, sorted by mass vector.
std::vector<RationalDistribution> partner_polytope_vertices(const RationalDistribution& mu2,
                                                            const GroupMap& delta);

// mu_j = rho_j * m_F * E_{g_j} with sigma(rho_j) in the 2-component, F a
// delta-invariant subgroup without elements of order 2.
struct Decomposition {
  RationalDistribution rho1;
  RationalDistribution rho2;
  Subgroup f;
  Elem g1;
  Elem g2;
};

struct DecompositionCheck {
  bool ok = false;
  std::string reason;
};
DecompositionCheck verify_decomposition(const RationalDistribution& mu1,
                                        const RationalDistribution& mu2, const GroupMap& delta,
                                        const Decomposition& dec);

struct ExtractResult {
  std::optional<Decomposition> dec;
  std::string failure;  // set when dec is empty
};
ExtractResult extract_decomposition(const RationalDistribution& mu1,
                                    const RationalDistribution& mu2, const GroupMap& delta,
                                    std::int64_t lattice_bound = Bounds{}.subgroup_lattice);

// Automorphisms delta with Ker(I + delta) = {0}.
std::vector<GroupMap> enumerate_valid_automorphisms(const Group& g,
                                                    std::int64_t bound = Bounds{}.automorphism);

}  // namespace heyde
