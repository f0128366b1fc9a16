#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

#include "heyde/distribution.hpp"
#include "heyde/group.hpp"
#include "heyde/linalg.hpp"
#include "heyde/rng.hpp"

namespace heyde {

// Gaussian characteristic-function parameters on R^n: a symmetric positive
// semidefinite matrix A and a mean vector t, both with rational entries.
struct GaussianParams {
  std::size_t dim = 0;
  RatMat a;
  RatVec t;
};

GaussianParams degenerate_gaussian(std::size_t dim);

// nullopt when valid; otherwise the reason. The psd gate uses exact
// principal minors and is limited to dim <= 4.
std::optional<std::string> validate(const GaussianParams& p);

// exp(-<A s, s> + i <t, s>) at a rational dual point s.
std::complex<double> gaussian_char(const GaussianParams& p, const RatVec& s);

// Convolution adds parameters.
GaussianParams convolve(const GaussianParams& a, const GaussianParams& b);

// Exact condition for the pair to solve the functional equation on R^n:
// A1 + eps_r^T A2 = 0 and t1 + eps_r^T t2 = 0.
bool gaussian_pair_condition(const GaussianParams& g1, const GaussianParams& g2,
                             const RatMat& eps_r);

// Distribution on R^n x D whose characteristic function factorizes as
// gaussian_char(gauss, s) * (rho * E_shift)^(h).
struct ProductDistribution {
  GaussianParams gauss;
  RationalDistribution rho;
  Elem shift;
};

std::complex<double> product_char(const ProductDistribution& m, const RatVec& s, const Elem& h);

// Blockwise action on the dual of R^n x D: an invertible rational matrix on
// the R^n coordinate and a group map on the finite coordinate.
struct BlockAutomorphism {
  RatMat real;
  GroupMap finite;
};

// Validates eps.real and I + eps.real invertible (exact determinants).
void validate_block(const BlockAutomorphism& eps);

struct ProductFeqResult {
  bool ok = false;
  double max_residual = 0.0;
  RatVec argmax_s, argmax_sp;  // sample attaining the max; empty when residual is 0
  Elem argmax_h, argmax_hp;
};

// Functional-equation residual over sample_count random rational (s, s')
// pairs crossed with the full finite dual grid.
ProductFeqResult check_product_feq(const ProductDistribution& m1, const ProductDistribution& m2,
                                   const BlockAutomorphism& eps, int sample_count, double tol,
                                   std::uint64_t seed);

struct FullDecompositionCheck {
  bool ok = false;
  std::string reason;
};

// Forward declared here to avoid dragging the engine header in.
struct Decomposition;

// Theorem-level verifier on R^n x D: discrete factors via the engine's
// decomposition check, Gaussian factors via the psd gate and the exact pair
// condition against eps_r.
FullDecompositionCheck verify_full_decomposition(const ProductDistribution& m1,
                                                 const ProductDistribution& m2,
                                                 const GroupMap& delta_d, const RatMat& eps_r,
                                                 const Decomposition& dec);

}  // namespace heyde
