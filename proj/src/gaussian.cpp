#include "heyde/gaussian.hpp"

#include <cmath>

#include "heyde/engine.hpp"

namespace heyde {

GaussianParams degenerate_gaussian(std::size_t dim) {
  return {dim, RatMat(dim, RatVec(dim, 0)), RatVec(dim, 0)};
}

namespace {

// Determinant of the principal submatrix indexed by the set bits of mask.
Rational principal_minor(const RatMat& a, unsigned mask) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (mask & (1u << i)) idx.push_back(i);
  RatMat sub(idx.size(), RatVec(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) sub[i][j] = a[idx[i]][idx[j]];
  return linalg::det(sub);
}

}  // namespace

std::optional<std::string> validate(const GaussianParams& p) {
  if (p.a.size() != p.dim || p.t.size() != p.dim) return "dimension mismatch";
  for (const auto& row : p.a)
    if (row.size() != p.dim) return "A is not square";
  for (std::size_t i = 0; i < p.dim; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (p.a[i][j] != p.a[j][i]) return "A is not symmetric";
  if (p.dim > 4) return "psd verification by exact minors supports dim <= 4";
  // Symmetric A is psd iff every principal minor is >= 0.
  for (unsigned mask = 1; mask < (1u << p.dim); ++mask) {
    if (principal_minor(p.a, mask) < 0) return "A is not positive semidefinite";
  }
  return std::nullopt;
}

std::complex<double> gaussian_char(const GaussianParams& p, const RatVec& s) {
  if (s.size() != p.dim) fail(Errc::dimension_mismatch, "dual point has wrong dimension");
  Rational quad = linalg::dot(linalg::mul(p.a, s), s);
  Rational lin = linalg::dot(p.t, s);
  return std::exp(std::complex<double>(-to_double(quad), to_double(lin)));
}

GaussianParams convolve(const GaussianParams& a, const GaussianParams& b) {
  if (a.dim != b.dim) fail(Errc::dimension_mismatch, "gaussian convolution needs equal dimension");
  GaussianParams out = a;
  out.a = linalg::add(a.a, b.a);
  for (std::size_t i = 0; i < a.dim; ++i) out.t[i] = a.t[i] + b.t[i];
  return out;
}

bool gaussian_pair_condition(const GaussianParams& g1, const GaussianParams& g2,
                             const RatMat& eps_r) {
  RatMat et = linalg::transpose(eps_r);
  if (!linalg::is_zero(linalg::add(g1.a, linalg::mul(et, g2.a)))) return false;
  RatVec t = linalg::mul(et, g2.t);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] += g1.t[i];
  return linalg::is_zero(t);
}

std::complex<double> product_char(const ProductDistribution& m, const RatVec& s, const Elem& h) {
  const Group& d = m.rho.group();
  RationalDistribution discrete =
      convolve(m.rho, RationalDistribution::point_mass(d, m.shift));
  return gaussian_char(m.gauss, s) * char_fn(discrete, d.canon(h)).value;
}

void validate_block(const BlockAutomorphism& eps) {
  if (!linalg::invertible(eps.real))
    fail(Errc::precondition, "real block of the automorphism must be invertible");
  RatMat iplus = linalg::add(linalg::identity(eps.real.size()), eps.real);
  if (linalg::det(iplus) == 0)
    fail(Errc::precondition, "I + eps must be invertible on the R^n block");
}

ProductFeqResult check_product_feq(const ProductDistribution& m1, const ProductDistribution& m2,
                                   const BlockAutomorphism& eps, int sample_count, double tol,
                                   std::uint64_t seed) {
  validate_block(eps);
  const Group& d = m1.rho.group();
  if (!(d == m2.rho.group() && d == eps.finite.source()))
    fail(Errc::group_mismatch, "product distributions and eps must share the finite group");
  if (m1.gauss.dim != m2.gauss.dim || m1.gauss.dim != eps.real.size())
    fail(Errc::dimension_mismatch, "gaussian blocks must share one dimension");
  const std::size_t n = m1.gauss.dim;
  Rng rng(seed);

  std::vector<CharValue> t1 =
      char_table(convolve(m1.rho, RationalDistribution::point_mass(d, m1.shift)));
  std::vector<CharValue> t2 =
      char_table(convolve(m2.rho, RationalDistribution::point_mass(d, m2.shift)));

  ProductFeqResult res;
  for (int sample = 0; sample < sample_count; ++sample) {
    RatVec s(n), sp(n);
    for (auto& x : s) x = rng.rational(8, 8);
    for (auto& x : sp) x = rng.rational(8, 8);
    RatVec eps_sp = linalg::mul(eps.real, sp);

    RatVec s_plus(n), s_minus(n), se_plus(n), se_minus(n);
    for (std::size_t i = 0; i < n; ++i) {
      s_plus[i] = s[i] + sp[i];
      s_minus[i] = s[i] - sp[i];
      se_plus[i] = s[i] + eps_sp[i];
      se_minus[i] = s[i] - eps_sp[i];
    }
    std::complex<double> ga_plus = gaussian_char(m1.gauss, s_plus);
    std::complex<double> ga_minus = gaussian_char(m1.gauss, s_minus);
    std::complex<double> gb_plus = gaussian_char(m2.gauss, se_plus);
    std::complex<double> gb_minus = gaussian_char(m2.gauss, se_minus);
    for (std::int64_t hi = 0; hi < d.order(); ++hi) {
      Elem h = d.element(hi);
      for (std::int64_t hpi = 0; hpi < d.order(); ++hpi) {
        Elem hp = d.element(hpi);
        Elem eps_hp = eps.finite.apply(hp);
        std::complex<double> lhs = ga_plus * t1[d.index_of(d.add(h, hp))].value * gb_plus *
                                   t2[d.index_of(d.add(h, eps_hp))].value;
        std::complex<double> rhs = ga_minus * t1[d.index_of(d.sub(h, hp))].value * gb_minus *
                                   t2[d.index_of(d.sub(h, eps_hp))].value;
        double r = std::abs(lhs - rhs);
        if (r > res.max_residual) {
          res.max_residual = r;
          res.argmax_s = s;
          res.argmax_sp = sp;
          res.argmax_h = h;
          res.argmax_hp = hp;
        }
      }
    }
  }
  res.ok = res.max_residual <= tol;
  return res;
}

FullDecompositionCheck verify_full_decomposition(const ProductDistribution& m1,
                                                 const ProductDistribution& m2,
                                                 const GroupMap& delta_d, const RatMat& eps_r,
                                                 const Decomposition& dec) {
  for (const auto* m : {&m1, &m2}) {
    if (auto why = validate(m->gauss)) return {false, "gaussian factor invalid: " + *why};
  }
  if (!gaussian_pair_condition(m1.gauss, m2.gauss, eps_r))
    return {false, "gaussian factors do not satisfy the pair condition"};

  const Group& d = m1.rho.group();
  RationalDistribution mu1 = convolve(m1.rho, RationalDistribution::point_mass(d, m1.shift));
  RationalDistribution mu2 = convolve(m2.rho, RationalDistribution::point_mass(d, m2.shift));
  DecompositionCheck discrete = verify_decomposition(mu1, mu2, delta_d, dec);
  if (!discrete.ok) return {false, "discrete factor: " + discrete.reason};
  return {true, ""};
}

}  // namespace heyde
