#pragma once

// Independent oracle for the Gaussian pair condition: substitute the
// Gaussian characteristic functions into the functional equation, expand the
// exponents as polynomials in the 2n coordinates of (u, v) with exact
// rational coefficients, and test whether the difference vanishes
// identically. Deliberately monomial-by-monomial, sharing no code with the
// closed-form matrix test it checks.

#include <map>
#include <vector>

#include "heyde/gaussian.hpp"
#include "heyde/rational.hpp"

namespace heyde::testutil {

using Monomial = std::vector<int>;  // exponent per variable
using Poly = std::map<Monomial, Rational>;

inline Poly poly_var(std::size_t idx, std::size_t nvars) {
  Monomial m(nvars, 0);
  m[idx] = 1;
  return {{m, 1}};
}

inline void poly_add(Poly& a, const Poly& b, const Rational& scale = 1) {
  for (const auto& [m, c] : b) {
    Rational& slot = a[m];
    slot += scale * c;
    if (slot == 0) a.erase(m);
  }
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      Monomial m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      Rational& slot = out[m];
      slot += ca * cb;
      if (slot == 0) out.erase(m);
    }
  }
  return out;
}

// The four argument combinations u+v, u+Ev, u-v, u-Ev as coordinate polys.
inline std::vector<Poly> argument(const RatMat& eps, std::size_t n, bool plus, bool twisted) {
  std::vector<Poly> coords(n);
  for (std::size_t i = 0; i < n; ++i) {
    Poly p = poly_var(i, 2 * n);  // u_i
    if (!twisted) {
      poly_add(p, poly_var(n + i, 2 * n), plus ? 1 : -1);  // +- v_i
    } else {
      for (std::size_t j = 0; j < n; ++j)
        poly_add(p, poly_var(n + j, 2 * n), plus ? eps[i][j] : -eps[i][j]);
    }
    coords[i] = std::move(p);
  }
  return coords;
}

// Exponent of one Gaussian factor: -<A x, x> contributes to `re`,
// <t, x> contributes to `im`.
inline void accumulate_exponent(Poly& re, Poly& im, const GaussianParams& g,
                                const std::vector<Poly>& x, const Rational& sign) {
  for (std::size_t i = 0; i < g.dim; ++i) {
    for (std::size_t j = 0; j < g.dim; ++j) {
      if (g.a[i][j] == 0) continue;
      poly_add(re, poly_mul(x[i], x[j]), -sign * g.a[i][j]);
    }
    if (g.t[i] != 0) poly_add(im, x[i], sign * g.t[i]);
  }
}

// True iff both sides of the functional equation have identical exponents as
// polynomials, i.e. the pair solves the equation for every real (u, v).
inline bool oracle_pair_condition(const GaussianParams& g1, const GaussianParams& g2,
                                  const RatMat& eps) {
  const std::size_t n = g1.dim;
  Poly re, im;
  accumulate_exponent(re, im, g1, argument(eps, n, true, false), 1);    // mu1^(u+v)
  accumulate_exponent(re, im, g2, argument(eps, n, true, true), 1);     // mu2^(u+Ev)
  accumulate_exponent(re, im, g1, argument(eps, n, false, false), -1);  // / mu1^(u-v)
  accumulate_exponent(re, im, g2, argument(eps, n, false, true), -1);   // / mu2^(u-Ev)
  return re.empty() && im.empty();
}

// Numeric residual of the equation on R^n at one rational sample.
inline double rn_residual(const GaussianParams& g1, const GaussianParams& g2, const RatMat& eps,
                          const RatVec& u, const RatVec& v) {
  const std::size_t n = g1.dim;
  RatVec ev = linalg::mul(eps, v);
  RatVec up(n), um(n), uep(n), uem(n);
  for (std::size_t i = 0; i < n; ++i) {
    up[i] = u[i] + v[i];
    um[i] = u[i] - v[i];
    uep[i] = u[i] + ev[i];
    uem[i] = u[i] - ev[i];
  }
  return std::abs(gaussian_char(g1, up) * gaussian_char(g2, uep) -
                  gaussian_char(g1, um) * gaussian_char(g2, uem));
}

}  // namespace heyde::testutil
