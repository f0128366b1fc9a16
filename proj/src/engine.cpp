#include "heyde/engine.hpp"

#include <algorithm>
#include <set>

#include "heyde/linalg.hpp"

namespace heyde {

JointDistribution::JointDistribution(Group group, RatVec masses)
    : group_(std::move(group)), masses_(std::move(masses)) {
  if (static_cast<std::int64_t>(masses_.size()) != group_.order() * group_.order())
    fail(Errc::dimension_mismatch, "joint law needs one mass per pair");
}

RationalDistribution JointDistribution::l1_marginal() const {
  const std::int64_t n = group_.order();
  RatVec m(n, 0);
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b) m[a] += masses_[a * n + b];
  return RationalDistribution(group_, std::move(m));
}

RationalDistribution JointDistribution::l2_marginal() const {
  const std::int64_t n = group_.order();
  RatVec m(n, 0);
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b) m[b] += masses_[a * n + b];
  return RationalDistribution(group_, std::move(m));
}

namespace {

void require_instance(const RationalDistribution& mu1, const RationalDistribution& mu2,
                      const GroupMap& delta) {
  if (!(mu1.group() == mu2.group() && delta.source() == mu1.group()))
    fail(Errc::group_mismatch, "mu1, mu2 and delta must share one group");
  if (!is_automorphism(delta)) fail(Errc::precondition, "delta must be an automorphism");
}

}  // namespace

JointDistribution joint(const RationalDistribution& mu1, const RationalDistribution& mu2,
                        const GroupMap& delta) {
  require_instance(mu1, mu2, delta);
  const Group& g = mu1.group();
  const std::int64_t n = g.order();
  RatVec m(n * n, 0);
  for (std::int64_t i = 0; i < n; ++i) {
    if (mu1.mass_at(i) == 0) continue;
    Elem x1 = g.element(i);
    for (std::int64_t j = 0; j < n; ++j) {
      if (mu2.mass_at(j) == 0) continue;
      Elem x2 = g.element(j);
      std::int64_t a = g.index_of(g.add(x1, x2));
      std::int64_t b = g.index_of(g.add(x1, delta.apply(x2)));
      m[a * n + b] += mu1.mass_at(i) * mu2.mass_at(j);
    }
  }
  return JointDistribution(g, std::move(m));
}

SymmetryResult is_conditionally_symmetric(const RationalDistribution& mu1,
                                          const RationalDistribution& mu2, const GroupMap& delta) {
  JointDistribution j = joint(mu1, mu2, delta);
  const Group& g = j.group();
  const std::int64_t n = g.order();
  for (std::int64_t a = 0; a < n; ++a) {
    for (std::int64_t b = 0; b < n; ++b) {
      std::int64_t nb = g.index_of(g.neg(g.element(b)));
      if (j.masses()[a * n + b] != j.masses()[a * n + nb]) {
        // report the heavier side of the violating pair
        std::int64_t w = j.masses()[a * n + b] > j.masses()[a * n + nb] ? b : nb;
        return {false, std::make_pair(g.element(a), g.element(w))};
      }
    }
  }
  return {true, std::nullopt};
}

FeqResult satisfies_feq(const RationalDistribution& mu1, const RationalDistribution& mu2,
                        const GroupMap& delta, double tol) {
  require_instance(mu1, mu2, delta);
  const Group& g = mu1.group();
  const std::int64_t n = g.order();
  GroupMap eps = adjoint(delta);
  std::vector<CharValue> t1 = char_table(mu1), t2 = char_table(mu2);

  FeqResult res;
  for (std::int64_t ui = 0; ui < n; ++ui) {
    Elem u = g.element(ui);
    for (std::int64_t vi = 0; vi < n; ++vi) {
      Elem v = g.element(vi);
      Elem ev = eps.apply(v);
      std::complex<double> lhs =
          t1[g.index_of(g.add(u, v))].value * t2[g.index_of(g.add(u, ev))].value;
      std::complex<double> rhs =
          t1[g.index_of(g.sub(u, v))].value * t2[g.index_of(g.sub(u, ev))].value;
      double r = std::abs(lhs - rhs);
      if (r > res.max_residual) {
        res.max_residual = r;
        res.argmax = std::make_pair(u, v);
      }
    }
  }
  res.ok = res.max_residual <= tol;
  return res;
}

bool lemma1_agrees(const RationalDistribution& mu1, const RationalDistribution& mu2,
                   const GroupMap& delta) {
  return is_conditionally_symmetric(mu1, mu2, delta).symmetric ==
         satisfies_feq(mu1, mu2, delta, 1e-9).ok;
}

namespace {

// Linear system over the unknown mu1 masses expressing J(a,b) = J(a,-b),
// plus the normalization row. Rows are built from the fibers of (delta - I).
struct PartnerSystem {
  RatMat a;
  RatVec b;
};

PartnerSystem partner_system(const RationalDistribution& mu2, const GroupMap& delta) {
  const Group& g = mu2.group();
  const std::int64_t n = g.order();
  GroupMap diff = delta.minus(GroupMap::identity(g));
  std::vector<std::vector<std::int64_t>> fiber(n);  // t -> {x2 : (delta - I) x2 = t}
  for (std::int64_t i = 0; i < n; ++i) fiber[g.index_of(diff.apply(g.element(i)))].push_back(i);

  PartnerSystem sys;
  for (std::int64_t a = 0; a < n; ++a) {
    Elem ea = g.element(a);
    for (std::int64_t b = 0; b < n; ++b) {
      std::int64_t nb = g.index_of(g.neg(g.element(b)));
      if (b >= nb) continue;  // one row per {b, -b} pair; b == -b is vacuous
      RatVec row(n, 0);
      Elem eb = g.element(b);
      for (std::int64_t x2 : fiber[g.index_of(g.sub(eb, ea))])
        row[g.index_of(g.sub(ea, g.element(x2)))] += mu2.mass_at(x2);
      for (std::int64_t x2 : fiber[g.index_of(g.sub(g.neg(eb), ea))])
        row[g.index_of(g.sub(ea, g.element(x2)))] -= mu2.mass_at(x2);
      if (!linalg::is_zero(row)) {
        sys.a.push_back(std::move(row));
        sys.b.push_back(0);
      }
    }
  }
  sys.a.push_back(RatVec(n, 1));
  sys.b.push_back(1);
  return sys;
}

// Vertices of {x >= 0 : A x = b} by basic-feasible-solution enumeration on
// the row-reduced system.
std::vector<RatVec> polytope_vertices(const PartnerSystem& sys) {
  const std::size_t cols = sys.a[0].size();
  RatMat aug = sys.a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(sys.b[i]);
  linalg::Echelon e = linalg::rref(std::move(aug));
  for (int pc : e.pivot_cols)
    if (pc == static_cast<int>(cols)) return {};  // inconsistent
  const std::size_t r = static_cast<std::size_t>(e.rank);

  double combos = 1;
  for (std::size_t i = 0; i < r; ++i) combos *= static_cast<double>(cols - i) / static_cast<double>(i + 1);
  if (combos > 2e6) fail(Errc::size_limit, "partner polytope has too many candidate bases");

  std::set<RatVec> vertices;
  std::vector<std::size_t> pick(r);
  for (std::size_t i = 0; i < r; ++i) pick[i] = i;
  while (true) {
    RatMat sub(r, RatVec(r));
    RatVec rhs(r);
    for (std::size_t i = 0; i < r; ++i) {
      rhs[i] = e.rows[i][cols];
      for (std::size_t j = 0; j < r; ++j) sub[i][j] = e.rows[i][pick[j]];
    }
    linalg::AffineSolution sol = linalg::solve(sub, rhs);
    if (sol.consistent && sol.nullspace.empty()) {
      RatVec full(cols, 0);
      bool nonneg = true;
      for (std::size_t j = 0; j < r; ++j) {
        if (sol.particular[j] < 0) {
          nonneg = false;
          break;
        }
        full[pick[j]] = sol.particular[j];
      }
      if (nonneg) vertices.insert(std::move(full));
    }
    // next r-combination of {0..cols-1}
    std::size_t i = r;
    while (i-- > 0) {
      if (pick[i] != i + cols - r) {
        ++pick[i];
        for (std::size_t j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
        break;
      }
      if (i == 0) return {vertices.begin(), vertices.end()};
    }
    if (r == 0) break;
  }
  return {vertices.begin(), vertices.end()};
}

}  // namespace

PartnerSolution solve_partner(const RationalDistribution& mu2, const GroupMap& delta) {
  if (!is_automorphism(delta)) fail(Errc::precondition, "delta must be an automorphism");
  PartnerSystem sys = partner_system(mu2, delta);
  linalg::AffineSolution affine = linalg::solve(sys.a, sys.b);

  PartnerSolution out;
  out.basis = affine.nullspace;
  if (!affine.consistent) return out;
  std::vector<RatVec> vertices = polytope_vertices(sys);
  if (vertices.empty()) return out;
  out.feasible = true;
  out.particular = RationalDistribution(mu2.group(), vertices.front());
  return out;
}

std::vector<RationalDistribution> partner_polytope_vertices(const RationalDistribution& mu2,
                                                            const GroupMap& delta) {
  if (!is_automorphism(delta)) fail(Errc::precondition, "delta must be an automorphism");
  std::vector<RationalDistribution> out;
  for (RatVec& v : polytope_vertices(partner_system(mu2, delta)))
    out.push_back(RationalDistribution(mu2.group(), std::move(v)));
  return out;
}

DecompositionCheck verify_decomposition(const RationalDistribution& mu1,
                                        const RationalDistribution& mu2, const GroupMap& delta,
                                        const Decomposition& dec) {
  const Group& g = mu1.group();
  if (!(dec.f.parent() == g && dec.rho1.group() == g && dec.rho2.group() == g))
    return {false, "decomposition components live on the wrong group"};
  for (std::int64_t idx : dec.f.indices()) {
    if (g.element_order(g.element(idx)) == 2) return {false, "F contains an element of order 2"};
  }
  std::set<std::int64_t> img;
  for (std::int64_t idx : dec.f.indices()) img.insert(g.index_of(delta.apply(g.element(idx))));
  if (std::vector<std::int64_t>(img.begin(), img.end()) != dec.f.indices())
    return {false, "F is not delta-invariant"};

  Subgroup d2 = p_component(g, 2);
  const RationalDistribution* rhos[2] = {&dec.rho1, &dec.rho2};
  const Elem* shifts[2] = {&dec.g1, &dec.g2};
  const RationalDistribution* mus[2] = {&mu1, &mu2};
  for (int j = 0; j < 2; ++j) {
    for (const Elem& x : support(*rhos[j])) {
      if (!d2.contains(x))
        return {false, "rho" + std::to_string(j + 1) + " has support outside the 2-component"};
    }
    RationalDistribution rebuilt = convolve(convolve(*rhos[j], RationalDistribution::haar(dec.f)),
                                            RationalDistribution::point_mass(g, *shifts[j]));
    if (!(rebuilt == *mus[j]))
      return {false, "mu" + std::to_string(j + 1) + " does not equal rho * m_F * E_g"};
  }
  return {true, ""};
}

namespace {

// mu * E_{-g} = rho * m_F with sigma(rho) in the 2-component, if possible.
// The deconvolution test is exact: the shifted law must be constant on every
// F-coset it charges, and each charged coset must contain a (then unique)
// 2-component representative.
std::optional<std::pair<RationalDistribution, Elem>> factor_by(const RationalDistribution& mu,
                                                               const Subgroup& f,
                                                               const Subgroup& d2) {
  const Group& g = mu.group();
  for (const Elem& shift : support(mu)) {
    RationalDistribution nu = convolve(mu, RationalDistribution::point_mass(g, g.neg(shift)));
    RatVec rho(g.order(), 0);
    std::vector<bool> seen(g.order(), false);
    bool ok = true;
    for (std::int64_t i = 0; i < g.order() && ok; ++i) {
      if (seen[i] || nu.mass_at(i) == 0) continue;
      Elem x = g.element(i);
      std::optional<std::int64_t> rep;
      for (std::int64_t fi : f.indices()) {
        Elem y = g.add(x, g.element(fi));
        std::int64_t yi = g.index_of(y);
        seen[yi] = true;
        if (nu.mass_at(yi) != nu.mass_at(i)) {
          ok = false;
          break;
        }
        if (d2.contains_index(yi)) rep = yi;
      }
      if (!ok || !rep) {
        ok = false;
        break;
      }
      rho[*rep] = nu.mass_at(i) * f.size();
    }
    if (!ok) continue;
    RationalDistribution rho_dist(g, std::move(rho));
    if (convolve(rho_dist, RationalDistribution::haar(f)) == nu) return std::make_pair(rho_dist, shift);
  }
  return std::nullopt;
}

}  // namespace

ExtractResult extract_decomposition(const RationalDistribution& mu1,
                                    const RationalDistribution& mu2, const GroupMap& delta,
                                    std::int64_t lattice_bound) {
  SymmetryResult sym = is_conditionally_symmetric(mu1, mu2, delta);
  if (!sym.symmetric)
    return {std::nullopt, "instance is not conditionally symmetric, witness (a,b) = " +
                              elem_str(sym.counterexample->first) + ", " +
                              elem_str(sym.counterexample->second)};

  const Group& g = mu1.group();
  Subgroup d2 = p_component(g, 2);
  std::vector<Subgroup> cands;
  for (Subgroup& s : invariant_subgroups(g, delta, lattice_bound)) {
    if (s.size() % 2 != 0) cands.push_back(std::move(s));  // odd order: no 2-torsion
  }
  std::sort(cands.begin(), cands.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.indices() < b.indices();
  });

  for (const Subgroup& f : cands) {
    auto f1 = factor_by(mu1, f, d2);
    if (!f1) continue;
    auto f2 = factor_by(mu2, f, d2);
    if (!f2) continue;
    return {Decomposition{f1->first, f2->first, f, f1->second, f2->second}, ""};
  }
  return {std::nullopt, "no delta-invariant odd-order subgroup admits the factorization"};
}

std::vector<GroupMap> enumerate_valid_automorphisms(const Group& g, std::int64_t bound) {
  std::vector<GroupMap> out;
  for (GroupMap& f : enumerate_automorphisms(g, bound)) {
    if (check_heyde_condition(f).ok) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace heyde
