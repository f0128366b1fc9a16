#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "heyde/engine.hpp"
#include "heyde/linalg.hpp"
#include "test_util.hpp"

using namespace heyde;
using testutil::subgroup_of;
using testutil::uniform;

namespace {

RationalDistribution point(const Group& g, Elem x) {
  return RationalDistribution::point_mass(g, std::move(x));
}

bool in_affine_set(const RationalDistribution& mu1, const PartnerSolution& sol) {
  if (!sol.particular) return false;
  RatVec rhs(mu1.group().order());
  for (std::int64_t i = 0; i < mu1.group().order(); ++i)
    rhs[i] = mu1.mass_at(i) - sol.particular->mass_at(i);
  if (sol.basis.empty()) return linalg::is_zero(rhs);
  RatMat cols(rhs.size(), RatVec(sol.basis.size()));
  for (std::size_t j = 0; j < sol.basis.size(); ++j)
    for (std::size_t i = 0; i < rhs.size(); ++i) cols[i][j] = sol.basis[j][i];
  return linalg::solve(cols, rhs).consistent;
}

}  // namespace

TEST_CASE("joint law") {
  Group z5({5});
  GroupMap d2 = GroupMap::mul_by(z5, 2);

  SUBCASE("uniform pair gives the uniform joint") {
    JointDistribution j = joint(uniform(z5), uniform(z5), d2);
    for (const Rational& m : j.masses()) CHECK(m == rat(1, 25));
  }

  SUBCASE("degenerate pair gives a point") {
    JointDistribution j = joint(point(z5, {3}), point(z5, {1}), d2);
    CHECK(j.mass({4}, {0}) == 1);  // (3+1, 3+2*1)
  }

  SUBCASE("first marginal is the convolution") {
    Rng rng(17);
    for (int it = 0; it < 10; ++it) {
      auto mu1 = random_distribution(z5, 8, rng);
      auto mu2 = random_distribution(z5, 8, rng);
      CHECK(joint(mu1, mu2, d2).l1_marginal() == convolve(mu1, mu2));
    }
  }

  CHECK_THROWS_AS(joint(uniform(z5), uniform(Group({7})), d2), Error);
  CHECK_THROWS_AS(joint(uniform(z5), uniform(z5), GroupMap::mul_by(z5, 0)), Error);
}

TEST_CASE("exact conditional symmetry") {
  Group z5({5});
  GroupMap d2 = GroupMap::mul_by(z5, 2);

  CHECK(is_conditionally_symmetric(uniform(z5), uniform(z5), d2).symmetric);
  CHECK(is_conditionally_symmetric(point(z5, {3}), point(z5, {1}), d2).symmetric);

  SymmetryResult bad = is_conditionally_symmetric(point(z5, {1}), point(z5, {1}), d2);
  CHECK_FALSE(bad.symmetric);
  REQUIRE(bad.counterexample.has_value());
  CHECK(bad.counterexample->first == Elem{2});
  CHECK(bad.counterexample->second == Elem{3});
}

TEST_CASE("functional equation on the dual grid") {
  Group z5({5});
  GroupMap d2 = GroupMap::mul_by(z5, 2);

  CHECK(satisfies_feq(uniform(z5), uniform(z5), d2).ok);
  CHECK(satisfies_feq(point(z5, {3}), point(z5, {1}), d2).ok);

  FeqResult bad = satisfies_feq(uniform(z5), point(z5, {1}), d2);
  CHECK_FALSE(bad.ok);
  CHECK(bad.max_residual > 1e-3);
  REQUIRE(bad.argmax.has_value());
}

TEST_CASE("lemma 1: symmetry and the functional equation agree") {
  SUBCASE("named instances") {
    Group z5({5});
    GroupMap d2 = GroupMap::mul_by(z5, 2);
    CHECK(lemma1_agrees(uniform(z5), uniform(z5), d2));
    CHECK(lemma1_agrees(point(z5, {3}), point(z5, {1}), d2));
    CHECK(lemma1_agrees(point(z5, {1}), point(z5, {1}), d2));
    CHECK(lemma1_agrees(uniform(z5), point(z5, {1}), d2));
  }

  SUBCASE("randomized harness, groups of order <= 16, denominators <= 8") {
    Rng rng(101);
    for (const Group& g : {Group({5}), Group({7}), Group({9}), Group({2, 2}), Group({3, 3}),
                           Group({2, 4}), Group({16})}) {
      auto deltas = enumerate_valid_automorphisms(g);
      if (deltas.empty()) continue;
      for (int it = 0; it < 40; ++it) {
        const GroupMap& d = deltas[rng.below(deltas.size())];
        auto mu1 = random_distribution(g, 8, rng);
        auto mu2 = random_distribution(g, 8, rng);
        REQUIRE(lemma1_agrees(mu1, mu2, d));
      }
    }
  }

  SUBCASE("shift covariance preserves symmetry") {
    Rng rng(77);
    Group g({3, 3});
    GroupMap d(g, g, {{0, 1}, {1, 1}});
    for (int it = 0; it < 30; ++it) {
      auto mu2 = random_distribution(g, 6, rng);
      PartnerSolution sol = solve_partner(mu2, d);
      if (!sol.feasible) continue;
      const RationalDistribution& mu1 = *sol.particular;
      bool base = is_conditionally_symmetric(mu1, mu2, d).symmetric;
      Elem x = g.element(rng.below(g.order()));
      auto mu1s = convolve(mu1, point(g, d.apply(x)));
      auto mu2s = convolve(mu2, point(g, g.neg(x)));
      CHECK(base == is_conditionally_symmetric(mu1s, mu2s, d).symmetric);
    }
  }
}

TEST_CASE("partner solver") {
  Group z5({5});
  GroupMap d2 = GroupMap::mul_by(z5, 2);

  SUBCASE("uniform partner is unique") {
    PartnerSolution s = solve_partner(uniform(z5), d2);
    REQUIRE(s.feasible);
    CHECK(*s.particular == uniform(z5));
    CHECK(s.basis.empty());
  }

  SUBCASE("point partner is the matching point") {
    PartnerSolution s = solve_partner(point(z5, {1}), d2);
    REQUIRE(s.feasible);
    CHECK(*s.particular == point(z5, {3}));  // 3 + 2*1 = 0
    CHECK(s.basis.empty());
  }

  SUBCASE("2-torsion makes every mu1 a solution") {
    Group klein({2, 2});
    GroupMap d(klein, klein, {{0, 1}, {1, 1}});
    auto mu2 = point(klein, {0, 0});
    PartnerSolution s = solve_partner(mu2, d);
    REQUIRE(s.feasible);
    CHECK(s.basis.size() == 3);
    auto vertices = partner_polytope_vertices(mu2, d);
    REQUIRE(vertices.size() == 4);
    for (const auto& v : vertices) {
      std::multiset<Rational> masses(v.masses().begin(), v.masses().end());
      CHECK(masses == std::multiset<Rational>{0, 0, 0, 1});  // the four point masses
    }
  }

  SUBCASE("soundness and completeness") {
    Rng rng(55);
    for (const Group& g : {Group({5}), Group({3, 3})}) {
      auto deltas = enumerate_valid_automorphisms(g);
      for (int it = 0; it < 12; ++it) {
        const GroupMap& d = deltas[rng.below(deltas.size())];
        auto mu2 = random_distribution(g, 6, rng);
        PartnerSolution s = solve_partner(mu2, d);
        auto vertices = partner_polytope_vertices(mu2, d);
        CHECK(s.feasible == !vertices.empty());
        Rational total = 0;
        RatVec mix(g.order(), 0);
        for (std::size_t i = 0; i < vertices.size(); ++i) {
          CHECK(is_conditionally_symmetric(vertices[i], mu2, d).symmetric);
          Rational w = rat(static_cast<long>(i + 1), 1);
          for (std::int64_t j = 0; j < g.order(); ++j) mix[j] += w * vertices[i].mass_at(j);
          total += w;
        }
        if (!vertices.empty()) {
          for (auto& m : mix) m /= total;
          auto blend = RationalDistribution(g, mix);
          CHECK(is_conditionally_symmetric(blend, mu2, d).symmetric);
        }
        // Exact dichotomy for arbitrary probability vectors.
        auto probe = random_distribution(g, 6, rng);
        CHECK(is_conditionally_symmetric(probe, mu2, d).symmetric == in_affine_set(probe, s));
      }
    }
  }
}

TEST_CASE("decomposition verification") {
  Group z5({5});
  GroupMap d2 = GroupMap::mul_by(z5, 2);

  SUBCASE("haar pair against m_X") {
    Decomposition dec{point(z5, {0}), point(z5, {0}), Subgroup::full(z5), {0}, {0}};
    CHECK(verify_decomposition(uniform(z5), uniform(z5), d2, dec).ok);
  }

  SUBCASE("degenerate pair against the trivial subgroup") {
    Decomposition dec{point(z5, {0}), point(z5, {0}), Subgroup::trivial(z5), {3}, {1}};
    CHECK(verify_decomposition(point(z5, {3}), point(z5, {1}), d2, dec).ok);
  }

  SUBCASE("order-2 elements in F are rejected") {
    Group z6({6});
    GroupMap id = GroupMap::identity(z6);
    auto k = subgroup_of(z6, {{0}, {3}});
    auto m = RationalDistribution::haar(k);
    Decomposition dec{point(z6, {0}), point(z6, {0}), k, {0}, {0}};
    DecompositionCheck chk = verify_decomposition(m, m, id, dec);
    CHECK_FALSE(chk.ok);
    CHECK(chk.reason == "F contains an element of order 2");
  }

  SUBCASE("non-invariant F is rejected") {
    Group g({3, 3});
    GroupMap shear(g, g, {{1, 1}, {0, 1}});
    auto f = subgroup_of(g, {{0, 0}, {0, 1}, {0, 2}});  // the shear moves this line
    auto m = RationalDistribution::haar(f);
    Decomposition dec{point(g, {0, 0}), point(g, {0, 0}), f, {0, 0}, {0, 0}};
    DecompositionCheck chk = verify_decomposition(m, m, shear, dec);
    CHECK_FALSE(chk.ok);
    CHECK(chk.reason == "F is not delta-invariant");
  }

  SUBCASE("wrong reconstruction is rejected") {
    Decomposition dec{point(z5, {0}), point(z5, {0}), Subgroup::trivial(z5), {0}, {0}};
    DecompositionCheck chk = verify_decomposition(uniform(z5), uniform(z5), d2, dec);
    CHECK_FALSE(chk.ok);
  }
}

TEST_CASE("decomposition extraction") {
  SUBCASE("haar pair on Z5") {
    Group z5({5});
    GroupMap d2 = GroupMap::mul_by(z5, 2);
    ExtractResult r = extract_decomposition(uniform(z5), uniform(z5), d2);
    REQUIRE(r.dec.has_value());
    CHECK(r.dec->f == Subgroup::full(z5));
    CHECK(r.dec->rho1 == point(z5, {0}));
    CHECK(r.dec->g1 == Elem{0});
    CHECK(verify_decomposition(uniform(z5), uniform(z5), d2, *r.dec).ok);
  }

  SUBCASE("proper subgroup recovered on Z15") {
    // delta = 7 is valid (1 + 7 = 8 is a unit mod 15); F = <3> has odd order
    // 5 and delta(F) = F, and delta - I = 6 is injective on F, which is
    // exactly what makes the m_F pair conditionally symmetric.
    Group z15({15});
    GroupMap d7 = GroupMap::mul_by(z15, 7);
    auto f = subgroup_of(z15, {{0}, {3}, {6}, {9}, {12}});
    auto m = RationalDistribution::haar(f);
    REQUIRE(is_conditionally_symmetric(m, m, d7).symmetric);
    ExtractResult r = extract_decomposition(m, m, d7);
    REQUIRE(r.dec.has_value());
    CHECK(r.dec->f == f);
    CHECK(r.dec->rho1 == point(z15, {0}));
    CHECK(r.dec->rho2 == point(z15, {0}));
    CHECK(r.dec->g1 == Elem{0});
  }

  SUBCASE("full group recovered on Z3xZ3") {
    Group g({3, 3});
    GroupMap d(g, g, {{0, 1}, {1, 1}});
    REQUIRE(is_conditionally_symmetric(uniform(g), uniform(g), d).symmetric);
    ExtractResult r = extract_decomposition(uniform(g), uniform(g), d);
    REQUIRE(r.dec.has_value());
    CHECK(r.dec->f == Subgroup::full(g));
    CHECK(r.dec->rho1 == point(g, {0, 0}));
  }

  SUBCASE("2-groups fall back to the trivial subgroup") {
    Group klein({2, 2});
    GroupMap d(klein, klein, {{0, 1}, {1, 1}});
    auto mu1 = uniform(klein);
    auto mu2 = point(klein, {1, 0});
    REQUIRE(is_conditionally_symmetric(mu1, mu2, d).symmetric);
    ExtractResult r = extract_decomposition(mu1, mu2, d);
    REQUIRE(r.dec.has_value());
    CHECK(r.dec->f == Subgroup::trivial(klein));
    // everything lands in the 2-component
    CHECK(convolve(r.dec->rho1, point(klein, r.dec->g1)) == mu1);
    CHECK(convolve(r.dec->rho2, point(klein, r.dec->g2)) == mu2);
  }

  SUBCASE("asymmetric instances are refused with a witness") {
    Group z5({5});
    GroupMap d2 = GroupMap::mul_by(z5, 2);
    ExtractResult r = extract_decomposition(point(z5, {1}), point(z5, {1}), d2);
    CHECK_FALSE(r.dec.has_value());
    CHECK(r.failure.find("witness") != std::string::npos);
  }
}

TEST_CASE("theorem conclusion on odd groups: partner vertices split as m_F * E_g") {
  Rng rng(202);
  for (const Group& g :
       {Group({3}), Group({5}), Group({7}), Group({9}), Group({3, 3}), Group({15})}) {
    auto deltas = enumerate_valid_automorphisms(g);
    std::size_t dcap = g.order() <= 9 ? deltas.size() : std::min<std::size_t>(4, deltas.size());
    auto lattice = subgroups(g);
    for (std::size_t di = 0; di < dcap; ++di) {
      const GroupMap& d = deltas[di];
      std::vector<RationalDistribution> family;
      for (const Subgroup& k : lattice) {
        family.push_back(RationalDistribution::haar(k));
        family.push_back(convolve(RationalDistribution::haar(k),
                                  point(g, g.element(rng.below(g.order())))));
      }
      for (std::int64_t i = 0; i < g.order(); ++i) family.push_back(point(g, g.element(i)));
      for (const auto& mu2 : family) {
        for (const auto& mu1 : partner_polytope_vertices(mu2, d)) {
          ExtractResult r = extract_decomposition(mu1, mu2, d);
          REQUIRE_MESSAGE(r.dec.has_value(), "extraction failed on ", g.str());
          CHECK(r.dec->rho1 == point(g, g.zero()));
          CHECK(r.dec->rho2 == point(g, g.zero()));
          CHECK(verify_decomposition(mu1, mu2, d, *r.dec).ok);
        }
      }
    }
  }
}

TEST_CASE("valid automorphism enumeration") {
  Group z6({6});
  CHECK(enumerate_valid_automorphisms(z6).empty());

  Group z5({5});
  auto v5 = enumerate_valid_automorphisms(z5);
  std::set<std::int64_t> muls;
  for (const GroupMap& m : v5) muls.insert(m.matrix()[0][0]);
  CHECK(muls == std::set<std::int64_t>{1, 2, 3});  // every unit except -1

  Group klein({2, 2});
  auto vk = enumerate_valid_automorphisms(klein);
  REQUIRE(vk.size() == 2);  // the two order-3 automorphisms
  std::set<IntMat> mats{vk[0].matrix(), vk[1].matrix()};
  CHECK(mats == std::set<IntMat>{{{0, 1}, {1, 1}}, {{1, 1}, {1, 0}}});
}
