#include "heyde/run.hpp"

#include <chrono>
#include <sstream>

#include "heyde/engine.hpp"
#include "heyde/fdm.hpp"
#include "heyde/gaussian.hpp"

namespace heyde {

namespace {

constexpr std::int64_t kDefaultSamples = 100;

Rational default_tol() { return rat(1, 1000000000); }

std::string errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_order: return "invalid-order";
    case Errc::size_limit: return "size-limit";
    case Errc::group_mismatch: return "group-mismatch";
    case Errc::not_a_homomorphism: return "not-a-homomorphism";
    case Errc::precondition: return "precondition";
    case Errc::dimension_mismatch: return "dimension-mismatch";
    case Errc::parse_syntax: return "syntax";
    case Errc::parse_semantic: return "semantic";
  }
  return "?";
}

RationalDistribution make_distribution(const Group& g, const DiscreteSpec& spec) {
  switch (spec.kind) {
    case DiscreteSpec::Kind::literal: return RationalDistribution(g, spec.literal);
    case DiscreteSpec::Kind::haar_full: return RationalDistribution::haar(Subgroup::full(g));
    case DiscreteSpec::Kind::haar_gens:
      return RationalDistribution::haar(Subgroup::from_generators(g, spec.gens));
    case DiscreteSpec::Kind::point: return RationalDistribution::point_mass(g, spec.point);
  }
  fail(Errc::precondition, "unreachable distribution kind");
}

ProductDistribution make_product(const Group& g, const ProductSpec& spec) {
  GaussianParams gauss{spec.a.size(), spec.a, spec.t};
  if (auto why = validate(gauss)) fail(Errc::precondition, "gaussian factor invalid: " + *why);
  return ProductDistribution{std::move(gauss), make_distribution(g, spec.rho), spec.shift};
}

std::string render_elem_list(const std::vector<Elem>& elems) {
  std::string out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ' ';
    out += elem_str(elems[i]);
  }
  return out;
}

void echo_instance(Report& rep, const JobConfig& cfg) {
  rep.put("group", render_orders(cfg.orders));
  if (cfg.delta) rep.put("delta", render_int_matrix(*cfg.delta));
}

void run_check(Report& rep, const Group& g, const JobConfig& cfg) {
  GroupMap delta(g, g, *cfg.delta);
  RationalDistribution mu1 = make_distribution(g, *cfg.mu1->discrete);
  RationalDistribution mu2 = make_distribution(g, *cfg.mu2->discrete);
  SymmetryResult s = is_conditionally_symmetric(mu1, mu2, delta);
  if (s.symmetric) {
    rep.verdict = Verdict::pass;
  } else {
    rep.verdict = Verdict::fail;
    rep.put("witness_a", elem_str(s.counterexample->first));
    rep.put("witness_b", elem_str(s.counterexample->second));
  }
}

void run_feq(Report& rep, const Group& g, const JobConfig& cfg, const Rational& tol) {
  GroupMap delta(g, g, *cfg.delta);
  RationalDistribution mu1 = make_distribution(g, *cfg.mu1->discrete);
  RationalDistribution mu2 = make_distribution(g, *cfg.mu2->discrete);
  FeqResult r = satisfies_feq(mu1, mu2, delta, to_double(tol));
  rep.put("tol", to_string(tol));
  rep.put("max_residual", format_double(r.max_residual));
  if (r.ok) {
    rep.verdict = Verdict::pass;
  } else {
    rep.verdict = Verdict::fail;
    rep.put("witness_u", elem_str(r.argmax->first));
    rep.put("witness_v", elem_str(r.argmax->second));
  }
}

void run_solve_partner(Report& rep, const Group& g, const JobConfig& cfg) {
  GroupMap delta(g, g, *cfg.delta);
  RationalDistribution mu2 = make_distribution(g, *cfg.mu2->discrete);
  PartnerSolution s = solve_partner(mu2, delta);
  rep.put("feasible", s.feasible ? "true" : "false");
  if (s.particular) rep.put("particular", render_rat_vector(s.particular->masses()));
  rep.put("basis_dim", std::to_string(s.basis.size()));
  for (std::size_t i = 0; i < s.basis.size(); ++i)
    rep.put("basis_" + std::to_string(i), render_rat_vector(s.basis[i]));
  rep.verdict = Verdict::pass;
}

void run_decompose(Report& rep, const Group& g, const JobConfig& cfg) {
  GroupMap delta(g, g, *cfg.delta);
  RationalDistribution mu1 = make_distribution(g, *cfg.mu1->discrete);
  RationalDistribution mu2 = make_distribution(g, *cfg.mu2->discrete);
  SymmetryResult sym = is_conditionally_symmetric(mu1, mu2, delta);
  if (!sym.symmetric) {
    rep.verdict = Verdict::fail;
    rep.put("reason", "instance is not conditionally symmetric");
    rep.put("witness_a", elem_str(sym.counterexample->first));
    rep.put("witness_b", elem_str(sym.counterexample->second));
    return;
  }
  ExtractResult r =
      extract_decomposition(mu1, mu2, delta, cfg.lattice_bound.value_or(Bounds{}.subgroup_lattice));
  if (!r.dec) {
    rep.verdict = Verdict::fail;
    rep.put("reason", r.failure);
    return;
  }
  DecompositionCheck chk = verify_decomposition(mu1, mu2, delta, *r.dec);
  rep.put("F", render_elem_list(r.dec->f.elements()));
  rep.put("rho1", render_rat_vector(r.dec->rho1.masses()));
  rep.put("rho2", render_rat_vector(r.dec->rho2.masses()));
  rep.put("g1", elem_str(r.dec->g1));
  rep.put("g2", elem_str(r.dec->g2));
  rep.put("verified", chk.ok ? "true" : "false");
  if (chk.ok) {
    rep.verdict = Verdict::pass;
  } else {
    rep.verdict = Verdict::fail;
    rep.put("reason", chk.reason);
  }
}

void run_enumerate_auts(Report& rep, const Group& g, const JobConfig& cfg) {
  std::vector<GroupMap> auts =
      enumerate_valid_automorphisms(g, cfg.aut_bound.value_or(Bounds{}.automorphism));
  rep.put("count", std::to_string(auts.size()));
  for (std::size_t i = 0; i < auts.size(); ++i)
    rep.put("aut_" + std::to_string(i), auts[i].matrix_str());
  if (auts.empty()) rep.put("note", "no valid delta");
  rep.verdict = Verdict::pass;
}

void run_fdm_demo(Report& rep, const Group& g, const JobConfig& cfg) {
  GroupMap delta(g, g, *cfg.delta);
  GroupMap eps = adjoint(delta);
  Rng rng(*cfg.seed);
  GroupFunction phi1 = random_function(g, 8, 8, rng);
  GroupFunction phi2 = random_function(g, 8, 8, rng);
  Elem k1 = g.element(static_cast<std::int64_t>(rng.below(g.order())));
  Elem k2 = g.element(static_cast<std::int64_t>(rng.below(g.order())));
  Elem k3 = g.element(static_cast<std::int64_t>(rng.below(g.order())));

  bool all_hold = true;
  std::int64_t checks = 0;
  for (std::int64_t ui = 0; ui < g.order(); ++ui) {
    for (std::int64_t vi = 0; vi < g.order(); ++vi) {
      all_hold = all_hold &&
                 cascade_identity_check(phi1, phi2, eps, k1, k2, k3, g.element(ui), g.element(vi));
      ++checks;
    }
  }
  Subgroup b = subgroup_b(eps, Subgroup::full(g));
  rep.put("seed", std::to_string(*cfg.seed));
  rep.put("k1", elem_str(k1));
  rep.put("k2", elem_str(k2));
  rep.put("k3", elem_str(k3));
  rep.put("checks", std::to_string(checks));
  rep.put("identity_holds", all_hold ? "true" : "false");
  rep.put("B", render_elem_list(b.elements()));
  rep.verdict = all_hold ? Verdict::pass : Verdict::fail;
  if (!all_hold) rep.put("reason", "cascade identity violated");
}

void run_gaussian_check(Report& rep, const Group& g, const JobConfig& cfg, const Rational& tol) {
  GroupMap delta(g, g, *cfg.delta);
  ProductDistribution m1 = make_product(g, *cfg.mu1->product);
  ProductDistribution m2 = make_product(g, *cfg.mu2->product);
  BlockAutomorphism eps{*cfg.eps_r, adjoint(delta)};
  if (m1.gauss.dim != m2.gauss.dim || m1.gauss.dim != eps.real.size())
    fail(Errc::dimension_mismatch, "mu1_A, mu2_A and eps_r must share one dimension");
  std::int64_t samples = cfg.samples.value_or(kDefaultSamples);

  bool pair = gaussian_pair_condition(m1.gauss, m2.gauss, eps.real);
  ProductFeqResult r =
      check_product_feq(m1, m2, eps, static_cast<int>(samples), to_double(tol), *cfg.seed);
  rep.put("eps_r", render_rat_matrix(*cfg.eps_r));
  rep.put("samples", std::to_string(samples));
  rep.put("seed", std::to_string(*cfg.seed));
  rep.put("tol", to_string(tol));
  rep.put("pair_condition", pair ? "true" : "false");
  rep.put("max_residual", format_double(r.max_residual));
  if (r.ok) {
    rep.verdict = Verdict::pass;
  } else {
    rep.verdict = Verdict::fail;
    rep.put("witness_s", render_rat_vector(r.argmax_s));
    rep.put("witness_sp", render_rat_vector(r.argmax_sp));
    rep.put("witness_h", elem_str(r.argmax_h));
    rep.put("witness_hp", elem_str(r.argmax_hp));
  }
}

}  // namespace

Report run(const JobConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  Report rep;
  rep.cmd = cfg.cmd;
  Group g(cfg.orders, cfg.bound.value_or(Bounds{}.element_scan));
  Rational tol = cfg.tol.value_or(default_tol());
  echo_instance(rep, cfg);
  switch (cfg.cmd) {
    case Command::check: run_check(rep, g, cfg); break;
    case Command::feq: run_feq(rep, g, cfg, tol); break;
    case Command::solve_partner: run_solve_partner(rep, g, cfg); break;
    case Command::decompose: run_decompose(rep, g, cfg); break;
    case Command::enumerate_auts: run_enumerate_auts(rep, g, cfg); break;
    case Command::fdm_demo: run_fdm_demo(rep, g, cfg); break;
    case Command::gaussian_check: run_gaussian_check(rep, g, cfg, tol); break;
  }
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

Report execute_config_text(std::string_view text, const CliOverrides& overrides) {
  JobConfig cfg;
  try {
    cfg = parse_config(text);
  } catch (const ConfigError& e) {
    Report rep;
    rep.verdict = Verdict::error;
    rep.put("error_code", errc_name(e.code()));
    if (e.line() > 0) rep.put("error_line", std::to_string(e.line()));
    rep.put("message", e.what());
    return rep;
  }
  if (overrides.tol) cfg.tol = overrides.tol;
  if (overrides.bound) cfg.bound = overrides.bound;
  try {
    return run(cfg);
  } catch (const Error& e) {
    Report rep;
    rep.cmd = cfg.cmd;
    rep.verdict = Verdict::error;
    rep.put("error_code", errc_name(e.code()));
    rep.put("message", e.what());
    return rep;
  }
}

}  // namespace heyde
