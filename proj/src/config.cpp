#include "heyde/config.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace heyde {

std::string command_name(Command c) {
  switch (c) {
    case Command::check: return "check";
    case Command::feq: return "feq";
    case Command::solve_partner: return "solve-partner";
    case Command::decompose: return "decompose";
    case Command::enumerate_auts: return "enumerate-auts";
    case Command::fdm_demo: return "fdm-demo";
    case Command::gaussian_check: return "gaussian-check";
  }
  return "?";
}

std::optional<Command> command_from(std::string_view name) {
  for (Command c : {Command::check, Command::feq, Command::solve_partner, Command::decompose,
                    Command::enumerate_auts, Command::fdm_demo, Command::gaussian_check}) {
    if (command_name(c) == name) return c;
  }
  return std::nullopt;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<std::int64_t> parse_int(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  std::size_t i = s.front() == '-' ? 1 : 0;
  if (i == s.size()) return std::nullopt;
  std::int64_t v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    v = v * 10 + (s[i] - '0');
    if (v > (std::int64_t{1} << 40)) return std::nullopt;  // plenty for this tool
  }
  return s.front() == '-' ? -v : v;
}

// Splits "a,b,c" at top level (no nesting in our literals beyond one bracket).
std::vector<std::string_view> split_top(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '[' || s[i] == '(') ++depth;
    if (s[i] == ']' || s[i] == ')') --depth;
    if (s[i] == sep && depth == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

std::optional<std::string_view> strip_brackets(std::string_view s, char open, char close) {
  s = trim(s);
  if (s.size() < 2 || s.front() != open || s.back() != close) return std::nullopt;
  return s.substr(1, s.size() - 2);
}

}  // namespace

std::optional<std::vector<std::int64_t>> parse_orders(std::string_view text) {
  std::vector<std::int64_t> orders;
  for (std::string_view part : split_top(text, 'x')) {
    part = trim(part);
    if (part.size() < 2 || part.front() != 'Z') return std::nullopt;
    auto v = parse_int(part.substr(1));
    if (!v || *v < 1) return std::nullopt;
    orders.push_back(*v);
  }
  return orders;
}

std::optional<IntMat> parse_int_matrix(std::string_view text) {
  auto body = strip_brackets(text, '[', ']');
  if (!body) return std::nullopt;
  IntMat m;
  for (std::string_view row : split_top(*body, ',')) {
    auto row_body = strip_brackets(row, '[', ']');
    if (!row_body) return std::nullopt;
    std::vector<std::int64_t> r;
    for (std::string_view cell : split_top(*row_body, ',')) {
      auto v = parse_int(cell);
      if (!v) return std::nullopt;
      r.push_back(*v);
    }
    m.push_back(std::move(r));
  }
  return m;
}

std::optional<RatVec> parse_rat_vector(std::string_view text) {
  auto body = strip_brackets(text, '[', ']');
  if (!body) return std::nullopt;
  RatVec v;
  for (std::string_view cell : split_top(*body, ',')) {
    auto r = parse_rational(trim(cell));
    if (!r) return std::nullopt;
    v.push_back(*r);
  }
  return v;
}

std::optional<RatMat> parse_rat_matrix(std::string_view text) {
  auto body = strip_brackets(text, '[', ']');
  if (!body) return std::nullopt;
  RatMat m;
  for (std::string_view row : split_top(*body, ',')) {
    auto r = parse_rat_vector(trim(row));
    if (!r) return std::nullopt;
    m.push_back(std::move(*r));
  }
  return m;
}

std::optional<Elem> parse_elem(std::string_view text) {
  auto body = strip_brackets(text, '(', ')');
  if (!body) return std::nullopt;
  Elem e;
  for (std::string_view cell : split_top(*body, ',')) {
    auto v = parse_int(cell);
    if (!v) return std::nullopt;
    e.push_back(*v);
  }
  return e;
}

std::string render_orders(const std::vector<std::int64_t>& orders) {
  std::ostringstream out;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (i) out << " x ";
    out << 'Z' << orders[i];
  }
  return out.str();
}

std::string render_int_matrix(const IntMat& m) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out << ',';
    out << '[';
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (j) out << ',';
      out << m[i][j];
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

std::string render_rat_matrix(const RatMat& m) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out << ',';
    out << '[';
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (j) out << ',';
      out << to_string(m[i][j]);
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

std::string render_rat_vector(const RatVec& v) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    out << to_string(v[i]);
  }
  out << ']';
  return out.str();
}

namespace {

struct RawConfig {
  std::map<std::string, std::pair<std::string, int>> kv;  // key -> (value, line)

  bool has(const std::string& k) const { return kv.count(k) != 0; }
  int line(const std::string& k) const { return kv.at(k).second; }
  const std::string& value(const std::string& k) const { return kv.at(k).first; }
};

[[noreturn]] void syntax_error(int line, const std::string& msg) {
  throw ConfigError(Errc::parse_syntax, line, msg);
}

[[noreturn]] void semantic_error(int line, const std::string& msg) {
  throw ConfigError(Errc::parse_semantic, line, msg);
}

RawConfig scan_lines(std::string_view text) {
  RawConfig raw;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    std::size_t eq = t.find('=');
    if (eq == std::string_view::npos) syntax_error(line_no, "expected 'key = value'");
    std::string key{trim(t.substr(0, eq))};
    std::string value{trim(t.substr(eq + 1))};
    if (key.empty()) syntax_error(line_no, "empty key");
    if (raw.has(key)) syntax_error(line_no, "duplicate key '" + key + "'");
    raw.kv[key] = {value, line_no};
  }
  return raw;
}

DiscreteSpec parse_discrete(const std::string& value, int line) {
  DiscreteSpec spec;
  std::string_view v = trim(value);
  if (v.substr(0, 1) == "[") {
    auto lit = parse_rat_vector(v);
    if (!lit) syntax_error(line, "bad mass vector literal");
    spec.kind = DiscreteSpec::Kind::literal;
    spec.literal = std::move(*lit);
    return spec;
  }
  if (v == "haar full") {
    spec.kind = DiscreteSpec::Kind::haar_full;
    return spec;
  }
  if (v.substr(0, 9) == "haar gen ") {
    spec.kind = DiscreteSpec::Kind::haar_gens;
    std::string_view rest = trim(v.substr(9));
    for (std::string_view part : split_top(rest, ' ')) {
      part = trim(part);
      if (part.empty()) continue;
      auto e = parse_elem(part);
      if (!e) syntax_error(line, "bad generator element");
      spec.gens.push_back(std::move(*e));
    }
    if (spec.gens.empty()) syntax_error(line, "haar gen needs at least one generator");
    return spec;
  }
  if (v.substr(0, 6) == "point ") {
    auto e = parse_elem(trim(v.substr(6)));
    if (!e) syntax_error(line, "bad point element");
    spec.kind = DiscreteSpec::Kind::point;
    spec.point = std::move(*e);
    return spec;
  }
  syntax_error(line, "distribution must be a mass vector, 'haar full', 'haar gen ...' or 'point ...'");
}

const char* const kKnownKeys[] = {"group",     "delta",    "cmd",       "mu1",       "mu2",
                                  "mu1_A",     "mu1_t",    "mu1_rho",   "mu1_shift", "mu2_A",
                                  "mu2_t",     "mu2_rho",  "mu2_shift", "eps_r",     "samples",
                                  "tol",       "seed",     "bound",     "lattice_bound",
                                  "aut_bound"};

std::optional<DistSpec> parse_mu(const RawConfig& raw, const std::string& key, const Group& g) {
  if (!raw.has(key)) return std::nullopt;
  int line = raw.line(key);
  DistSpec spec;
  if (trim(raw.value(key)) == "product") {
    ProductSpec prod;
    for (const char* sub : {"_A", "_t", "_rho", "_shift"}) {
      if (!raw.has(key + sub)) semantic_error(line, key + " = product needs key '" + key + sub + "'");
    }
    auto a = parse_rat_matrix(raw.value(key + "_A"));
    if (!a) syntax_error(raw.line(key + "_A"), "bad rational matrix");
    auto t = parse_rat_vector(raw.value(key + "_t"));
    if (!t) syntax_error(raw.line(key + "_t"), "bad rational vector");
    prod.a = std::move(*a);
    prod.t = std::move(*t);
    prod.rho = parse_discrete(raw.value(key + "_rho"), raw.line(key + "_rho"));
    auto sh = parse_elem(raw.value(key + "_shift"));
    if (!sh) syntax_error(raw.line(key + "_shift"), "bad shift element");
    if (sh->size() != g.factors())
      semantic_error(raw.line(key + "_shift"), "shift arity does not match the group");
    prod.shift = g.canon(std::move(*sh));
    spec.product = std::move(prod);
    return spec;
  }
  for (const char* sub : {"_A", "_t", "_rho", "_shift"}) {
    if (raw.has(key + sub))
      semantic_error(raw.line(key + sub), "'" + key + sub + "' is only valid when " + key + " = product");
  }
  spec.discrete = parse_discrete(raw.value(key), line);
  return spec;
}

void canon_discrete(DiscreteSpec& spec, const Group& g, int line) {
  switch (spec.kind) {
    case DiscreteSpec::Kind::literal: {
      if (static_cast<std::int64_t>(spec.literal.size()) != g.order())
        semantic_error(line, "mass vector needs one entry per group element");
      Rational total = 0;
      for (const Rational& m : spec.literal) {
        if (m < 0) semantic_error(line, "masses must be nonnegative");
        total += m;
      }
      if (total != 1) semantic_error(line, "masses must sum to exactly 1");
      break;
    }
    case DiscreteSpec::Kind::haar_full:
      break;
    case DiscreteSpec::Kind::haar_gens:
      for (Elem& e : spec.gens) {
        if (e.size() != g.factors()) semantic_error(line, "generator arity does not match the group");
        e = g.canon(e);
      }
      break;
    case DiscreteSpec::Kind::point:
      if (spec.point.size() != g.factors()) semantic_error(line, "point arity does not match the group");
      spec.point = g.canon(spec.point);
      break;
  }
}

}  // namespace

JobConfig parse_config(std::string_view text) {
  RawConfig raw = scan_lines(text);
  for (const auto& [key, vl] : raw.kv) {
    if (std::find_if(std::begin(kKnownKeys), std::end(kKnownKeys),
                     [&](const char* k) { return key == k; }) == std::end(kKnownKeys))
      syntax_error(vl.second, "unknown key '" + key + "'");
  }

  JobConfig cfg;
  if (!raw.has("group")) semantic_error(0, "missing required key 'group'");
  auto orders = parse_orders(raw.value("group"));
  if (!orders) syntax_error(raw.line("group"), "bad group literal, expected 'Zd x Zd x ...'");
  cfg.orders = std::move(*orders);

  if (!raw.has("cmd")) semantic_error(0, "missing required key 'cmd'");
  auto cmd = command_from(trim(raw.value("cmd")));
  if (!cmd) syntax_error(raw.line("cmd"), "unknown command '" + raw.value("cmd") + "'");
  cfg.cmd = *cmd;

  for (auto [key, dest] : {std::pair{"bound", &cfg.bound}, {"lattice_bound", &cfg.lattice_bound},
                           {"aut_bound", &cfg.aut_bound}, {"samples", &cfg.samples}}) {
    if (raw.has(key)) {
      auto v = parse_int(raw.value(key));
      if (!v || *v < 1) syntax_error(raw.line(key), std::string("bad positive integer for '") + key + "'");
      *dest = *v;
    }
  }
  if (raw.has("seed")) {
    auto v = parse_int(raw.value("seed"));
    if (!v || *v < 0) syntax_error(raw.line("seed"), "bad seed");
    cfg.seed = static_cast<std::uint64_t>(*v);
  }
  if (raw.has("tol")) {
    auto v = parse_rational(trim(raw.value("tol")));
    if (!v || *v <= 0) syntax_error(raw.line("tol"), "tol must be a positive rational");
    cfg.tol = *v;
  }

  Group g = [&] {
    try {
      return Group(cfg.orders, cfg.bound.value_or(Bounds{}.element_scan));
    } catch (const Error& e) {
      semantic_error(raw.line("group"), e.what());
    }
  }();

  if (raw.has("delta")) {
    auto m = parse_int_matrix(raw.value("delta"));
    if (!m) syntax_error(raw.line("delta"), "bad integer matrix");
    try {
      GroupMap dm(g, g, *m);
      cfg.delta = dm.matrix();  // canonical reduced entries
    } catch (const Error& e) {
      semantic_error(raw.line("delta"), e.what());
    }
  }
  if (raw.has("eps_r")) {
    auto m = parse_rat_matrix(raw.value("eps_r"));
    if (!m) syntax_error(raw.line("eps_r"), "bad rational matrix");
    for (const RatVec& row : *m) {
      if (row.size() != m->size()) semantic_error(raw.line("eps_r"), "eps_r must be square");
    }
    cfg.eps_r = std::move(*m);
  }

  cfg.mu1 = parse_mu(raw, "mu1", g);
  cfg.mu2 = parse_mu(raw, "mu2", g);
  for (auto [spec, key] : {std::pair{&cfg.mu1, "mu1"}, {&cfg.mu2, "mu2"}}) {
    if (!spec->has_value()) continue;
    int line = raw.line(key);
    if ((*spec)->discrete) canon_discrete(*(*spec)->discrete, g, line);
    if ((*spec)->product) canon_discrete((*spec)->product->rho, g, raw.line(std::string(key) + "_rho"));
  }

  // Per-command key requirements.
  auto require = [&](const char* key, bool pred) {
    if (!pred) semantic_error(0, "command '" + command_name(cfg.cmd) + "' requires key '" + key + "'");
  };
  auto forbid = [&](const char* key, bool absent) {
    if (!absent)
      semantic_error(raw.line(key), "command '" + command_name(cfg.cmd) + "' does not use key '" + key + "'");
  };
  switch (cfg.cmd) {
    case Command::check:
    case Command::feq:
    case Command::decompose:
      require("delta", cfg.delta.has_value());
      require("mu1", cfg.mu1.has_value());
      require("mu2", cfg.mu2.has_value());
      forbid("eps_r", !cfg.eps_r);
      if (cfg.mu1->product || cfg.mu2->product)
        semantic_error(raw.line("cmd"), "command '" + command_name(cfg.cmd) +
                                            "' works on the finite group; use discrete mu specs");
      break;
    case Command::solve_partner:
      require("delta", cfg.delta.has_value());
      require("mu2", cfg.mu2.has_value());
      forbid("mu1", !cfg.mu1);
      forbid("eps_r", !cfg.eps_r);
      if (cfg.mu2->product)
        semantic_error(raw.line("cmd"), "solve-partner works on the finite group; use a discrete mu2");
      break;
    case Command::enumerate_auts:
      forbid("delta", !cfg.delta);
      forbid("mu1", !cfg.mu1);
      forbid("mu2", !cfg.mu2);
      forbid("eps_r", !cfg.eps_r);
      break;
    case Command::fdm_demo:
      require("delta", cfg.delta.has_value());
      require("seed", cfg.seed.has_value());
      forbid("mu1", !cfg.mu1);
      forbid("mu2", !cfg.mu2);
      break;
    case Command::gaussian_check:
      require("delta", cfg.delta.has_value());
      require("mu1", cfg.mu1.has_value());
      require("mu2", cfg.mu2.has_value());
      require("eps_r", cfg.eps_r.has_value());
      require("seed", cfg.seed.has_value());
      if (!cfg.mu1->product || !cfg.mu2->product)
        semantic_error(raw.line("cmd"), "gaussian-check needs product-form mu1 and mu2");
      break;
  }

  // Commands built on the symmetry criterion also need delta to be a valid
  // coefficient: an automorphism with Ker(I + delta) = {0}.
  if (cfg.cmd == Command::check || cfg.cmd == Command::feq || cfg.cmd == Command::solve_partner ||
      cfg.cmd == Command::decompose || cfg.cmd == Command::gaussian_check) {
    GroupMap dm(g, g, *cfg.delta);
    if (!is_automorphism(dm))
      semantic_error(raw.line("delta"), "delta is not an automorphism");
    HeydeCondition hc = check_heyde_condition(dm);
    if (!hc.ok)
      semantic_error(raw.line("delta"),
                     "condition Ker(I+delta)={0} fails, witness " + elem_str(*hc.witness));
  }
  return cfg;
}

namespace {

std::string render_discrete(const DiscreteSpec& spec) {
  switch (spec.kind) {
    case DiscreteSpec::Kind::literal: return render_rat_vector(spec.literal);
    case DiscreteSpec::Kind::haar_full: return "haar full";
    case DiscreteSpec::Kind::haar_gens: {
      std::string out = "haar gen";
      for (const Elem& e : spec.gens) out += " " + elem_str(e);
      return out;
    }
    case DiscreteSpec::Kind::point: return "point " + elem_str(spec.point);
  }
  return "";
}

void render_mu(std::ostringstream& out, const std::string& key, const DistSpec& spec) {
  if (spec.product) {
    out << key << " = product\n";
    out << key << "_A = " << render_rat_matrix(spec.product->a) << '\n';
    out << key << "_t = " << render_rat_vector(spec.product->t) << '\n';
    out << key << "_rho = " << render_discrete(spec.product->rho) << '\n';
    out << key << "_shift = " << elem_str(spec.product->shift) << '\n';
  } else {
    out << key << " = " << render_discrete(*spec.discrete) << '\n';
  }
}

}  // namespace

std::string render_config(const JobConfig& c) {
  std::ostringstream out;
  out << "group = " << render_orders(c.orders) << '\n';
  if (c.delta) out << "delta = " << render_int_matrix(*c.delta) << '\n';
  out << "cmd = " << command_name(c.cmd) << '\n';
  if (c.mu1) render_mu(out, "mu1", *c.mu1);
  if (c.mu2) render_mu(out, "mu2", *c.mu2);
  if (c.eps_r) out << "eps_r = " << render_rat_matrix(*c.eps_r) << '\n';
  if (c.samples) out << "samples = " << *c.samples << '\n';
  if (c.tol) out << "tol = " << to_string(*c.tol) << '\n';
  if (c.seed) out << "seed = " << *c.seed << '\n';
  if (c.bound) out << "bound = " << *c.bound << '\n';
  if (c.lattice_bound) out << "lattice_bound = " << *c.lattice_bound << '\n';
  if (c.aut_bound) out << "aut_bound = " << *c.aut_bound << '\n';
  return out.str();
}

}  // namespace heyde
