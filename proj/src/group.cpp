#include "heyde/group.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>

namespace heyde {

std::string elem_str(const Elem& x) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out << ',';
    out << x[i];
  }
  out << ')';
  return out.str();
}

// ---------------------------------------------------------------- Group

Group::Group(std::vector<std::int64_t> orders, std::int64_t max_order)
    : orders_(std::move(orders)) {
  if (orders_.empty()) fail(Errc::invalid_order, "group needs at least one cyclic factor");
  for (std::int64_t d : orders_) {
    if (d < 1) fail(Errc::invalid_order, "cyclic factor order must be >= 1, got " + std::to_string(d));
    if (order_ > max_order / d)
      fail(Errc::size_limit, "group order exceeds enumeration bound " + std::to_string(max_order));
    order_ *= d;
  }
  strides_.assign(orders_.size(), 1);
  for (std::size_t i = orders_.size(); i-- > 1;) strides_[i - 1] = strides_[i] * orders_[i];
}

Elem Group::canon(Elem x) const {
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    x[i] %= orders_[i];
    if (x[i] < 0) x[i] += orders_[i];
  }
  return x;
}

Elem Group::add(const Elem& a, const Elem& b) const {
  Elem r(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) r[i] = (a[i] + b[i]) % orders_[i];
  return r;
}

Elem Group::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

Elem Group::neg(const Elem& a) const {
  Elem r(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) r[i] = a[i] == 0 ? 0 : orders_[i] - a[i];
  return r;
}

Elem Group::scale(std::int64_t n, const Elem& a) const {
  Elem r(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    std::int64_t m = n % orders_[i];
    if (m < 0) m += orders_[i];
    r[i] = (m * a[i]) % orders_[i];
  }
  return r;
}

bool Group::is_zero(const Elem& a) const {
  return std::all_of(a.begin(), a.end(), [](std::int64_t c) { return c == 0; });
}

std::int64_t Group::index_of(const Elem& x) const {
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) idx += x[i] * strides_[i];
  return idx;
}

Elem Group::element(std::int64_t index) const {
  Elem x(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    x[i] = index / strides_[i];
    index %= strides_[i];
  }
  return x;
}

std::int64_t Group::element_order(const Elem& x) const {
  std::int64_t ord = 1;
  for (std::size_t i = 0; i < orders_.size(); ++i)
    ord = std::lcm(ord, orders_[i] / std::gcd(orders_[i], x[i]));
  return ord;
}

std::string Group::str() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i) out << " x ";
    out << 'Z' << orders_[i];
  }
  return out.str();
}

// ----------------------------------------------------------------- Turn

Turn turn_reduce(std::int64_t num, std::int64_t den) {
  num %= den;
  if (num < 0) num += den;
  std::int64_t g = std::gcd(num, den);
  return Turn{num / g, den / g};
}

Turn turn_add(Turn a, Turn b) {
  std::int64_t den = std::lcm(a.den, b.den);
  return turn_reduce(a.num * (den / a.den) + b.num * (den / b.den), den);
}

Turn turn_neg(Turn a) { return turn_reduce(-a.num, a.den); }

std::complex<double> turn_to_complex(const Turn& t) {
  if (t.num == 0) return {1.0, 0.0};
  double angle = 2.0 * std::numbers::pi * static_cast<double>(t.num) / static_cast<double>(t.den);
  return {std::cos(angle), std::sin(angle)};
}

Turn pairing(const Group& g, const Elem& x, const Elem& y) {
  if (x.size() != g.factors() || y.size() != g.factors())
    fail(Errc::group_mismatch, "pairing arguments must match the group's factor count");
  Turn t;
  for (std::size_t i = 0; i < g.factors(); ++i)
    t = turn_add(t, turn_reduce(x[i] * y[i], g.orders()[i]));
  return t;
}

// ------------------------------------------------------------- Subgroup

Subgroup::Subgroup(Group parent, std::vector<std::int64_t> indices, std::vector<Elem> gens)
    : parent_(std::move(parent)), indices_(std::move(indices)), gens_(std::move(gens)) {}

Subgroup Subgroup::trivial(const Group& parent) { return Subgroup(parent, {0}, {}); }

Subgroup Subgroup::full(const Group& parent) {
  std::vector<std::int64_t> idx(parent.order());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<Elem> gens;
  for (std::size_t i = 0; i < parent.factors(); ++i) {
    Elem e = parent.zero();
    e[i] = parent.orders()[i] > 1 ? 1 : 0;
    if (!parent.is_zero(e)) gens.push_back(e);
  }
  return Subgroup(parent, std::move(idx), std::move(gens));
}

Subgroup Subgroup::from_generators(const Group& parent, const std::vector<Elem>& gens) {
  std::set<std::int64_t> closure{0};
  std::vector<Elem> kept;
  for (const Elem& raw : gens) {
    Elem g = parent.canon(raw);
    kept.push_back(g);
    std::int64_t ord = parent.element_order(g);
    std::set<std::int64_t> next;
    for (std::int64_t idx : closure) {
      Elem cur = parent.element(idx);
      for (std::int64_t k = 0; k < ord; ++k) {
        next.insert(parent.index_of(cur));
        cur = parent.add(cur, g);
      }
    }
    closure = std::move(next);
  }
  return Subgroup(parent, {closure.begin(), closure.end()}, std::move(kept));
}

Subgroup Subgroup::from_sorted_indices(const Group& parent, std::vector<std::int64_t> indices) {
  std::vector<Elem> gens;
  for (std::int64_t idx : indices) {
    if (idx != 0) gens.push_back(parent.element(idx));
  }
  return Subgroup(parent, std::move(indices), std::move(gens));
}

std::vector<Elem> Subgroup::elements() const {
  std::vector<Elem> out;
  out.reserve(indices_.size());
  for (std::int64_t idx : indices_) out.push_back(parent_.element(idx));
  return out;
}

bool Subgroup::contains(const Elem& x) const { return contains_index(parent_.index_of(parent_.canon(x))); }

bool Subgroup::contains_index(std::int64_t idx) const {
  return std::binary_search(indices_.begin(), indices_.end(), idx);
}

bool Subgroup::is_closed() const {
  if (!contains_index(0)) return false;
  for (std::int64_t i : indices_) {
    Elem a = parent_.element(i);
    if (!contains(parent_.neg(a))) return false;
    for (std::int64_t j : indices_) {
      if (!contains(parent_.add(a, parent_.element(j)))) return false;
    }
  }
  return true;
}

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.indices() < b.indices();
}

// ------------------------------------------------------------- GroupMap

GroupMap::GroupMap(Group source, Group target, IntMat matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  const std::size_t rows = target_.factors(), cols = source_.factors();
  if (matrix_.size() != rows)
    fail(Errc::dimension_mismatch, "matrix must have one row per target factor");
  for (const auto& row : matrix_) {
    if (row.size() != cols)
      fail(Errc::dimension_mismatch, "matrix must have one column per source factor");
  }
  // Reduce entries mod target orders.
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      std::int64_t d = target_.orders()[i];
      matrix_[i][j] %= d;
      if (matrix_[i][j] < 0) matrix_[i][j] += d;
    }
  }
  // Well-definedness: each source generator's order must be respected.
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) {
      if (source_.orders()[j] * matrix_[i][j] % target_.orders()[i] != 0)
        fail(Errc::not_a_homomorphism,
             "entry (" + std::to_string(i) + "," + std::to_string(j) + ") violates the order of generator " +
                 std::to_string(j));
    }
  }
}

GroupMap GroupMap::identity(const Group& g) {
  IntMat m(g.factors(), std::vector<std::int64_t>(g.factors(), 0));
  for (std::size_t i = 0; i < g.factors(); ++i) m[i][i] = g.orders()[i] > 1 ? 1 : 0;
  return GroupMap(g, g, std::move(m));
}

GroupMap GroupMap::mul_by(const Group& g, std::int64_t n) {
  IntMat m(g.factors(), std::vector<std::int64_t>(g.factors(), 0));
  for (std::size_t i = 0; i < g.factors(); ++i) {
    std::int64_t d = g.orders()[i];
    std::int64_t v = n % d;
    if (v < 0) v += d;
    m[i][i] = v;
  }
  return GroupMap(g, g, std::move(m));
}

Elem GroupMap::apply(const Elem& x) const {
  Elem y(target_.factors(), 0);
  for (std::size_t i = 0; i < target_.factors(); ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < source_.factors(); ++j) acc += matrix_[i][j] * x[j];
    y[i] = acc % target_.orders()[i];
  }
  return y;
}

GroupMap GroupMap::compose(const GroupMap& inner) const {
  if (!(inner.target_ == source_)) fail(Errc::group_mismatch, "composition needs matching middle group");
  IntMat m(target_.factors(), std::vector<std::int64_t>(inner.source_.factors(), 0));
  for (std::size_t i = 0; i < target_.factors(); ++i)
    for (std::size_t j = 0; j < inner.source_.factors(); ++j) {
      std::int64_t acc = 0;
      for (std::size_t k = 0; k < source_.factors(); ++k) acc += matrix_[i][k] * inner.matrix_[k][j];
      m[i][j] = acc;
    }
  return GroupMap(inner.source_, target_, std::move(m));
}

GroupMap GroupMap::plus(const GroupMap& other) const {
  if (!(source_ == other.source_ && target_ == other.target_))
    fail(Errc::group_mismatch, "map sum needs identical source and target");
  IntMat m = matrix_;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] += other.matrix_[i][j];
  return GroupMap(source_, target_, std::move(m));
}

GroupMap GroupMap::minus(const GroupMap& other) const { return plus(other.negated()); }

GroupMap GroupMap::negated() const {
  IntMat m = matrix_;
  for (auto& row : m)
    for (auto& v : row) v = -v;
  return GroupMap(source_, target_, std::move(m));
}

std::string GroupMap::matrix_str() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < matrix_.size(); ++i) {
    if (i) out << ',';
    out << '[';
    for (std::size_t j = 0; j < matrix_[i].size(); ++j) {
      if (j) out << ',';
      out << matrix_[i][j];
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

Subgroup kernel(const GroupMap& f) {
  std::vector<std::int64_t> idx;
  for (std::int64_t i = 0; i < f.source().order(); ++i) {
    if (f.target().is_zero(f.apply(f.source().element(i)))) idx.push_back(i);
  }
  return Subgroup::from_sorted_indices(f.source(), std::move(idx));
}

Subgroup image(const GroupMap& f) {
  std::set<std::int64_t> idx;
  for (std::int64_t i = 0; i < f.source().order(); ++i)
    idx.insert(f.target().index_of(f.apply(f.source().element(i))));
  return Subgroup::from_sorted_indices(f.target(), {idx.begin(), idx.end()});
}

bool is_automorphism(const GroupMap& f) {
  if (!f.is_endomorphism()) fail(Errc::precondition, "automorphism test needs source = target");
  return kernel(f).size() == 1;
}

GroupMap adjoint(const GroupMap& f) {
  if (!f.is_endomorphism()) fail(Errc::precondition, "adjoint defined for endomorphisms here");
  const auto& d = f.source().orders();
  const std::size_t k = d.size();
  IntMat adj(k, std::vector<std::int64_t>(k, 0));
  // (x, adj y) = (f x, y) forces adj[j][i] = m[i][j] * d_j / d_i, which is an
  // integer exactly because f respects generator orders.
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < k; ++i) adj[j][i] = f.matrix()[i][j] * d[j] / d[i] % d[j];
  return GroupMap(f.source(), f.target(), std::move(adj));
}

Subgroup annihilator(const Subgroup& k) {
  const Group& g = k.parent();
  const std::vector<Elem> gens = k.generators().empty() ? k.elements() : k.generators();
  std::vector<std::int64_t> idx;
  for (std::int64_t i = 0; i < g.order(); ++i) {
    Elem x = g.element(i);
    bool kills = true;
    for (const Elem& y : gens) {
      if (!pairing(g, x, y).is_zero()) {
        kills = false;
        break;
      }
    }
    if (kills) idx.push_back(i);
  }
  return Subgroup::from_sorted_indices(g, std::move(idx));
}

HeydeCondition check_heyde_condition(const GroupMap& delta) {
  if (!is_automorphism(delta)) fail(Errc::precondition, "delta must be an automorphism");
  Subgroup ker = kernel(GroupMap::identity(delta.source()).plus(delta));
  HeydeCondition res;
  res.ok = ker.size() == 1;
  if (!res.ok) res.witness = delta.source().element(ker.indices()[1]);
  return res;
}

Subgroup p_component(const Group& g, std::int64_t p) {
  std::vector<std::int64_t> idx;
  for (std::int64_t i = 0; i < g.order(); ++i) {
    std::int64_t ord = g.element_order(g.element(i));
    while (ord % p == 0) ord /= p;
    if (ord == 1) idx.push_back(i);
  }
  return Subgroup::from_sorted_indices(g, std::move(idx));
}

Subgroup odd_part(const Group& g) {
  std::vector<std::int64_t> idx;
  for (std::int64_t i = 0; i < g.order(); ++i)
    if (g.element_order(g.element(i)) % 2 != 0) idx.push_back(i);
  return Subgroup::from_sorted_indices(g, std::move(idx));
}

std::pair<Subgroup, Subgroup> split_2_odd(const Group& g) {
  return {p_component(g, 2), odd_part(g)};
}

std::vector<Subgroup> subgroups(const Group& g, std::int64_t lattice_bound) {
  if (g.order() > lattice_bound)
    fail(Errc::size_limit, "subgroup lattice enumeration limited to order <= " + std::to_string(lattice_bound));
  std::set<std::vector<std::int64_t>> seen;
  std::vector<std::pair<std::vector<std::int64_t>, std::vector<Elem>>> queue;
  seen.insert({0});
  queue.push_back({{0}, {}});
  std::vector<Subgroup> out{Subgroup::trivial(g)};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto [idx, gens] = queue[head];
    for (std::int64_t e = 1; e < g.order(); ++e) {
      if (std::binary_search(idx.begin(), idx.end(), e)) continue;
      std::vector<Elem> next_gens = gens;
      next_gens.push_back(g.element(e));
      Subgroup s = Subgroup::from_generators(g, next_gens);
      if (seen.insert(s.indices()).second) {
        queue.push_back({s.indices(), next_gens});
        out.push_back(std::move(s));
      }
    }
  }
  std::sort(out.begin(), out.end(), subgroup_less);
  return out;
}

std::vector<Subgroup> invariant_subgroups(const Group& g, const GroupMap& delta,
                                          std::int64_t lattice_bound) {
  std::vector<Subgroup> out;
  for (Subgroup& s : subgroups(g, lattice_bound)) {
    std::set<std::int64_t> img;
    for (std::int64_t i : s.indices()) img.insert(g.index_of(delta.apply(g.element(i))));
    if (std::vector<std::int64_t>(img.begin(), img.end()) == s.indices()) out.push_back(std::move(s));
  }
  return out;
}

namespace {

// All generator-image tuples respecting orders; shared by the endomorphism
// and automorphism enumerations.
std::vector<GroupMap> enumerate_maps(const Group& g, std::int64_t bound, bool only_auto) {
  if (g.order() > bound)
    fail(Errc::size_limit, "map enumeration limited to order <= " + std::to_string(bound));
  const std::size_t k = g.factors();
  std::vector<std::vector<Elem>> choices(k);
  double total = 1;
  for (std::size_t j = 0; j < k; ++j) {
    for (std::int64_t i = 0; i < g.order(); ++i) {
      Elem x = g.element(i);
      if (g.is_zero(g.scale(g.orders()[j], x))) choices[j].push_back(x);
    }
    total *= static_cast<double>(choices[j].size());
  }
  if (total > 5e6) fail(Errc::size_limit, "too many candidate maps to enumerate");

  std::vector<GroupMap> out;
  std::vector<std::size_t> pick(k, 0);
  while (true) {
    IntMat m(k, std::vector<std::int64_t>(k, 0));
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < k; ++i) m[i][j] = choices[j][pick[j]][i];
    GroupMap f(g, g, std::move(m));
    if (!only_auto || kernel(f).size() == 1) out.push_back(std::move(f));
    std::size_t j = 0;
    while (j < k && ++pick[j] == choices[j].size()) pick[j++] = 0;
    if (j == k) break;
  }
  return out;
}

}  // namespace

std::vector<GroupMap> enumerate_endomorphisms(const Group& g, std::int64_t bound) {
  return enumerate_maps(g, bound, false);
}

std::vector<GroupMap> enumerate_automorphisms(const Group& g, std::int64_t bound) {
  return enumerate_maps(g, bound, true);
}

}  // namespace heyde
