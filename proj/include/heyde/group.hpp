#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heyde/error.hpp"

namespace heyde {

// Element of Z_{d1} x ... x Z_{dk} in canonical coordinates, 0 <= c[i] < d[i].
using Elem = std::vector<std::int64_t>;
using IntMat = std::vector<std::vector<std::int64_t>>;

std::string elem_str(const Elem& x);

// Exhaustive-enumeration limits. Scans walk all elements, lattice walks all
// subgroups, automorphism enumeration walks all generator-image tuples.
struct Bounds {
  std::int64_t element_scan = 10000;
  std::int64_t subgroup_lattice = 256;
  std::int64_t automorphism = 64;
};

// Finite Abelian group in fixed cyclic-factor presentation. Value type; two
// groups are equal iff their orders lists coincide (no isomorphism testing).
class Group {
 public:
  explicit Group(std::vector<std::int64_t> orders,
                 std::int64_t max_order = Bounds{}.element_scan);

  const std::vector<std::int64_t>& orders() const { return orders_; }
  std::int64_t order() const { return order_; }
  std::size_t factors() const { return orders_.size(); }

  Elem zero() const { return Elem(orders_.size(), 0); }
  Elem canon(Elem x) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem scale(std::int64_t n, const Elem& a) const;
  bool is_zero(const Elem& a) const;

  std::int64_t index_of(const Elem& x) const;
  Elem element(std::int64_t index) const;
  std::int64_t element_order(const Elem& x) const;

  std::string str() const;  // "Z2 x Z3"

  friend bool operator==(const Group& a, const Group& b) { return a.orders_ == b.orders_; }

 private:
  std::vector<std::int64_t> orders_;
  std::vector<std::int64_t> strides_;
  std::int64_t order_ = 1;
};

// Character value as an exact fraction of a full turn, reduced, in [0, 1).
// Turn t stands for exp(2*pi*i * t); turn 0 is the value 1.
struct Turn {
  std::int64_t num = 0;
  std::int64_t den = 1;

  bool is_zero() const { return num == 0; }
  friend bool operator==(const Turn&, const Turn&) = default;
};

Turn turn_reduce(std::int64_t num, std::int64_t den);
Turn turn_add(Turn a, Turn b);
Turn turn_neg(Turn a);
std::complex<double> turn_to_complex(const Turn& t);

// (x, y) = exp(2*pi*i * sum_j x_j y_j / d_j). Requires identical orders lists.
Turn pairing(const Group& g, const Elem& x, const Elem& y);

// Subgroup in canonical form: sorted element-index list plus a generator set.
class Subgroup {
 public:
  static Subgroup trivial(const Group& parent);
  static Subgroup full(const Group& parent);
  static Subgroup from_generators(const Group& parent, const std::vector<Elem>& gens);
  // Trusted path for element sets already known to be closed.
  static Subgroup from_sorted_indices(const Group& parent, std::vector<std::int64_t> indices);

  const Group& parent() const { return parent_; }
  const std::vector<std::int64_t>& indices() const { return indices_; }
  const std::vector<Elem>& generators() const { return gens_; }
  std::int64_t size() const { return static_cast<std::int64_t>(indices_.size()); }
  std::vector<Elem> elements() const;
  bool contains(const Elem& x) const;
  bool contains_index(std::int64_t idx) const;
  bool is_closed() const;  // closure + negation + zero, by scan

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.indices_ == b.indices_;
  }

 private:
  Subgroup(Group parent, std::vector<std::int64_t> indices, std::vector<Elem> gens);
  Group parent_;
  std::vector<std::int64_t> indices_;  // sorted
  std::vector<Elem> gens_;
};

// Canonical order: by size, then by sorted index list. Used to break ties in
// subgroup searches deterministically.
bool subgroup_less(const Subgroup& a, const Subgroup& b);

// Homomorphism x -> M x between fixed-presentation groups, entries reduced
// modulo the target orders. Construction validates that generator orders are
// respected, which is exactly well-definedness.
class GroupMap {
 public:
  GroupMap(Group source, Group target, IntMat matrix);

  static GroupMap identity(const Group& g);
  static GroupMap mul_by(const Group& g, std::int64_t n);  // f_n: x -> n x

  const Group& source() const { return source_; }
  const Group& target() const { return target_; }
  const IntMat& matrix() const { return matrix_; }
  bool is_endomorphism() const { return source_ == target_; }

  Elem apply(const Elem& x) const;
  GroupMap compose(const GroupMap& inner) const;  // this o inner
  GroupMap plus(const GroupMap& other) const;
  GroupMap minus(const GroupMap& other) const;
  GroupMap negated() const;

  std::string matrix_str() const;  // "[[a,b],[c,d]]"

  friend bool operator==(const GroupMap& a, const GroupMap& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.matrix_ == b.matrix_;
  }

 private:
  Group source_;
  Group target_;
  IntMat matrix_;  // target.factors() rows, source.factors() cols
};

Subgroup kernel(const GroupMap& f);
Subgroup image(const GroupMap& f);
bool is_automorphism(const GroupMap& f);

// Adjoint endomorphism: the unique map with (f x, y) = (x, adjoint(f) y).
GroupMap adjoint(const GroupMap& f);

// A(X, K) = { x : (x, y) = 1 for all y in K }, K a subgroup of the dual.
// The dual carries the same orders list, so the result lives on K's parent.
Subgroup annihilator(const Subgroup& k);

// Ker(I + delta) = {0}? Requires delta to be an automorphism. On failure the
// witness is a nonzero kernel element of I + delta.
struct HeydeCondition {
  bool ok = false;
  std::optional<Elem> witness;
};
HeydeCondition check_heyde_condition(const GroupMap& delta);

Subgroup p_component(const Group& g, std::int64_t p);
Subgroup odd_part(const Group& g);
std::pair<Subgroup, Subgroup> split_2_odd(const Group& g);

// Complete subgroup lattice, canonically sorted.
std::vector<Subgroup> subgroups(const Group& g,
                                std::int64_t lattice_bound = Bounds{}.subgroup_lattice);
std::vector<Subgroup> invariant_subgroups(const Group& g, const GroupMap& delta,
                                          std::int64_t lattice_bound = Bounds{}.subgroup_lattice);

std::vector<GroupMap> enumerate_endomorphisms(const Group& g,
                                              std::int64_t bound = Bounds{}.automorphism);
std::vector<GroupMap> enumerate_automorphisms(const Group& g,
                                              std::int64_t bound = Bounds{}.automorphism);

}  // namespace heyde
