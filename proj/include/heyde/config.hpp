#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "heyde/error.hpp"
#include "heyde/group.hpp"
#include "heyde/rational.hpp"

namespace heyde {

enum class Command {
  check,
  feq,
  solve_partner,
  decompose,
  enumerate_auts,
  fdm_demo,
  gaussian_check,
};

std::string command_name(Command c);
std::optional<Command> command_from(std::string_view name);

// Distribution literal on the finite group: explicit mass vector, Haar of a
// subgroup, or a point mass.
struct DiscreteSpec {
  enum class Kind { literal, haar_full, haar_gens, point };
  Kind kind = Kind::haar_full;
  RatVec literal;
  std::vector<Elem> gens;
  Elem point;

  friend bool operator==(const DiscreteSpec&, const DiscreteSpec&) = default;
};

// Gaussian factor x discrete factor x shift, for distributions on R^n x D.
struct ProductSpec {
  RatMat a;
  RatVec t;
  DiscreteSpec rho;
  Elem shift;

  friend bool operator==(const ProductSpec&, const ProductSpec&) = default;
};

struct DistSpec {
  std::optional<DiscreteSpec> discrete;
  std::optional<ProductSpec> product;

  friend bool operator==(const DistSpec&, const DistSpec&) = default;
};

struct JobConfig {
  std::vector<std::int64_t> orders;
  Command cmd = Command::check;
  std::optional<IntMat> delta;
  std::optional<DistSpec> mu1;
  std::optional<DistSpec> mu2;
  std::optional<RatMat> eps_r;
  std::optional<std::int64_t> samples;
  std::optional<Rational> tol;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> bound;
  std::optional<std::int64_t> lattice_bound;
  std::optional<std::int64_t> aut_bound;

  friend bool operator==(const JobConfig&, const JobConfig&) = default;
};

class ConfigError : public Error {
 public:
  ConfigError(Errc code, int line, const std::string& msg)
      : Error(code, msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Line-oriented "key = value" grammar, '#' lines are comments. Throws
// ConfigError with Errc::parse_syntax or Errc::parse_semantic.
JobConfig parse_config(std::string_view text);

// Canonical form; parse_config(render_config(c)) == c.
std::string render_config(const JobConfig& c);

// Shared literal helpers (also used for report round-trips).
std::optional<std::vector<std::int64_t>> parse_orders(std::string_view text);
std::optional<IntMat> parse_int_matrix(std::string_view text);
std::optional<RatMat> parse_rat_matrix(std::string_view text);
std::optional<RatVec> parse_rat_vector(std::string_view text);
std::optional<Elem> parse_elem(std::string_view text);

std::string render_orders(const std::vector<std::int64_t>& orders);
std::string render_int_matrix(const IntMat& m);
std::string render_rat_matrix(const RatMat& m);
std::string render_rat_vector(const RatVec& v);

}  // namespace heyde
