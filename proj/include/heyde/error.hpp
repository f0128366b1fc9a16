#pragma once

#include <stdexcept>
#include <string>

namespace heyde {

enum class Errc {
  invalid_order,
  size_limit,
  group_mismatch,
  not_a_homomorphism,
  precondition,
  dimension_mismatch,
  parse_syntax,
  parse_semantic,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace heyde
