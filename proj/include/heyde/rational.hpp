#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace heyde {

// Exact rational scalar. GMP keeps values canonical (lowest terms, positive
// denominator) as long as arithmetic goes through the class operators.
using Rational = mpq_class;
using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Lowest-terms literal: "p/q", or plain "p" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline double to_double(const Rational& r) { return r.get_d(); }

// Strict "p" or "p/q" with q > 0; anything else yields nullopt.
std::optional<Rational> parse_rational(std::string_view text);

}  // namespace heyde
