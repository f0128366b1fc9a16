#pragma once

#include <cstdint>
#include <random>

#include "heyde/rational.hpp"

namespace heyde {

// Seeded source for randomized checks. mt19937_64 output is specified by the
// standard, so a seed pins the exact sample sequence on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : eng_() % n; }

  std::int64_t in_range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // |numerator| <= max_abs_num, 1 <= denominator <= max_den, reduced.
  Rational rational(std::int64_t max_abs_num, std::int64_t max_den) {
    std::int64_t num = in_range(-max_abs_num, max_abs_num);
    std::int64_t den = in_range(1, max_den);
    return rat(num, den);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace heyde
