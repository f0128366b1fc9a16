#include "heyde/rational.hpp"

#include <cctype>

namespace heyde {

std::optional<Rational> parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };

  std::string_view num = text, den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!digits(den)) return std::nullopt;
  }
  if (!num.empty() && num.front() == '-') num.remove_prefix(1);
  if (!digits(num)) return std::nullopt;

  Rational r;
  if (mpq_set_str(r.get_mpq_t(), std::string(text).c_str(), 10) != 0) return std::nullopt;
  if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0) return std::nullopt;
  r.canonicalize();
  return r;
}

}  // namespace heyde
