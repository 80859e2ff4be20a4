#include "polarity/rational.hpp"

#include <sstream>

namespace polarity {

Rational parse_rational(const std::string& text) {
  std::string s = text;
  if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (num.empty() || den.empty())
      throw std::invalid_argument("parse_rational: malformed fraction '" + text + "'");
    return Rational{BigInt(num), BigInt(den)};
  }
  auto point = s.find('.');
  if (point == std::string::npos) return Rational(BigInt(s));
  // Decimal: digits after the point become a power-of-ten denominator.
  std::string digits = s.substr(0, point) + s.substr(point + 1);
  const std::size_t frac_len = s.size() - point - 1;
  if (digits.empty() || digits == "-" || digits == "+")
    throw std::invalid_argument("parse_rational: malformed decimal '" + text + "'");
  BigInt den = 1;
  for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
  return Rational(BigInt(digits), den);
}

std::string rational_to_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

}  // namespace polarity
