#include "chowrank/rational.hpp"

#include <cctype>

namespace chowrank {

std::string render_rational(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/";
    s += denominator(r).str();
  }
  return s;
}

namespace {

bool parse_bigint(const std::string& s, BigInt& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  out = BigInt(s);
  return true;
}

} // namespace

std::optional<Rational> parse_rational(const std::string& text) {
  auto slash = text.find('/');
  BigInt p, q = 1;
  if (slash == std::string::npos) {
    if (!parse_bigint(text, p)) return std::nullopt;
  } else {
    if (!parse_bigint(text.substr(0, slash), p)) return std::nullopt;
    if (!parse_bigint(text.substr(slash + 1), q)) return std::nullopt;
    if (q == 0) return std::nullopt;
    if (q < 0) { // canonical form keeps the denominator positive
      p = -p;
      q = -q;
    }
  }
  return Rational(p, q);
}

} // namespace chowrank
