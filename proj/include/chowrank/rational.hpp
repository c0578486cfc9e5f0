#ifndef CHOWRANK_RATIONAL_HPP
#define CHOWRANK_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace chowrank {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number, always in canonical form (positive denominator,
// coprime numerator/denominator). cpp_rational maintains the invariant.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& r) { return numerator(r); }
inline BigInt den(const Rational& r) { return denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// Renders "p/q", or bare "p" when q = 1. Bit-exact across runs.
std::string render_rational(const Rational& r);

/// Parses "p", "-p", "p/q" (arbitrary precision). Returns nullopt on
/// malformed input or zero denominator.
std::optional<Rational> parse_rational(const std::string& text);

} // namespace chowrank

#endif
