#ifndef CHOWRANK_POLY_HPP
#define CHOWRANK_POLY_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "chowrank/rational.hpp"
#include "chowrank/varid.hpp"

namespace chowrank {

/**
 * Monomial: sparse exponent vector over VarId. Canonical form — entries
 * sorted by VarId, all exponents positive (zero exponents are never stored).
 */
class Monomial {
public:
  using Entry = std::pair<VarId, std::uint32_t>;

  Monomial() = default;
  static Monomial one() { return {}; }
  static Monomial var(VarId v, std::uint32_t exp = 1);
  /// Builds from arbitrary (possibly unsorted/duplicated) entries.
  static Monomial from_entries(std::vector<Entry> entries);

  bool is_one() const { return entries_.empty(); }
  std::int64_t degree() const;
  std::uint32_t exponent_of(VarId v) const;
  const std::vector<Entry>& entries() const { return entries_; }

  Monomial operator*(const Monomial& rhs) const;
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string render() const; // "a1^2*alpha2", "1" for the empty monomial

private:
  std::vector<Entry> entries_;
};

/// Graded lexicographic order over the fixed VarId order: higher total degree
/// first; ties broken by the earliest variable with a larger exponent.
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/**
 * Sparse multivariate polynomial over exact rationals. Canonical form is
 * unique: no zero coefficients, monomials canonical, terms held in graded-lex
 * order. Two polynomials are equal iff their term maps are equal.
 */
class Poly {
public:
  using TermMap = std::map<Monomial, Rational, GradedLexLess>;

  Poly() = default;
  static Poly zero() { return {}; }
  static Poly constant(const Rational& c);
  static Poly variable(VarId v);
  static Poly from_terms(TermMap terms); // strips zero coefficients

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  std::int64_t total_degree() const; // -1 for the zero polynomial

  Rational coeff(const Monomial& m) const;
  Rational constant_term() const { return coeff(Monomial::one()); }

  Poly operator-() const;
  Poly operator+(const Poly& rhs) const;
  Poly operator-(const Poly& rhs) const;
  Poly operator*(const Poly& rhs) const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly scaled(const Rational& c) const;
  Poly pow(std::uint32_t e) const;

  friend bool operator==(const Poly&, const Poly&) = default;

  void collect_vars(std::set<VarId>& out) const;

  /// Exact evaluation; throws std::invalid_argument if a variable occurring
  /// in the polynomial is missing from the assignment.
  Rational eval(const std::map<VarId, Rational>& values) const;

  /// Canonical textual rendering: terms in descending graded-lex order with
  /// explicit signs, e.g. "2*a1*alpha2 - 3/2*lambda1 + 1". Bit-exact.
  std::string render() const;

private:
  TermMap terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p.scaled(c); }

/**
 * Formal quotient of two polynomials. No multivariate GCD is ever applied;
 * equality is decided by cross-multiplication. The denominator is kept with
 * a positive leading coefficient so renderings are canonical.
 */
class RatFunc {
public:
  RatFunc() : num_(Poly::zero()), den_(Poly::constant(1)) {}
  RatFunc(Poly numerator, Poly denominator); // throws on zero denominator
  /*implicit*/ RatFunc(Poly numerator) : RatFunc(std::move(numerator), Poly::constant(1)) {}

  static RatFunc from_rational(const Rational& c) { return RatFunc(Poly::constant(c)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& rhs) const;
  RatFunc operator-(const RatFunc& rhs) const;
  RatFunc operator*(const RatFunc& rhs) const;
  RatFunc operator/(const RatFunc& rhs) const; // throws on zero divisor
  RatFunc& operator+=(const RatFunc& rhs);

  /// Cross-multiplication equality: p/q = r/s iff p*s - r*q = 0.
  bool equals(const RatFunc& rhs) const;
  /// p*s - r*q, canonical.
  Poly cross_difference(const RatFunc& rhs) const;

  /// Exact evaluation; throws std::domain_error if the denominator
  /// evaluates to zero.
  Rational eval(const std::map<VarId, Rational>& values) const;

  std::string render() const; // "num" or "(num)/(den)"

private:
  Poly num_, den_;
};

// ---- exact_symbolic operations ------------------------------------------

/// Substitutes variables by rational functions (variables absent from the
/// map are left alone). Throws if a substituted denominator is zero.
RatFunc substitute(const Poly& p, const std::map<VarId, RatFunc>& map);

/// Coefficient of a monomial in the ALPHA/LAMBDA variables: the polynomial
/// in the remaining variables multiplying `mono` in p. Throws if `mono`
/// mentions any non-ALPHA/LAMBDA variable.
Poly coeff_of(const Poly& p, const Monomial& mono);

/// Splits p as sum over alpha/lambda monomials m of coeff(m) * m.
/// Reconstructing the sum gives back p exactly.
std::map<Monomial, Poly, GradedLexLess> alpha_lambda_split(const Poly& p);

/// Deterministic integer point for (seed, variable, retry nonce): uniform in
/// [1, bound] as a denominator-one rational.
Rational random_point_value(std::uint64_t seed, VarId v, std::uint64_t nonce,
                            std::uint64_t bound);

/// Evaluates p at the deterministic random integer point keyed by seed;
/// every variable is assigned independently and uniformly in [1, bound].
Rational eval_random(const Poly& p, std::uint64_t seed, std::uint64_t bound);

} // namespace chowrank

#endif
