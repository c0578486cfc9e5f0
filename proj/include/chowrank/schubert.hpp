#ifndef CHOWRANK_SCHUBERT_HPP
#define CHOWRANK_SCHUBERT_HPP

#include <map>
#include <string>
#include <vector>

#include "chowrank/rational.hpp"

namespace chowrank {

using ExactMatrix = std::vector<std::vector<Rational>>;

/**
 * Schubert cycle Omega(a,b) in the Chow ring of G(1,n): lines of P^n meeting
 * a fixed a-plane and contained in a fixed b-plane, 0 <= a < b <= n.
 * Dimension a+b-1, codimension 2(n-1)-(a+b-1).
 *
 * Internally products run in partition coordinates (p,q) = (n-1-a, n-b),
 * a two-row partition inside the 2 x (n-1) box.
 */
struct SchubertSymbol {
  int a{0};
  int b{1};
  int n{1};

  SchubertSymbol() = default;
  SchubertSymbol(int a_, int b_, int n_); // throws unless 0 <= a < b <= n

  int dimension() const { return a + b - 1; }
  int codimension() const { return 2 * (n - 1) - dimension(); }

  int part_p() const { return n - 1 - a; }
  int part_q() const { return n - b; }
  static SchubertSymbol from_partition(int p, int q, int n);

  friend auto operator<=>(const SchubertSymbol& x, const SchubertSymbol& y) {
    return std::pair(x.a, x.b) <=> std::pair(y.a, y.b);
  }
  friend bool operator==(const SchubertSymbol&, const SchubertSymbol&) = default;

  std::string render() const; // "Omega(1,4)"
};

/**
 * Homogeneous rational combination of Schubert symbols of one codimension.
 * The empty combination is the zero class (any codimension).
 */
class SchubertClass {
public:
  explicit SchubertClass(int n) : n_(n) {}
  static SchubertClass zero(int n) { return SchubertClass(n); }
  static SchubertClass of(const SchubertSymbol& s, const Rational& c = 1);

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  /// Codimension of the (homogeneous) class; -1 for the zero class.
  int codimension() const;
  const std::map<SchubertSymbol, Rational>& terms() const { return terms_; }
  Rational coeff(const SchubertSymbol& s) const;

  /// Adds c * s, keeping canonical form. Throws if it would break
  /// homogeneity or mix ambient n.
  void add_term(const SchubertSymbol& s, const Rational& c);

  SchubertClass operator+(const SchubertClass& rhs) const;
  SchubertClass scaled(const Rational& c) const;
  friend bool operator==(const SchubertClass&, const SchubertClass&) = default;

  std::string render() const; // sorted by symbol

private:
  int n_;
  std::map<SchubertSymbol, Rational> terms_;
};

/// Pieri multiplication by the hyperplane (Pluecker) class:
/// Omega(a,b)*H = Omega(a-1,b) + Omega(a,b-1), invalid symbols dropped.
SchubertClass pieri_mul_h(const SchubertClass& c);

/// Full product via the two-row Littlewood-Richardson rule with box
/// truncation. Bilinear, commutative, associative.
SchubertClass schubert_product(const SchubertClass& x, const SchubertClass& y);

/// Littlewood-Richardson coefficient c^lambda_{mu nu} for two-row shapes
/// (0 or 1). Preconditions: partitions valid, |lambda| = |mu| + |nu|.
int lr_two_row_coeff(int mu1, int mu2, int nu1, int nu2, int la1, int la2);

/// Degree of the zero-dimensional part of x*y: the coefficient of the point
/// class when codimensions are complementary. Zero classes pair to zero;
/// otherwise throws on non-complementary codimensions.
Rational pairing_number(const SchubertClass& x, const SchubertClass& y);

/// Pluecker degree of G(1,n): pairing of H^(2n-2) with the fundamental
/// class. Equals (2n-2)!/((n-1)!*n!).
Rational degree_g1n(int n);

/**
 * Concrete intersection data for X in G(1,n) with divisor D, the numeric
 * shadow of the matrix M. a indexed 1..floor(n/2), alpha 1..floor((n+1)/2),
 * lambda 1..floor(n/2); out-of-range indices read as zero.
 */
struct GrassData {
  int n{4};
  std::vector<Rational> a, alpha, lambda;

  GrassData(int n_, std::vector<Rational> a_, std::vector<Rational> alpha_,
            std::vector<Rational> lambda_); // throws on shape mismatch

  Rational a_at(int i) const;      // a_0 = 0 and a_i = 0 past floor(n/2)
  Rational alpha_at(int i) const;  // alpha_i = 0 past floor((n+1)/2)
  Rational lambda_at(int i) const;
};

/// The intersection matrix M of the Grassmannian case: 2 rows, n columns
/// (Schubert columns Omega(c,n-c) for c = 0..floor((n-1)/2), then D-columns
/// D*Omega(j,n-j+1) for j = 1..floor(n/2)), laid out with the parity split.
ExactMatrix grass_matrix(const GrassData& data);

/// Column labels matching grass_matrix, in order.
std::vector<std::string> grass_matrix_labels(int n);

} // namespace chowrank

#endif
