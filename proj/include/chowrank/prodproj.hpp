#ifndef CHOWRANK_PRODPROJ_HPP
#define CHOWRANK_PRODPROJ_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chowrank/rational.hpp"
#include "chowrank/schubert.hpp" // ExactMatrix

namespace chowrank {

/**
 * Homogeneous class in the Chow ring of P^(n-1) x P^(n-1): a rational
 * combination of monomials H1^i * H2^j with 0 <= i,j <= n-1 and constant
 * total degree i+j. Monomials with an exponent >= n vanish.
 */
class BidegreeClass {
public:
  using Key = std::pair<int, int>; // (i, j) exponents of (H1, H2)

  explicit BidegreeClass(int n) : n_(n) {}
  static BidegreeClass zero(int n) { return BidegreeClass(n); }
  static BidegreeClass monomial(int n, int i, int j, const Rational& c = 1);

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const; // -1 for zero
  const std::map<Key, Rational>& terms() const { return terms_; }
  Rational coeff(int i, int j) const;

  void add_term(int i, int j, const Rational& c); // truncates out-of-box, keeps homogeneity

  BidegreeClass operator+(const BidegreeClass& rhs) const;
  BidegreeClass scaled(const Rational& c) const;
  friend bool operator==(const BidegreeClass&, const BidegreeClass&) = default;

  std::string render() const;

private:
  int n_;
  std::map<Key, Rational> terms_;
};

/// Monomial product with box truncation:
/// H1^i H2^j * H1^k H2^l = H1^(i+k) H2^(j+l), zero when an exponent hits n.
BidegreeClass bideg_product(const BidegreeClass& x, const BidegreeClass& y);

/**
 * Concrete intersection data for X in P^(n-1) x P^(n-1) with divisor D:
 * a indexed 1..n-1, alpha 1..n, lambda 1..n-1, with a_0 = a_n = 0.
 */
struct ProdData {
  int n{3};
  std::vector<Rational> a, alpha, lambda;

  ProdData(int n_, std::vector<Rational> a_, std::vector<Rational> alpha_,
           std::vector<Rational> lambda_); // throws on shape mismatch

  Rational a_at(int i) const; // a_0 = a_n = 0
  Rational alpha_at(int i) const;
  Rational lambda_at(int i) const;
};

/// The intersection matrix M of the product case, 3 x (2n-1):
///   row H1 = (0, a1, ..., a_{n-1}, alpha1, ..., alpha_{n-1})
///   row H2 = (a1, ..., a_{n-1}, 0, alpha2, ..., alpha_n)
///   row D  = (alpha1, ..., alpha_n, lambda1, ..., lambda_{n-1})
ExactMatrix prod_matrix(const ProdData& data);

/// Column labels matching prod_matrix, in order.
std::vector<std::string> prod_matrix_labels(int n);

} // namespace chowrank

#endif
