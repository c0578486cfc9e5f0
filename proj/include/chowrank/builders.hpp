#ifndef CHOWRANK_BUILDERS_HPP
#define CHOWRANK_BUILDERS_HPP

#include <string>

#include "chowrank/partition_map.hpp"
#include "chowrank/poly.hpp"

namespace chowrank {

enum class AmbientKind {
  Projective,
  GrassLines,
  ProdProj,
  QuadricEvenN,
  QuadricOddN,
  BlowupP6,
  CurveTimesP5,
};

struct AmbientSpec {
  AmbientKind kind{AmbientKind::Projective};
  int n{0}; // unused for BlowupP6 / CurveTimesP5

  AmbientSpec(AmbientKind k, int n_ = 0); // validates per-kind n constraints
  std::string tag() const;                // "grass", "prodproj", ...
};

// Symbolic variables with the boundary conventions of each ambient.
// Grassmannian: a_0 = 0, a_i = 0 past floor(n/2), alpha_i = 0 past
// floor((n+1)/2). Product: a_0 = a_n = 0.
Poly grass_a(int i, int n);
Poly grass_alpha(int i, int n);
Poly grass_lambda(int i, int n);
Poly prod_a(int i, int n);
Poly prod_alpha(int i, int n);
Poly prod_lambda(int i, int n);

/// The self-intersection polynomial P of the ambient (P = 0 is the master
/// numerical identity every certified data set must satisfy).
Poly build_P(const AmbientSpec& ambient);

// ---- Grassmannian decomposition pieces ----------------------------------

/// Hodge determinant of (H, D) on the surface S_i = X . Omega(i, n-i+1),
/// written as the sum of two 2x2 determinants; for n even and i = n/2 only
/// the first summand survives. 1 <= i <= floor(n/2).
Poly hodge_minor_grass(int i, int n);

/// H^2 on S_i: a_{i-1} + 2a_i + a_{i+1}, degenerating to a_{i-1} + a_i for
/// n even, i = n/2.
Poly grass_weight(int i, int n);

/// det[[a_{i-1}+a_i, a_i+a_{i+1}], [alpha_i, alpha_{i+1}]] — the square of
/// this feeds the second sum of the Grassmannian decomposition.
Poly grass_alpha_det(int i, int n);

// ---- Product-case minors and coefficient families ------------------------

/// 2x2 minors of the a-block of M that appear in every denominator:
///   C_i = det[[a_{i-1}, a_i], [a_i, a_{i+1}]]
///   B_i = det[[a_{i-1}, a_{n-i}], [a_i, a_{n-i+1}]]
///   A_i = det[[a_i, a_{n-i}], [a_{i+1}, a_{n-i+1}]]
Poly prod_det_c(int i, int n);
Poly prod_det_b(int i, int n);
Poly prod_det_a(int i, int n);

/// Minor of columns (i, j, k) of the 3 x (2n-1) matrix M, as a polynomial.
/// Columns 1..n are the monomial columns, n+1..2n-1 the D-columns.
Poly minor_r(int i, int j, int k, int n);

Poly minor_r_big(int i, int n); // r_{i,i+1,n+i}, the Hodge minor on S_i
Poly minor_r_men(int i, int n); // r_{i,i+1,n-i+1}; identically 0 at i = ceil(n/2)

/// tilde r_i = det[[a_{i-1}, alpha_i], [alpha_i, lambda_i]] (reduced Hodge
/// determinant of (H1, D) on S_i).
Poly tilde_r(int i, int n);

/// det[[a_{i+1}, alpha_{i+1}], [alpha_{i+1}, lambda_i]] (reduced Hodge
/// determinant of (H2, D) on S_i) — the form the equal-ratio branch of the
/// decompositions actually uses.
Poly hodge2_minor(int i, int n);

enum class CoeffFamily { C, D, L, M, G, H };

/// The named coefficient families of the product case. d_i is zero by
/// convention at i = ceil(n/2); g/h take the block start s = sigma(i)
/// (identity map when sigma is null). Undefined (family, i) combinations
/// throw std::domain_error.
RatFunc named_coeff(CoeffFamily family, int i, int n,
                    const PartitionMap* sigma = nullptr);

/// Q^sigma: substitutes alpha_i -> (a_i / a_sigma(i)) * alpha_sigma(i) for
/// 2 <= i <= n-1; alpha_1, alpha_n, lambdas and a's are untouched.
/// Idempotent, since sigma(sigma(i)) = sigma(i).
RatFunc sigma_substitute(const Poly& p, const PartitionMap& sigma);
RatFunc sigma_substitute(const RatFunc& f, const PartitionMap& sigma);

} // namespace chowrank

#endif
