#ifndef CHOWRANK_RANK_HPP
#define CHOWRANK_RANK_HPP

#include <string>
#include <vector>

#include "chowrank/builders.hpp"
#include "chowrank/prodproj.hpp"
#include "chowrank/schubert.hpp"

namespace chowrank {

/// Fraction-free (Bareiss) rank of an exact rational matrix. No thresholds.
int exact_rank(const ExactMatrix& m);

enum class ConclusionKind { RankOne, RankTwo, NotForced, Inconsistent };

struct SummandValue {
  std::string label;
  Rational value;
  bool sign_ok{true}; // false when the value contradicts the Hodge-index sign
};

/// Termwise evaluation of the applicable decomposition, with sign
/// diagnostics. Data that cannot arise from the geometric situation is
/// reported through flags, never as an exception.
struct HodgeReport {
  Rational p_value;
  std::vector<SummandValue> summands;
  std::vector<std::string> flags;
  bool consistent{true};
};

/**
 * Exact witness for the rank conclusion. For rank-one the D-row of M equals
 * q times the H-row entrywise; for rank-two the D-row equals p * (first
 * divisor row) + q * (second divisor row). Both are re-checked by exact
 * re-multiplication before the certificate is issued.
 */
struct RankCertificate {
  std::string ambient_tag;
  int n{0};
  bool hypothesis_ok{true};
  std::string hypothesis_reason;
  Rational p_value;
  std::vector<SummandValue> summands;
  ConclusionKind conclusion{ConclusionKind::NotForced};
  Rational p; // multiplier of the first divisor row (rank-two only)
  Rational q; // multiplier of the H-row (rank-one) or second divisor row
  std::string reason; // for NotForced / Inconsistent
  std::vector<std::string> notes;
};

struct HypothesisStatus {
  bool ok{true};
  std::string reason;
};

/// Grassmannian hypothesis: every a_i nonzero. Product hypothesis: a_1 and
/// a_{n-1} positive (surjective projections) and all interior a_i positive.
HypothesisStatus validate_hypotheses(const GrassData& data);
HypothesisStatus validate_hypotheses(const ProdData& data);

HodgeReport hodge_report(const GrassData& data);
/// The product report derives sigma from the data ratios itself.
HodgeReport hodge_report(const ProdData& data);

RankCertificate certify_grass(const GrassData& data);
RankCertificate certify_prod(const ProdData& data);

// ---- miscellaneous ambients (section-4 style certifiers) -----------------

struct ProjectiveData {
  Rational d, delta, mu;
};

struct QuadricData {
  bool even_parity{true}; // parity of n for the quadric Q_{2n-2}
  Rational d, alpha1, alpha2, mu;
};

/// Shared shape of the blow-up of P^6 and C x P^5 examples.
struct PairAmbientData {
  Rational a1, a2, alpha1, alpha2, lambda1, lambda2;
};

RankCertificate certify_projective(const ProjectiveData& data);
RankCertificate certify_quadric(const QuadricData& data);
RankCertificate certify_blowup_p6(const PairAmbientData& data);
RankCertificate certify_curve_x_p5(const PairAmbientData& data);

} // namespace chowrank

#endif
