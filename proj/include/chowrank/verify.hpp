#ifndef CHOWRANK_VERIFY_HPP
#define CHOWRANK_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "chowrank/builders.hpp"
#include "chowrank/partition_map.hpp"
#include "chowrank/poly.hpp"

namespace chowrank {

enum class VerifyStatus { Verified, Failed };

struct LedgerEntry {
  Monomial monomial; // alpha/lambda monomial with mismatched coefficients
  std::string lhs_coeff;
  std::string rhs_coeff;
};

struct EvalStats {
  int samples{0};
  int value_mismatches{0};
};

/// Result of one identity check: status is Verified iff the residual is the
/// zero polynomial; on failure the ledger names every mismatched monomial.
struct VerificationReport {
  std::string identity;
  int n{0};
  std::optional<PartitionMap> sigma;
  VerifyStatus status{VerifyStatus::Failed};
  Poly residual;
  std::vector<LedgerEntry> ledger;
  EvalStats eval;

  bool verified() const { return status == VerifyStatus::Verified; }
};

struct VerifyOptions {
  std::uint64_t seed{2024};
  int eval_seeds{20}; // randomized cross-oracle sample count (0 disables)
  std::uint64_t eval_bound{1000};
};

/// One identity instance: both sides as lists of rational-function summands,
/// kept separate so coefficient comparison clears only the denominators
/// that actually meet in each monomial class.
struct IdentityInstance {
  std::string name;
  int n{0};
  std::optional<PartitionMap> sigma;
  std::vector<RatFunc> lhs;
  std::vector<RatFunc> rhs;
};

/**
 * Exact coefficient comparison: splits both sides by alpha/lambda monomials,
 * cross-multiplies per monomial, and declares Verified iff the assembled
 * residual (equal to lhs.num*rhs.den - rhs.num*lhs.den after clearing) is
 * identically zero. The mismatch ledger reads the per-monomial coefficients,
 * which is meaningful when denominators contain no alpha/lambda variables —
 * true for every built suite; the status and residual are exact regardless.
 * Additionally evaluates both sides exactly at eval_seeds deterministic
 * random integer points; a value mismatch on a symbolically verified
 * identity is an engine defect and throws.
 */
VerificationReport verify_instance(const IdentityInstance& inst,
                                   const VerifyOptions& options = {});

/// Single-summand convenience form matching the operation contract:
/// verified iff lhs.num*rhs.den - rhs.num*lhs.den is identically zero.
VerificationReport verify_identity(const RatFunc& lhs, const RatFunc& rhs,
                                   const VerifyOptions& options = {});

// ---- suites ---------------------------------------------------------------

enum class SuiteId {
  Proj,
  Grass,
  ProdprojBase,
  Cambio,
  Incordiones,
  Psigma,
  Quadric,
  Blowup,
  Cxp5,
};

std::optional<SuiteId> suite_from_name(const std::string& name);
std::string suite_name(SuiteId id);
/// Documented default n-range; (0,0) for the fixed single-instance suites.
std::pair<int, int> suite_default_range(SuiteId id);
/// Smallest admissible n (0 when the suite ignores n).
int suite_min_n(SuiteId id);

/// Builds every (identity, n, sigma) instance of a suite in instance-key
/// order (n, then sigma enumeration order, then identity name).
std::vector<IdentityInstance> build_suite_instances(SuiteId id, int n_min, int n_max);

/// Runs a suite, optionally fanning instances out to `jobs` workers.
/// Reports come back in instance-key order regardless of completion order.
std::vector<VerificationReport> run_suite(SuiteId id, int n_min, int n_max,
                                          const VerifyOptions& options = {},
                                          int jobs = 1);

} // namespace chowrank

#endif
