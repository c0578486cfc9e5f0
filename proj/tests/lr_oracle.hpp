#ifndef CHOWRANK_TESTS_LR_ORACLE_HPP
#define CHOWRANK_TESTS_LR_ORACLE_HPP

// Brute-force Littlewood-Richardson oracle for two-row shapes: counts
// lattice semistandard fillings of the skew shape lambda/mu with content
// (nu1, nu2) over the alphabet {1,2}. Test-only; kept independent of the
// closed-form rule in the library.

#include "chowrank/schubert.hpp"

namespace chowrank_tests {

inline int lr_oracle(int mu1, int mu2, int nu1, int nu2, int la1, int la2) {
  if (la1 < la2 || la2 < 0 || mu1 < mu2 || mu2 < 0) return 0;
  if (la1 < mu1 || la2 < mu2) return 0;
  const int r1 = la1 - mu1, r2 = la2 - mu2;
  if (r1 + r2 != nu1 + nu2) return 0;
  int count = 0;
  // Weakly increasing rows over {1,2}: a filling is determined by the number
  // of 1s in each row (k1 leftmost boxes of row 1, k2 of row 2).
  for (int k1 = 0; k1 <= r1; ++k1) {
    for (int k2 = 0; k2 <= r2; ++k2) {
      if (k1 + k2 != nu1) continue;
      bool ok = true;
      // Columns must increase strictly.
      for (int c = mu2 + 1; c <= la2 && ok; ++c) {
        if (c <= mu1) continue; // box above belongs to mu
        const int above = c <= mu1 + k1 ? 1 : 2;
        const int below = c <= mu2 + k2 ? 1 : 2;
        if (below <= above) ok = false;
      }
      if (!ok) continue;
      // Lattice word: reading right-to-left, top-to-bottom, the 1s never
      // trail the 2s.
      int ones = 0, twos = 0;
      for (int c = la1; c >= mu1 + 1 && ok; --c) {
        ++(c <= mu1 + k1 ? ones : twos);
        if (twos > ones) ok = false;
      }
      for (int c = la2; c >= mu2 + 1 && ok; --c) {
        ++(c <= mu2 + k2 ? ones : twos);
        if (twos > ones) ok = false;
      }
      if (ok) ++count;
    }
  }
  return count;
}

/// Schubert product computed entirely through the oracle.
inline chowrank::SchubertClass oracle_product(const chowrank::SchubertClass& x,
                                              const chowrank::SchubertClass& y) {
  using namespace chowrank;
  const int n = x.n();
  SchubertClass out(n);
  for (const auto& [sx, cx] : x.terms()) {
    for (const auto& [sy, cy] : y.terms()) {
      const int total = sx.part_p() + sx.part_q() + sy.part_p() + sy.part_q();
      for (int la1 = std::min(total, n - 1); 2 * la1 >= total; --la1) {
        const int la2 = total - la1;
        const int c = lr_oracle(sx.part_p(), sx.part_q(), sy.part_p(), sy.part_q(),
                                la1, la2);
        if (c != 0)
          out.add_term(SchubertSymbol::from_partition(la1, la2, n),
                       Rational(c) * cx * cy);
      }
    }
  }
  return out;
}

} // namespace chowrank_tests

#endif
