#ifndef CHOWRANK_PARTITION_MAP_HPP
#define CHOWRANK_PARTITION_MAP_HPP

#include <string>
#include <vector>

#include "chowrank/rational.hpp"

namespace chowrank {

/**
 * Partition map sigma: {2..n} -> {2..n} with sigma(i) <= i and
 * sigma(j) = sigma(i) for every j in [sigma(i), i] — equivalently an
 * interval partition of the chain {2..n}, each element mapped to the start
 * of its block. Encodes which consecutive ratios a_{i-1}/a_i coincide.
 */
class PartitionMap {
public:
  PartitionMap(int n, std::vector<int> values); // values[i-2] = sigma(i); validates axioms
  static PartitionMap identity(int n);

  int n() const { return n_; }
  /// Raw sigma(i) for 2 <= i <= n.
  int at(int i) const;
  /// Boundary-extended map used in branch conditions: 1 at i=1, n at i=n
  /// (the a_0 = 0 / a_n = 0 conventions force those two), raw in between.
  int at_extended(int i) const;
  bool is_identity() const;
  const std::vector<int>& values() const { return values_; }

  friend bool operator==(const PartitionMap&, const PartitionMap&) = default;

  std::string render() const; // interval partition, e.g. "{2,3}{4}"

private:
  int n_;
  std::vector<int> values_;
};

/// All partition maps for {2..n}, exactly once each, in a fixed order
/// (block-cut bitmask order). Count = 2^(n-2).
std::vector<PartitionMap> enumerate_partition_maps(int n);

/// The map defined by the ratio chain of a = (a_1, ..., a_{n-1}): blocks are
/// maximal runs of equal consecutive ratios a_{i-1}/a_i, with the boundary
/// conventions a_0 = 0 and a_n = 0 (so sigma(2) = 2 and sigma(n) = n).
/// Throws on nonpositive entries.
PartitionMap sigma_from_ratios(const std::vector<Rational>& a);

} // namespace chowrank

#endif
