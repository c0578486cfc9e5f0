#include "chowrank/partition_map.hpp"

#include <stdexcept>

namespace chowrank {

PartitionMap::PartitionMap(int n, std::vector<int> values)
    : n_(n), values_(std::move(values)) {
  if (n < 2) throw std::invalid_argument("PartitionMap: need n >= 2");
  if (values_.size() != static_cast<std::size_t>(n - 1))
    throw std::invalid_argument("PartitionMap: need one value per element of {2..n}");
  for (int i = 2; i <= n; ++i) {
    const int s = at(i);
    if (s < 2 || s > i)
      throw std::invalid_argument("PartitionMap: sigma(i) <= i violated at i=" +
                                  std::to_string(i));
    for (int j = s; j <= i; ++j)
      if (at(j) != s)
        throw std::invalid_argument("PartitionMap: interval axiom violated at i=" +
                                    std::to_string(i));
  }
}

PartitionMap PartitionMap::identity(int n) {
  std::vector<int> v;
  for (int i = 2; i <= n; ++i) v.push_back(i);
  return PartitionMap(n, std::move(v));
}

int PartitionMap::at(int i) const {
  if (i < 2 || i > n_) throw std::out_of_range("PartitionMap::at: index outside {2..n}");
  return values_[static_cast<std::size_t>(i - 2)];
}

int PartitionMap::at_extended(int i) const {
  if (i == 1) return 1;
  if (i == n_) return n_;
  return at(i);
}

bool PartitionMap::is_identity() const {
  for (int i = 2; i <= n_; ++i)
    if (at(i) != i) return false;
  return true;
}

std::string PartitionMap::render() const {
  std::string s;
  int i = 2;
  while (i <= n_) {
    int j = i;
    while (j + 1 <= n_ && at(j + 1) == at(i)) ++j;
    s += "{";
    for (int k = i; k <= j; ++k) {
      if (k > i) s += ",";
      s += std::to_string(k);
    }
    s += "}";
    i = j + 1;
  }
  return s;
}

std::vector<PartitionMap> enumerate_partition_maps(int n) {
  if (n < 2) throw std::invalid_argument("enumerate_partition_maps: need n >= 2");
  std::vector<PartitionMap> maps;
  const std::uint64_t count = std::uint64_t{1} << (n - 2);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<int> v;
    int start = 2;
    for (int i = 2; i <= n; ++i) {
      if (i > 2 && ((mask >> (i - 3)) & 1)) start = i; // cut before i
      v.push_back(start);
    }
    maps.emplace_back(n, std::move(v));
  }
  return maps;
}

PartitionMap sigma_from_ratios(const std::vector<Rational>& a) {
  const int n = static_cast<int>(a.size()) + 1;
  if (n < 3) throw std::invalid_argument("sigma_from_ratios: need at least a_1, a_2");
  for (const Rational& x : a)
    if (x <= 0) throw std::invalid_argument("sigma_from_ratios: entries must be positive");
  auto ratio = [&](int i) { // a_{i-1}/a_i for 2 <= i <= n-1
    return a[static_cast<std::size_t>(i - 2)] / a[static_cast<std::size_t>(i - 1)];
  };
  std::vector<int> v;
  int start = 2;
  for (int i = 2; i <= n; ++i) {
    // a_{n-1}/a_n = +infinity never extends a block; a_0/a_1 = 0 starts one.
    if (i == n || (i > 2 && ratio(i) != ratio(i - 1))) start = i;
    v.push_back(start);
  }
  return PartitionMap(n, std::move(v));
}

} // namespace chowrank
