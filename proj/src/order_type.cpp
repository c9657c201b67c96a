#include "thickset/order_type.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace thickset {

std::optional<std::vector<std::size_t>> orderTypePermutation(
    const std::vector<BigInt>& indices) {
  std::size_t k = indices.size();
  if (k == 0) throw std::invalid_argument("orderTypePermutation: empty tuple");
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return indices[a] < indices[b];
  });
  for (std::size_t j = 1; j < k; ++j) {
    if (indices[perm[j - 1]] == indices[perm[j]]) return std::nullopt;
  }
  return perm;
}

std::uint64_t factorial(std::size_t k) {
  if (k > 20) throw std::invalid_argument("factorial: overflows 64 bits");
  std::uint64_t out = 1;
  for (std::size_t i = 2; i <= k; ++i) out *= i;
  return out;
}

std::uint64_t permutationRank(const std::vector<std::size_t>& perm) {
  std::size_t k = perm.size();
  std::uint64_t rank = 0;
  for (std::size_t j = 0; j < k; ++j) {
    std::uint64_t smallerAfter = 0;
    for (std::size_t i = j + 1; i < k; ++i) {
      if (perm[i] < perm[j]) ++smallerAfter;
    }
    rank += smallerAfter * factorial(k - 1 - j);
  }
  return rank;
}

std::optional<std::uint64_t> orderTypeClass(std::size_t n, std::size_t arity) {
  std::vector<std::size_t> tuple = tupleAt(n, arity);
  std::vector<BigInt> indices(tuple.begin(), tuple.end());
  auto perm = orderTypePermutation(indices);
  if (!perm) return std::nullopt;
  return permutationRank(*perm);
}

std::optional<std::uint64_t> orderTypeClassOfPoint(const std::vector<Rat>& point) {
  LineEnumeration line;
  std::vector<BigInt> indices;
  indices.reserve(point.size());
  for (const Rat& x : point) indices.push_back(line.indexOf(x));
  auto perm = orderTypePermutation(indices);
  if (!perm) return std::nullopt;
  return permutationRank(*perm);
}

}  // namespace thickset
