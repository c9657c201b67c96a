#pragma once

#include <cstdint>
#include <vector>

namespace thickset {

// Finite list of subsets of [universeSize]. Members are sorted ascending and
// duplicate-free inside; the list itself may repeat members.
struct SubsetFamily {
  std::size_t universeSize = 0;
  std::vector<std::vector<std::size_t>> sets;
};

// Throws std::invalid_argument when a member is unsorted, repeats an element
// or leaves the universe.
void validateFamily(const SubsetFamily& family);

// Total map universe -> [rangeTarget]; picks made by a construction are the
// assigned positions, everything else defaults to value 0.
struct BreakingFunction {
  std::size_t domainSize = 0;
  std::size_t rangeTarget = 0;
  std::vector<int> values;

  // f[set] contains every value in [0, upTo)?
  bool covers(const std::vector<std::size_t>& set, std::size_t upTo) const;
};

struct SplitRound {
  std::vector<std::size_t> pool;      // M_n
  std::vector<std::size_t> splitter;  // S_n, the side that stays live
  std::vector<std::size_t> piece;     // R_n = pool minus splitter
};

struct SplitTrace {
  std::vector<SplitRound> rounds;
  std::vector<std::size_t> residual;  // live pool after the last round
};

struct SplitBudget {
  std::size_t exhaustiveBits = 16;   // full subset sweep up to this pool size
  std::size_t randomTrials = 1024;   // seeded candidates beyond that
  std::size_t minSideSize = 1;       // wideness threshold per member-trace
};

}  // namespace thickset
