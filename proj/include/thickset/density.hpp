#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "thickset/ktree.hpp"
#include "thickset/rational.hpp"
#include "thickset/report.hpp"

namespace thickset {

// Open axis-aligned box with rational corners, one (lo, hi) side per axis.
struct RatBox {
  std::vector<std::pair<Rat, Rat>> sides;
};

bool boxContains(const RatBox& box, const std::vector<Rat>& coords);

// Maps a rank to a class id; every class must recur unboundedly often.
using ClassSelector = std::function<std::size_t(std::size_t)>;

// First coordinate of the inverse pairing: fiber over each class is infinite.
ClassSelector defaultClassSelector();

// Hit record for one (box, class) cell; firstIndex is the minimal
// enumeration index witnessing the hit, empty on a miss.
struct DensityCell {
  std::size_t box = 0;
  std::uint64_t classId = 0;
  std::optional<std::size_t> firstIndex;
};

// report.pass means every cell was hit; misses double as violations
// ("density-miss"). maxRankPerBox is filled in rank-based mode only.
struct DensityAudit {
  WitnessReport report;
  std::vector<DensityCell> cells;  // box-major, then class
  std::vector<std::optional<std::size_t>> maxRankPerBox;
};

// Rank-based mode: point p_n lands in the cell (box, sel(rank(n))).
DensityAudit densityAuditKTree(const KAssignment& ka, const RankTable& rt,
                               const ClassSelector& sel, const std::vector<RatBox>& boxes,
                               std::size_t classes);

// Order-type mode over arity-tuples: class = sorting-permutation rank,
// arity! classes, diagonal tuples classify to nothing.
DensityAudit densityAuditOrderType(std::size_t arity, const std::vector<RatBox>& boxes,
                                   std::size_t horizon);

// Deterministic box sample: each side is a dyadic interval inside (-3, 3)
// with width in [72/32, 91/32].
std::vector<RatBox> seededBoxes(std::size_t count, std::size_t arity, std::uint64_t seed);

}  // namespace thickset
