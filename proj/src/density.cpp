#include "thickset/density.hpp"

#include <stdexcept>
#include <string>

#include "thickset/line_enum.hpp"
#include "thickset/order_type.hpp"
#include "thickset/rng.hpp"

namespace thickset {

namespace {

void recordMisses(DensityAudit& audit, std::size_t boxCount, std::size_t classes) {
  for (std::size_t b = 0; b < boxCount; ++b) {
    for (std::size_t c = 0; c < classes; ++c) {
      const DensityCell& cell = audit.cells[b * classes + c];
      if (cell.firstIndex) continue;
      Violation v;
      v.kind = "density-miss";
      v.member = static_cast<int>(b);
      v.classId = static_cast<int>(c);
      v.detail = "box " + std::to_string(b) + " missed by class " + std::to_string(c);
      audit.report.add(v);
    }
  }
}

DensityAudit emptyAudit(std::size_t boxCount, std::size_t classes) {
  DensityAudit audit;
  audit.cells.reserve(boxCount * classes);
  for (std::size_t b = 0; b < boxCount; ++b) {
    for (std::size_t c = 0; c < classes; ++c) {
      audit.cells.push_back({b, c, std::nullopt});
    }
  }
  return audit;
}

}  // namespace

bool boxContains(const RatBox& box, const std::vector<Rat>& coords) {
  if (box.sides.size() != coords.size()) {
    throw std::invalid_argument("boxContains: dimension mismatch");
  }
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!(box.sides[i].first < coords[i] && coords[i] < box.sides[i].second)) return false;
  }
  return true;
}

ClassSelector defaultClassSelector() {
  return [](std::size_t rank) { return unpairIndex(rank).first; };
}

DensityAudit densityAuditKTree(const KAssignment& ka, const RankTable& rt,
                               const ClassSelector& sel, const std::vector<RatBox>& boxes,
                               std::size_t classes) {
  if (classes == 0) throw std::invalid_argument("densityAuditKTree: need at least one class");
  if (rt.horizon != ka.horizon) {
    throw std::invalid_argument("densityAuditKTree: rank table horizon mismatch");
  }
  DensityAudit audit = emptyAudit(boxes.size(), classes);
  audit.maxRankPerBox.assign(boxes.size(), std::nullopt);
  std::vector<Rat> coords(2);
  for (std::size_t n = 0; n < ka.horizon; ++n) {
    coords[0] = ka.points[n].first;
    coords[1] = ka.points[n].second;
    std::size_t cls = sel(rt.rank[n]);
    for (std::size_t b = 0; b < boxes.size(); ++b) {
      if (!boxContains(boxes[b], coords)) continue;
      auto& best = audit.maxRankPerBox[b];
      if (!best || rt.rank[n] > *best) best = rt.rank[n];
      if (cls >= classes) continue;  // rank maps past the audited classes
      DensityCell& cell = audit.cells[b * classes + cls];
      if (!cell.firstIndex) cell.firstIndex = n;
    }
  }
  recordMisses(audit, boxes.size(), classes);
  return audit;
}

DensityAudit densityAuditOrderType(std::size_t arity, const std::vector<RatBox>& boxes,
                                   std::size_t horizon) {
  if (arity == 0) throw std::invalid_argument("densityAuditOrderType: arity must be positive");
  std::size_t classes = factorial(arity);
  DensityAudit audit = emptyAudit(boxes.size(), classes);
  LineEnumeration line;
  std::vector<Rat> coords(arity);
  for (std::size_t n = 0; n < horizon; ++n) {
    std::vector<std::size_t> tuple = tupleAt(n, arity);
    std::vector<BigInt> indices(tuple.begin(), tuple.end());
    auto perm = orderTypePermutation(indices);
    if (!perm) continue;  // diagonal tuple, no class
    std::uint64_t cls = permutationRank(*perm);
    for (std::size_t i = 0; i < arity; ++i) coords[i] = line.value(tuple[i]);
    for (std::size_t b = 0; b < boxes.size(); ++b) {
      if (!boxContains(boxes[b], coords)) continue;
      DensityCell& cell = audit.cells[b * classes + cls];
      if (!cell.firstIndex) cell.firstIndex = n;
    }
  }
  recordMisses(audit, boxes.size(), classes);
  return audit;
}

std::vector<RatBox> seededBoxes(std::size_t count, std::size_t arity, std::uint64_t seed) {
  if (arity == 0) throw std::invalid_argument("seededBoxes: arity must be positive");
  Rng rng = Rng::substream(seed, "density-boxes");
  std::vector<RatBox> boxes;
  boxes.reserve(count);
  for (std::size_t b = 0; b < count; ++b) {
    RatBox box;
    box.sides.reserve(arity);
    for (std::size_t a = 0; a < arity; ++a) {
      // Endpoints in 32nds, interval kept inside (-3, 3).
      std::uint64_t width = 72 + rng.below(20);
      std::uint64_t span = 192 - width + 1;
      std::int64_t lo = -96 + static_cast<std::int64_t>(rng.below(span));
      Rat a0(lo, 32);
      Rat a1(lo + static_cast<std::int64_t>(width), 32);
      box.sides.emplace_back(a0, a1);
    }
    boxes.push_back(std::move(box));
  }
  return boxes;
}

}  // namespace thickset
