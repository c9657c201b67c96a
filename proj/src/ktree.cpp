#include "thickset/ktree.hpp"

#include <map>
#include <string>

#include "thickset/errors.hpp"
#include "thickset/line_enum.hpp"

namespace thickset {

namespace {

// All entries sharing one carrier line, with the running union of their
// closures (equal to the closure of their union).
struct LineBucket {
  std::vector<std::size_t> entryIndices;
  IntervalSet closureUnion = IntervalSet::empty();
};

using LineMap = std::map<Rat, LineBucket>;

void addToBucket(LineMap& lines, const LinearOpenSet& entry, std::size_t index) {
  LineBucket& bucket = lines[entry.lineCoord];
  bucket.entryIndices.push_back(index);
  bucket.closureUnion = bucket.closureUnion.unite(entry.set.closure());
}

// Smallest distance from `center` to a map key whose bucket closure
// contains `bindingCoord`; keys equal to `center` cross at the point
// itself and impose nothing. Walks outward, lower side first on ties.
std::optional<Rat> nearestBindingDistance(const LineMap& lines, const Rat& center,
                                          const Rat& bindingCoord) {
  auto hi = lines.lower_bound(center);
  auto lo = hi;  // keys strictly below center end just before lo
  if (hi != lines.end() && hi->first == center) ++hi;
  while (hi != lines.end() || lo != lines.begin()) {
    bool hasHi = hi != lines.end();
    bool hasLo = lo != lines.begin();
    bool takeLo;
    if (hasHi && hasLo) {
      Rat dHi = hi->first - center;
      Rat dLo = center - std::prev(lo)->first;
      takeLo = dLo <= dHi;
    } else {
      takeLo = hasLo;
    }
    if (takeLo) {
      --lo;
      if (lo->second.closureUnion.contains(bindingCoord)) return Rat(center - lo->first);
    } else {
      if (hi->second.closureUnion.contains(bindingCoord)) return Rat(hi->first - center);
      ++hi;
    }
  }
  return std::nullopt;
}

}  // namespace

bool linearContains(const LinearOpenSet& s, const Rat& x, const Rat& y) {
  if (s.axis == Axis::Horizontal) return y == s.lineCoord && s.set.contains(x);
  return x == s.lineCoord && s.set.contains(y);
}

bool linearClosureContains(const LinearOpenSet& s, const Rat& x, const Rat& y) {
  IntervalSet cl = s.set.closure();
  if (s.axis == Axis::Horizontal) return y == s.lineCoord && cl.contains(x);
  return x == s.lineCoord && cl.contains(y);
}

KAssignment buildKAssignment(std::size_t horizon) {
  if (horizon == 0) throw std::invalid_argument("buildKAssignment: horizon must be positive");
  KAssignment ka;
  ka.horizon = horizon;
  ka.points.reserve(horizon);
  ka.entries.reserve(horizon);
  GridEnumeration grid;
  LineMap horizontalLines;  // key: y coordinate
  LineMap verticalLines;    // key: x coordinate
  for (std::size_t n = 0; n < horizon; ++n) {
    auto [x, y] = grid.point(n);
    ka.points.emplace_back(x, y);
    LinearOpenSet entry;
    if (n == 0) {
      entry = {Axis::Horizontal, y, IntervalSet::full()};
    } else {
      auto hIt = horizontalLines.find(y);
      bool capturedHorizontally =
          hIt != horizontalLines.end() && hIt->second.closureUnion.contains(x);
      auto vIt = verticalLines.find(x);
      bool capturedVertically =
          vIt != verticalLines.end() && vIt->second.closureUnion.contains(y);
      if (capturedHorizontally && capturedVertically) {
        throw InvariantBreach("buildKAssignment: capturing entries span both directions at index " +
                              std::to_string(n));
      }
      // The new entry's line is orthogonal to the capturing entries;
      // horizontal when nothing captures the point.
      Axis axis = capturedHorizontally ? Axis::Vertical : Axis::Horizontal;
      Rat lineCoord = axis == Axis::Horizontal ? y : x;
      Rat center = axis == Axis::Horizontal ? x : y;
      LineMap& ownLines = axis == Axis::Horizontal ? horizontalLines : verticalLines;
      LineMap& crossLines = axis == Axis::Horizontal ? verticalLines : horizontalLines;
      IntervalSet set = IntervalSet::full();
      auto ownIt = ownLines.find(lineCoord);
      if (ownIt != ownLines.end()) {
        if (ownIt->second.closureUnion.contains(center)) {
          throw InvariantBreach("buildKAssignment: point inside a same-line closure at index " +
                                std::to_string(n));
        }
        set = set.subtract(ownIt->second.closureUnion);
      }
      // Orthogonal lines cross the carrier at lineCoord; the nearest whose
      // closure reaches the crossing bounds the entry to half that distance.
      std::optional<Rat> dist = nearestBindingDistance(crossLines, center, lineCoord);
      if (dist) {
        set = set.intersect(
            IntervalSet::openSegment(Rat(center - *dist / 2), Rat(center + *dist / 2)));
      }
      if (!set.contains(center)) {
        throw InvariantBreach("buildKAssignment: entry lost its own point at index " +
                              std::to_string(n));
      }
      entry = {axis, lineCoord, set};
    }
    addToBucket(entry.axis == Axis::Horizontal ? horizontalLines : verticalLines, entry, n);
    ka.entries.push_back(std::move(entry));
  }
  return ka;
}

WitnessReport verifyKConditions(const KAssignment& ka) {
  WitnessReport report;
  std::vector<IntervalSet> closures;
  closures.reserve(ka.entries.size());
  for (const LinearOpenSet& e : ka.entries) closures.push_back(e.set.closure());
  for (std::size_t n = 1; n < ka.entries.size(); ++n) {
    const LinearOpenSet& later = ka.entries[n];
    for (std::size_t m = 0; m < n; ++m) {
      const LinearOpenSet& earlier = ka.entries[m];
      if (earlier.axis == later.axis) {
        if (earlier.lineCoord != later.lineCoord) continue;  // disjoint lines
        if (earlier.set.intersects(later.set)) {
          Violation v;
          v.kind = "collinear-overlap";
          v.member = static_cast<int>(m);
          v.classId = static_cast<int>(n);
          v.detail = "entries " + std::to_string(m) + " and " + std::to_string(n) +
                     " overlap on a shared line";
          report.add(v);
          return report;
        }
        continue;
      }
      // Orthogonal carriers cross once; both closures containing the
      // crossing is legal only when it is the later point itself.
      const LinearOpenSet& h = earlier.axis == Axis::Horizontal ? earlier : later;
      const LinearOpenSet& v = earlier.axis == Axis::Horizontal ? later : earlier;
      const IntervalSet& hCl = earlier.axis == Axis::Horizontal ? closures[m] : closures[n];
      const IntervalSet& vCl = earlier.axis == Axis::Horizontal ? closures[n] : closures[m];
      if (!hCl.contains(v.lineCoord) || !vCl.contains(h.lineCoord)) continue;
      const auto& p = ka.points[n];
      if (v.lineCoord == p.first && h.lineCoord == p.second) continue;
      Violation viol;
      viol.kind = "orthogonal-closure";
      viol.member = static_cast<int>(m);
      viol.classId = static_cast<int>(n);
      viol.detail = "closures of entries " + std::to_string(m) + " and " + std::to_string(n) +
                    " meet away from the later point";
      report.add(viol);
      return report;
    }
  }
  return report;
}

RankTable rankTable(const KAssignment& ka) {
  RankTable table;
  table.horizon = ka.horizon;
  table.predecessor.assign(ka.horizon, std::nullopt);
  table.rank.assign(ka.horizon, 0);
  LineMap horizontalLines;
  LineMap verticalLines;
  for (std::size_t n = 0; n < ka.entries.size(); ++n) {
    addToBucket(ka.entries[n].axis == Axis::Horizontal ? horizontalLines : verticalLines,
                ka.entries[n], n);
  }
  auto candidatesOn = [&](const LineMap& lines, const Rat& key) -> const std::vector<std::size_t>* {
    auto it = lines.find(key);
    return it == lines.end() ? nullptr : &it->second.entryIndices;
  };
  for (std::size_t n = 0; n < ka.horizon; ++n) {
    const auto& [x, y] = ka.points[n];
    std::optional<std::size_t> pred;
    auto consider = [&](const std::vector<std::size_t>* bucket) {
      if (!bucket) return;
      for (std::size_t b : *bucket) {
        if (b == n || !linearContains(ka.entries[b], x, y)) continue;
        if (pred) {
          throw UniquenessBreach("rankTable: two entries contain point " + std::to_string(n) +
                                 " (" + std::to_string(*pred) + " and " + std::to_string(b) + ")");
        }
        pred = b;
      }
    };
    consider(candidatesOn(horizontalLines, y));
    consider(candidatesOn(verticalLines, x));
    if (pred && *pred >= n) {
      throw InvariantBreach("rankTable: predecessor " + std::to_string(*pred) +
                            " not below index " + std::to_string(n));
    }
    table.predecessor[n] = pred;
    table.rank[n] = pred ? table.rank[*pred] + 1 : 0;
  }
  return table;
}

}  // namespace thickset
