#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "thickset/interval_set.hpp"
#include "thickset/rational.hpp"
#include "thickset/report.hpp"

namespace thickset {

enum class Axis { Horizontal, Vertical };

// Open subset of an axis-parallel rational line; `set` constrains the
// moving coordinate (x on horizontal lines, y on vertical ones).
struct LinearOpenSet {
  Axis axis = Axis::Horizontal;
  Rat lineCoord;    // y for horizontal lines, x for vertical
  IntervalSet set;  // open by construction
};

// Open membership of the plane point (x, y).
bool linearContains(const LinearOpenSet& s, const Rat& x, const Rat& y);
// Membership in the closure (closure stays within the carrier line).
bool linearClosureContains(const LinearOpenSet& s, const Rat& x, const Rat& y);

// One crowded linear neighborhood K(p_n) per enumerated point below the
// horizon. Invariants: p_n in K(p_n); parallel entries are disjoint;
// closures of orthogonal entries meet at most in the later point.
struct KAssignment {
  std::size_t horizon = 0;
  std::vector<std::pair<Rat, Rat>> points;
  std::vector<LinearOpenSet> entries;
};

// Recursive construction: entry n lies on the fiber through p_n orthogonal
// to the earlier entries whose closure captures p_n (horizontal when none
// do), trimmed by same-line closures and by half the distance to the
// nearest binding orthogonal line.
KAssignment buildKAssignment(std::size_t horizon);

// Exact pairwise check of the two structural invariants; reports the first
// violating pair ("collinear-overlap" or "orthogonal-closure").
WitnessReport verifyKConditions(const KAssignment& ka);

// predecessor(n) = the unique other index b with p_n inside K(p_b);
// rank counts the predecessor chain length.
struct RankTable {
  std::size_t horizon = 0;
  std::vector<std::optional<std::size_t>> predecessor;
  std::vector<std::size_t> rank;
};

RankTable rankTable(const KAssignment& ka);

}  // namespace thickset
