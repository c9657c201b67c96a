#include "thickset/interval_set.hpp"

#include <algorithm>

namespace thickset {
namespace {

bool boundEq(const Bound& a, const Bound& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == Bound::Unbounded) return true;
  return a.value == b.value;
}

bool lowerContains(const Bound& b, const Rat& x) {
  switch (b.kind) {
    case Bound::Unbounded: return true;
    case Bound::Open: return x > b.value;
    case Bound::Closed: return x >= b.value;
  }
  return false;
}

bool upperContains(const Bound& b, const Rat& x) {
  switch (b.kind) {
    case Bound::Unbounded: return true;
    case Bound::Open: return x < b.value;
    case Bound::Closed: return x <= b.value;
  }
  return false;
}

// Strict order on lower bounds: a starts strictly left of b.
bool lowerLess(const Bound& a, const Bound& b) {
  if (a.kind == Bound::Unbounded) return b.kind != Bound::Unbounded;
  if (b.kind == Bound::Unbounded) return false;
  if (a.value != b.value) return a.value < b.value;
  return a.kind == Bound::Closed && b.kind == Bound::Open;
}

// Strict order on upper bounds: a ends strictly left of b.
bool upperLess(const Bound& a, const Bound& b) {
  if (a.kind == Bound::Unbounded) return false;
  if (b.kind == Bound::Unbounded) return true;
  if (a.value != b.value) return a.value < b.value;
  return a.kind == Bound::Open && b.kind == Bound::Closed;
}

const Bound& maxLower(const Bound& a, const Bound& b) { return lowerLess(a, b) ? b : a; }
const Bound& minUpper(const Bound& a, const Bound& b) { return upperLess(b, a) ? b : a; }

// True when [.., hi] and [lo, ..] neither overlap nor touch, i.e. some
// rational strictly between them is in neither.
bool strictlySeparated(const Bound& hi, const Bound& lo) {
  if (hi.kind == Bound::Unbounded || lo.kind == Bound::Unbounded) return false;
  if (hi.value < lo.value) return true;
  if (hi.value > lo.value) return false;
  return hi.kind == Bound::Open && lo.kind == Bound::Open;
}

}  // namespace

bool IntervalSet::intervalNonempty(const Bound& lo, const Bound& hi) {
  if (lo.kind == Bound::Unbounded || hi.kind == Bound::Unbounded) return true;
  if (lo.value < hi.value) return true;
  if (lo.value > hi.value) return false;
  return lo.kind == Bound::Closed && hi.kind == Bound::Closed;
}

std::vector<Interval> IntervalSet::mergeSweep(std::vector<Interval> parts) {
  std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) {
    if (lowerLess(a.lo, b.lo)) return true;
    if (lowerLess(b.lo, a.lo)) return false;
    return upperLess(a.hi, b.hi);
  });
  std::vector<Interval> out;
  for (auto& p : parts) {
    if (!out.empty() && !strictlySeparated(out.back().hi, p.lo)) {
      if (upperLess(out.back().hi, p.hi)) out.back().hi = p.hi;
    } else {
      out.push_back(p);
    }
  }
  return out;
}

IntervalSet IntervalSet::full() {
  IntervalSet s;
  s.parts_.push_back({Bound::unbounded(), Bound::unbounded()});
  return s;
}

IntervalSet IntervalSet::interval(Bound lo, Bound hi) {
  IntervalSet s;
  if (intervalNonempty(lo, hi)) s.parts_.push_back({std::move(lo), std::move(hi)});
  return s;
}

IntervalSet IntervalSet::openSegment(const Rat& lo, const Rat& hi) {
  return interval(Bound::open(lo), Bound::open(hi));
}

IntervalSet IntervalSet::closedSegment(const Rat& lo, const Rat& hi) {
  return interval(Bound::closed(lo), Bound::closed(hi));
}

IntervalSet IntervalSet::point(const Rat& x) {
  return interval(Bound::closed(x), Bound::closed(x));
}

bool IntervalSet::contains(const Rat& x) const {
  auto it = std::partition_point(parts_.begin(), parts_.end(), [&](const Interval& iv) {
    return !upperContains(iv.hi, x);
  });
  return it != parts_.end() && lowerContains(it->lo, x);
}

IntervalSet IntervalSet::complement() const {
  IntervalSet out;
  Bound runStart = Bound::unbounded();
  bool openEnded = true;
  for (const auto& p : parts_) {
    if (p.lo.kind != Bound::Unbounded) {
      Bound gapHi{p.lo.kind == Bound::Open ? Bound::Closed : Bound::Open, p.lo.value};
      if (intervalNonempty(runStart, gapHi)) out.parts_.push_back({runStart, gapHi});
    }
    if (p.hi.kind == Bound::Unbounded) {
      openEnded = false;
      break;
    }
    runStart = Bound{p.hi.kind == Bound::Open ? Bound::Closed : Bound::Open, p.hi.value};
  }
  if (openEnded) out.parts_.push_back({runStart, Bound::unbounded()});
  return out;
}

IntervalSet IntervalSet::intersect(const IntervalSet& o) const {
  IntervalSet out;
  std::size_t i = 0, j = 0;
  while (i < parts_.size() && j < o.parts_.size()) {
    const Interval& a = parts_[i];
    const Interval& b = o.parts_[j];
    Bound lo = maxLower(a.lo, b.lo);
    Bound hi = minUpper(a.hi, b.hi);
    if (intervalNonempty(lo, hi)) out.parts_.push_back({lo, hi});
    const bool advanceA = !upperLess(b.hi, a.hi);
    const bool advanceB = !upperLess(a.hi, b.hi);
    if (advanceA) ++i;
    if (advanceB) ++j;
  }
  return out;
}

IntervalSet IntervalSet::unite(const IntervalSet& o) const {
  std::vector<Interval> all = parts_;
  all.insert(all.end(), o.parts_.begin(), o.parts_.end());
  IntervalSet out;
  out.parts_ = mergeSweep(std::move(all));
  return out;
}

IntervalSet IntervalSet::subtract(const IntervalSet& o) const {
  return intersect(o.complement());
}

IntervalSet IntervalSet::closure() const {
  std::vector<Interval> closed = parts_;
  for (auto& p : closed) {
    if (p.lo.kind == Bound::Open) p.lo.kind = Bound::Closed;
    if (p.hi.kind == Bound::Open) p.hi.kind = Bound::Closed;
  }
  IntervalSet out;
  out.parts_ = mergeSweep(std::move(closed));
  return out;
}

bool IntervalSet::intersects(const IntervalSet& o) const {
  std::size_t i = 0, j = 0;
  while (i < parts_.size() && j < o.parts_.size()) {
    const Interval& a = parts_[i];
    const Interval& b = o.parts_[j];
    if (intervalNonempty(maxLower(a.lo, b.lo), minUpper(a.hi, b.hi))) return true;
    if (!upperLess(b.hi, a.hi)) ++i;
    else ++j;
  }
  return false;
}

bool IntervalSet::operator==(const IntervalSet& o) const {
  if (parts_.size() != o.parts_.size()) return false;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (!boundEq(parts_[i].lo, o.parts_[i].lo)) return false;
    if (!boundEq(parts_[i].hi, o.parts_[i].hi)) return false;
  }
  return true;
}

}  // namespace thickset
