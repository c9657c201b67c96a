#pragma once

#include <vector>

#include "thickset/rational.hpp"

namespace thickset {

// One endpoint of an interval over Q.
struct Bound {
  enum Kind { Unbounded, Open, Closed };
  Kind kind = Unbounded;
  Rat value;  // meaningful unless Unbounded

  static Bound unbounded() { return {}; }
  static Bound open(Rat v) { return {Open, std::move(v)}; }
  static Bound closed(Rat v) { return {Closed, std::move(v)}; }
};

// Nonempty interval; lo/hi may be Unbounded.
struct Interval {
  Bound lo, hi;
};

// Finite union of disjoint, non-mergeable intervals, sorted ascending.
// Exact set algebra over Q; the representation is canonical, so equal sets
// compare equal structurally.
class IntervalSet {
 public:
  IntervalSet() = default;  // empty set

  static IntervalSet empty() { return {}; }
  static IntervalSet full();
  // Normalizes: an empty interval yields the empty set.
  static IntervalSet interval(Bound lo, Bound hi);
  static IntervalSet openSegment(const Rat& lo, const Rat& hi);
  static IntervalSet closedSegment(const Rat& lo, const Rat& hi);
  static IntervalSet point(const Rat& x);

  bool isEmpty() const { return parts_.empty(); }
  bool contains(const Rat& x) const;
  const std::vector<Interval>& parts() const { return parts_; }

  IntervalSet complement() const;
  IntervalSet intersect(const IntervalSet& o) const;
  IntervalSet unite(const IntervalSet& o) const;
  IntervalSet subtract(const IntervalSet& o) const;
  IntervalSet closure() const;

  bool intersects(const IntervalSet& o) const;
  bool includes(const IntervalSet& o) const { return o.subtract(*this).isEmpty(); }
  bool operator==(const IntervalSet& o) const;

 private:
  static bool intervalNonempty(const Bound& lo, const Bound& hi);
  // Sorted, possibly overlapping intervals in; canonical form out.
  static std::vector<Interval> mergeSweep(std::vector<Interval> parts);

  std::vector<Interval> parts_;
};

}  // namespace thickset
