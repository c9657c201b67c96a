#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "thickset/rational.hpp"

namespace thickset {

// Canonical bijective enumeration of Q: index 0 is 0, odd indices walk the
// Calkin-Wilf sequence of positive rationals, even indices their negatives.
// Values are memoized; indexOf inverts exactly (the inverse can be
// astronomically large, hence BigInt).
class LineEnumeration {
 public:
  Rat value(std::size_t index);
  BigInt indexOf(const Rat& x) const;

 private:
  std::vector<Rat> cache_;  // cache_[k] = cw(k+1)
};

// cw(1) = 1, cw(k+1) = 1 / (2*floor(cw(k)) - cw(k) + 1): breadth-first walk
// of the Calkin-Wilf tree, hitting every positive rational exactly once.
Rat calkinWilf(std::size_t k);
// Inverse by batched run-length ascent through the tree.
BigInt calkinWilfIndex(const Rat& x);

// (x + y)(x + y + 1)/2 + x: bijection between pairs and naturals.
std::size_t pairIndex(std::size_t x, std::size_t y);
std::pair<std::size_t, std::size_t> unpairIndex(std::size_t n);

// Right-nested unpairing: arity 1 keeps n, otherwise the head is the pair's
// first component and the tail decodes the second.
std::vector<std::size_t> tupleAt(std::size_t n, std::size_t arity);

// p_n over the enumerated plane: first pair component picks the x line
// index, second the y.
class GridEnumeration {
 public:
  std::pair<Rat, Rat> point(std::size_t n);
  LineEnumeration& line() { return line_; }

 private:
  LineEnumeration line_;
};

}  // namespace thickset
