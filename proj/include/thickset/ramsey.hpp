#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace thickset {

// Total color on unordered pairs over [size]; callers may pass the two
// indices in either order, i != j.
struct PairColoring {
  std::size_t size = 0;
  std::size_t colors = 0;
  std::function<int(std::size_t, std::size_t)> value;
};

// Total color on every ordered cell of [size] x [size], diagonal included.
// Kept callable, never materialized: the guarantee needs sizes far beyond a
// sensible matrix.
struct GridOracle {
  std::size_t size = 0;
  std::size_t colors = 0;
  std::function<int(std::size_t, std::size_t)> value;
};

// Monochromatic set plus the pivot trace that produced it.
struct Extraction {
  std::vector<std::size_t> set;
  int color = 0;
  std::vector<std::pair<std::size_t, int>> pivots;  // (pivot, recorded color)
};

// Disjoint index sets whose full product uses at most two colors.
struct WitnessPair {
  std::vector<std::size_t> K, L;
  std::vector<int> colorSet;  // sorted distinct colors over K x L
  int upperColor = -1;        // pairs k < l
  int lowerColor = -1;        // pairs k > l
};

// Pivot chain: repeatedly take the least pool element, group the rest by
// color toward it, keep a largest group (ties to the lowest color id); the
// final pivot joins the majority color recorded so far. Returns the pivots
// of the majority color, verified exactly pairwise before returning. The
// size bound ceil(ceil(log_colors size) / colors) is asserted.
Extraction ramseyExtract(const PairColoring& f);

// Two-pass extraction: monochromatic A under the upper reading h(min, max),
// then monochromatic B <= A under the lower reading h(max, min); B is dealt
// alternately into K and L. h[K x L] is scanned in full and must land inside
// the two extracted colors. Throws DegenerateWitness when B ends below 2.
WitnessPair antiThickWitness(const GridOracle& h);

GridOracle constantOracle(std::size_t size, int k);
// 0 above the diagonal, 1 below, 2 on it.
GridOracle order3Oracle(std::size_t size);
// Per-cell hash of (seed, i, j), reduced mod colors.
GridOracle randomOracle(std::size_t size, std::uint64_t seed, std::size_t colors = 3);
GridOracle matrixOracle(std::vector<std::vector<int>> cells);

}  // namespace thickset
