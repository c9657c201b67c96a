#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace thickset {

// Subset of an m-by-l grid of cells, bit-packed by row.
class CellSet {
 public:
  CellSet() = default;
  CellSet(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool test(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, bool on = true);
  std::size_t cellCount() const;
  bool operator==(const CellSet&) const = default;

  // Columns of row r with no cell, as bit words.
  std::vector<std::uint64_t> zeroColumnWords(std::size_t r) const;

 private:
  std::size_t rows_ = 0, cols_ = 0, wordsPerRow_ = 0;
  std::vector<std::uint64_t> words_;
};

// How many rows and columns a test rectangle picks.
struct ThickSpec {
  std::size_t rowPick = 0;  // mu
  std::size_t colPick = 0;  // nu
};

// A failing rectangle: the cell set misses rowSet x colSet entirely.
struct RectangleWitness {
  std::vector<std::size_t> rowSet;  // size = rowPick, ascending
  std::vector<std::size_t> colSet;  // size = colPick, ascending
};

struct ThickVerdict {
  bool thick = false;
  std::optional<RectangleWitness> witness;  // present iff not thick
};

// Decides whether the set meets every rowPick-by-colPick rectangle. When it
// does not, returns the lexicographically least failing (rowSet, colSet).
// Vacuously thick when rowPick > rows or colPick > cols.
ThickVerdict isThick(const CellSet& cells, ThickSpec spec);

// Order-preserving reindex onto the chosen rows and columns.
CellSet restrict(const CellSet& cells, const std::vector<std::size_t>& rowSubset,
                 const std::vector<std::size_t>& colSubset);

// Total or partial assignment of grid cells to classes; -1 means unassigned.
struct GridColoring {
  std::size_t rows = 0, cols = 0;
  std::size_t classCount = 0;
  std::vector<int> classOf;  // rows*cols entries, row-major

  GridColoring() = default;
  GridColoring(std::size_t rows_, std::size_t cols_, std::size_t classCount_)
      : rows(rows_), cols(cols_), classCount(classCount_), classOf(rows_ * cols_, -1) {}

  int at(std::size_t r, std::size_t c) const { return classOf[r * cols + c]; }
  void assign(std::size_t r, std::size_t c, int cls) { classOf[r * cols + c] = cls; }
  bool total() const;
  CellSet classCells(int cls) const;
  bool operator==(const GridColoring&) const = default;
};

// Column blocks: a partition of [targetCols] into as many blocks as the
// source has columns.
struct BlockMap {
  std::size_t targetCols = 0;
  std::vector<std::vector<std::size_t>> blocks;
};

// Throws std::invalid_argument unless blocks partition [targetCols].
void validateBlockMap(const BlockMap& bm);

// Near-uniform contiguous partition of [targetCols] into sourceCols blocks,
// longer blocks first.
BlockMap contiguousBlocks(std::size_t sourceCols, std::size_t targetCols);

// Spreads each source column over its block: cell (r, j) inherits the class
// of (r, b) where block b contains j. Block count must equal source.cols.
GridColoring liftByCofinality(const GridColoring& source, const BlockMap& bm);

}  // namespace thickset
