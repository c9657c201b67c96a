#include "thickset/grid.hpp"

#include <bit>
#include <stdexcept>

namespace thickset {

CellSet::CellSet(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wordsPerRow_((cols + 63) / 64), words_(rows * wordsPerRow_, 0) {}

bool CellSet::test(std::size_t r, std::size_t c) const {
  return (words_[r * wordsPerRow_ + c / 64] >> (c % 64)) & 1u;
}

void CellSet::set(std::size_t r, std::size_t c, bool on) {
  auto& w = words_[r * wordsPerRow_ + c / 64];
  const std::uint64_t bit = std::uint64_t{1} << (c % 64);
  if (on) w |= bit;
  else w &= ~bit;
}

std::size_t CellSet::cellCount() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<std::uint64_t> CellSet::zeroColumnWords(std::size_t r) const {
  std::vector<std::uint64_t> out(wordsPerRow_);
  for (std::size_t w = 0; w < wordsPerRow_; ++w) out[w] = ~words_[r * wordsPerRow_ + w];
  if (wordsPerRow_ > 0 && cols_ % 64 != 0)
    out.back() &= (std::uint64_t{1} << (cols_ % 64)) - 1;
  return out;
}

namespace {

std::size_t wordsPopcount(const std::vector<std::uint64_t>& ws) {
  std::size_t n = 0;
  for (auto w : ws) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<std::size_t> firstColumns(const std::vector<std::uint64_t>& ws, std::size_t count) {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < ws.size() && out.size() < count; ++w) {
    std::uint64_t bits = ws[w];
    while (bits && out.size() < count) {
      const int b = std::countr_zero(bits);
      out.push_back(w * 64 + static_cast<std::size_t>(b));
      bits &= bits - 1;
    }
  }
  return out;
}

// Depth-first over ascending rows whose running zero-column intersection
// keeps at least colPick columns. The first complete row set found is the
// lexicographically least, since candidates are tried in ascending order.
bool searchEmptyRectangle(const CellSet& cells, std::size_t rowPick, std::size_t colPick,
                          std::size_t fromRow, std::vector<std::uint64_t>& zero,
                          std::vector<std::size_t>& rowsOut) {
  if (rowsOut.size() == rowPick) return true;
  for (std::size_t r = fromRow; r + (rowPick - rowsOut.size()) <= cells.rows(); ++r) {
    const auto rowZero = cells.zeroColumnWords(r);
    std::vector<std::uint64_t> next(zero.size());
    for (std::size_t w = 0; w < zero.size(); ++w) next[w] = zero[w] & rowZero[w];
    if (wordsPopcount(next) < colPick) continue;
    rowsOut.push_back(r);
    std::swap(zero, next);
    if (searchEmptyRectangle(cells, rowPick, colPick, r + 1, zero, rowsOut)) return true;
    std::swap(zero, next);
    rowsOut.pop_back();
  }
  return false;
}

}  // namespace

ThickVerdict isThick(const CellSet& cells, ThickSpec spec) {
  if (spec.rowPick > cells.rows() || spec.colPick > cells.cols()) return {true, std::nullopt};
  std::vector<std::uint64_t> zero((cells.cols() + 63) / 64, ~std::uint64_t{0});
  if (!zero.empty() && cells.cols() % 64 != 0)
    zero.back() &= (std::uint64_t{1} << (cells.cols() % 64)) - 1;
  std::vector<std::size_t> rowsOut;
  if (searchEmptyRectangle(cells, spec.rowPick, spec.colPick, 0, zero, rowsOut)) {
    RectangleWitness w;
    w.rowSet = rowsOut;
    w.colSet = firstColumns(zero, spec.colPick);
    return {false, std::move(w)};
  }
  return {true, std::nullopt};
}

CellSet restrict(const CellSet& cells, const std::vector<std::size_t>& rowSubset,
                 const std::vector<std::size_t>& colSubset) {
  CellSet out(rowSubset.size(), colSubset.size());
  for (std::size_t i = 0; i < rowSubset.size(); ++i)
    for (std::size_t j = 0; j < colSubset.size(); ++j)
      if (cells.test(rowSubset[i], colSubset[j])) out.set(i, j);
  return out;
}

bool GridColoring::total() const {
  for (int v : classOf)
    if (v < 0) return false;
  return true;
}

CellSet GridColoring::classCells(int cls) const {
  CellSet out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (at(r, c) == cls) out.set(r, c);
  return out;
}

void validateBlockMap(const BlockMap& bm) {
  std::vector<bool> seen(bm.targetCols, false);
  for (const auto& block : bm.blocks) {
    for (std::size_t j : block) {
      if (j >= bm.targetCols) throw std::invalid_argument("block column out of range");
      if (seen[j]) throw std::invalid_argument("block columns overlap");
      seen[j] = true;
    }
  }
  for (bool s : seen)
    if (!s) throw std::invalid_argument("blocks do not cover all target columns");
}

BlockMap contiguousBlocks(std::size_t sourceCols, std::size_t targetCols) {
  if (sourceCols == 0 || targetCols < sourceCols)
    throw std::invalid_argument("contiguousBlocks: need at least one target column per block");
  BlockMap bm;
  bm.targetCols = targetCols;
  std::size_t at = 0;
  for (std::size_t b = 0; b < sourceCols; ++b) {
    std::size_t size = targetCols / sourceCols + (b < targetCols % sourceCols ? 1 : 0);
    std::vector<std::size_t> block(size);
    for (std::size_t i = 0; i < size; ++i) block[i] = at + i;
    at += size;
    bm.blocks.push_back(std::move(block));
  }
  return bm;
}

GridColoring liftByCofinality(const GridColoring& source, const BlockMap& bm) {
  if (bm.blocks.size() != source.cols)
    throw std::invalid_argument("block count does not match source column count");
  validateBlockMap(bm);
  GridColoring out(source.rows, bm.targetCols, source.classCount);
  for (std::size_t r = 0; r < source.rows; ++r)
    for (std::size_t b = 0; b < bm.blocks.size(); ++b)
      for (std::size_t j : bm.blocks[b]) out.assign(r, j, source.at(r, b));
  return out;
}

}  // namespace thickset
