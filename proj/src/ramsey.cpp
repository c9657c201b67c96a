#include "thickset/ramsey.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

#include "thickset/errors.hpp"

namespace thickset {

namespace {

// Smallest e with colors^e >= m.
std::size_t ceilLog(std::size_t m, std::size_t colors) {
  std::size_t e = 0, power = 1;
  while (power < m) {
    power *= colors;
    ++e;
  }
  return e;
}

std::size_t sizeGuarantee(std::size_t m, std::size_t colors) {
  if (colors <= 1) return m;
  return (ceilLog(m, colors) + colors - 1) / colors;
}

}  // namespace

Extraction ramseyExtract(const PairColoring& f) {
  if (f.size < 2) throw std::invalid_argument("need at least two indices");
  if (f.colors == 0 || !f.value) throw std::invalid_argument("coloring incomplete");

  Extraction out;
  std::vector<std::size_t> pool(f.size);
  for (std::size_t i = 0; i < f.size; ++i) pool[i] = i;
  std::vector<std::size_t> recordCount(f.colors, 0);

  while (!pool.empty()) {
    const std::size_t v = pool.front();
    if (pool.size() == 1) {
      // Nothing left to compare against; join the current majority.
      int best = 0;
      for (std::size_t c = 1; c < f.colors; ++c)
        if (recordCount[c] > recordCount[best]) best = static_cast<int>(c);
      out.pivots.emplace_back(v, best);
      ++recordCount[best];
      break;
    }
    std::vector<std::vector<std::size_t>> groups(f.colors);
    for (std::size_t i = 1; i < pool.size(); ++i) {
      const int c = f.value(v, pool[i]);
      if (c < 0 || static_cast<std::size_t>(c) >= f.colors)
        throw InvariantBreach("pair color out of range");
      groups[c].push_back(pool[i]);
    }
    std::size_t best = 0;
    for (std::size_t c = 1; c < f.colors; ++c)
      if (groups[c].size() > groups[best].size()) best = c;
    out.pivots.emplace_back(v, static_cast<int>(best));
    ++recordCount[best];
    pool = std::move(groups[best]);
  }

  std::size_t majority = 0;
  for (std::size_t c = 1; c < f.colors; ++c)
    if (recordCount[c] > recordCount[majority]) majority = c;
  out.color = static_cast<int>(majority);
  for (const auto& [pivot, c] : out.pivots)
    if (c == out.color) out.set.push_back(pivot);

  if (out.set.size() < sizeGuarantee(f.size, f.colors))
    throw InvariantBreach("extracted set misses the size guarantee");
  for (std::size_t a = 0; a < out.set.size(); ++a)
    for (std::size_t b = a + 1; b < out.set.size(); ++b)
      if (f.value(out.set[a], out.set[b]) != out.color)
        throw InvariantBreach("extracted set is not monochromatic");
  return out;
}

WitnessPair antiThickWitness(const GridOracle& h) {
  if (h.size < 4) throw std::invalid_argument("need at least four indices");
  if (h.colors == 0 || !h.value) throw std::invalid_argument("oracle incomplete");

  const auto upper = [&](std::size_t a, std::size_t b) {
    return h.value(std::min(a, b), std::max(a, b));
  };
  const auto lower = [&](std::size_t a, std::size_t b) {
    return h.value(std::max(a, b), std::min(a, b));
  };

  const Extraction first = ramseyExtract({h.size, h.colors, upper});
  const std::vector<std::size_t>& A = first.set;
  if (A.size() < 2)
    throw DegenerateWitness(static_cast<int>(A.size()), "first extraction collapsed");

  const Extraction second = ramseyExtract(
      {A.size(), h.colors, [&](std::size_t a, std::size_t b) { return lower(A[a], A[b]); }});
  std::vector<std::size_t> B;
  for (std::size_t idx : second.set) B.push_back(A[idx]);
  if (B.size() < 2)
    throw DegenerateWitness(static_cast<int>(B.size()), "second extraction collapsed");

  WitnessPair out;
  out.upperColor = first.color;
  out.lowerColor = second.color;
  for (std::size_t i = 0; i < B.size(); ++i) (i % 2 == 0 ? out.K : out.L).push_back(B[i]);

  for (std::size_t k : out.K)
    for (std::size_t l : out.L) {
      const int c = h.value(k, l);
      if (c != out.upperColor && c != out.lowerColor)
        throw InvariantBreach("witness product leaves the two extracted colors");
      if (std::find(out.colorSet.begin(), out.colorSet.end(), c) == out.colorSet.end())
        out.colorSet.push_back(c);
    }
  std::sort(out.colorSet.begin(), out.colorSet.end());
  return out;
}

GridOracle constantOracle(std::size_t size, int k) {
  if (k < 0) throw std::invalid_argument("color must be nonnegative");
  const std::size_t colors = std::max<std::size_t>(static_cast<std::size_t>(k) + 1, 3);
  return {size, colors, [k](std::size_t, std::size_t) { return k; }};
}

GridOracle order3Oracle(std::size_t size) {
  return {size, 3, [](std::size_t i, std::size_t j) { return i < j ? 0 : i > j ? 1 : 2; }};
}

GridOracle randomOracle(std::size_t size, std::uint64_t seed, std::size_t colors) {
  if (colors == 0) throw std::invalid_argument("need at least one color");
  const auto cell = [seed, colors](std::size_t i, std::size_t j) {
    std::uint64_t z = seed ^ (0x9e3779b97f4a7c15ull * (i + 1)) ^ (0xbf58476d1ce4e5b9ull * (j + 1));
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    z ^= z >> 31;
    return static_cast<int>(z % colors);
  };
  return {size, colors, cell};
}

GridOracle matrixOracle(std::vector<std::vector<int>> cells) {
  const std::size_t size = cells.size();
  int top = 0;
  for (const auto& row : cells) {
    if (row.size() != size) throw std::invalid_argument("matrix must be square");
    for (int v : row) {
      if (v < 0) throw std::invalid_argument("colors must be nonnegative");
      top = std::max(top, v);
    }
  }
  const std::size_t colors = std::max<std::size_t>(static_cast<std::size_t>(top) + 1, 3);
  auto shared = std::make_shared<std::vector<std::vector<int>>>(std::move(cells));
  return {size, colors,
          [shared](std::size_t i, std::size_t j) { return (*shared)[i][j]; }};
}

}  // namespace thickset
