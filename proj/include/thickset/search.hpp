#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "thickset/grid.hpp"
#include "thickset/report.hpp"

namespace thickset {

// Does [m] x [m] split into p classes, each meeting every mu-by-nu rectangle?
struct SearchProblem {
  std::size_t m = 0;
  std::size_t mu = 0;
  std::size_t nu = 0;
  std::size_t p = 0;
};

enum class SearchStatus { Sat, Unsat, Budget };

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t prunes = 0;
  double wallMs = 0.0;  // informational; reports never include it
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::Unsat;
  std::optional<GridColoring> certificate;  // present iff Sat, verified
  SearchStats stats;
};

struct SearchBudget {
  std::uint64_t maxNodes = 50'000'000;
};

// Complete backtracking over cells in row-major order, classes ascending.
// Propagation counts, per rectangle and class, the cells still able to carry
// that class; a zero count prunes. Symmetry: cell (0,0) is class 0 and rows
// are lexicographically nondecreasing. Unsat only after full exhaustion.
SearchOutcome solve(const SearchProblem& prob, const SearchBudget& budget = {});

// Pass iff every class below p is (mu, nu)-thick; a failing class reports
// its least missed rectangle. Throws std::invalid_argument on shape mismatch.
WitnessReport verifyCertificate(const GridColoring& coloring, const SearchProblem& prob);

enum class CellStatus { Exact, Unknown };

// T(m, mu, nu) = max p admitting a SAT split; merging classes keeps
// thickness, so feasibility is monotone in p and binary search applies.
struct TableCell {
  std::size_t m = 0;
  std::size_t mu = 0;
  std::size_t nu = 0;
  std::size_t thickNumber = 0;  // exact, or best-known lower bound when Unknown
  CellStatus status = CellStatus::Exact;
  std::optional<GridColoring> certificate;  // for the maximal SAT p
};

std::vector<TableCell> thickNumberTable(std::size_t mMax, std::size_t muNuMax,
                                        const SearchBudget& budget = {});

}  // namespace thickset
