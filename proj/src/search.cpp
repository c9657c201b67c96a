#include "thickset/search.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>

#include "thickset/errors.hpp"

namespace thickset {

namespace {

void checkProblem(const SearchProblem& prob) {
  if (prob.m == 0 || prob.p == 0) throw std::invalid_argument("m and p must be positive");
  if (prob.mu == 0 || prob.mu > prob.m || prob.nu == 0 || prob.nu > prob.m)
    throw std::invalid_argument("mu and nu must lie in [1, m]");
}

std::vector<std::vector<std::size_t>> subsetsOf(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    std::size_t j = k;
    while (j > 0 && cur[j - 1] == n - k + j - 1) --j;
    if (j == 0) break;
    ++cur[j - 1];
    for (std::size_t i = j; i < k; ++i) cur[i] = cur[i - 1] + 1;
  }
  return out;
}

class Solver {
 public:
  Solver(const SearchProblem& prob, const SearchBudget& budget)
      : prob_(prob), budget_(budget), coloring_(prob.m, prob.m, prob.p) {
    const auto rowSets = subsetsOf(prob.m, prob.mu);
    const auto colSets = subsetsOf(prob.m, prob.nu);
    cellRects_.resize(prob.m * prob.m);
    for (const auto& rows : rowSets)
      for (const auto& cols : colSets) {
        const std::size_t rect = rectCount_++;
        for (std::size_t r : rows)
          for (std::size_t c : cols) cellRects_[r * prob.m + c].push_back(rect);
      }
    // possible[rect * p + cls]: cells of the rectangle still assignable (or
    // already assigned) to cls. Zero means the covering constraint is dead.
    possible_.assign(rectCount_ * prob.p, prob.mu * prob.nu);
  }

  SearchOutcome run() {
    const auto start = std::chrono::steady_clock::now();
    SearchOutcome out;
    const int verdict = dfs(0, true);
    out.stats = stats_;
    out.stats.wallMs =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    if (verdict < 0) {
      out.status = SearchStatus::Budget;
    } else if (verdict > 0) {
      out.status = SearchStatus::Sat;
      out.certificate = coloring_;
    } else {
      out.status = SearchStatus::Unsat;
    }
    return out;
  }

 private:
  // 1 found, 0 exhausted, -1 budget. tight: the current row still equals the
  // previous row on every decided column, so the next cell is bounded below.
  int dfs(std::size_t cell, bool tight) {
    if (cell == prob_.m * prob_.m) return 1;
    const std::size_t r = cell / prob_.m, c = cell % prob_.m;
    if (c == 0) tight = r > 0;

    int lo = 0;
    if (tight) lo = coloring_.at(r - 1, c);
    int hi = static_cast<int>(prob_.p) - 1;
    if (cell == 0) hi = 0;

    for (int v = lo; v <= hi; ++v) {
      if (stats_.nodes == budget_.maxNodes) return -1;
      ++stats_.nodes;
      if (!place(cell, v)) {
        ++stats_.prunes;
        unplace(cell, v);
        continue;
      }
      const int sub = dfs(cell + 1, tight && v == lo && r > 0);
      if (sub != 0) return sub;
      unplace(cell, v);
    }
    return 0;
  }

  bool place(std::size_t cell, int v) {
    coloring_.classOf[cell] = v;
    bool ok = true;
    for (std::size_t rect : cellRects_[cell]) {
      std::size_t* row = &possible_[rect * prob_.p];
      for (std::size_t cls = 0; cls < prob_.p; ++cls)
        if (static_cast<int>(cls) != v && --row[cls] == 0) ok = false;
    }
    return ok;
  }

  void unplace(std::size_t cell, int v) {
    for (std::size_t rect : cellRects_[cell]) {
      std::size_t* row = &possible_[rect * prob_.p];
      for (std::size_t cls = 0; cls < prob_.p; ++cls)
        if (static_cast<int>(cls) != v) ++row[cls];
    }
    coloring_.classOf[cell] = -1;
  }

  SearchProblem prob_;
  SearchBudget budget_;
  GridColoring coloring_;
  std::size_t rectCount_ = 0;
  std::vector<std::vector<std::size_t>> cellRects_;
  std::vector<std::size_t> possible_;
  SearchStats stats_;
};

}  // namespace

SearchOutcome solve(const SearchProblem& prob, const SearchBudget& budget) {
  checkProblem(prob);
  SearchOutcome out = Solver(prob, budget).run();
  if (out.status == SearchStatus::Sat) {
    if (!verifyCertificate(*out.certificate, prob).pass)
      throw InvariantBreach("solver emitted a bad certificate");
  }
  return out;
}

WitnessReport verifyCertificate(const GridColoring& coloring, const SearchProblem& prob) {
  checkProblem(prob);
  if (coloring.rows != prob.m || coloring.cols != prob.m)
    throw std::invalid_argument("certificate shape mismatch");

  WitnessReport report;
  for (std::size_t i = 0; i < coloring.classOf.size(); ++i) {
    const int v = coloring.classOf[i];
    if (v < 0 || static_cast<std::size_t>(v) >= prob.p) {
      report.add({"totality", static_cast<int>(i % prob.m), -1, v,
                  "cell " + std::to_string(i) + " unassigned or beyond p"});
      return report;
    }
  }
  for (std::size_t cls = 0; cls < prob.p; ++cls) {
    const ThickVerdict verdict = isThick(coloring.classCells(static_cast<int>(cls)),
                                         {prob.mu, prob.nu});
    if (!verdict.thick) {
      std::string detail = "missed rectangle rows{";
      for (std::size_t r : verdict.witness->rowSet) detail += " " + std::to_string(r);
      detail += " } cols{";
      for (std::size_t c : verdict.witness->colSet) detail += " " + std::to_string(c);
      detail += " }";
      report.add({"class-thickness", -1, -1, static_cast<int>(cls), detail});
    }
  }
  return report;
}

std::vector<TableCell> thickNumberTable(std::size_t mMax, std::size_t muNuMax,
                                        const SearchBudget& budget) {
  if (mMax == 0) throw std::invalid_argument("mMax must be positive");
  std::vector<TableCell> table;
  for (std::size_t m = 1; m <= mMax; ++m)
    for (std::size_t mu = 1; mu <= std::min(m, muNuMax); ++mu)
      for (std::size_t nu = 1; nu <= std::min(m, muNuMax); ++nu) {
        TableCell cell{m, mu, nu, 1, CellStatus::Exact, std::nullopt};
        cell.certificate = GridColoring(m, m, 1);
        std::fill(cell.certificate->classOf.begin(), cell.certificate->classOf.end(), 0);

        std::size_t lo = 1, hi = m * m;
        while (lo < hi) {
          const std::size_t mid = lo + (hi - lo + 1) / 2;
          const SearchOutcome probe = solve({m, mu, nu, mid}, budget);
          if (probe.status == SearchStatus::Sat) {
            lo = mid;
            cell.certificate = probe.certificate;
          } else if (probe.status == SearchStatus::Unsat) {
            hi = mid - 1;
          } else {
            cell.status = CellStatus::Unknown;
            break;
          }
        }
        cell.thickNumber = lo;
        table.push_back(std::move(cell));
      }
  return table;
}

}  // namespace thickset
