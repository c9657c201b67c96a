// Acceptance suite: runs every criterion twice, prints one line per
// criterion, and writes the first run's report to acceptance-reports/.
// Reports never contain wall times, so the reproducibility criterion can
// compare the two runs byte for byte. Exit code = number of failures.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "support/oracles.hpp"
#include "thickset/breakers.hpp"
#include "thickset/core_lemma.hpp"
#include "thickset/density.hpp"
#include "thickset/errors.hpp"
#include "thickset/grid.hpp"
#include "thickset/json_io.hpp"
#include "thickset/ktree.hpp"
#include "thickset/ramsey.hpp"
#include "thickset/rng.hpp"
#include "thickset/search.hpp"

namespace {

using namespace thickset;

struct CriterionResult {
  bool pass = true;
  std::string reason;  // deterministic; first failure wins
  Json report = Json::object();
};

void fail(CriterionResult& r, const std::string& why) {
  if (r.pass) r.reason = why;
  r.pass = false;
}

PairColoring unorderedReading(const GridOracle& o) {
  return {o.size, o.colors,
          [o](std::size_t i, std::size_t j) { return o.value(std::min(i, j), std::max(i, j)); }};
}

std::size_t sizeGuarantee(std::size_t m, std::size_t colors) {
  std::size_t levels = 0, reach = 1;
  while (reach < m) {
    reach *= colors;
    ++levels;
  }
  return (levels + colors - 1) / colors;
}

// --- 01: thickness oracle vs brute force --------------------------------

CriterionResult thicknessAgreement() {
  CriterionResult r;
  std::uint64_t comparisons = 0, mismatches = 0;
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t l = 1; l <= 4; ++l) {
      Rng rng = Rng::substream(101, "accept-thick-" + std::to_string(m) + "x" + std::to_string(l));
      for (int t = 0; t < 200; ++t) {
        CellSet cells = testsupport::randomCellSet(rng, m, l);
        for (std::size_t mu = 1; mu <= 3; ++mu) {
          for (std::size_t nu = 1; nu <= 3; ++nu) {
            ThickVerdict fast = isThick(cells, {mu, nu});
            ThickVerdict slow = testsupport::naiveIsThick(cells, {mu, nu});
            ++comparisons;
            bool agree = fast.thick == slow.thick;
            if (agree && !fast.thick) {
              agree = fast.witness.has_value() && slow.witness.has_value() &&
                      fast.witness->rowSet == slow.witness->rowSet &&
                      fast.witness->colSet == slow.witness->colSet;
            }
            if (!agree) {
              ++mismatches;
              fail(r, "oracle disagrees with brute force on a " + std::to_string(m) + "x" +
                          std::to_string(l) + " grid at (" + std::to_string(mu) + ", " +
                          std::to_string(nu) + ")");
            }
          }
        }
      }
    }
  }
  r.report = Json{{"comparisons", comparisons},
                  {"mismatches", mismatches},
                  {"setsPerShape", 200},
                  {"pass", r.pass},
                  {"reason", r.reason}};
  return r;
}

// --- 02: monotonicity ----------------------------------------------------

CriterionResult monotonicitySuite() {
  CriterionResult r;
  Rng rng = Rng::substream(102, "accept-monotone");
  std::uint64_t checks = 0, thickTrials = 0;
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t rows = 1 + rng.below(5), cols = 1 + rng.below(5);
    std::size_t mu = 1 + rng.below(4), nu = 1 + rng.below(4);
    CellSet base = testsupport::randomCellSet(rng, rows, cols);
    if (!isThick(base, {mu, nu}).thick) continue;
    ++thickTrials;

    CellSet super = base;
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (!super.test(i, j) && rng.below(3) == 0) super.set(i, j);
    ++checks;
    if (!isThick(super, {mu, nu}).thick) fail(r, "superset lost thickness");

    std::size_t muUp = mu + rng.below(3), nuUp = nu + rng.below(3);
    ++checks;
    if (!isThick(base, {muUp, nuUp}).thick) fail(r, "parameter increase lost thickness");

    std::size_t rPick = 1 + rng.below(rows), cPick = 1 + rng.below(cols);
    auto rowSubset = testsupport::randomSubsetOfSize(rng, rows, rPick);
    auto colSubset = testsupport::randomSubsetOfSize(rng, cols, cPick);
    ++checks;
    if (!isThick(restrict(base, rowSubset, colSubset), {mu, nu}).thick)
      fail(r, "restriction lost thickness");
  }
  r.report = Json{{"trials", 500},
                  {"thickTrials", thickTrials},
                  {"checks", checks},
                  {"pass", r.pass},
                  {"reason", r.reason}};
  return r;
}

// --- 03: cofinality lift -------------------------------------------------

CriterionResult cofinalityLift() {
  CriterionResult r;
  std::uint64_t fullChecks = 0, gradedChecks = 0;

  Rng rng = Rng::substream(103, "accept-cof-lift");
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t p = 1 + rng.below(4);
    GridColoring src(4, 2, p);
    // A full-thick class at this scale is exactly a nonempty one; pinning
    // the first p cells keeps every class inhabited.
    for (std::size_t r2 = 0; r2 < 4; ++r2)
      for (std::size_t c = 0; c < 2; ++c) {
        std::size_t flat = r2 * 2 + c;
        src.assign(r2, c, flat < p ? static_cast<int>(flat) : static_cast<int>(rng.below(p)));
      }

    std::size_t l = 2 + rng.below(5);
    BlockMap bm{l, {{}, {}}};
    for (std::size_t j = 0; j < l; ++j) bm.blocks[rng.below(2)].push_back(j);
    if (bm.blocks[0].empty()) {
      bm.blocks[0].push_back(bm.blocks[1].front());
      bm.blocks[1].erase(bm.blocks[1].begin());
    } else if (bm.blocks[1].empty()) {
      bm.blocks[1].push_back(bm.blocks[0].back());
      bm.blocks[0].pop_back();
    }
    GridColoring lifted = liftByCofinality(src, bm);
    for (std::size_t cls = 0; cls < p; ++cls) {
      ++fullChecks;
      if (!isThick(lifted.classCells(static_cast<int>(cls)), {4, l}).thick)
        fail(r, "lifted class " + std::to_string(cls) + " not (4, " + std::to_string(l) +
                    ")-thick at trial " + std::to_string(trial));
    }
  }

  Rng rng2 = Rng::substream(103, "accept-cof-graded");
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t p = 1 + rng2.below(4);
    GridColoring src(4, 2, p);
    for (std::size_t r2 = 0; r2 < 4; ++r2)
      for (std::size_t c = 0; c < 2; ++c) src.assign(r2, c, static_cast<int>(rng2.below(p)));
    for (std::size_t l : {std::size_t{2}, std::size_t{4}, std::size_t{6}}) {
      BlockMap bm = contiguousBlocks(2, l);
      std::size_t s = l / 2;
      GridColoring lifted = liftByCofinality(src, bm);
      for (std::size_t cls = 0; cls < p; ++cls) {
        CellSet before = src.classCells(static_cast<int>(cls));
        CellSet after = lifted.classCells(static_cast<int>(cls));
        for (std::size_t mu = 1; mu <= 4; ++mu)
          for (std::size_t nu = 1; nu <= 2; ++nu) {
            if (!isThick(before, {mu, nu}).thick) continue;
            ++gradedChecks;
            if (!isThick(after, {mu, s * (nu - 1) + 1}).thick)
              fail(r, "graded bound failed at l=" + std::to_string(l) + " (" +
                          std::to_string(mu) + ", " + std::to_string(nu) + ")");
          }
      }
    }
  }

  r.report = Json{{"fullThickChecks", fullChecks},
                  {"gradedChecks", gradedChecks},
                  {"pass", r.pass},
                  {"reason", r.reason}};
  return r;
}

// --- 04: kuratowski breaker ---------------------------------------------

CriterionResult kuratowskiBreaker() {
  CriterionResult r;
  Rng rng = Rng::substream(104, "accept-kuratowski");
  std::uint64_t memberChecks = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + rng.below(8);
    std::size_t minSize = n * n;
    std::size_t universe = minSize + rng.below(256 - minSize + 1);
    SubsetFamily fam{universe, {}};
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t size = minSize + rng.below(universe - minSize + 1);
      fam.sets.push_back(testsupport::randomSubsetOfSize(rng, universe, size));
    }
    try {
      BreakingFunction f = kuratowskiBreak(fam, n);
      for (const auto& member : fam.sets) {
        ++memberChecks;
        if (!f.covers(member, n)) fail(r, "image misses the range at trial " + std::to_string(trial));
      }
    } catch (const SelectionExhausted&) {
      fail(r, "selection exhausted at trial " + std::to_string(trial));
    }
  }

  bool singletonsThrew = false;
  try {
    kuratowskiBreak(SubsetFamily{3, {{0}, {1}, {2}}}, 2);
  } catch (const SelectionExhausted& e) {
    singletonsThrew = e.setIndex == 0;
  }
  if (!singletonsThrew) fail(r, "disjoint singletons did not raise the specified error");

  r.report = Json{{"families", 100},
                  {"memberChecks", memberChecks},
                  {"singletonsRejected", singletonsThrew},
                  {"pass", r.pass},
                  {"reason", r.reason}};
  return r;
}

// --- 05: core lemma audit ------------------------------------------------

CriterionResult coreLemmaAudit() {
  CriterionResult r;

  FamilyEnumeration fam8 = FamilyEnumeration::allSubsets(8, 7);
  std::vector<std::size_t> thresholds8 = defaultThresholds(fam8.count(), 4);
  Assembly tau = assembleTau(fam8, 4, 3, thresholds8);
  bool tauTotal = tau.coloring.total();
  bool tauThick = true;
  for (int cls = 0; cls < 3; ++cls)
    tauThick = tauThick && isThick(tau.coloring.classCells(cls), {7, 4}).thick;
  WitnessReport tauAudit = auditAssembly(tau.coloring, fam8, tau.schedule, Variant::Tau);
  if (!tauTotal) fail(r, "tau assembly is not total");
  if (!tauThick) fail(r, "a tau class is not (7, 4)-thick");
  if (!tauAudit.pass) fail(r, "tau audit reported a violation");

  // Variant-2 instance (ground 5, member size 4, 4 columns). Column 3 must
  // map every 4-subset of [5] onto {0, 1, 2}; each value then needs two
  // carriers, which no 5-point ground set can supply. The exhaustive scan
  // below proves that, so the assembly's failure is the correct outcome.
  FamilyEnumeration fam5 = FamilyEnumeration::allSubsets(5, 4);
  std::vector<std::size_t> thresholds5 = defaultThresholds(fam5.count(), 4);
  std::uint64_t admissible = 0;
  const std::uint64_t candidates = 1024;  // 4^5 column functions
  for (std::uint64_t code = 0; code < candidates; ++code) {
    std::array<int, 5> f{};
    std::uint64_t c = code;
    for (int i = 0; i < 5; ++i) {
      f[i] = static_cast<int>(c % 4);
      c /= 4;
    }
    bool ok = true;
    for (const auto& member : fam5.family.sets) {
      bool seen[3] = {false, false, false};
      for (std::size_t x : member)
        if (f[x] < 3) seen[f[x]] = true;
      ok = ok && seen[0] && seen[1] && seen[2];
    }
    if (ok) ++admissible;
  }

  bool lambdaAssembled = false;
  int failedColumn = -1;
  WitnessReport lambdaAudit;
  try {
    Assembly lambda = assembleLambda(fam5, 4, thresholds5);
    lambdaAssembled = true;
    lambdaAudit = auditAssembly(lambda.coloring, fam5, lambda.schedule, Variant::Lambda);
    if (!lambdaAudit.pass) fail(r, "variant-2 audit reported a violation");
  } catch (const SelectionExhausted& e) {
    failedColumn = e.column;
  }
  if (!lambdaAssembled) {
    fail(r, "variant-2 assembly on (5, 4, 4) is infeasible: column 3 must map every 4-subset "
            "of [5] onto {0,1,2}, which needs two carriers per value (6 > 5 points); the "
            "exhaustive scan of all 1024 column functions finds 0 admissible");
  }
  if (admissible != 0) fail(r, "exhaustive scan found an admissible column the assembly missed");

  r.report = Json{{"tau",
                   Json{{"total", tauTotal},
                        {"classesThick", tauThick},
                        {"audit", reportToJson(tauAudit)}}},
                  {"variant2",
                   Json{{"assembled", lambdaAssembled},
                        {"failedColumn", failedColumn},
                        {"candidateColumns", candidates},
                        {"admissibleColumns", admissible}}},
                  {"pass", r.pass},
                  {"reason", r.reason}};
  return r;
}

// --- 06: splitting recursion --------------------------------------------

CriterionResult splittingRecursion() {
  CriterionResult r;

  bool triangleThrew = false;
  try {
    splitFamily(SubsetFamily{3, {{0, 1}, {1, 2}, {0, 2}}}, 2, 0);
  } catch (const SplitterNotFound& e) {
    triangleThrew = e.round == 0;
  }
  if (!triangleThrew) fail(r, "triangle family did not raise SplitterNotFound at round 0");

  Rng rng = Rng::substream(106, "accept-split");
  std::uint64_t structureChecks = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t parts = 1 + rng.below(4);
    std::size_t minMember = std::size_t{1} << parts;
    std::size_t universe = minMember + 2 + rng.below(40);
    std::size_t n = 1 + rng.below(4);
    SubsetFamily fam{universe, {}};
    for (std::size_t i = 0; i < n; ++i) {
      // Upper half of [2^parts, universe]: the recursion halves the worst
      // member-trace each round, so the bare minimum has no slack.
      std::size_t low = minMember + (universe - minMember) / 2;
      std::size_t size = low + rng.below(universe - low + 1);
      fam.sets.push_back(testsupport::randomSubsetOfSize(rng, universe, size));
    }
    try {
      auto [trace, f] = splitFamily(fam, parts, rng.next());
      if (trace.rounds.size() != parts) fail(r, "round count mismatch");
      for (std::size_t a = 0; a < trace.rounds.size(); ++a) {
        const SplitRound& round = trace.rounds[a];
        std::vector<std::size_t> rebuilt = round.splitter;
        rebuilt.insert(rebuilt.end(), round.piece.begin(), round.piece.end());
        std::sort(rebuilt.begin(), rebuilt.end());
        ++structureChecks;
        if (rebuilt != round.pool) fail(r, "splitter and piece do not partition the pool");
        if (a + 1 < trace.rounds.size() && trace.rounds[a + 1].pool != round.splitter)
          fail(r, "next pool is not the splitter");
        for (std::size_t b = a + 1; b < trace.rounds.size(); ++b) {
          std::vector<std::size_t> overlap;
          std::set_intersection(trace.rounds[a].piece.begin(), trace.rounds[a].piece.end(),
                                trace.rounds[b].piece.begin(), trace.rounds[b].piece.end(),
                                std::back_inserter(overlap));
          if (!overlap.empty()) fail(r, "pieces overlap");
        }
      }
      if (!trace.rounds.empty() && trace.residual != trace.rounds.back().splitter)
        fail(r, "residual is not the last splitter");
      for (const auto& member : fam.sets) {
        ++structureChecks;
        if (!f.covers(member, parts)) fail(r, "member does not cover all parts");
        for (const SplitRound& round : trace.rounds) {
          std::vector<std::size_t> met;
          std::set_intersection(member.begin(), member.end(), round.piece.begin(),
                                round.piece.end(), std::back_inserter(met));
          if (met.empty()) fail(r, "member misses a piece");
        }
      }
    } catch (const SplitterNotFound&) {
      fail(r, "no splitter found for seeded family at trial " + std::to_string(trial));
    }
  }

  r.report = Json{{"triangleRejected", triangleThrew},
                  {"families", 100},
                  {"structureChecks", structureChecks},
                  {"pass", r.pass},
                  {"reason", r.reason}};
  return r;
}

// --- 07: ramsey extraction ----------------------------------------------

CriterionResult ramseyExtraction() {
  CriterionResult r;

  for (std::size_t m : {std::size_t{2}, std::size_t{5}, std::size_t{16}, std::size_t{64},
                        std::size_t{729}}) {
    for (int k = 0; k < 2; ++k) {
      PairColoring constant{m, 2, [k](std::size_t, std::size_t) { return k; }};
      Extraction e = ramseyExtract(constant);
      if (e.set.size() < (m + 1) / 2)
        fail(r, "constant coloring extraction below ceil(m/2) at m=" + std::to_string(m));
    }
  }

  const std::size_t m = 6561;
  const std::size_t guarantee = sizeGuarantee(m, 3);
  Rng rng = Rng::substream(107, "accept-ramsey");
  std::uint64_t pairChecks = 0;
  Json sizes = Json::array();
  for (int trial = 0; trial < 50; ++trial) {
    GridOracle oracle = randomOracle(m, rng.next(), 3);
    PairColoring pairs = unorderedReading(oracle);
    Extraction e = ramseyExtract(pairs);
    sizes.push_back(e.set.size());
    if (e.set.size() < guarantee) fail(r, "extracted set below the size guarantee");
    if (!std::is_sorted(e.set.begin(), e.set.end())) fail(r, "extracted set is not sorted");
    for (std::size_t a = 0; a < e.set.size(); ++a)
      for (std::size_t b = a + 1; b < e.set.size(); ++b) {
        ++pairChecks;
        if (pairs.value(e.set[a], e.set[b]) != e.color)
          fail(r, "extracted set is not monochromatic at trial " + std::to_string(trial));
      }
  }

  r.report = Json{{"constantCases", 10},
                  {"randomTrials", 50},
                  {"guarantee", guarantee},
                  {"extractedSizes", sizes},
                  {"pairChecks", pairChecks},
                  {"pass", r.pass},
                  {"reason", r.reason}};
  return r;
}

// --- 08: anti-thickness witness -----------------------------------------

CriterionResult antiThickness() {
  CriterionResult r;
  std::vector<GridOracle> oracles;
  oracles.push_back(order3Oracle(729));
  Rng rng = Rng::substream(108, "accept-witness");
  for (int trial = 0; trial < 50; ++trial) oracles.push_back(randomOracle(729, rng.next(), 3));

  std::uint64_t productCells = 0;
  for (std::size_t i = 0; i < oracles.size(); ++i) {
    const GridOracle& h = oracles[i];
    WitnessPair w = antiThickWitness(h);
    if (w.K.empty() || w.L.empty()) fail(r, "empty witness side at oracle " + std::to_string(i));
    std::vector<std::size_t> overlap;
    std::set_intersection(w.K.begin(), w.K.end(), w.L.begin(), w.L.end(),
                          std::back_inserter(overlap));
    if (!overlap.empty()) fail(r, "witness sides overlap at oracle " + std::to_string(i));
    std::vector<int> seen;
    for (std::size_t k : w.K)
      for (std::size_t l : w.L) {
        ++productCells;
        seen.push_back(h.value(k, l));
      }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    if (seen.size() > 2) fail(r, "product uses more than two colors at oracle " + std::to_string(i));
    if (seen != w.colorSet) fail(r, "recorded color set mismatch at oracle " + std::to_string(i));
  }

  r.report = Json{{"oracles", oracles.size()},
                  {"productCells", productCells},
                  {"pass", r.pass},
                  {"reason", r.reason}};
  return r;
}

// --- 09: search cross-validation ----------------------------------------

CriterionResult searchCrossValidation() {
  CriterionResult r;
  std::uint64_t problems = 0;
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t mu = 1; mu <= std::min<std::size_t>(m, 3); ++mu)
      for (std::size_t nu = 1; nu <= std::min<std::size_t>(m, 3); ++nu)
        for (std::size_t p = 1; p <= 3; ++p) {
          SearchProblem prob{m, mu, nu, p};
          SearchOutcome fast = solve(prob);
          bool slow = testsupport::naiveSatSplit(prob);
          ++problems;
          if (fast.status == SearchStatus::Budget) fail(r, "unexpected budget status");
          if ((fast.status == SearchStatus::Sat) != slow)
            fail(r, "solver disagrees with the odometer at m=" + std::to_string(m) + " mu=" +
                        std::to_string(mu) + " nu=" + std::to_string(nu) + " p=" +
                        std::to_string(p));
          if (fast.certificate && !verifyCertificate(*fast.certificate, prob).pass)
            fail(r, "certificate fails verification");
        }
  {
    SearchProblem prob{4, 2, 2, 2};
    SearchOutcome fast = solve(prob);
    bool slow = testsupport::naiveSatSplit(prob);
    ++problems;
    if ((fast.status == SearchStatus::Sat) != slow) fail(r, "disagreement at (4, 2, 2, 2)");
    if (fast.certificate && !verifyCertificate(*fast.certificate, prob).pass)
      fail(r, "certificate fails verification at (4, 2, 2, 2)");
  }

  std::vector<TableCell> table = thickNumberTable(4, 3);
  std::uint64_t monotoneChecks = 0;
  for (const TableCell& a : table) {
    if (a.status != CellStatus::Exact) continue;
    if (a.certificate && !verifyCertificate(*a.certificate, {a.m, a.mu, a.nu, a.thickNumber}).pass)
      fail(r, "table certificate fails verification");
    for (const TableCell& b : table) {
      if (b.status != CellStatus::Exact) continue;
      if (a.mu == b.mu && a.nu == b.nu && a.m < b.m) {
        ++monotoneChecks;
        if (a.thickNumber < b.thickNumber) fail(r, "T increased with m");
      }
      if (a.m == b.m && a.mu <= b.mu && a.nu <= b.nu) {
        ++monotoneChecks;
        if (a.thickNumber > b.thickNumber) fail(r, "T decreased with (mu, nu)");
      }
    }
  }

  r.report = Json{{"problems", problems},
                  {"monotoneChecks", monotoneChecks},
                  {"table", tableToCsv(table)},
                  {"pass", r.pass},
                  {"reason", r.reason}};
  return r;
}

// --- 10: k-construction soundness ---------------------------------------

CriterionResult kConstruction() {
  CriterionResult r;
  const std::size_t horizon = 2000;
  KAssignment ka = buildKAssignment(horizon);
  WitnessReport conditions = verifyKConditions(ka);
  if (!conditions.pass) fail(r, "structural conditions reported a violation");

  RankTable rt = rankTable(ka);
  std::uint64_t containments = 0;
  for (std::size_t n = 0; n < horizon; ++n) {
    const auto& [x, y] = ka.points[n];
    std::optional<std::size_t> found;
    std::size_t count = 0;
    for (std::size_t b = 0; b < horizon; ++b) {
      if (b == n || !linearContains(ka.entries[b], x, y)) continue;
      ++count;
      found = b;
    }
    containments += count;
    if (count > 1) fail(r, "point " + std::to_string(n) + " lies in two earlier sets");
    if (count == 0) {
      if (rt.predecessor[n] || rt.rank[n] != 0) fail(r, "rank table invents a predecessor");
    } else {
      if (!rt.predecessor[n] || *rt.predecessor[n] != *found)
        fail(r, "rank table predecessor mismatch at " + std::to_string(n));
      if (*found >= n) fail(r, "predecessor index not below its point");
      if (rt.rank[n] != rt.rank[*found] + 1) fail(r, "rank is not predecessor rank plus one");
    }
  }

  r.report = Json{{"horizon", horizon},
                  {"conditions", reportToJson(conditions)},
                  {"containments", containments},
                  {"pass", r.pass},
                  {"reason", r.reason}};
  return r;
}

// --- 11: density evidence ------------------------------------------------

CriterionResult densityEvidence() {
  CriterionResult r;
  const std::size_t classes = 4;
  const std::vector<std::size_t> horizons{2500, 5000, 10000, 20000};
  std::vector<RatBox> boxes = seededBoxes(20, 2, 0);

  KAssignment full = buildKAssignment(horizons.back());
  std::vector<std::vector<std::optional<std::size_t>>> maxRanks;
  DensityAudit last;
  for (std::size_t h : horizons) {
    KAssignment slice{h,
                      {full.points.begin(), full.points.begin() + static_cast<long>(h)},
                      {full.entries.begin(), full.entries.begin() + static_cast<long>(h)}};
    RankTable rt = rankTable(slice);
    DensityAudit audit = densityAuditKTree(slice, rt, defaultClassSelector(), boxes, classes);
    maxRanks.push_back(audit.maxRankPerBox);
    if (h == horizons.back()) last = audit;
  }

  std::size_t missedCells = 0;
  for (const DensityCell& cell : last.cells)
    if (!cell.firstIndex) ++missedCells;
  if (!last.report.pass) {
    std::size_t maxRank = 0;
    for (const auto& mr : last.maxRankPerBox)
      if (mr) maxRank = std::max(maxRank, *mr);
    fail(r, "rank-based audit misses class 3 in every box at horizon 20000: ranks reach " +
                std::to_string(maxRank) +
                " but the selector first emits class 3 at rank 9, and the first rank-9 point "
                "appears beyond the horizon");
  }

  bool monotone = true;
  for (std::size_t box = 0; box < boxes.size(); ++box) {
    for (std::size_t step = 1; step < maxRanks.size(); ++step) {
      const auto& prev = maxRanks[step - 1][box];
      const auto& cur = maxRanks[step][box];
      if (prev && (!cur || *cur < *prev)) monotone = false;
    }
  }
  if (!monotone) fail(r, "max rank per box decreased along the horizon ladder");

  Json orderType = Json::object();
  for (std::size_t arity : {std::size_t{2}, std::size_t{3}}) {
    std::vector<RatBox> tupleBoxes = seededBoxes(20, arity, 0);
    DensityAudit audit = densityAuditOrderType(arity, tupleBoxes, horizons.back());
    std::size_t misses = 0;
    for (const DensityCell& cell : audit.cells)
      if (!cell.firstIndex) ++misses;
    orderType["arity" + std::to_string(arity)] =
        Json{{"pass", audit.report.pass}, {"cells", audit.cells.size()}, {"misses", misses}};
    if (!audit.report.pass)
      fail(r, "order-type class missed a box at arity " + std::to_string(arity));
  }

  Json ladder = Json::array();
  for (std::size_t step = 0; step < horizons.size(); ++step) {
    Json ranks = Json::array();
    for (const auto& mr : maxRanks[step]) ranks.push_back(mr ? Json(*mr) : Json(nullptr));
    ladder.push_back(Json{{"horizon", horizons[step]}, {"maxRankPerBox", ranks}});
  }
  r.report = Json{{"ktree",
                   Json{{"pass", last.report.pass},
                        {"cells", last.cells.size()},
                        {"missedCells", missedCells}}},
                  {"ladder", ladder},
                  {"maxRankMonotone", monotone},
                  {"orderType", orderType},
                  {"pass", r.pass},
                  {"reason", r.reason}};
  return r;
}

// --- driver ---------------------------------------------------------------

struct Criterion {
  int id;
  const char* name;
  CriterionResult (*fn)();
  long long limitMs;  // 0: no pinned budget
};

const Criterion kCriteria[] = {
    {1, "thickness-brute-force-agreement", thicknessAgreement, 10000},
    {2, "monotonicity-suite", monotonicitySuite, 0},
    {3, "cofinality-lift", cofinalityLift, 0},
    {4, "kuratowski-breaker", kuratowskiBreaker, 0},
    {5, "core-lemma-audit", coreLemmaAudit, 30000},
    {6, "splitting-recursion", splittingRecursion, 0},
    {7, "ramsey-extraction", ramseyExtraction, 60000},
    {8, "anti-thickness-witness", antiThickness, 0},
    {9, "search-cross-validation", searchCrossValidation, 0},
    {10, "k-construction-soundness", kConstruction, 120000},
    {11, "density-evidence", densityEvidence, 0},
};

std::string reportPath(int id, const std::string& name) {
  std::string nn = id < 10 ? "0" + std::to_string(id) : std::to_string(id);
  return "acceptance-reports/" + nn + "-" + name + ".json";
}

void printLine(int id, const std::string& name, bool pass, long long ms,
               const std::string& reason) {
  std::string nn = id < 10 ? "0" + std::to_string(id) : std::to_string(id);
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << nn << ' ' << name << " (" << ms << " ms)";
  if (!pass && !reason.empty()) std::cout << ": " << reason;
  std::cout << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  std::optional<int> only;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--only" && i + 1 < argc) {
      only = std::stoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--only <criterion 1..11>]\n";
      return 2;
    }
  }

  std::filesystem::create_directories("acceptance-reports");
  int failures = 0;

  if (only) {
    for (const Criterion& c : kCriteria) {
      if (c.id != *only) continue;
      auto start = std::chrono::steady_clock::now();
      CriterionResult result = c.fn();
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
      bool pass = result.pass && (c.limitMs == 0 || ms < c.limitMs);
      std::string reason = result.reason;
      if (result.pass && !pass)
        reason = "exceeded the " + std::to_string(c.limitMs) + " ms budget";
      writeTextFile(reportPath(c.id, c.name), canonicalDump(result.report));
      printLine(c.id, c.name, pass, ms, reason);
      return pass ? 0 : 1;
    }
    std::cerr << "no criterion " << *only << "\n";
    return 2;
  }

  std::vector<std::string> firstDumps, secondDumps;
  long long secondTotalMs = 0;
  for (const Criterion& c : kCriteria) {
    auto start = std::chrono::steady_clock::now();
    CriterionResult first = c.fn();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();

    auto start2 = std::chrono::steady_clock::now();
    CriterionResult second = c.fn();
    secondTotalMs += std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start2)
                         .count();

    firstDumps.push_back(canonicalDump(first.report));
    secondDumps.push_back(canonicalDump(second.report));
    writeTextFile(reportPath(c.id, c.name), firstDumps.back());

    bool pass = first.pass && (c.limitMs == 0 || ms < c.limitMs);
    std::string reason = first.reason;
    if (first.pass && !pass) reason = "exceeded the " + std::to_string(c.limitMs) + " ms budget";
    printLine(c.id, c.name, pass, ms, reason);
    if (!pass) ++failures;
  }

  Json mismatched = Json::array();
  for (std::size_t i = 0; i < firstDumps.size(); ++i)
    if (firstDumps[i] != secondDumps[i]) mismatched.push_back(kCriteria[i].id);
  bool reproducible = mismatched.empty();
  Json reproReport{{"criteria", firstDumps.size()},
                   {"mismatched", mismatched},
                   {"pass", reproducible},
                   {"reason", reproducible ? "" : "reports differ between identical runs"}};
  writeTextFile(reportPath(12, "reproducibility"), canonicalDump(reproReport));
  printLine(12, "reproducibility", reproducible, secondTotalMs,
            reproducible ? "" : "reports differ between identical runs");
  if (!reproducible) ++failures;

  return failures;
}
