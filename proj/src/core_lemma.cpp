#include "thickset/core_lemma.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "thickset/breakers.hpp"
#include "thickset/errors.hpp"
#include "thickset/rng.hpp"

namespace thickset {

namespace {

// Exact binomial with an overflow guard; enumeration stays at desk scale.
std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    const std::size_t numer = n - k + i;
    if (result > 2'000'000 / numer * i) throw std::invalid_argument("enumeration too large");
    result = result * numer / i;
  }
  return result;
}

}  // namespace

FamilyEnumeration FamilyEnumeration::allSubsets(std::size_t ground, std::size_t mu) {
  if (mu == 0 || mu > ground) throw std::invalid_argument("member size out of range");
  FamilyEnumeration fam;
  fam.ground = ground;
  fam.mu = mu;
  fam.mode = FamilyMode::All;
  fam.family.universeSize = ground;
  fam.family.sets.reserve(binomial(ground, mu));

  // Colexicographic successor: bump the first index that has headroom below
  // its neighbor, resetting everything before it.
  std::vector<std::size_t> current(mu);
  std::iota(current.begin(), current.end(), 0);
  for (;;) {
    fam.family.sets.push_back(current);
    std::size_t j = 0;
    while (j + 1 < mu && current[j] + 1 == current[j + 1]) ++j;
    if (current[j] + 1 >= ground) break;
    ++current[j];
    std::iota(current.begin(), current.begin() + static_cast<std::ptrdiff_t>(j), 0);
  }
  return fam;
}

FamilyEnumeration FamilyEnumeration::sampled(std::size_t ground, std::size_t mu,
                                             std::size_t count, std::uint64_t seed) {
  if (mu == 0 || mu > ground) throw std::invalid_argument("member size out of range");
  FamilyEnumeration fam;
  fam.ground = ground;
  fam.mu = mu;
  fam.mode = FamilyMode::Sampled;
  fam.family.universeSize = ground;

  Rng rng = Rng::substream(seed, "family-sample");
  std::vector<std::size_t> deck(ground);
  for (std::size_t g = 0; g < count; ++g) {
    std::iota(deck.begin(), deck.end(), 0);
    for (std::size_t i = 0; i < mu; ++i)
      std::swap(deck[i], deck[i + rng.below(ground - i)]);
    std::vector<std::size_t> member(deck.begin(), deck.begin() + static_cast<std::ptrdiff_t>(mu));
    std::sort(member.begin(), member.end());
    fam.family.sets.push_back(std::move(member));
  }
  return fam;
}

FamilyEnumeration FamilyEnumeration::custom(std::size_t ground,
                                            std::vector<std::vector<std::size_t>> members) {
  FamilyEnumeration fam;
  fam.ground = ground;
  fam.mode = FamilyMode::Custom;
  fam.family.universeSize = ground;
  fam.family.sets = std::move(members);
  validateFamily(fam.family);
  fam.mu = fam.family.sets.empty() ? 0 : fam.family.sets.front().size();
  for (const auto& s : fam.family.sets)
    if (s.size() != fam.mu) throw std::invalid_argument("members must share one size");
  return fam;
}

std::vector<std::size_t> defaultThresholds(std::size_t memberCount, std::size_t colCount) {
  if (colCount == 0) throw std::invalid_argument("need at least one column");
  std::vector<std::size_t> thresholds(colCount);
  for (std::size_t beta = 0; beta < colCount; ++beta)
    thresholds[beta] = ((beta + 1) * memberCount + colCount - 1) / colCount;
  return thresholds;
}

void validateThresholds(const std::vector<std::size_t>& thresholds, std::size_t memberCount) {
  if (thresholds.empty()) throw std::invalid_argument("need at least one threshold");
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    if (i > 0 && thresholds[i] < thresholds[i - 1])
      throw std::invalid_argument("thresholds must be nondecreasing");
    if (thresholds[i] > memberCount) throw std::invalid_argument("threshold exceeds member count");
  }
  if (thresholds.back() != memberCount)
    throw std::invalid_argument("last threshold must equal the member count");
}

namespace {

BreakingFunction constantZero(std::size_t domainSize, std::size_t rangeSize) {
  BreakingFunction f;
  f.domainSize = domainSize;
  f.rangeTarget = rangeSize;
  f.values.assign(domainSize, 0);
  return f;
}

bool coversAll(const BreakingFunction& f, const SubsetFamily& prefix, std::size_t depth) {
  for (const auto& set : prefix.sets)
    if (!f.covers(set, depth)) return false;
  return true;
}

// Exhaustive lex-least assignment of values in [0, depth) to the constrained
// points, pruning members that cannot reach full coverage anymore. Complete:
// exhausting the tree proves no breaking function exists.
BreakingFunction lexLeastBreak(const SubsetFamily& prefix, std::size_t depth,
                               std::size_t rangeSize) {
  if (depth > 64) throw std::invalid_argument("depth too large for the search");

  std::vector<std::size_t> points;
  for (const auto& set : prefix.sets) points.insert(points.end(), set.begin(), set.end());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  std::vector<std::size_t> slotOf(prefix.universeSize, points.size());
  for (std::size_t i = 0; i < points.size(); ++i) slotOf[points[i]] = i;

  const std::uint64_t fullNeed = depth == 64 ? ~std::uint64_t{0}
                                             : (std::uint64_t{1} << depth) - 1;
  std::vector<std::uint64_t> need(prefix.sets.size(), fullNeed);
  std::vector<std::size_t> remaining(prefix.sets.size());
  std::vector<std::vector<std::size_t>> memberOf(points.size());
  for (std::size_t j = 0; j < prefix.sets.size(); ++j) {
    remaining[j] = prefix.sets[j].size();
    for (std::size_t x : prefix.sets[j]) memberOf[slotOf[x]].push_back(j);
  }

  std::vector<int> chosen(points.size(), -1);
  std::size_t nodes = 0;
  constexpr std::size_t kNodeBudget = std::size_t{1} << 22;

  std::vector<std::vector<std::uint64_t>> savedStack(points.size());

  const std::function<bool(std::size_t)> dfs = [&](std::size_t slot) -> bool {
    if (slot == points.size()) return true;
    if (++nodes > kNodeBudget)
      throw SelectionExhausted(-1, -1, "breaking search budget exhausted");
    auto& saved = savedStack[slot];
    saved.clear();
    for (std::size_t j : memberOf[slot]) saved.push_back(need[j]);
    for (int v = 0; v < static_cast<int>(depth); ++v) {
      chosen[slot] = v;
      bool feasible = true;
      for (std::size_t j : memberOf[slot]) {
        need[j] &= ~(std::uint64_t{1} << v);
        --remaining[j];
        if (static_cast<std::size_t>(std::popcount(need[j])) > remaining[j]) feasible = false;
      }
      if (feasible && dfs(slot + 1)) return true;
      std::size_t i = 0;
      for (std::size_t j : memberOf[slot]) {
        need[j] = saved[i++];
        ++remaining[j];
      }
    }
    chosen[slot] = -1;
    return false;
  };

  if (!dfs(0))
    throw SelectionExhausted(-1, -1, "no breaking function exists for this prefix");

  BreakingFunction f = constantZero(prefix.universeSize, rangeSize);
  for (std::size_t i = 0; i < points.size(); ++i) f.values[points[i]] = chosen[i];
  return f;
}

}  // namespace

BreakingFunction cascadeBreak(const SubsetFamily& prefix, std::size_t depth,
                              std::size_t rangeSize) {
  if (depth > rangeSize) throw std::invalid_argument("depth exceeds range");
  if (depth == 0 || prefix.sets.empty()) return constantZero(prefix.universeSize, rangeSize);

  for (std::size_t j = 0; j < prefix.sets.size(); ++j)
    if (prefix.sets[j].size() < depth)
      throw SelectionExhausted(static_cast<int>(j), -1,
                               "member too small to cover the requested depth");

  try {
    return depth == rangeSize ? kuratowskiBreak(prefix, rangeSize)
                              : prefixBreak(prefix, depth, rangeSize);
  } catch (const SelectionExhausted&) {
    // Fresh points ran out; shared witnesses may still work.
  }

  BreakingFunction residue = constantZero(prefix.universeSize, rangeSize);
  for (std::size_t x = 0; x < prefix.universeSize; ++x)
    residue.values[x] = static_cast<int>(x % depth);
  if (coversAll(residue, prefix, depth)) return residue;

  return lexLeastBreak(prefix, depth, rangeSize);
}

namespace {

SubsetFamily prefixFamily(const FamilyEnumeration& fam, std::size_t upTo) {
  SubsetFamily prefix;
  prefix.universeSize = fam.family.universeSize;
  prefix.sets.assign(fam.family.sets.begin(),
                     fam.family.sets.begin() + static_cast<std::ptrdiff_t>(upTo));
  return prefix;
}

Assembly assembleWith(const FamilyEnumeration& fam, std::size_t cols, std::size_t classCount,
                      const std::vector<std::size_t>& thresholds, const ColumnBreaker& breaker,
                      Variant variant) {
  if (cols == 0) throw std::invalid_argument("need at least one column");
  if (thresholds.size() != cols) throw std::invalid_argument("one threshold per column");
  validateThresholds(thresholds, fam.count());

  const ColumnBreaker fallback = [](const SubsetFamily& p, std::size_t d, std::size_t r,
                                    std::size_t) { return cascadeBreak(p, d, r); };
  const ColumnBreaker& use = breaker ? breaker : fallback;

  Assembly out;
  out.coloring = GridColoring(fam.ground, cols, classCount);
  out.schedule.colCount = cols;
  out.schedule.thresholds = thresholds;

  for (std::size_t beta = 0; beta < cols; ++beta) {
    const std::size_t depth = variant == Variant::Tau ? classCount : beta;
    SubsetFamily prefix = prefixFamily(fam, thresholds[beta]);
    BreakingFunction f;
    try {
      f = use(prefix, depth, classCount, beta);
    } catch (SelectionExhausted& e) {
      e.column = static_cast<int>(beta);
      throw;
    } catch (SplitterNotFound& e) {
      e.column = static_cast<int>(beta);
      throw;
    }
    if (f.domainSize != fam.ground || f.values.size() != fam.ground)
      throw InvariantBreach("column breaker returned a wrong domain");
    for (std::size_t alpha = 0; alpha < fam.ground; ++alpha) {
      const int v = f.values[alpha];
      if (v < 0 || static_cast<std::size_t>(v) >= classCount)
        throw InvariantBreach("column breaker returned an out-of-range value");
      out.coloring.assign(alpha, beta, v);
    }
    out.schedule.perColumn.push_back(std::move(f));
  }
  return out;
}

}  // namespace

Assembly assembleTau(const FamilyEnumeration& fam, std::size_t cols, std::size_t tau,
                     const std::vector<std::size_t>& thresholds, const ColumnBreaker& breaker) {
  if (tau == 0) throw std::invalid_argument("need at least one class");
  if (tau > fam.mu) throw std::invalid_argument("class count exceeds member size");
  return assembleWith(fam, cols, tau, thresholds, breaker, Variant::Tau);
}

Assembly assembleLambda(const FamilyEnumeration& fam, std::size_t cols,
                        const std::vector<std::size_t>& thresholds,
                        const ColumnBreaker& breaker) {
  return assembleWith(fam, cols, cols, thresholds, breaker, Variant::Lambda);
}

WitnessReport auditAssembly(const GridColoring& coloring, const FamilyEnumeration& fam,
                            const BreakSchedule& schedule, Variant variant) {
  if (coloring.rows != fam.ground || coloring.cols != schedule.colCount ||
      schedule.thresholds.size() != schedule.colCount)
    throw std::invalid_argument("inconsistent audit inputs");
  validateThresholds(schedule.thresholds, fam.count());

  WitnessReport report;

  for (std::size_t r = 0; r < coloring.rows; ++r)
    for (std::size_t c = 0; c < coloring.cols; ++c) {
      const int v = coloring.at(r, c);
      if (v < 0 || static_cast<std::size_t>(v) >= coloring.classCount) {
        report.add({"totality", static_cast<int>(c), -1, v,
                    "cell (" + std::to_string(r) + ", " + std::to_string(c) +
                        ") is unassigned or out of range"});
        return report;
      }
    }

  // Realized per-column breaking contract: the column's cells on each
  // scheduled member must cover the contracted prefix of classes.
  for (std::size_t beta = 0; beta < coloring.cols; ++beta) {
    const std::size_t depth = variant == Variant::Tau ? coloring.classCount : beta;
    for (std::size_t gamma = 0; gamma < schedule.thresholds[beta]; ++gamma) {
      std::vector<bool> seen(depth, false);
      std::size_t missing = depth;
      for (std::size_t alpha : fam.member(gamma)) {
        const int v = coloring.at(alpha, beta);
        if (static_cast<std::size_t>(v) < depth && !seen[v]) {
          seen[v] = true;
          --missing;
        }
      }
      if (missing > 0) {
        int firstMissing = 0;
        while (seen[firstMissing]) ++firstMissing;
        report.add({"breaking-contract", static_cast<int>(beta), static_cast<int>(gamma),
                    firstMissing, "column misses a contracted class on the member"});
        return report;
      }
    }
  }

  // Family-relative membership: each eligible class appears inside
  // A_gamma x {beta} for every column whose threshold passes gamma.
  for (std::size_t gamma = 0; gamma < fam.count(); ++gamma)
    for (std::size_t beta = 0; beta < coloring.cols; ++beta) {
      if (schedule.thresholds[beta] <= gamma) continue;
      const std::size_t xiEnd = variant == Variant::Tau ? coloring.classCount : beta;
      for (std::size_t xi = 0; xi < xiEnd; ++xi) {
        bool present = false;
        for (std::size_t alpha : fam.member(gamma))
          if (coloring.at(alpha, beta) == static_cast<int>(xi)) {
            present = true;
            break;
          }
        if (!present) {
          report.add({"class-membership", static_cast<int>(beta), static_cast<int>(gamma),
                      static_cast<int>(xi), "class absent from the member-column slice"});
          return report;
        }
      }
    }

  return report;
}

namespace {

std::size_t orDefault(std::size_t value, std::size_t fallback) {
  return value == 0 ? fallback : value;
}

ScenarioResult scenarioSquareLike(const ScenarioRequest& request, bool square) {
  const std::size_t rows = orDefault(request.rows, 4);
  const std::size_t cols = square ? orDefault(request.cols, rows) : orDefault(request.cols, rows + 2);
  if (square && cols != rows)
    throw std::invalid_argument("square scenario needs rows == cols");
  const std::size_t mu = orDefault(request.mu, rows - 1);
  const std::size_t tau = orDefault(request.tau, mu);

  ScenarioResult result;
  // Two members: the largest sampled family every pair of which is jointly
  // breakable onto tau <= mu classes at these sizes.
  result.fam = FamilyEnumeration::sampled(rows, mu, 2, request.seed);
  result.assembly =
      assembleTau(result.fam, cols, tau, defaultThresholds(result.fam.count(), cols));
  result.finalColoring = result.assembly.coloring;
  result.report =
      auditAssembly(result.assembly.coloring, result.fam, result.assembly.schedule, Variant::Tau);
  return result;
}

ScenarioResult scenarioCofinalLift(const ScenarioRequest& request) {
  const std::size_t rows = orDefault(request.rows, 4);
  const std::size_t sourceCols = orDefault(request.sourceCols, 2);
  const std::size_t cols = orDefault(request.cols, 4);
  const std::size_t mu = orDefault(request.mu, rows - 1);
  const std::size_t tau = orDefault(request.tau, 2);

  ScenarioResult result;
  result.fam = FamilyEnumeration::allSubsets(rows, mu);
  result.assembly = assembleTau(result.fam, sourceCols, tau,
                                defaultThresholds(result.fam.count(), sourceCols));
  result.report =
      auditAssembly(result.assembly.coloring, result.fam, result.assembly.schedule, Variant::Tau);

  BlockMap blocks = request.blocks ? *request.blocks : contiguousBlocks(sourceCols, cols);
  validateBlockMap(blocks);
  result.finalColoring = liftByCofinality(result.assembly.coloring, blocks);

  std::size_t maxBlock = 0;
  for (const auto& b : blocks.blocks) maxBlock = std::max(maxBlock, b.size());
  const std::size_t graded = maxBlock * (sourceCols - 1) + 1;

  for (std::size_t xi = 0; xi < tau; ++xi) {
    const auto cls = static_cast<int>(xi);
    if (!isThick(result.assembly.coloring.classCells(cls), {mu, sourceCols}).thick) {
      result.report.add({"source-thickness", -1, -1, cls,
                         "source class is not thick at the full column pick"});
      continue;
    }
    if (!isThick(result.finalColoring.classCells(cls), {mu, graded}).thick)
      result.report.add({"graded-thickness", -1, -1, cls,
                         "lifted class misses the graded rectangle bound"});
  }
  return result;
}

ScenarioResult scenarioUnsplitting(const ScenarioRequest& request) {
  if (!request.customFamily)
    throw std::invalid_argument("unsplitting scenario needs an explicit family");
  SubsetFamily base = *request.customFamily;
  validateFamily(base);
  if (request.rows != 0 && request.rows != base.universeSize)
    throw std::invalid_argument("rows must match the family universe");

  const std::size_t tau = orDefault(request.tau, 2);
  const std::size_t cols = orDefault(request.cols, 2);
  const std::uint64_t seed = request.seed;

  ScenarioResult result;
  result.fam = FamilyEnumeration::custom(base.universeSize, base.sets);

  const ColumnBreaker splitBreaker = [seed](const SubsetFamily& prefix, std::size_t depth,
                                            std::size_t, std::size_t column) {
    const std::uint64_t columnSeed =
        Rng::substream(seed, "unsplit-column-" + std::to_string(column)).next();
    return splitFamily(prefix, depth, columnSeed).second;
  };

  try {
    result.assembly = assembleTau(result.fam, cols, tau,
                                  defaultThresholds(result.fam.count(), cols), splitBreaker);
  } catch (const SplitterNotFound& e) {
    SplitterNotFound wrapped(e.round,
                             "unsplitting scenario: " + std::string(e.what()));
    wrapped.column = e.column;
    throw wrapped;
  }
  result.finalColoring = result.assembly.coloring;
  result.report =
      auditAssembly(result.assembly.coloring, result.fam, result.assembly.schedule, Variant::Tau);
  return result;
}

}  // namespace

ScenarioResult runScenario(const ScenarioRequest& request) {
  if (request.name == "square") return scenarioSquareLike(request, true);
  if (request.name == "rectangle") return scenarioSquareLike(request, false);
  if (request.name == "cofinal-lift") return scenarioCofinalLift(request);
  if (request.name == "unsplitting") return scenarioUnsplitting(request);
  throw std::invalid_argument("unknown scenario: " + request.name);
}

}  // namespace thickset
