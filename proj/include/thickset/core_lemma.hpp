#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "thickset/family.hpp"
#include "thickset/grid.hpp"
#include "thickset/report.hpp"

namespace thickset {

enum class FamilyMode { All, Sampled, Custom };

// Indexed list A_0..A_{G-1} of equal-sized subsets of the ground segment.
// The assembly walks prefixes of this list, so the order is part of the data;
// all-subsets mode fixes it to colexicographic.
struct FamilyEnumeration {
  std::size_t ground = 0;
  std::size_t mu = 0;
  FamilyMode mode = FamilyMode::Custom;
  SubsetFamily family;

  std::size_t count() const { return family.sets.size(); }
  const std::vector<std::size_t>& member(std::size_t g) const { return family.sets[g]; }

  // Every mu-subset of [ground] in colexicographic order.
  static FamilyEnumeration allSubsets(std::size_t ground, std::size_t mu);
  // count random mu-subsets, seeded; repeats are possible.
  static FamilyEnumeration sampled(std::size_t ground, std::size_t mu, std::size_t count,
                                   std::uint64_t seed);
  // Explicit members; all must share one size.
  static FamilyEnumeration custom(std::size_t ground,
                                  std::vector<std::vector<std::size_t>> members);
};

// Per-column plan: column beta must break every member before thresholds[beta].
struct BreakSchedule {
  std::size_t colCount = 0;
  std::vector<std::size_t> thresholds;
  std::vector<BreakingFunction> perColumn;
};

// ceil((beta+1) * memberCount / colCount): nondecreasing, ends at memberCount.
std::vector<std::size_t> defaultThresholds(std::size_t memberCount, std::size_t colCount);

// Throws std::invalid_argument unless nondecreasing and ending at memberCount.
void validateThresholds(const std::vector<std::size_t>& thresholds, std::size_t memberCount);

// Supplies column beta's function: image on every prefix member must contain
// [0, depth), values stay below rangeSize.
using ColumnBreaker = std::function<BreakingFunction(
    const SubsetFamily& prefix, std::size_t depth, std::size_t rangeSize, std::size_t column)>;

// Default column pipeline: diagonal greedy selection, then the residue map
// x -> x mod depth checked against the prefix, then an exhaustive lex-least
// search. Throws SelectionExhausted when no function exists (or the search
// budget runs out).
BreakingFunction cascadeBreak(const SubsetFamily& prefix, std::size_t depth,
                              std::size_t rangeSize);

struct Assembly {
  GridColoring coloring;
  BreakSchedule schedule;
};

// Grid cell (alpha, beta) gets class f_beta(alpha); every f_beta maps each
// prefix member onto all tau classes. Throws SelectionExhausted with the
// failing column recorded.
Assembly assembleTau(const FamilyEnumeration& fam, std::size_t cols, std::size_t tau,
                     const std::vector<std::size_t>& thresholds,
                     const ColumnBreaker& breaker = {});

// Prefix-depth variant: column beta's image on each prefix member contains
// [0, beta); classes number at most cols.
Assembly assembleLambda(const FamilyEnumeration& fam, std::size_t cols,
                        const std::vector<std::size_t>& thresholds,
                        const ColumnBreaker& breaker = {});

enum class Variant { Tau, Lambda };

// Checks totality, the per-column breaking contract on the realized coloring,
// and family-relative class membership; reports the first violation found.
WitnessReport auditAssembly(const GridColoring& coloring, const FamilyEnumeration& fam,
                            const BreakSchedule& schedule, Variant variant);

// End-to-end presets. Unset size fields take per-scenario defaults.
struct ScenarioRequest {
  std::string name;  // square | rectangle | cofinal-lift | unsplitting
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t mu = 0;
  std::size_t tau = 0;
  std::size_t sourceCols = 0;                     // cofinal-lift only
  std::optional<BlockMap> blocks;                 // cofinal-lift only
  std::optional<SubsetFamily> customFamily;       // unsplitting only
  std::uint64_t seed = 0;
};

struct ScenarioResult {
  FamilyEnumeration fam;
  Assembly assembly;
  GridColoring finalColoring;  // lifted grid for cofinal-lift, else the assembly's
  WitnessReport report;
};

ScenarioResult runScenario(const ScenarioRequest& request);

}  // namespace thickset
