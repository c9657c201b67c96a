#pragma once

#include <cstdint>
#include <utility>

#include "thickset/family.hpp"

namespace thickset {

// Diagonal fresh-point selection. Runs stages beta = 0..max(n, rangeSize)-1
// over the n family members; at stage beta, for each alpha <= beta, picks a
// globally fresh point of A_alpha valued (beta mod rangeSize) and, when
// A_beta exists and alpha < beta, a fresh point of A_beta valued
// (alpha mod rangeSize). Freshness takes the smallest unused universe index.
// Guarantees f[A_alpha] covers [0, rangeSize) for every member; throws
// SelectionExhausted when some member runs out of fresh points.
BreakingFunction kuratowskiBreak(const SubsetFamily& family, std::size_t rangeSize);

// Same selection, but values are written cyclically in [0, depth) and the
// declared range is rangeSize >= depth. Guarantees f[A_alpha] covers
// [0, depth). depth 0 yields the constant-0 function with no picks.
BreakingFunction prefixBreak(const SubsetFamily& family, std::size_t depth,
                             std::size_t rangeSize);

// Splitting recursion: pool starts as the whole universe; each round finds a
// splitter leaving both halves of every member-trace nonempty (at least
// budget.minSideSize elements each), carves off the complement as that
// round's piece, and recurses into the splitter. The returned function maps
// the round-n piece to value n (0 elsewhere), so every member covers
// [0, parts). Throws SplitterNotFound with the failing round.
std::pair<SplitTrace, BreakingFunction> splitFamily(const SubsetFamily& family,
                                                    std::size_t parts,
                                                    std::uint64_t seed,
                                                    const SplitBudget& budget = {});

}  // namespace thickset
