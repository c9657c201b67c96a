#include "thickset/breakers.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "thickset/errors.hpp"
#include "thickset/rng.hpp"

namespace thickset {

void validateFamily(const SubsetFamily& family) {
  for (const auto& set : family.sets) {
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (set[i] >= family.universeSize)
        throw std::invalid_argument("family member leaves the universe");
      if (i > 0 && set[i] <= set[i - 1])
        throw std::invalid_argument("family member not strictly ascending");
    }
  }
}

bool BreakingFunction::covers(const std::vector<std::size_t>& set, std::size_t upTo) const {
  std::vector<bool> seen(upTo, false);
  std::size_t remaining = upTo;
  for (std::size_t x : set) {
    const int v = values[x];
    if (v >= 0 && static_cast<std::size_t>(v) < upTo && !seen[v]) {
      seen[v] = true;
      if (--remaining == 0) return true;
    }
  }
  return remaining == 0;
}

namespace {

// Shared selection core for the two diagonal breakers. valueAt maps the
// stage pair to the written value.
template <typename ValueOf>
BreakingFunction diagonalSelect(const SubsetFamily& family, std::size_t stages,
                                std::size_t rangeTarget, ValueOf valueOf) {
  const std::size_t n = family.sets.size();
  BreakingFunction f;
  f.domainSize = family.universeSize;
  f.rangeTarget = rangeTarget;
  f.values.assign(family.universeSize, 0);
  std::vector<bool> used(family.universeSize, false);

  const auto pickFresh = [&](std::size_t setIdx, std::size_t stage) -> std::size_t {
    for (std::size_t x : family.sets[setIdx]) {
      if (!used[x]) {
        used[x] = true;
        return x;
      }
    }
    throw SelectionExhausted(static_cast<int>(setIdx), static_cast<int>(stage),
                             "no fresh point left in member " + std::to_string(setIdx) +
                                 " at stage " + std::to_string(stage));
  };

  for (std::size_t beta = 0; beta < stages; ++beta) {
    const std::size_t alphaEnd = std::min(beta, n == 0 ? 0 : n - 1);
    for (std::size_t alpha = 0; alpha <= alphaEnd; ++alpha) {
      f.values[pickFresh(alpha, beta)] = valueOf(beta);
      if (beta < n && alpha < beta) f.values[pickFresh(beta, beta)] = valueOf(alpha);
    }
  }
  return f;
}

std::vector<std::size_t> wordsToElements(const std::vector<std::uint64_t>& words,
                                         const std::vector<std::size_t>& pool, bool inside) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < pool.size(); ++p) {
    const bool bit = (words[p / 64] >> (p % 64)) & 1u;
    if (bit == inside) out.push_back(pool[p]);
  }
  return out;
}

}  // namespace

BreakingFunction kuratowskiBreak(const SubsetFamily& family, std::size_t rangeSize) {
  validateFamily(family);
  if (family.sets.empty()) throw std::invalid_argument("family is empty");
  if (rangeSize == 0) throw std::invalid_argument("rangeSize must be positive");
  const std::size_t stages = std::max(family.sets.size(), rangeSize);
  return diagonalSelect(family, stages, rangeSize,
                        [&](std::size_t beta) { return static_cast<int>(beta % rangeSize); });
}

BreakingFunction prefixBreak(const SubsetFamily& family, std::size_t depth,
                             std::size_t rangeSize) {
  validateFamily(family);
  if (depth > rangeSize) throw std::invalid_argument("depth exceeds range");
  if (depth == 0) {
    BreakingFunction f;
    f.domainSize = family.universeSize;
    f.rangeTarget = rangeSize;
    f.values.assign(family.universeSize, 0);
    return f;
  }
  if (family.sets.empty()) throw std::invalid_argument("family is empty");
  const std::size_t stages = std::max(family.sets.size(), depth);
  return diagonalSelect(family, stages, rangeSize,
                        [&](std::size_t beta) { return static_cast<int>(beta % depth); });
}

std::pair<SplitTrace, BreakingFunction> splitFamily(const SubsetFamily& family,
                                                    std::size_t parts,
                                                    std::uint64_t seed,
                                                    const SplitBudget& budget) {
  validateFamily(family);
  for (const auto& set : family.sets)
    if (set.empty()) throw std::invalid_argument("family member is empty");

  SplitTrace trace;
  BreakingFunction f;
  f.domainSize = family.universeSize;
  f.rangeTarget = parts;
  f.values.assign(family.universeSize, 0);

  std::vector<std::size_t> pool(family.universeSize);
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;

  for (std::size_t round = 0; round < parts; ++round) {
    if (family.sets.empty()) {
      // Vacuous: keep everything live, carve off nothing.
      trace.rounds.push_back({pool, pool, {}});
      continue;
    }

    // Member-traces as bit positions inside the pool.
    std::vector<std::size_t> posOf(family.universeSize, family.universeSize);
    for (std::size_t p = 0; p < pool.size(); ++p) posOf[pool[p]] = p;
    const std::size_t w = (pool.size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> traceWords;
    std::vector<std::size_t> traceSizes;
    for (const auto& set : family.sets) {
      std::vector<std::uint64_t> tw(w, 0);
      std::size_t count = 0;
      for (std::size_t x : set) {
        const std::size_t p = posOf[x];
        if (p < pool.size()) {
          tw[p / 64] |= std::uint64_t{1} << (p % 64);
          ++count;
        }
      }
      if (count == 0)
        throw SplitterNotFound(static_cast<int>(round),
                               "a member-trace is already empty at round " +
                                   std::to_string(round));
      traceWords.push_back(std::move(tw));
      traceSizes.push_back(count);
    }

    // Worst-off trace decides a candidate's score: the smaller side of its
    // split. Maximizing it keeps later rounds viable.
    const auto score = [&](const std::vector<std::uint64_t>& cand) {
      std::size_t best = pool.size();
      for (std::size_t t = 0; t < traceWords.size(); ++t) {
        std::size_t in = 0;
        for (std::size_t i = 0; i < w; ++i)
          in += static_cast<std::size_t>(std::popcount(traceWords[t][i] & cand[i]));
        best = std::min(best, std::min(in, traceSizes[t] - in));
        if (best == 0) break;
      }
      return best;
    };

    std::vector<std::uint64_t> bestCand(w, 0);
    std::size_t bestScore = 0;
    if (pool.size() <= budget.exhaustiveBits) {
      const std::uint64_t limit = std::uint64_t{1} << pool.size();
      for (std::uint64_t mask = 0; mask < limit; ++mask) {
        const std::vector<std::uint64_t> cand{mask};
        const std::size_t s = score(cand);
        if (s > bestScore) {
          bestScore = s;
          bestCand = cand;
        }
      }
    } else {
      // Per-round sub-seed keeps rounds independent of one another's draw
      // counts, so serial and parallel evaluation agree.
      Rng rng = Rng::substream(seed, "split-round-" + std::to_string(round));
      for (std::size_t trial = 0; trial < budget.randomTrials; ++trial) {
        std::vector<std::uint64_t> cand(w);
        for (auto& word : cand) word = rng.next();
        if (pool.size() % 64 != 0)
          cand.back() &= (std::uint64_t{1} << (pool.size() % 64)) - 1;
        const std::size_t s = score(cand);
        if (s > bestScore) {
          bestScore = s;
          bestCand = cand;
        }
      }
    }

    if (bestScore < budget.minSideSize)
      throw SplitterNotFound(static_cast<int>(round),
                             "no splitter found at round " + std::to_string(round));

    SplitRound r;
    r.pool = pool;
    r.splitter = wordsToElements(bestCand, pool, true);
    r.piece = wordsToElements(bestCand, pool, false);
    for (std::size_t x : r.piece) f.values[x] = static_cast<int>(round);
    pool = r.splitter;
    trace.rounds.push_back(std::move(r));
  }

  trace.residual = pool;
  return {std::move(trace), std::move(f)};
}

}  // namespace thickset
