#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "thickset/line_enum.hpp"
#include "thickset/rational.hpp"

namespace thickset {

// Sorting permutation of a tuple of enumeration indices: f(j) is the
// position (within the tuple) of the j-th smallest entry. Repeated entries
// have no order type.
std::optional<std::vector<std::size_t>> orderTypePermutation(
    const std::vector<BigInt>& indices);

// Lexicographic rank of a permutation of {0..k-1} among all k! of them.
std::uint64_t permutationRank(const std::vector<std::size_t>& perm);

std::uint64_t factorial(std::size_t k);

// Order-type class of the arity-tuple encoded by n: decode the tuple,
// entries are line indices already, rank the sorting permutation.
// nullopt when the tuple has repeats.
std::optional<std::uint64_t> orderTypeClass(std::size_t n, std::size_t arity);

// Same classification for an explicit rational point: coordinates are
// mapped back to their line indices first.
std::optional<std::uint64_t> orderTypeClassOfPoint(const std::vector<Rat>& point);

}  // namespace thickset
