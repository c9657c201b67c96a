#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace thickset {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational, canonical form (reduced, positive denominator). All
// topology code computes with these; no floating point anywhere.
using Rat = boost::multiprecision::cpp_rational;

// Canonical "num/den" text, e.g. "-1/2", "5/1".
std::string ratToString(const Rat& x);

// Accepts "num/den" or a bare integer. Throws std::invalid_argument on junk
// or zero denominator.
Rat ratFromString(std::string_view s);

inline Rat ratAbs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

}  // namespace thickset
