#include "thickset/rational.hpp"

#include <stdexcept>

namespace thickset {

std::string ratToString(const Rat& x) {
  return numerator(x).str() + "/" + denominator(x).str();
}

Rat ratFromString(std::string_view s) {
  const auto bad = [&] {
    throw std::invalid_argument("not a rational: '" + std::string(s) + "'");
  };
  if (s.empty()) bad();
  const auto slash = s.find('/');
  const auto parseInt = [&](std::string_view part) -> BigInt {
    if (part.empty()) bad();
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) bad();
    for (std::size_t j = i; j < part.size(); ++j)
      if (part[j] < '0' || part[j] > '9') bad();
    return BigInt(std::string(part));
  };
  BigInt num = parseInt(slash == std::string_view::npos ? s : s.substr(0, slash));
  BigInt den = 1;
  if (slash != std::string_view::npos) den = parseInt(s.substr(slash + 1));
  if (den == 0) bad();
  if (den < 0) {  // the backing type insists on positive denominators
    den = -den;
    num = -num;
  }
  return Rat(num, den);
}

}  // namespace thickset
