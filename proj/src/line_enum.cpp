#include "thickset/line_enum.hpp"

#include <stdexcept>

#include "thickset/errors.hpp"

namespace thickset {

namespace {

// floor of a nonnegative rational.
BigInt ratFloor(const Rat& x) {
  BigInt num = boost::multiprecision::numerator(x);
  BigInt den = boost::multiprecision::denominator(x);
  return num / den;
}

}  // namespace

Rat calkinWilf(std::size_t k) {
  if (k == 0) throw std::invalid_argument("calkinWilf: index starts at 1");
  static thread_local std::vector<Rat> cache{Rat(1)};
  while (cache.size() < k) {
    const Rat& prev = cache.back();
    Rat next = Rat(1) / (Rat(2 * ratFloor(prev)) - prev + 1);
    cache.push_back(next);
  }
  return cache[k - 1];
}

BigInt calkinWilfIndex(const Rat& x) {
  BigInt a = boost::multiprecision::numerator(x);
  BigInt b = boost::multiprecision::denominator(x);
  if (a <= 0) throw std::invalid_argument("calkinWilfIndex: need a positive rational");
  // Walk from a/b up to 1/1, recording tree steps in batches: a right child
  // subtracts the denominator (bit 1), a left child subtracts the numerator
  // from the denominator (bit 0). Bits accumulate least-significant first.
  std::vector<bool> bits;
  while (!(a == 1 && b == 1)) {
    if (a > b) {
      BigInt k;
      if (b == 1) k = a - 1; else k = a / b;
      for (BigInt i = 0; i < k; ++i) bits.push_back(true);
      a -= k * b;
    } else {
      BigInt k;
      if (a == 1) k = b - 1; else k = b / a;
      for (BigInt i = 0; i < k; ++i) bits.push_back(false);
      b -= k * a;
    }
  }
  BigInt n = 1;
  for (auto it = bits.rbegin(); it != bits.rend(); ++it) {
    n = 2 * n + (*it ? 1 : 0);
  }
  return n;
}

Rat LineEnumeration::value(std::size_t index) {
  if (index == 0) return Rat(0);
  std::size_t k = (index + 1) / 2;  // odd 2k-1 and even 2k both map to cw(k)
  while (cache_.size() < k) {
    if (cache_.empty()) {
      cache_.push_back(Rat(1));
    } else {
      const Rat& prev = cache_.back();
      cache_.push_back(Rat(1) / (Rat(2 * ratFloor(prev)) - prev + 1));
    }
  }
  if (index % 2 == 1) return cache_[k - 1];
  return -cache_[k - 1];
}

BigInt LineEnumeration::indexOf(const Rat& x) const {
  if (x == 0) return BigInt(0);
  if (x > 0) return 2 * calkinWilfIndex(x) - 1;
  return 2 * calkinWilfIndex(-x);
}

std::size_t pairIndex(std::size_t x, std::size_t y) {
  std::size_t s = x + y;
  return s * (s + 1) / 2 + x;
}

std::pair<std::size_t, std::size_t> unpairIndex(std::size_t n) {
  // Largest w with w(w+1)/2 <= n.
  std::size_t w = 0;
  while ((w + 1) * (w + 2) / 2 <= n) ++w;
  std::size_t x = n - w * (w + 1) / 2;
  return {x, w - x};
}

std::vector<std::size_t> tupleAt(std::size_t n, std::size_t arity) {
  if (arity == 0) throw std::invalid_argument("tupleAt: arity must be positive");
  std::vector<std::size_t> out;
  out.reserve(arity);
  while (arity > 1) {
    auto [head, tail] = unpairIndex(n);
    out.push_back(head);
    n = tail;
    --arity;
  }
  out.push_back(n);
  return out;
}

std::pair<Rat, Rat> GridEnumeration::point(std::size_t n) {
  auto [xi, yi] = unpairIndex(n);
  Rat x = line_.value(xi);
  Rat y = line_.value(yi);
  return {x, y};
}

}  // namespace thickset
