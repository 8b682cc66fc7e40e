#include "lattice.hpp"

#include <limits>
#include <numeric>

namespace tscale::lattice {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i, reduced first to stay exact.
    std::uint64_t num = n - k + i, den = i;
    const std::uint64_t g = std::gcd(r, den);
    r /= g;
    den /= g;
    num /= den;
    if (r > kMax / num) return kMax;
    r *= num;
  }
  return r;
}

void unrank(std::uint64_t index, std::uint64_t budget, std::span<std::uint64_t> out) {
  std::uint64_t remaining = budget;
  for (std::size_t p = 0; p < out.size(); ++p) {
    const std::uint64_t tail = out.size() - p - 1;
    std::uint64_t m = 1;
    for (;; ++m) {
      const std::uint64_t block = tuple_count(remaining - m, tail);
      if (index < block) break;
      index -= block;
    }
    out[p] = m;
    remaining -= m;
  }
}

bool next(std::span<std::uint64_t> t, std::uint64_t budget) {
  for (std::size_t p = t.size(); p-- > 0;) {
    // Raise t[p] by one and reset everything after it to 1.
    const std::uint64_t tail = t.size() - p - 1;
    std::uint64_t prefix = 0;
    for (std::size_t q = 0; q < p; ++q) prefix += t[q];
    if (prefix + t[p] + 1 + tail <= budget) {
      ++t[p];
      for (std::size_t q = p + 1; q < t.size(); ++q) t[q] = 1;
      return true;
    }
  }
  return false;
}

}  // namespace tscale::lattice
