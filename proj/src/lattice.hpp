#pragma once

// Lattice of increment tuples used by the exhaustive oracle. A candidate is
// a tuple (m_1, ..., m_j) of positive integers with sum <= budget, listed in
// lexicographic order.

#include <cstdint>
#include <span>
#include <vector>

namespace tscale::lattice {

/// C(n, k) saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Number of tuples of length j with positive parts and sum <= budget.
inline std::uint64_t tuple_count(std::uint64_t budget, std::uint64_t j) {
  return j > budget ? 0 : binomial(budget, j);
}

/// Tuple at lexicographic position `index`.
void unrank(std::uint64_t index, std::uint64_t budget, std::span<std::uint64_t> out);

/// Advances to the lexicographic successor; false when `t` was the last one.
bool next(std::span<std::uint64_t> t, std::uint64_t budget);

}  // namespace tscale::lattice
