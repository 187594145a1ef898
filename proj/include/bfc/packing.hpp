#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace bfc {

struct PackingResult {
  int count = 0;
  std::vector<std::uint32_t> chosen;  // pairwise disjoint, ascending low bit
};

/// Exact maximum pairwise-disjoint packing of the given bitmask blocks inside
/// the universe [0, n). Subset dynamic program bucketed by lowest set bit;
/// O(2^n + sum over masks of matching blocks). Deterministic: the
/// reconstructed witness always takes the first maximizing block in input
/// order.
PackingResult max_set_packing(int n, std::span<const std::uint32_t> blocks);

/// Scratch-reusing variant: `best` must have size 2^n; it is overwritten.
int max_set_packing_value(int n, std::span<const std::uint32_t> blocks,
                          std::vector<std::int8_t>& best);

}  // namespace bfc
