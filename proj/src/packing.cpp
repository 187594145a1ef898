#include "bfc/packing.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "bfc/error.hpp"

namespace bfc {

namespace {

// blocks bucketed by lowest set bit; bucket[n] unused
using Buckets = std::array<std::vector<std::uint32_t>, 33>;

void fill_buckets(int n, std::span<const std::uint32_t> blocks, Buckets& by) {
  for (int i = 0; i <= n; ++i) by[i].clear();
  const std::uint32_t full = (n == 32) ? ~0u : ((std::uint32_t{1} << n) - 1);
  for (auto b : blocks) {
    if (b == 0 || (b & ~full))
      throw InputError("packing block empty or outside the universe");
    by[std::countr_zero(b)].push_back(b);
  }
}

}  // namespace

int max_set_packing_value(int n, std::span<const std::uint32_t> blocks,
                          std::vector<std::int8_t>& best) {
  Buckets by;
  fill_buckets(n, blocks, by);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  best[0] = 0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const int low = std::countr_zero(mask);
    std::int8_t v = best[mask & (mask - 1)];  // leave the low coordinate free
    for (auto b : by[low])
      if (!(b & ~mask)) v = std::max<std::int8_t>(v, 1 + best[mask & ~b]);
    best[mask] = v;
  }
  return best[full];
}

PackingResult max_set_packing(int n, std::span<const std::uint32_t> blocks) {
  std::vector<std::int8_t> best(std::size_t{1} << n);
  PackingResult result;
  result.count = max_set_packing_value(n, blocks, best);

  Buckets by;
  fill_buckets(n, blocks, by);
  std::uint32_t mask = (std::uint32_t{1} << n) - 1;
  while (mask != 0) {
    const int low = std::countr_zero(mask);
    if (best[mask] == best[mask & (mask - 1)]) {
      mask &= mask - 1;
      continue;
    }
    for (auto b : by[low])
      if (!(b & ~mask) && best[mask] == 1 + best[mask & ~b]) {
        result.chosen.push_back(b);
        mask &= ~b;
        break;
      }
  }
  return result;
}

}  // namespace bfc
