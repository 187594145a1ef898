#pragma once

#include <vector>

#include "bfc/rational.hpp"

namespace bfc {

struct SimplexResult {
  Rational objective;            // optimal value of min c^T x
  std::vector<Rational> primal;  // x over the real columns
  std::vector<Rational> duals;   // y = c_B B^{-1}, one per input row
                                 // (zero for rows dropped as redundant)
};

/// Exact-rational primal simplex: min c^T x subject to A x = b, x >= 0.
///
/// `columns[j]` is the j-th column of A; `rhs` must be componentwise
/// nonnegative. `initial_basis_col[r]` names a real column whose column
/// vector is the r-th unit vector (a slack already in place), or -1 to start
/// the row on an internal artificial variable; such rows must have rhs 0, and
/// the artificials are pivoted out (or the row dropped as redundant) before
/// the cost loop starts, so every iterate satisfies A x = b exactly.
///
/// Bland's least-index rule picks both the entering column and the leaving
/// row among ratio ties, so the method terminates and is deterministic.
/// Unbounded problems throw std::logic_error; callers arrange boundedness.
SimplexResult simplex_min(const std::vector<std::vector<Rational>>& columns,
                          const std::vector<Rational>& costs,
                          const std::vector<Rational>& rhs,
                          const std::vector<int>& initial_basis_col);

}  // namespace bfc
