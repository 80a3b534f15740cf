#pragma once

#include <vector>

#include "atomshuttle/geometry.hpp"

namespace atomshuttle {

/// Prescribed row sums R and column sums C for an n x n binary matrix.
struct DegreeSpec {
  int n = 0;
  std::vector<int> row_sums;
  std::vector<int> col_sums;
};

/// Gale-Ryser test: with C' = C sorted non-increasing, a realization exists
/// iff sum(R) == sum(C) and, for every k in 1..n,
///   c'_1 + ... + c'_k <= sum_i min(r_i, k).
/// Throws RangeError if a sequence has the wrong length or an entry lies
/// outside 0..n.
bool gale_ryser_check(const DegreeSpec& spec);

/// Greedy Ryser construction. Columns are filled left to right; column j
/// takes one atom from each of the c_j rows with the largest remaining
/// demand, ties going to the lower row index. Throws InfeasibleError when
/// gale_ryser_check fails.
///
/// Rows are kept ordered by (remaining demand desc, row index asc); after a
/// column is filled the decremented prefix and untouched suffix are merged,
/// so each column costs O(n).
Geometry construct_geometry(const DegreeSpec& spec);

}  // namespace atomshuttle
