#include "atomshuttle/gale_ryser.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "atomshuttle/errors.hpp"

namespace atomshuttle {

namespace {

void check_spec(const DegreeSpec& spec) {
  const int n = spec.n;
  if (n < 0) throw RangeError("matrix side must be non-negative");
  if (static_cast<int>(spec.row_sums.size()) != n || static_cast<int>(spec.col_sums.size()) != n)
    throw RangeError("row and column sums must both have length " + std::to_string(n));
  auto in_range = [n](int v) { return v >= 0 && v <= n; };
  if (!std::all_of(spec.row_sums.begin(), spec.row_sums.end(), in_range) ||
      !std::all_of(spec.col_sums.begin(), spec.col_sums.end(), in_range))
    throw RangeError("row and column sums must lie within 0.." + std::to_string(n));
}

}  // namespace

bool gale_ryser_check(const DegreeSpec& spec) {
  check_spec(spec);
  const int n = spec.n;
  const long total_r = std::accumulate(spec.row_sums.begin(), spec.row_sums.end(), 0L);
  const long total_c = std::accumulate(spec.col_sums.begin(), spec.col_sums.end(), 0L);
  if (total_r != total_c) return false;

  std::vector<int> sorted_c = spec.col_sums;
  std::sort(sorted_c.begin(), sorted_c.end(), std::greater<>());

  // rows_at_least[k] = #{i : r_i >= k}
  std::vector<int> rows_at_least(n + 2, 0);
  for (int r : spec.row_sums) ++rows_at_least[r];
  for (int k = n - 1; k >= 0; --k) rows_at_least[k] += rows_at_least[k + 1];

  long lhs = 0;
  long rhs = 0;  // sum_i min(r_i, k)
  for (int k = 1; k <= n; ++k) {
    lhs += sorted_c[k - 1];
    rhs += rows_at_least[k];
    if (lhs > rhs) return false;
  }
  return true;
}

Geometry construct_geometry(const DegreeSpec& spec) {
  if (!gale_ryser_check(spec)) throw InfeasibleError("row and column sums admit no binary matrix");
  const int n = spec.n;
  Geometry geom(n);

  std::vector<int> remaining = spec.row_sums;
  auto before = [&remaining](int a, int b) {
    if (remaining[a] != remaining[b]) return remaining[a] > remaining[b];
    return a < b;
  };
  // 0-based row indices ordered by (remaining desc, index asc)
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), before);

  std::vector<int> merged(n);
  for (int j = 1; j <= n; ++j) {
    const int take = spec.col_sums[j - 1];
    for (int k = 0; k < take; ++k) {
      const int row = order[k];
      if (remaining[row] == 0) throw std::logic_error("greedy construction ran out of row demand");
      geom.set(row + 1, j, true);
      --remaining[row];
    }
    std::merge(order.begin(), order.begin() + take, order.begin() + take, order.end(), merged.begin(), before);
    order.swap(merged);
  }
  return geom;
}

}  // namespace atomshuttle
