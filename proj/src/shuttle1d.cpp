#include "atomshuttle/shuttle1d.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "atomshuttle/errors.hpp"
#include "bits.hpp"

namespace atomshuttle {

namespace {

std::vector<int> column_range(int first, int last) {
  std::vector<int> cols;
  if (last >= first) {
    cols.resize(last - first + 1);
    std::iota(cols.begin(), cols.end(), first);
  }
  return cols;
}

// settled[j] (1-based): every row either keeps an atom at column j in the
// target or has no target atoms right of j.
std::vector<bool> settled_columns(const Geometry& target) {
  const int n = target.size();
  std::vector<bool> unsettled(n + 1, false);
  for (int i = 1; i <= n; ++i) {
    const auto row = target.row_words(i);
    int last = 0;
    detail::for_each_set_bit(row, [&](int j) { last = j; });
    for (int j = 1; j < last; ++j)
      if (!detail::test_bit(row, j)) unsettled[j] = true;
  }
  std::vector<bool> settled(n + 1);
  for (int j = 1; j <= n; ++j) settled[j] = !unsettled[j];
  return settled;
}

Plan solve_row_wise(const Geometry& initial, const Geometry& target, const ShuttleOptions& options) {
  if (row_sums(initial) != row_sums(target))
    throw PreconditionError("row-wise shuttling needs equal per-row atom counts");

  Plan alignment = plan_left_alignment(initial);
  if (options.prune_empty)
    std::erase_if(alignment.ops, [](const ShiftOp& op) { return op.rows.empty(); });

  Plan delivery = plan_rightward_delivery(target);
  if (options.peephole) {
    try {
      delivery = peephole_prune(delivery, target);
    } catch (const PruneVerificationError&) {
      // keep the unpruned delivery
    }
  }
  return alignment.then(delivery);
}

}  // namespace

Geometry left_aligned_of(const Geometry& geom) {
  const int n = geom.size();
  Geometry out(n);
  for (int i = 1; i <= n; ++i) {
    const int count = geom.row_count(i);
    for (int j = 1; j <= count; ++j) out.set(i, j, true);
  }
  return out;
}

Plan plan_left_alignment(const Geometry& geom, const AlignmentObserver& observer) {
  const int n = geom.size();
  Plan plan;
  if (n < 2) return plan;
  plan.ops.reserve(n - 1);
  Geometry current = geom;
  for (int x = n - 1; x >= 1; --x) {
    ShiftOp op{Direction::Left, {}, column_range(x + 1, n)};
    for (int i = 1; i <= n; ++i)
      if (!detail::test_bit(current.row_words(i), x)) op.rows.push_back(i);
    current = apply_op(current, op);
    plan.ops.push_back(std::move(op));
    if (observer) observer(x, current);
  }
  return plan;
}

Plan plan_rightward_delivery(const Geometry& target) {
  const int n = target.size();
  Plan plan;
  if (n < 2) return plan;
  plan.ops.reserve(n - 1);
  for (int x = 1; x <= n - 1; ++x) {
    ShiftOp op{Direction::Right, {}, column_range(x, n - 1)};
    for (int i = 1; i <= n; ++i)
      if (!detail::test_bit(target.row_words(i), x)) op.rows.push_back(i);
    plan.ops.push_back(std::move(op));
  }
  return plan;
}

Plan peephole_prune(const Plan& delivery, const Geometry& target) {
  const int n = target.size();
  if (static_cast<int>(delivery.size()) != std::max(n - 1, 0) ||
      std::any_of(delivery.ops.begin(), delivery.ops.end(), [](const ShiftOp& op) { return op.dir != Direction::Right; }))
    throw std::invalid_argument("peephole_prune expects an unpruned rightward delivery plan");

  const auto settled = settled_columns(target);
  Plan pruned;
  Geometry current = left_aligned_of(target);
  for (const ShiftOp& op : delivery.ops) {
    ShiftOp candidate{op.dir, op.rows, {}};
    for (int j : op.cols)
      if (!settled[j]) candidate.cols.push_back(j);
    if (candidate.moves_nothing()) continue;
    try {
      current = apply_op(current, candidate);
      pruned.ops.push_back(std::move(candidate));
    } catch (const MoveError&) {
      // Removing an occupied column from the middle of a moving block
      // splits it; restore the full column set for this op.
      try {
        current = apply_op(current, op);
      } catch (const MoveError& e) {
        throw PruneVerificationError(std::string("delivery op failed during replay: ") + e.what());
      }
      pruned.ops.push_back(op);
    }
  }
  if (current != target) throw PruneVerificationError("pruned delivery does not reproduce the target");
  return pruned;
}

Plan solve_1d(const Geometry& initial, const Geometry& target, Axis axis, const ShuttleOptions& options) {
  if (initial.size() != target.size()) throw PreconditionError("initial and target geometries differ in size");
  if (axis == Axis::RowWise) return solve_row_wise(initial, target, options);

  if (col_sums(initial) != col_sums(target))
    throw PreconditionError("column-wise shuttling needs equal per-column atom counts");
  const Plan rotated = solve_row_wise(rotate90(initial), rotate90(target), options);
  return unrotate_plan(rotated, initial.size());
}

}  // namespace atomshuttle
