#pragma once

#include <functional>

#include "atomshuttle/geometry.hpp"
#include "atomshuttle/shift_op.hpp"

namespace atomshuttle {

enum class Axis { RowWise, ColumnWise };

/// Options shared by every 1D shuttling solve.
struct ShuttleOptions {
  /// Drop delivery columns (and then emptied delivery ops) whose target
  /// cells are already settled.
  bool peephole = true;
  /// Drop alignment ops whose row set is empty. Off by default so that the
  /// alignment phase always emits exactly n - 1 ops.
  bool prune_empty = false;
};

/// Called after each planned alignment op with the loop index x and the
/// geometry reached so far. Used by tests to check the induction invariant.
using AlignmentObserver = std::function<void(int x, const Geometry& current)>;

/// Each row's atoms packed into columns 1..r_i.
Geometry left_aligned_of(const Geometry& geom);

/// Leftward alignment. For x = n-1 down to 1 emits Left(I, {x+1..n}) with I
/// the rows whose column x is currently empty. Always n - 1 ops; applying
/// the plan to `geom` yields left_aligned_of(geom).
Plan plan_left_alignment(const Geometry& geom, const AlignmentObserver& observer = {});

/// Rightward delivery. For x = 1 to n-1 emits Right(I, {x..n-1}) with I the
/// rows where target column x is empty. Always n - 1 ops; applied to
/// left_aligned_of(target) the plan produces target.
Plan plan_rightward_delivery(const Geometry& target);

/// Removes delivery columns j for which every row either keeps an atom at j
/// in the target or has already received all of its target atoms by column
/// j. Ops left with an empty row or column set are dropped.
///
/// The pruned plan is replayed from left_aligned_of(target). A pruned op
/// that collides during replay is restored to its original column set.
/// Throws PruneVerificationError if the replay still misses the target.
Plan peephole_prune(const Plan& delivery, const Geometry& target);

/// Alignment followed by delivery. RowWise requires equal per-row sums;
/// ColumnWise requires equal per-column sums and is solved in rotated
/// space. Throws PreconditionError on mismatched sums or sizes.
Plan solve_1d(const Geometry& initial, const Geometry& target, Axis axis, const ShuttleOptions& options = {});

}  // namespace atomshuttle
