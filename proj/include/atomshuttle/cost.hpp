#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "atomshuttle/geometry.hpp"
#include "atomshuttle/shift_op.hpp"

namespace atomshuttle {

/// Timing constants in microseconds: t1 per capture/release cycle, t2 per
/// unit of transportation cost.
struct CostParams {
  double t1 = 120.0;
  double t2 = 35.0;
};

/// Throws std::invalid_argument unless both times are strictly positive.
void check_params(const CostParams& params);

enum class CostModel { Linear, Sqrt };

const char* to_string(CostModel model) noexcept;
CostModel cost_model_from_string(std::string_view text);

/// One relay move of a general tweezer operation. The destination sequences
/// are aligned with the tweezer's current (sorted) rows and columns: the
/// k-th current row goes to row_dest[k].
struct Move {
  std::vector<int> row_dest;
  std::vector<int> col_dest;

  bool operator==(const Move&) const = default;
};

/// General operation (I0, J0, moves). Captures every atom on rows0 x cols0
/// and carries it through each move in turn. All indices are 1-based.
struct GeneralOp {
  std::vector<int> rows0;
  std::vector<int> cols0;
  std::vector<Move> moves;

  bool operator==(const GeneralOp&) const = default;
};

/// F = |p| (t1 + t2).
double cost_simple(const Plan& plan, const CostParams& params);

/// Checks a general op against the geometry it acts on:
///  - Bounds: index sets strictly increasing and inside 1..n, destination
///    sequences sized like the tweezer, at least one move;
///  - Order: each move keeps rows and columns strictly increasing;
///  - Collision: no loaded tweezer spot ever visits an occupied site
///    outside rows0 x cols0.
/// Throws ConstraintError naming the first failing move.
void validate_general_op(const Geometry& geom, const GeneralOp& op);

/// Carries the captured atoms to their final sites. Assumes validity.
Geometry execute_general_op(const Geometry& geom, const GeneralOp& op);

/// Largest displacement of any tweezer spot during move m (1-based),
/// sqrt(max row shift^2 + max column shift^2). An axis with no tweezer
/// lines contributes 0.
double move_distance(const GeneralOp& op, int m);

/// T(op): sum of move distances (Linear) or of their square roots (Sqrt).
double op_cost(const GeneralOp& op, CostModel model);

/// Each shift becomes a single unit move along the shift axis.
std::vector<GeneralOp> lift_simple_to_general(const Plan& plan);

/// F' = |p| t1 + sum_k T(op_k) t2. When `initial` is given, every op is
/// validated against the evolving geometry and ConstraintError propagates.
double cost_general(std::span<const GeneralOp> ops, const CostParams& params, CostModel model,
                    const std::optional<Geometry>& initial = std::nullopt);

/// Sum of T over the ops (the total transportation cost).
double total_transport_cost(std::span<const GeneralOp> ops, CostModel model);

struct PlanMetrics {
  long op_count = 0;
  double total_transport_cost = 0.0;
  double estimated_time_us = 0.0;
  double avg_atoms_per_op = 0.0;
  double avg_distance_per_atom = 0.0;
  double avg_ops_per_atom = 0.0;
  double planning_time_us = 0.0;
  /// Sum over ops of atoms displaced; kept for bookkeeping checks.
  long total_atom_moves = 0;
};

/// Replays the plan on `initial`, following every atom by its starting
/// site. Averages over an empty plan or an empty geometry are 0.
/// planning_time_us is left at 0 for the caller to fill in.
PlanMetrics plan_metrics(const Geometry& initial, const Plan& plan, const CostParams& params);

}  // namespace atomshuttle
