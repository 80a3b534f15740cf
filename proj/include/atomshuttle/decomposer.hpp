#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "atomshuttle/geometry.hpp"
#include "atomshuttle/instance.hpp"
#include "atomshuttle/shift_op.hpp"
#include "atomshuttle/shuttle1d.hpp"

namespace atomshuttle {

enum class Strategy { GridFormation, TwoStepCfin, TwoStepRfin, ThreeStep };

const char* to_string(Strategy strategy) noexcept;

/// Which strategy the dispatcher may use. Anything other than Auto forces a
/// single strategy and surfaces its StrategyFailure instead of falling back.
enum class StrategyChoice { Auto, Grid, TwoStep, ThreeStep };

const char* to_string(StrategyChoice choice) noexcept;
StrategyChoice strategy_choice_from_string(std::string_view text);

struct StrategyReport {
  Strategy strategy_used = Strategy::ThreeStep;
  /// Every strategy attempted, in order; the last entry is strategy_used.
  std::vector<Strategy> fallbacks_tried;
  /// Reasons for the attempts that failed, aligned with fallbacks_tried.
  std::vector<std::string> failure_reasons;
  /// Named intermediates ("rbal", "cfin", "rfin") produced on the way.
  std::vector<std::pair<std::string, Geometry>> intermediates;
};

struct PlanResult {
  Plan plan;
  /// The concrete geometry the plan produces.
  Geometry target;
  StrategyReport report;
};

struct PlanOptions {
  ShuttleOptions shuttle;
  StrategyChoice strategy = StrategyChoice::Auto;
};

/// Round-robin row balancing: scanning columns left to right and rows top
/// to bottom, the t-th atom seen goes to row (t mod n) + 1 of its column.
/// Column sums are preserved and row sums differ by at most one.
Geometry row_balance(const Geometry& geom);

/// Column-finalized geometry for grid formation. Row i keeps r_i atoms: the
/// first l = min(r_i, side) go round-robin into columns 1..side with one
/// counter shared by all rows, the rest fill columns l+1..r_i. Throws
/// InsufficientAtomsError when sum_i min(r_i, side) < side^2.
Geometry grid_column_finalize(const Geometry& geom, int side);

/// Each column's atoms packed into rows 1..c_j.
Geometry up_aligned_of(const Geometry& geom);

/// Canonical explicit grid target: an L x L block at the top-left corner,
/// then the N - L^2 leftover atoms row-major to the right of the block
/// (columns L+1..n of rows 1..L), continuing into rows L+1..n if needed.
Geometry synthesize_grid_target(int n, int atom_count);

/// Grid formation: row-wise solve to grid_column_finalize, then a
/// column-wise pack toward row 1. Throws StrategyFailure for non-grid
/// instances or when there are too few atoms in short rows.
PlanResult plan_grid_strategy(const ProblemInstance& instance, const ShuttleOptions& options = {});

/// Two 1D tasks through a column-finalized (R_int, C_tgt) intermediate, or
/// failing that a row-finalized (R_tgt, C_int) one. Throws StrategyFailure
/// when neither passes the Gale-Ryser test.
PlanResult plan_two_step(const Geometry& initial, const Geometry& target, const ShuttleOptions& options = {});

/// Column-wise balance, row-wise to (R_rbal, C_tgt), column-wise to target.
/// Succeeds for every pair with equal atom counts.
PlanResult plan_three_step(const Geometry& initial, const Geometry& target, const ShuttleOptions& options = {});

/// Strategy dispatch. Grid instances try GridFormation then ThreeStep (on
/// the synthesized target); arbitrary instances try TwoStep then ThreeStep.
/// Auto mode always returns a plan for a consistent instance.
PlanResult plan(const ProblemInstance& instance, const PlanOptions& options = {});

/// Worst-case op count of a strategy at side n with N atoms:
/// grid 2(n-1) + max(L-1, 0), two-step 4(n-1), three-step 6(n-1).
long op_bound(Strategy strategy, int n, int atom_count);

}  // namespace atomshuttle
