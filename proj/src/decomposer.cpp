#include "atomshuttle/decomposer.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "atomshuttle/errors.hpp"
#include "atomshuttle/gale_ryser.hpp"
#include "bits.hpp"

namespace atomshuttle {

const char* to_string(Strategy strategy) noexcept {
  switch (strategy) {
    case Strategy::GridFormation: return "grid";
    case Strategy::TwoStepCfin: return "two_step_cfin";
    case Strategy::TwoStepRfin: return "two_step_rfin";
    case Strategy::ThreeStep: return "three_step";
  }
  return "?";
}

const char* to_string(StrategyChoice choice) noexcept {
  switch (choice) {
    case StrategyChoice::Auto: return "auto";
    case StrategyChoice::Grid: return "grid";
    case StrategyChoice::TwoStep: return "two_step";
    case StrategyChoice::ThreeStep: return "three_step";
  }
  return "?";
}

StrategyChoice strategy_choice_from_string(std::string_view text) {
  if (text == "auto") return StrategyChoice::Auto;
  if (text == "grid") return StrategyChoice::Grid;
  if (text == "two_step" || text == "two-step") return StrategyChoice::TwoStep;
  if (text == "three_step" || text == "three-step") return StrategyChoice::ThreeStep;
  throw std::invalid_argument("unknown strategy '" + std::string(text) + "'");
}

Geometry row_balance(const Geometry& geom) {
  const int n = geom.size();
  Geometry out(n);
  long t = 0;
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n; ++i)
      if (detail::test_bit(geom.row_words(i), j)) {
        detail::set_bit(out.row_words(static_cast<int>(t % n) + 1), j);
        ++t;
      }
  return out;
}

Geometry grid_column_finalize(const Geometry& geom, int side) {
  const int n = geom.size();
  if (side < 0 || side > n) throw std::invalid_argument("grid side outside 0..n");
  const auto r = row_sums(geom);
  long usable = 0;
  for (int ri : r) usable += std::min(ri, side);
  if (usable < static_cast<long>(side) * side)
    throw InsufficientAtomsError("rows can supply " + std::to_string(usable) + " atoms to the first " +
                                 std::to_string(side) + " columns, need " + std::to_string(side * side));

  Geometry out(n);
  long t = 0;
  for (int i = 1; i <= n; ++i) {
    const int l = std::min(r[i - 1], side);
    auto row = out.row_words(i);
    for (int k = 0; k < l; ++k, ++t) detail::set_bit(row, static_cast<int>(t % side) + 1);
    for (int j = l + 1; j <= r[i - 1]; ++j) detail::set_bit(row, j);
  }
  return out;
}

Geometry up_aligned_of(const Geometry& geom) {
  const int n = geom.size();
  const auto c = col_sums(geom);
  Geometry out(n);
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= c[j - 1]; ++i) detail::set_bit(out.row_words(i), j);
  return out;
}

Geometry synthesize_grid_target(int n, int atom_count) {
  if (atom_count < 0 || static_cast<long>(atom_count) > static_cast<long>(n) * n)
    throw std::invalid_argument("atom count does not fit on the lattice");
  const int side = grid_side(atom_count);
  Geometry out(n);
  for (int i = 1; i <= side; ++i)
    for (int j = 1; j <= side; ++j) out.set(i, j, true);
  int left = atom_count - side * side;
  for (int i = 1; i <= side && left > 0; ++i)
    for (int j = side + 1; j <= n && left > 0; ++j, --left) out.set(i, j, true);
  for (int i = side + 1; i <= n && left > 0; ++i)
    for (int j = 1; j <= n && left > 0; ++j, --left) out.set(i, j, true);
  return out;
}

PlanResult plan_grid_strategy(const ProblemInstance& instance, const ShuttleOptions& options) {
  if (instance.kind != ProblemKind::Grid) throw StrategyFailure("grid", "instance is not a grid formation problem");
  const Geometry& initial = instance.initial;
  const int side = grid_side(initial.atom_count());

  Geometry cfin(initial.size());
  try {
    cfin = grid_column_finalize(initial, side);
  } catch (const InsufficientAtomsError& e) {
    throw StrategyFailure("grid", e.what());
  }
  Geometry target = up_aligned_of(cfin);

  PlanResult result{solve_1d(initial, cfin, Axis::RowWise, options), target, {}};
  result.plan.then(solve_1d(cfin, target, Axis::ColumnWise, options));
  result.report.strategy_used = Strategy::GridFormation;
  result.report.fallbacks_tried = {Strategy::GridFormation};
  result.report.intermediates.emplace_back("cfin", std::move(cfin));
  return result;
}

PlanResult plan_two_step(const Geometry& initial, const Geometry& target, const ShuttleOptions& options) {
  if (initial.size() != target.size()) throw DimensionMismatch("initial and target differ in size");
  if (initial.atom_count() != target.atom_count())
    throw std::invalid_argument("initial and target hold different atom counts");
  const int n = initial.size();

  StrategyReport report;
  const DegreeSpec cfin_spec{n, row_sums(initial), col_sums(target)};
  report.fallbacks_tried.push_back(Strategy::TwoStepCfin);
  if (gale_ryser_check(cfin_spec)) {
    Geometry cfin = construct_geometry(cfin_spec);
    PlanResult result{solve_1d(initial, cfin, Axis::RowWise, options), target, std::move(report)};
    result.plan.then(solve_1d(cfin, target, Axis::ColumnWise, options));
    result.report.strategy_used = Strategy::TwoStepCfin;
    result.report.intermediates.emplace_back("cfin", std::move(cfin));
    return result;
  }
  report.failure_reasons.emplace_back("no geometry with the initial row sums and target column sums");

  const DegreeSpec rfin_spec{n, row_sums(target), col_sums(initial)};
  report.fallbacks_tried.push_back(Strategy::TwoStepRfin);
  if (gale_ryser_check(rfin_spec)) {
    Geometry rfin = construct_geometry(rfin_spec);
    PlanResult result{solve_1d(initial, rfin, Axis::ColumnWise, options), target, std::move(report)};
    result.plan.then(solve_1d(rfin, target, Axis::RowWise, options));
    result.report.strategy_used = Strategy::TwoStepRfin;
    result.report.intermediates.emplace_back("rfin", std::move(rfin));
    return result;
  }
  throw StrategyFailure("two_step", "Gale-Ryser test fails for both column- and row-finalized intermediates");
}

PlanResult plan_three_step(const Geometry& initial, const Geometry& target, const ShuttleOptions& options) {
  if (initial.size() != target.size()) throw DimensionMismatch("initial and target differ in size");
  if (initial.atom_count() != target.atom_count())
    throw std::invalid_argument("initial and target hold different atom counts");
  const int n = initial.size();

  Geometry rbal = row_balance(initial);
  const DegreeSpec spec{n, row_sums(rbal), col_sums(target)};
  if (!gale_ryser_check(spec)) throw std::logic_error("row-balanced intermediate failed the Gale-Ryser test");
  Geometry cfin = construct_geometry(spec);

  PlanResult result{solve_1d(initial, rbal, Axis::ColumnWise, options), target, {}};
  result.plan.then(solve_1d(rbal, cfin, Axis::RowWise, options));
  result.plan.then(solve_1d(cfin, target, Axis::ColumnWise, options));
  result.report.strategy_used = Strategy::ThreeStep;
  result.report.fallbacks_tried = {Strategy::ThreeStep};
  result.report.intermediates.emplace_back("rbal", std::move(rbal));
  result.report.intermediates.emplace_back("cfin", std::move(cfin));
  return result;
}

namespace {

// Explicit target for strategies that need one.
Geometry explicit_target(const ProblemInstance& instance) {
  if (instance.kind == ProblemKind::Arbitrary) return *instance.target;
  return synthesize_grid_target(instance.n, instance.atom_count());
}

// Prepends earlier attempts to the report of the strategy that succeeded.
PlanResult merge_history(PlanResult result, const StrategyReport& history) {
  StrategyReport merged = history;
  merged.fallbacks_tried.insert(merged.fallbacks_tried.end(), result.report.fallbacks_tried.begin(),
                                result.report.fallbacks_tried.end());
  merged.failure_reasons.insert(merged.failure_reasons.end(), result.report.failure_reasons.begin(),
                                result.report.failure_reasons.end());
  merged.intermediates = std::move(result.report.intermediates);
  merged.strategy_used = result.report.strategy_used;
  result.report = std::move(merged);
  return result;
}

}  // namespace

PlanResult plan(const ProblemInstance& instance, const PlanOptions& options) {
  check_instance(instance);
  const auto& shuttle = options.shuttle;

  switch (options.strategy) {
    case StrategyChoice::Grid: return plan_grid_strategy(instance, shuttle);
    case StrategyChoice::TwoStep: return plan_two_step(instance.initial, explicit_target(instance), shuttle);
    case StrategyChoice::ThreeStep: return plan_three_step(instance.initial, explicit_target(instance), shuttle);
    case StrategyChoice::Auto: break;
  }

  StrategyReport history;
  if (instance.kind == ProblemKind::Grid) {
    try {
      return plan_grid_strategy(instance, shuttle);
    } catch (const StrategyFailure& e) {
      history.fallbacks_tried.push_back(Strategy::GridFormation);
      history.failure_reasons.push_back(e.reason());
    }
  } else {
    try {
      return plan_two_step(instance.initial, *instance.target, shuttle);
    } catch (const StrategyFailure& e) {
      history.fallbacks_tried.push_back(Strategy::TwoStepCfin);
      history.failure_reasons.emplace_back("no geometry with the initial row sums and target column sums");
      history.fallbacks_tried.push_back(Strategy::TwoStepRfin);
      history.failure_reasons.push_back(e.reason());
    }
  }
  return merge_history(plan_three_step(instance.initial, explicit_target(instance), shuttle), history);
}

long op_bound(Strategy strategy, int n, int atom_count) {
  if (n < 1) return 0;
  const long steps = n - 1;
  switch (strategy) {
    case Strategy::GridFormation: return 2 * steps + std::max(grid_side(atom_count) - 1, 0);
    case Strategy::TwoStepCfin:
    case Strategy::TwoStepRfin: return 4 * steps;
    case Strategy::ThreeStep: return 6 * steps;
  }
  return 0;
}

}  // namespace atomshuttle
