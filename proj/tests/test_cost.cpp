#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "atomshuttle/cost.hpp"
#include "atomshuttle/decomposer.hpp"
#include "atomshuttle/errors.hpp"
#include "oracles.hpp"

using namespace atomshuttle;

namespace {

Plan plan_of_length(std::size_t k) {
  Plan p;
  p.ops.assign(k, ShiftOp{Direction::Left, {}, {}});
  return p;
}

GeneralOp one_move(std::vector<int> rows, std::vector<int> cols, std::vector<int> rd, std::vector<int> cd) {
  return GeneralOp{std::move(rows), std::move(cols), {Move{std::move(rd), std::move(cd)}}};
}

ConstraintError::Kind kind_of(const Geometry& g, const GeneralOp& op) {
  try {
    validate_general_op(g, op);
  } catch (const ConstraintError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected a constraint violation";
  return ConstraintError::Kind::Bounds;
}

}  // namespace

TEST(CostSimple, Arithmetic) {
  const CostParams params;
  EXPECT_EQ(cost_simple(Plan{}, params), 0.0);
  EXPECT_DOUBLE_EQ(cost_simple(plan_of_length(10), params), 1550.0);
  EXPECT_DOUBLE_EQ(cost_simple(plan_of_length(6 * 631), params), 3786.0 * 155.0);
}

TEST(CostParams, MustBePositive) {
  EXPECT_THROW(check_params(CostParams{0.0, 35.0}), std::invalid_argument);
  EXPECT_THROW(check_params(CostParams{120.0, -1.0}), std::invalid_argument);
  EXPECT_NO_THROW(check_params(CostParams{}));
}

TEST(OpCost, Distances) {
  const auto straight = one_move({1}, {1, 2}, {1}, {5, 6});
  EXPECT_DOUBLE_EQ(op_cost(straight, CostModel::Linear), 4.0);
  EXPECT_DOUBLE_EQ(op_cost(straight, CostModel::Sqrt), 2.0);

  const auto diagonal = one_move({1}, {1}, {4}, {5});
  EXPECT_DOUBLE_EQ(move_distance(diagonal, 1), 5.0);
  EXPECT_DOUBLE_EQ(op_cost(diagonal, CostModel::Linear), 5.0);
  EXPECT_DOUBLE_EQ(op_cost(diagonal, CostModel::Sqrt), std::sqrt(5.0));

  const auto unit = one_move({2}, {3}, {2}, {4});
  EXPECT_EQ(op_cost(unit, CostModel::Linear), 1.0);
  EXPECT_EQ(op_cost(unit, CostModel::Sqrt), 1.0);
}

TEST(OpCost, RelayMovesAddUp) {
  GeneralOp relay{{1}, {1}, {Move{{1}, {3}}, Move{{1}, {5}}, Move{{2}, {5}}}};
  EXPECT_DOUBLE_EQ(op_cost(relay, CostModel::Linear), 5.0);
  EXPECT_DOUBLE_EQ(op_cost(relay, CostModel::Sqrt), 2.0 * std::sqrt(2.0) + 1.0);
  EXPECT_THROW(move_distance(relay, 4), std::out_of_range);
}

TEST(CostGeneral, Arithmetic) {
  const std::vector<GeneralOp> ops{one_move({1}, {2}, {1}, {1}), one_move({2}, {1}, {3}, {1})};
  EXPECT_DOUBLE_EQ(cost_general(ops, CostParams{}, CostModel::Linear), 310.0);
  EXPECT_DOUBLE_EQ(cost_general(ops, CostParams{}, CostModel::Sqrt), 310.0);
}

TEST(CostGeneral, ValidatingModeWalksTheGeometry) {
  const auto g = Geometry::from_matrix({{0, 1, 0}, {0, 0, 0}, {0, 0, 0}});
  // Second op only makes sense after the first has moved the atom.
  const std::vector<GeneralOp> ops{one_move({1}, {2}, {1}, {1}), one_move({1}, {1}, {3}, {1})};
  EXPECT_DOUBLE_EQ(cost_general(ops, CostParams{}, CostModel::Linear, g), 2 * 120.0 + 3 * 35.0);
  const std::vector<GeneralOp> blocked{one_move({1, 2}, {1}, {1, 2}, {2})};
  const auto h = Geometry::from_matrix({{1, 1, 0}, {0, 0, 0}, {0, 0, 0}});
  EXPECT_THROW(cost_general(blocked, CostParams{}, CostModel::Linear, h), ConstraintError);
}

TEST(Lift, TranslatesDirections) {
  Plan p;
  p.ops.push_back(ShiftOp{Direction::Left, {1, 3}, {2}});
  p.ops.push_back(ShiftOp{Direction::Down, {2}, {1, 4}});
  const auto lifted = lift_simple_to_general(p);
  ASSERT_EQ(lifted.size(), 2u);
  EXPECT_EQ(lifted[0], one_move({1, 3}, {2}, {1, 3}, {1}));
  EXPECT_EQ(lifted[1], one_move({2}, {1, 4}, {3}, {1, 4}));
  EXPECT_TRUE(lift_simple_to_general(Plan{}).empty());
}

TEST(Lift, PlannerOutputCostsAgree) {
  for (auto kind : {ProblemKind::Grid, ProblemKind::Arbitrary})
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto inst = generate_instance(16, 0.5, seed, kind);
      const auto result = plan(inst);
      const auto lifted = lift_simple_to_general(result.plan);
      const double simple = cost_simple(result.plan, CostParams{});
      EXPECT_EQ(cost_general(lifted, CostParams{}, CostModel::Linear, inst.initial), simple);
      EXPECT_EQ(cost_general(lifted, CostParams{}, CostModel::Sqrt), simple);
      EXPECT_EQ(total_transport_cost(lifted, CostModel::Sqrt), static_cast<double>(result.plan.size()));
    }
}

TEST(Validate, AcceptsPlainShift) {
  const auto g = Geometry::from_matrix({{0, 1, 1}, {0, 0, 0}, {0, 1, 0}});
  EXPECT_NO_THROW(validate_general_op(g, one_move({1, 3}, {2, 3}, {1, 3}, {1, 2})));
}

TEST(Validate, CrossingColumnsBreakOrder) {
  const auto g = Geometry(4);
  EXPECT_EQ(kind_of(g, one_move({1}, {1, 2}, {1}, {3, 2})), ConstraintError::Kind::Order);
  EXPECT_EQ(kind_of(g, one_move({1}, {1, 2}, {1}, {3, 3})), ConstraintError::Kind::Order);
}

TEST(Validate, RelayThroughOccupiedSiteCollides) {
  const auto g = Geometry::from_matrix({{1, 0, 1, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
  GeneralOp relay{{1}, {1}, {Move{{1}, {3}}, Move{{2}, {3}}}};
  try {
    validate_general_op(g, relay);
    FAIL();
  } catch (const ConstraintError& e) {
    EXPECT_EQ(e.kind(), ConstraintError::Kind::Collision);
    EXPECT_EQ(e.move_index(), 1);
  }
  // An empty spot may pass over anything.
  GeneralOp empty_spot{{2}, {1}, {Move{{1}, {3}}, Move{{2}, {3}}}};
  EXPECT_NO_THROW(validate_general_op(g, empty_spot));
}

TEST(Validate, BoundsProblems) {
  const auto g = Geometry(3);
  EXPECT_EQ(kind_of(g, GeneralOp{{1}, {1}, {}}), ConstraintError::Kind::Bounds);
  EXPECT_EQ(kind_of(g, one_move({1}, {1}, {1}, {4})), ConstraintError::Kind::Bounds);
  EXPECT_EQ(kind_of(g, one_move({2, 1}, {1}, {1, 2}, {1})), ConstraintError::Kind::Bounds);
  EXPECT_EQ(kind_of(g, one_move({1}, {1}, {1, 2}, {1})), ConstraintError::Kind::Bounds);
}

TEST(Validate, AgreesWithSweepOracleAndExecutesSafely) {
  std::mt19937_64 rng(51);
  const int n = 5;
  std::uniform_int_distribution<int> coord(1, n), len(1, 3), skew(0, 9);
  auto subset = [&](int k) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    v.resize(k);
    std::sort(v.begin(), v.end());
    return v;
  };
  auto dest = [&](int k) {
    if (skew(rng) == 0) {
      std::vector<int> v(k);
      for (int& x : v) x = std::uniform_int_distribution<int>(0, n + 1)(rng);
      return v;
    }
    return subset(k);
  };
  int accepted = 0;
  for (int t = 0; t < 20000; ++t) {
    const auto d = oracle::random_dense(n, 0.15, rng);
    const int kr = len(rng), kc = len(rng);
    GeneralOp op{subset(kr), subset(kc), {Move{dest(kr), dest(kc)}, Move{dest(kr), dest(kc)}}};
    const auto verdict = oracle::check_general(d, op);
    const auto g = oracle::geometry(d);
    try {
      validate_general_op(g, op);
      ASSERT_EQ(verdict, oracle::Verdict::Ok);
      const auto moved = oracle::execute_general(d, op);
      ASSERT_TRUE(moved.has_value());
      ASSERT_EQ(oracle::dense(execute_general_op(g, op)), *moved);
      ++accepted;
    } catch (const ConstraintError& e) {
      const auto want = e.kind() == ConstraintError::Kind::Bounds  ? oracle::Verdict::Bounds
                        : e.kind() == ConstraintError::Kind::Order ? oracle::Verdict::Order
                                                                   : oracle::Verdict::Collision;
      ASSERT_EQ(verdict, want);
    }
  }
  EXPECT_GT(accepted, 1000);
}

TEST(Metrics, EmptyPlan) {
  const auto g = Geometry::from_matrix({{1, 0}, {0, 1}});
  const auto m = plan_metrics(g, Plan{}, CostParams{});
  EXPECT_EQ(m.op_count, 0);
  EXPECT_EQ(m.avg_atoms_per_op, 0.0);
  EXPECT_EQ(m.avg_distance_per_atom, 0.0);
  EXPECT_EQ(m.avg_ops_per_atom, 0.0);
}

TEST(Metrics, SingleOp) {
  const auto g = Geometry::from_matrix({{0, 1, 1}, {0, 1, 0}, {0, 0, 1}});
  Plan p;
  p.ops.push_back(ShiftOp{Direction::Left, {1, 2, 3}, {2, 3}});
  const auto m = plan_metrics(g, p, CostParams{});
  EXPECT_EQ(m.avg_atoms_per_op, 4.0);
  EXPECT_EQ(m.total_atom_moves, 4);
  EXPECT_DOUBLE_EQ(m.estimated_time_us, 155.0);
  EXPECT_DOUBLE_EQ(m.avg_ops_per_atom, 1.0);
}

TEST(Metrics, IdentityTrackingMatchesMoveCount) {
  std::mt19937_64 rng(52);
  for (int t = 0; t < 50; ++t) {
    const auto inst = generate_instance(16, 0.5, rng(), t % 2 ? ProblemKind::Grid : ProblemKind::Arbitrary);
    const auto result = plan(inst);
    const auto m = plan_metrics(inst.initial, result.plan, CostParams{});
    long moved = 0;
    auto g = inst.initial;
    for (const auto& op : result.plan.ops) {
      moved += moved_atom_count(g, op);
      g = apply_op(g, op);
    }
    EXPECT_EQ(m.total_atom_moves, moved);
    EXPECT_EQ(m.op_count, static_cast<long>(result.plan.size()));
    if (inst.atom_count() > 0) {
      EXPECT_NEAR(m.avg_distance_per_atom * inst.atom_count(), static_cast<double>(moved), 1e-6);
      EXPECT_NEAR(m.avg_ops_per_atom, m.avg_distance_per_atom, 1e-12);
    }
  }
}

TEST(Metrics, PropagatesMoveErrors) {
  const auto g = Geometry::from_matrix({{1, 0}, {0, 0}});
  Plan p;
  p.ops.push_back(ShiftOp{Direction::Left, {1}, {1}});
  EXPECT_THROW(plan_metrics(g, p, CostParams{}), MoveError);
}

TEST(Metrics, OpsPerAtomGrowWithSize) {
  double previous = 0.0;
  for (int n : {16, 32, 64}) {
    double total = 0.0;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto inst = generate_instance(n, 0.5, seed, ProblemKind::Grid);
      total += plan_metrics(inst.initial, plan(inst).plan, CostParams{}).avg_ops_per_atom;
    }
    EXPECT_GT(total / 5, previous * 1.5);
    previous = total / 5;
  }
}

TEST(CostMonotone, AppendingAnOpCostsMore) {
  Plan p = plan_of_length(3);
  const double before = cost_simple(p, CostParams{});
  p.ops.push_back(ShiftOp{});
  EXPECT_GT(cost_simple(p, CostParams{}), before);
  const auto lifted = lift_simple_to_general(plan_of_length(2));
  std::vector<GeneralOp> more = lifted;
  more.push_back(one_move({1}, {1}, {1}, {2}));
  EXPECT_GT(cost_general(more, CostParams{}, CostModel::Sqrt), cost_general(lifted, CostParams{}, CostModel::Sqrt));
}
