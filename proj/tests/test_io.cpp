#include <gtest/gtest.h>

#include <filesystem>

#include "atomshuttle/io.hpp"

using namespace atomshuttle;
using io::json;

TEST(Json, GeometryRoundTrip) {
  const auto g = Geometry::from_matrix({{0, 1, 0}, {1, 0, 1}, {0, 0, 1}});
  const json doc = io::to_json(g);
  EXPECT_EQ(doc["n"], 3);
  EXPECT_EQ(doc["rows"][1], "101");
  EXPECT_EQ(io::geometry_from_json(doc), g);
}

TEST(Json, GeometryRejectsBadShapes) {
  EXPECT_THROW(io::geometry_from_json(json{{"n", 2}, {"rows", {"01"}}}), io::FormatError);
  EXPECT_THROW(io::geometry_from_json(json{{"n", 2}, {"rows", {"01", "2a"}}}), io::FormatError);
  EXPECT_THROW(io::geometry_from_json(json{{"rows", {"1"}}}), io::FormatError);
  EXPECT_THROW(io::geometry_from_json(json::array()), io::FormatError);
}

TEST(Json, InstanceRoundTrip) {
  for (auto kind : {ProblemKind::Grid, ProblemKind::Arbitrary}) {
    const auto inst = generate_instance(7, 0.4, 0xFFFFFFFFFFFFFFFFULL, kind);
    const json doc = io::to_json(inst);
    EXPECT_EQ(doc["kind"], to_string(kind));
    const auto back = io::instance_from_json(json::parse(doc.dump()));
    EXPECT_EQ(back.initial, inst.initial);
    EXPECT_EQ(back.seed, inst.seed);
    EXPECT_EQ(back.alpha, inst.alpha);
    EXPECT_EQ(back.kind, inst.kind);
    EXPECT_EQ(back.target.has_value(), inst.target.has_value());
    if (inst.target) EXPECT_EQ(*back.target, *inst.target);
  }
}

TEST(Json, InstanceNeedsConsistentTarget) {
  json doc = io::to_json(generate_instance(4, 0.5, 1, ProblemKind::Arbitrary));
  doc["target"] = nullptr;
  EXPECT_THROW(io::instance_from_json(doc), io::FormatError);
  doc["kind"] = "spiral";
  EXPECT_THROW(io::instance_from_json(doc), io::FormatError);
}

TEST(Json, SimplePlanRoundTrip) {
  Plan p;
  p.ops.push_back(ShiftOp{Direction::Left, {1, 2}, {3}});
  p.ops.push_back(ShiftOp{Direction::Down, {}, {1}});
  const json doc = io::to_json(p);
  EXPECT_EQ(doc["model"], "simple");
  EXPECT_EQ(doc["ops"][0]["dir"], "L");
  EXPECT_EQ(io::plan_from_json(doc), p);
  EXPECT_TRUE(std::holds_alternative<Plan>(io::any_plan_from_json(doc)));
}

TEST(Json, GeneralPlanRoundTrip) {
  const std::vector<GeneralOp> ops{GeneralOp{{1}, {2, 3}, {Move{{2}, {3, 4}}, Move{{2}, {4, 5}}}}};
  const json doc = io::to_json(ops);
  EXPECT_EQ(doc["model"], "general");
  EXPECT_EQ(io::general_plan_from_json(doc), ops);
  EXPECT_TRUE(std::holds_alternative<std::vector<GeneralOp>>(io::any_plan_from_json(doc)));
  EXPECT_THROW(io::any_plan_from_json(json{{"model", "fancy"}, {"ops", json::array()}}), io::FormatError);
}

TEST(Json, PlanRejectsBadEntries) {
  EXPECT_THROW(io::plan_from_json(json::parse(R"({"ops":[{"dir":"X","rows":[],"cols":[]}]})")), io::FormatError);
  EXPECT_THROW(io::plan_from_json(json::parse(R"({"ops":[{"dir":"L","rows":[1.5],"cols":[]}]})")), io::FormatError);
  EXPECT_THROW(io::plan_from_json(json::parse(R"({"ops":[{"dir":"L","rows":[1]}]})")), io::FormatError);
}

TEST(Json, ReportsAndSums) {
  StrategyReport report;
  report.strategy_used = Strategy::ThreeStep;
  report.fallbacks_tried = {Strategy::GridFormation, Strategy::ThreeStep};
  const json doc = io::to_json(report, 42);
  EXPECT_EQ(doc["strategy"], "three_step");
  EXPECT_EQ(doc["fallbacks"], json({"grid", "three_step"}));
  EXPECT_EQ(doc["ops"], 42);
  const json sums = io::to_json(DegreeSpec{2, {1, 0}, {0, 1}});
  EXPECT_EQ(sums["R"], json({1, 0}));
}

TEST(Json, FileHelpers) {
  const auto path = std::filesystem::temp_directory_path() / "atomshuttle_io_test.json";
  io::write_json_file(path, json{{"a", 1}});
  EXPECT_EQ(io::read_json_file(path)["a"], 1);
  std::filesystem::remove(path);
  EXPECT_THROW(io::read_json_file(path), std::runtime_error);
}
