#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "atomshuttle/cost.hpp"
#include "atomshuttle/decomposer.hpp"
#include "atomshuttle/gale_ryser.hpp"
#include "atomshuttle/geometry.hpp"
#include "atomshuttle/instance.hpp"
#include "atomshuttle/shift_op.hpp"

namespace atomshuttle::io {

using json = nlohmann::json;

/// Raised for malformed documents. IO failures use std::runtime_error.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Geometry: {"n": 3, "rows": ["010", "101", "001"]}
json to_json(const Geometry& geom);
Geometry geometry_from_json(const json& doc);

// Instance: geometry fields plus
// {"kind": "arbitrary"|"grid", "alpha": 0.5, "seed": 7, "target": {...}|null}
json to_json(const ProblemInstance& instance);
ProblemInstance instance_from_json(const json& doc);

// Simple plan: {"model": "simple", "ops": [{"dir": "L", "rows": [1,2], "cols": [3]}]}
json to_json(const Plan& plan);
Plan plan_from_json(const json& doc);

// General plan: {"model": "general", "ops": [{"rows0": [...], "cols0": [...],
//                "moves": [{"row_dest": [...], "col_dest": [...]}]}]}
json to_json(const std::vector<GeneralOp>& ops);
std::vector<GeneralOp> general_plan_from_json(const json& doc);

using AnyPlan = std::variant<Plan, std::vector<GeneralOp>>;
/// Dispatches on the "model" field.
AnyPlan any_plan_from_json(const json& doc);

// Debug dump of a degree spec: {"R": [...], "C": [...]}
json to_json(const DegreeSpec& spec);

// {"strategy": "...", "fallbacks": [...], "ops": <int>}
json to_json(const StrategyReport& report, long op_count);

json to_json(const PlanMetrics& metrics);

json read_json_file(const std::filesystem::path& path);
/// Writes doc.dump(2) plus a trailing newline.
void write_json_file(const std::filesystem::path& path, const json& doc);
std::string dump(const json& doc);

}  // namespace atomshuttle::io
