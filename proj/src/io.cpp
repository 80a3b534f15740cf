#include "atomshuttle/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace atomshuttle::io {

namespace {

const json& require(const json& doc, const char* key) {
  if (!doc.is_object()) throw FormatError("expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) throw FormatError(std::string("missing field '") + key + "'");
  return *it;
}

std::vector<int> index_list(const json& v, const char* what) {
  if (!v.is_array()) throw FormatError(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw FormatError(std::string(what) + " must hold integers");
    const auto value = x.get<long long>();
    if (value < std::numeric_limits<int>::min() || value > std::numeric_limits<int>::max())
      throw FormatError(std::string(what) + " holds an out-of-range index");
    out.push_back(static_cast<int>(value));
  }
  return out;
}

}  // namespace

json to_json(const Geometry& geom) { return json{{"n", geom.size()}, {"rows", geom.to_rows()}}; }

Geometry geometry_from_json(const json& doc) {
  const json& n = require(doc, "n");
  const json& rows = require(doc, "rows");
  if (!n.is_number_integer() || n.get<long long>() < 1) throw FormatError("'n' must be a positive integer");
  if (!rows.is_array()) throw FormatError("'rows' must be an array of strings");
  std::vector<std::string> lines;
  for (const auto& r : rows) {
    if (!r.is_string()) throw FormatError("'rows' must be an array of strings");
    lines.push_back(r.get<std::string>());
  }
  if (static_cast<long long>(lines.size()) != n.get<long long>())
    throw FormatError("expected " + std::to_string(n.get<long long>()) + " rows, got " + std::to_string(lines.size()));
  try {
    return Geometry::from_rows(lines);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

json to_json(const ProblemInstance& instance) {
  json doc = to_json(instance.initial);
  doc["kind"] = to_string(instance.kind);
  doc["alpha"] = instance.alpha;
  doc["seed"] = instance.seed;
  doc["target"] = instance.target ? to_json(*instance.target) : json(nullptr);
  return doc;
}

ProblemInstance instance_from_json(const json& doc) {
  ProblemInstance instance;
  instance.initial = geometry_from_json(doc);
  instance.n = instance.initial.size();
  try {
    instance.kind = problem_kind_from_string(require(doc, "kind").get<std::string>());
  } catch (const json::exception&) {
    throw FormatError("'kind' must be a string");
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  if (auto it = doc.find("alpha"); it != doc.end()) {
    if (!it->is_number()) throw FormatError("'alpha' must be a number");
    instance.alpha = it->get<double>();
  }
  if (auto it = doc.find("seed"); it != doc.end()) {
    if (!it->is_number_unsigned() && !(it->is_number_integer() && it->get<long long>() >= 0))
      throw FormatError("'seed' must be a non-negative integer");
    instance.seed = it->get<std::uint64_t>();
  }
  if (auto it = doc.find("target"); it != doc.end() && !it->is_null()) instance.target = geometry_from_json(*it);
  try {
    check_instance(instance);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  return instance;
}

json to_json(const Plan& plan) {
  json ops = json::array();
  for (const auto& op : plan.ops)
    ops.push_back(json{{"dir", std::string(1, to_char(op.dir))}, {"rows", op.rows}, {"cols", op.cols}});
  return json{{"model", "simple"}, {"ops", std::move(ops)}};
}

Plan plan_from_json(const json& doc) {
  if (auto it = doc.find("model"); it != doc.end() && *it != "simple")
    throw FormatError("expected a simple plan");
  const json& ops = require(doc, "ops");
  if (!ops.is_array()) throw FormatError("'ops' must be an array");
  Plan plan;
  for (const auto& o : ops) {
    ShiftOp op;
    const json& dir = require(o, "dir");
    if (!dir.is_string()) throw FormatError("'dir' must be a string");
    try {
      op.dir = direction_from_string(dir.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw FormatError(e.what());
    }
    op.rows = index_list(require(o, "rows"), "rows");
    op.cols = index_list(require(o, "cols"), "cols");
    plan.ops.push_back(std::move(op));
  }
  return plan;
}

json to_json(const std::vector<GeneralOp>& ops) {
  json arr = json::array();
  for (const auto& op : ops) {
    json moves = json::array();
    for (const auto& m : op.moves) moves.push_back(json{{"row_dest", m.row_dest}, {"col_dest", m.col_dest}});
    arr.push_back(json{{"rows0", op.rows0}, {"cols0", op.cols0}, {"moves", std::move(moves)}});
  }
  return json{{"model", "general"}, {"ops", std::move(arr)}};
}

std::vector<GeneralOp> general_plan_from_json(const json& doc) {
  if (require(doc, "model") != "general") throw FormatError("expected a general plan");
  const json& ops = require(doc, "ops");
  if (!ops.is_array()) throw FormatError("'ops' must be an array");
  std::vector<GeneralOp> out;
  for (const auto& o : ops) {
    GeneralOp op;
    op.rows0 = index_list(require(o, "rows0"), "rows0");
    op.cols0 = index_list(require(o, "cols0"), "cols0");
    const json& moves = require(o, "moves");
    if (!moves.is_array()) throw FormatError("'moves' must be an array");
    for (const auto& m : moves)
      op.moves.push_back(Move{index_list(require(m, "row_dest"), "row_dest"), index_list(require(m, "col_dest"), "col_dest")});
    out.push_back(std::move(op));
  }
  return out;
}

AnyPlan any_plan_from_json(const json& doc) {
  const json& model = require(doc, "model");
  if (model == "simple") return plan_from_json(doc);
  if (model == "general") return general_plan_from_json(doc);
  throw FormatError("unknown plan model");
}

json to_json(const DegreeSpec& spec) { return json{{"R", spec.row_sums}, {"C", spec.col_sums}}; }

json to_json(const StrategyReport& report, long op_count) {
  json fallbacks = json::array();
  for (auto s : report.fallbacks_tried) fallbacks.push_back(to_string(s));
  return json{{"strategy", to_string(report.strategy_used)}, {"fallbacks", std::move(fallbacks)},
              {"failures", report.failure_reasons}, {"ops", op_count}};
}

json to_json(const PlanMetrics& m) {
  return json{{"op_count", m.op_count},
              {"total_transport_cost", m.total_transport_cost},
              {"estimated_time_us", m.estimated_time_us},
              {"avg_atoms_per_op", m.avg_atoms_per_op},
              {"avg_distance_per_atom", m.avg_distance_per_atom},
              {"avg_ops_per_atom", m.avg_ops_per_atom},
              {"planning_time_us", m.planning_time_us}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << doc.dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::string dump(const json& doc) { return doc.dump(2); }

}  // namespace atomshuttle::io
