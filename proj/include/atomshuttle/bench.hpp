#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "atomshuttle/cost.hpp"
#include "atomshuttle/decomposer.hpp"
#include "atomshuttle/instance.hpp"
#include "atomshuttle/io.hpp"

namespace atomshuttle::bench {

/// Sweep description. Every (n, alpha, kind, peephole, seed index) tuple is
/// one run; the instance seed is seed_base + seed index.
struct BenchConfig {
  std::vector<int> n_values;
  std::vector<double> alpha_values;
  std::vector<ProblemKind> kinds;
  int seeds_per_cell = 100;
  std::uint64_t seed_base = 0;
  StrategyChoice strategy = StrategyChoice::Auto;
  std::vector<bool> peephole_values{true};
  bool prune_empty = false;
  CostParams params;
  std::optional<std::filesystem::path> output;
};

/// Throws std::invalid_argument on empty sweeps, n < 2, alpha outside
/// [0, 1], seeds_per_cell < 1 or non-positive times.
void check_config(const BenchConfig& config);

/// {"n": [..], "alpha": [..], "kind": ["grid", ..], "seeds": 100,
///  "seed_base": 0, "strategy": "auto", "peephole": [true, false],
///  "prune_empty": false, "t1": 120, "t2": 35, "output": "out.csv"}
/// Scalars are accepted wherever a list is expected.
BenchConfig config_from_json(const io::json& doc);

struct RunRecord {
  int n = 0;
  int atom_count = 0;
  double alpha = 0.0;
  std::uint64_t seed = 0;
  ProblemKind kind = ProblemKind::Grid;
  std::string strategy_used;
  bool success = false;
  long op_count = 0;
  double total_transport_cost = 0.0;
  double estimated_time_us = 0.0;
  double avg_atoms_per_op = 0.0;
  double avg_distance_per_atom = 0.0;
  double avg_ops_per_atom = 0.0;
  double planning_time_us = 0.0;
  bool three_step_used = false;
  bool peephole_enabled = true;
};

/// One cell of the sweep before it is run.
struct RunSpec {
  int n = 0;
  double alpha = 0.0;
  ProblemKind kind = ProblemKind::Grid;
  bool peephole = true;
  std::uint64_t seed = 0;
};

/// Expands the config in output order: n, alpha, kind, peephole, seed.
std::vector<RunSpec> expand(const BenchConfig& config);

/// Generates, plans, replays and verifies one instance. Planning time
/// covers the planner call only, on a monotonic clock. A forced strategy
/// that fails yields success = false and strategy "failed".
RunRecord run_one(const RunSpec& spec, const BenchConfig& config);

/// Same as run_one on a ready-made instance.
RunRecord run_instance(const ProblemInstance& instance, const PlanOptions& options, const CostParams& params);

inline constexpr const char* kCsvVersionLine = "# atomshuttle-csv v1";

/// Column names in output order.
const std::vector<std::string>& csv_columns();
std::string csv_header();
std::string csv_row(const RunRecord& record);

/// Runs the sweep with `jobs` worker threads and streams rows to `out` in
/// config order, flushing after every row. Rows do not depend on `jobs`.
/// Setting `stop` makes the sweep finish the rows already started, write
/// everything that is complete in order and return early.
/// Returns the number of rows written.
std::size_t run_bench(const BenchConfig& config, std::ostream& out, int jobs = 1,
                      const std::atomic<bool>* stop = nullptr);

}  // namespace atomshuttle::bench
