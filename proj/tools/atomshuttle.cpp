// atomshuttle command-line front end.
//
// Exit codes: 0 ok, 1 unreadable or malformed input, 2 usage error,
// 3 forced strategy failed, 4 collision/boundary/constraint violation,
// 5 plan replays cleanly but the verifier rejects the result.

#include <atomic>
#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "atomshuttle/bench.hpp"
#include "atomshuttle/cost.hpp"
#include "atomshuttle/decomposer.hpp"
#include "atomshuttle/errors.hpp"
#include "atomshuttle/instance.hpp"
#include "atomshuttle/io.hpp"

namespace as = atomshuttle;
using as::io::json;

namespace {

enum Exit { kOk = 0, kIo = 1, kUsage = 2, kStrategy = 3, kViolation = 4, kRejected = 5 };

std::atomic<bool> g_stop{false};

extern "C" void on_sigint(int) { g_stop.store(true); }

std::uint64_t default_seed() {
  if (const char* env = std::getenv("ATOMSHUTTLE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring non-numeric ATOMSHUTTLE_SEED\n";
    }
  }
  return 0;
}

void emit(const json& doc, const std::string& path) {
  if (path.empty() || path == "-")
    std::cout << doc.dump(2) << '\n';
  else
    as::io::write_json_file(path, doc);
}

struct GenArgs {
  int n = 16;
  double alpha = 0.5;
  std::uint64_t seed = 0;
  std::string kind = "grid";
  std::string out;
};

int cmd_gen(const GenArgs& a) {
  const auto instance = as::generate_instance(a.n, a.alpha, a.seed, as::problem_kind_from_string(a.kind));
  emit(as::io::to_json(instance), a.out);
  return kOk;
}

struct PlanArgs {
  std::string instance;
  std::string strategy = "auto";
  bool no_peephole = false;
  bool prune_empty = false;
  std::string out;
  std::string report;
  double t1 = 120.0;
  double t2 = 35.0;
};

int cmd_plan(const PlanArgs& a) {
  const auto instance = as::io::instance_from_json(as::io::read_json_file(a.instance));
  as::PlanOptions options;
  options.strategy = as::strategy_choice_from_string(a.strategy);
  options.shuttle.peephole = !a.no_peephole;
  options.shuttle.prune_empty = a.prune_empty;
  const as::CostParams params{a.t1, a.t2};
  as::check_params(params);

  const auto start = std::chrono::steady_clock::now();
  as::PlanResult result;
  try {
    result = as::plan(instance, options);
  } catch (const as::StrategyFailure& e) {
    std::cout << json{{"error", "strategy_failed"}, {"strategy", e.strategy()}, {"reason", e.reason()}}.dump() << '\n';
    return kStrategy;
  }
  const double elapsed = std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start).count();

  auto metrics = as::plan_metrics(instance.initial, result.plan, params);
  metrics.planning_time_us = elapsed;
  const bool ok = as::verify(instance, as::apply_plan(instance.initial, result.plan));

  json report = as::io::to_json(result.report, static_cast<long>(result.plan.size()));
  report["metrics"] = as::io::to_json(metrics);
  report["verified"] = ok;
  if (a.out.empty()) {
    json doc = as::io::to_json(result.plan);
    doc["report"] = report;
    emit(doc, "");
  } else {
    as::io::write_json_file(a.out, as::io::to_json(result.plan));
    emit(report, a.report);
  }
  return ok ? kOk : kRejected;
}

struct VerifyArgs {
  std::string instance;
  std::string plan;
};

int cmd_verify(const VerifyArgs& a) {
  const auto instance = as::io::instance_from_json(as::io::read_json_file(a.instance));
  const auto any = as::io::any_plan_from_json(as::io::read_json_file(a.plan));

  as::Geometry final_geom = instance.initial;
  if (const auto* simple = std::get_if<as::Plan>(&any)) {
    try {
      for (std::size_t k = 0; k < simple->ops.size(); ++k) {
        try {
          as::check_op(simple->ops[k], instance.n);
        } catch (const std::invalid_argument& err) {
          std::cout << "op " << k << ": bounds: " << err.what() << '\n';
          return kViolation;
        }
      }
      final_geom = as::apply_plan(instance.initial, *simple);
    } catch (const as::MoveError& e) {
      std::cout << "op " << e.op_index() << ": " << as::to_string(e.kind()) << " at (" << e.row() << ", " << e.col()
                << ")\n";
      return kViolation;
    }
  } else {
    const auto& ops = std::get<std::vector<as::GeneralOp>>(any);
    for (std::size_t k = 0; k < ops.size(); ++k) {
      try {
        as::validate_general_op(final_geom, ops[k]);
      } catch (const as::ConstraintError& e) {
        std::cout << "op " << k << ", move " << e.move_index() << ": " << as::to_string(e.kind()) << ": " << e.what()
                  << '\n';
        return kViolation;
      }
      final_geom = as::execute_general_op(final_geom, ops[k]);
    }
  }
  if (!as::verify(instance, final_geom)) {
    std::cout << (instance.kind == as::ProblemKind::Grid ? "no full grid block in the final geometry\n"
                                                         : "final geometry differs from the target\n");
    return kRejected;
  }
  std::cout << "ok\n";
  return kOk;
}

struct EvalArgs {
  std::string instance;
  std::string plan;
  std::string model = "linear";
  double t1 = 120.0;
  double t2 = 35.0;
};

int cmd_eval(const EvalArgs& a) {
  const auto instance = as::io::instance_from_json(as::io::read_json_file(a.instance));
  const auto any = as::io::any_plan_from_json(as::io::read_json_file(a.plan));
  const auto model = as::cost_model_from_string(a.model);
  const as::CostParams params{a.t1, a.t2};
  as::check_params(params);

  std::vector<as::GeneralOp> ops;
  if (const auto* simple = std::get_if<as::Plan>(&any)) {
    try {
      as::apply_plan(instance.initial, *simple);
    } catch (const as::MoveError& e) {
      std::cout << "op " << e.op_index() << ": " << as::to_string(e.kind()) << " at (" << e.row() << ", " << e.col()
                << ")\n";
      return kViolation;
    }
    ops = as::lift_simple_to_general(*simple);
  } else {
    ops = std::get<std::vector<as::GeneralOp>>(any);
  }

  double time_us = 0.0;
  try {
    time_us = as::cost_general(ops, params, model, std::holds_alternative<as::Plan>(any)
                                                       ? std::nullopt
                                                       : std::optional<as::Geometry>(instance.initial));
  } catch (const as::ConstraintError& e) {
    std::cout << "move " << e.move_index() << ": " << as::to_string(e.kind()) << ": " << e.what() << '\n';
    return kViolation;
  }
  std::cout << json{{"model", as::to_string(model)},
                    {"op_count", ops.size()},
                    {"total_transport_cost", as::total_transport_cost(ops, model)},
                    {"estimated_time_us", time_us}}
                   .dump(2)
            << '\n';
  return kOk;
}

struct BenchArgs {
  std::string config;
  int jobs = 1;
  std::string output;
};

int cmd_bench(const BenchArgs& a) {
  auto config = as::bench::config_from_json(as::io::read_json_file(a.config));
  if (!a.output.empty()) config.output = a.output;
  as::bench::check_config(config);

  std::signal(SIGINT, on_sigint);
  std::size_t rows = 0;
  if (config.output && config.output->string() != "-") {
    std::ofstream out(*config.output);
    if (!out) throw std::runtime_error("cannot write " + config.output->string());
    rows = as::bench::run_bench(config, out, a.jobs, &g_stop);
  } else {
    rows = as::bench::run_bench(config, std::cout, a.jobs, &g_stop);
  }
  if (g_stop.load()) {
    std::cerr << "interrupted after " << rows << " rows\n";
    return 130;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Atom array reconfiguration planner"};
  app.require_subcommand(1);

  GenArgs gen;
  gen.seed = default_seed();
  auto* g = app.add_subcommand("gen", "Generate a random instance");
  g->add_option("--n", gen.n, "Lattice side")->check(CLI::PositiveNumber);
  g->add_option("--alpha", gen.alpha, "Fill probability")->check(CLI::Range(0.0, 1.0));
  g->add_option("--seed", gen.seed, "Random seed (default: $ATOMSHUTTLE_SEED or 0)");
  g->add_option("--kind", gen.kind, "grid or arbitrary")->check(CLI::IsMember({"grid", "arbitrary"}));
  g->add_option("-o,--out", gen.out, "Output file (default stdout)");

  PlanArgs pl;
  auto* p = app.add_subcommand("plan", "Plan a reconfiguration");
  p->add_option("instance", pl.instance, "Instance JSON")->required();
  p->add_option("--strategy", pl.strategy, "auto, grid, two_step or three_step")
      ->check(CLI::IsMember({"auto", "grid", "two_step", "three_step"}));
  p->add_flag("--no-peephole", pl.no_peephole, "Keep every delivery op");
  p->add_flag("--prune-empty", pl.prune_empty, "Drop alignment ops with no rows");
  p->add_option("-o,--out", pl.out, "Plan output file (default: plan and report on stdout)");
  p->add_option("--report", pl.report, "Report output file (default stdout)");
  p->add_option("--t1", pl.t1)->check(CLI::PositiveNumber);
  p->add_option("--t2", pl.t2)->check(CLI::PositiveNumber);

  VerifyArgs ve;
  auto* v = app.add_subcommand("verify", "Replay a plan and run the instance verifier");
  v->add_option("instance", ve.instance, "Instance JSON")->required();
  v->add_option("plan", ve.plan, "Plan JSON (simple or general)")->required();

  EvalArgs ev;
  auto* e = app.add_subcommand("eval", "Cost of a plan");
  e->add_option("instance", ev.instance, "Instance JSON")->required();
  e->add_option("plan", ev.plan, "Plan JSON (simple or general)")->required();
  e->add_option("--model", ev.model, "linear or sqrt")->check(CLI::IsMember({"linear", "sqrt"}));
  e->add_option("--t1", ev.t1)->check(CLI::PositiveNumber);
  e->add_option("--t2", ev.t2)->check(CLI::PositiveNumber);

  BenchArgs be;
  auto* b = app.add_subcommand("bench", "Run a benchmark sweep and write CSV");
  b->add_option("config", be.config, "Bench config JSON")->required();
  b->add_option("--jobs", be.jobs, "Worker threads")->check(CLI::PositiveNumber);
  b->add_option("-o,--output", be.output, "CSV file (overrides the config)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::CallForAllHelp& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kUsage;
  }

  try {
    if (*g) return cmd_gen(gen);
    if (*p) return cmd_plan(pl);
    if (*v) return cmd_verify(ve);
    if (*e) return cmd_eval(ev);
    if (*b) return cmd_bench(be);
  } catch (const as::io::FormatError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kIo;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kUsage;
  } catch (const as::MoveError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kViolation;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kIo;
  }
  return kUsage;
}
