#include "atomshuttle/bench.hpp"

#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "atomshuttle/errors.hpp"

namespace atomshuttle::bench {

void check_config(const BenchConfig& config) {
  if (config.n_values.empty() || config.alpha_values.empty() || config.kinds.empty() || config.peephole_values.empty())
    throw std::invalid_argument("bench sweep has an empty axis");
  for (int n : config.n_values)
    if (n < 2) throw std::invalid_argument("every n must be at least 2");
  for (double a : config.alpha_values)
    if (!(a >= 0.0 && a <= 1.0)) throw std::invalid_argument("alpha must lie in [0, 1]");
  if (config.seeds_per_cell < 1) throw std::invalid_argument("seeds must be at least 1");
  check_params(config.params);
}

namespace {

template <class T, class F>
std::vector<T> list_of(const io::json& v, F&& convert) {
  std::vector<T> out;
  if (v.is_array())
    for (const auto& x : v) out.push_back(convert(x));
  else
    out.push_back(convert(v));
  return out;
}

}  // namespace

BenchConfig config_from_json(const io::json& doc) {
  if (!doc.is_object()) throw io::FormatError("bench config must be a JSON object");
  BenchConfig config;
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "n")
        config.n_values = list_of<int>(value, [](const io::json& x) { return x.get<int>(); });
      else if (key == "alpha")
        config.alpha_values = list_of<double>(value, [](const io::json& x) { return x.get<double>(); });
      else if (key == "kind")
        config.kinds = list_of<ProblemKind>(value, [](const io::json& x) { return problem_kind_from_string(x.get<std::string>()); });
      else if (key == "seeds")
        config.seeds_per_cell = value.get<int>();
      else if (key == "seed_base")
        config.seed_base = value.get<std::uint64_t>();
      else if (key == "strategy")
        config.strategy = strategy_choice_from_string(value.get<std::string>());
      else if (key == "peephole")
        config.peephole_values = list_of<bool>(value, [](const io::json& x) { return x.get<bool>(); });
      else if (key == "prune_empty")
        config.prune_empty = value.get<bool>();
      else if (key == "t1")
        config.params.t1 = value.get<double>();
      else if (key == "t2")
        config.params.t2 = value.get<double>();
      else if (key == "output")
        config.output = value.get<std::string>();
      else
        throw io::FormatError("unknown bench config key '" + key + "'");
    }
  } catch (const io::json::exception& e) {
    throw io::FormatError(std::string("bad bench config value: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw io::FormatError(e.what());
  }
  if (config.n_values.empty()) throw io::FormatError("bench config needs 'n'");
  if (config.alpha_values.empty()) throw io::FormatError("bench config needs 'alpha'");
  if (config.kinds.empty()) throw io::FormatError("bench config needs 'kind'");
  return config;
}

std::vector<RunSpec> expand(const BenchConfig& config) {
  std::vector<RunSpec> specs;
  for (int n : config.n_values)
    for (double alpha : config.alpha_values)
      for (ProblemKind kind : config.kinds)
        for (bool peephole : config.peephole_values)
          for (int s = 0; s < config.seeds_per_cell; ++s)
            specs.push_back(RunSpec{n, alpha, kind, peephole, config.seed_base + static_cast<std::uint64_t>(s)});
  return specs;
}

RunRecord run_instance(const ProblemInstance& instance, const PlanOptions& options, const CostParams& params) {
  RunRecord rec;
  rec.n = instance.n;
  rec.atom_count = instance.atom_count();
  rec.alpha = instance.alpha;
  rec.seed = instance.seed;
  rec.kind = instance.kind;
  rec.peephole_enabled = options.shuttle.peephole;

  const auto start = std::chrono::steady_clock::now();
  std::optional<PlanResult> result;
  try {
    result = plan(instance, options);
  } catch (const StrategyFailure&) {
  }
  const auto stop = std::chrono::steady_clock::now();
  rec.planning_time_us = std::chrono::duration<double, std::micro>(stop - start).count();

  if (!result) {
    rec.strategy_used = "failed";
    return rec;
  }
  rec.strategy_used = to_string(result->report.strategy_used);
  rec.three_step_used = result->report.strategy_used == Strategy::ThreeStep;
  try {
    const PlanMetrics m = plan_metrics(instance.initial, result->plan, params);
    rec.op_count = m.op_count;
    rec.total_transport_cost = m.total_transport_cost;
    rec.estimated_time_us = m.estimated_time_us;
    rec.avg_atoms_per_op = m.avg_atoms_per_op;
    rec.avg_distance_per_atom = m.avg_distance_per_atom;
    rec.avg_ops_per_atom = m.avg_ops_per_atom;
    rec.success = verify(instance, apply_plan(instance.initial, result->plan));
  } catch (const MoveError&) {
    rec.op_count = static_cast<long>(result->plan.size());
    rec.success = false;
  }
  return rec;
}

RunRecord run_one(const RunSpec& spec, const BenchConfig& config) {
  const ProblemInstance instance = generate_instance(spec.n, spec.alpha, spec.seed, spec.kind);
  PlanOptions options;
  options.strategy = config.strategy;
  options.shuttle.peephole = spec.peephole;
  options.shuttle.prune_empty = config.prune_empty;
  return run_instance(instance, options, config.params);
}

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> columns{
      "n", "N", "alpha", "seed", "kind", "strategy", "success", "op_count", "total_transport_cost",
      "estimated_time_us", "avg_atoms_per_op", "avg_distance_per_atom", "avg_ops_per_atom", "planning_time_us",
      "three_step_used", "peephole_enabled"};
  return columns;
}

std::string csv_header() {
  std::string line;
  for (const auto& c : csv_columns()) {
    if (!line.empty()) line += ',';
    line += c;
  }
  return line;
}

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

const char* flag(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string csv_row(const RunRecord& r) {
  std::string line;
  line += std::to_string(r.n) + ',' + std::to_string(r.atom_count) + ',' + num(r.alpha) + ',' + std::to_string(r.seed);
  line += ',' + std::string(to_string(r.kind)) + ',' + r.strategy_used + ',' + flag(r.success);
  line += ',' + std::to_string(r.op_count) + ',' + num(r.total_transport_cost) + ',' + num(r.estimated_time_us);
  line += ',' + num(r.avg_atoms_per_op) + ',' + num(r.avg_distance_per_atom) + ',' + num(r.avg_ops_per_atom);
  line += ',' + num(r.planning_time_us) + ',' + flag(r.three_step_used) + ',' + flag(r.peephole_enabled);
  return line;
}

std::size_t run_bench(const BenchConfig& config, std::ostream& out, int jobs, const std::atomic<bool>* stop) {
  check_config(config);
  const auto specs = expand(config);
  auto stopped = [stop] { return stop && stop->load(); };

  out << kCsvVersionLine << '\n' << csv_header() << '\n';
  out.flush();

  std::size_t written = 0;
  if (jobs <= 1) {
    for (const auto& spec : specs) {
      if (stopped()) break;
      out << csv_row(run_one(spec, config)) << '\n';
      out.flush();
      ++written;
    }
    return written;
  }

  std::vector<std::optional<RunRecord>> done(specs.size());
  std::mutex mu;
  std::condition_variable cv;
  std::size_t next = 0;
  int active = jobs;
  std::exception_ptr failure;

  auto worker = [&] {
    for (;;) {
      std::size_t k;
      {
        std::lock_guard lock(mu);
        if (next >= specs.size() || stopped() || failure) break;
        k = next++;
      }
      try {
        RunRecord rec = run_one(specs[k], config);
        std::lock_guard lock(mu);
        done[k] = std::move(rec);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
      }
      cv.notify_all();
    }
    {
      std::lock_guard lock(mu);
      --active;
    }
    cv.notify_all();
  };

  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);

  {
    std::unique_lock lock(mu);
    while (written < specs.size()) {
      cv.wait_for(lock, std::chrono::milliseconds(50), [&] { return done[written].has_value() || active == 0; });
      while (written < specs.size() && done[written]) {
        const std::string line = csv_row(*done[written]);
        done[written].reset();
        lock.unlock();
        out << line << '\n';
        out.flush();
        lock.lock();
        ++written;
      }
      if (active == 0) break;
    }
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return written;
}

}  // namespace atomshuttle::bench
