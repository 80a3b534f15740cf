#include "atomshuttle/cost.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "atomshuttle/errors.hpp"
#include "bits.hpp"

namespace atomshuttle {

void check_params(const CostParams& params) {
  if (!(params.t1 > 0.0) || !(params.t2 > 0.0)) throw std::invalid_argument("t1 and t2 must be strictly positive");
}

const char* to_string(CostModel model) noexcept { return model == CostModel::Linear ? "linear" : "sqrt"; }

CostModel cost_model_from_string(std::string_view text) {
  if (text == "linear") return CostModel::Linear;
  if (text == "sqrt") return CostModel::Sqrt;
  throw std::invalid_argument("unknown cost model '" + std::string(text) + "'");
}

double cost_simple(const Plan& plan, const CostParams& params) {
  return static_cast<double>(plan.size()) * (params.t1 + params.t2);
}

namespace {

using Kind = ConstraintError::Kind;

bool strictly_increasing_in(const std::vector<int>& v, int n) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] < 1 || v[k] > n) return false;
    if (k > 0 && v[k] <= v[k - 1]) return false;
  }
  return true;
}

bool in_range(const std::vector<int>& v, int n) {
  return std::all_of(v.begin(), v.end(), [n](int x) { return x >= 1 && x <= n; });
}

bool increasing(const std::vector<int>& v) { return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end(); }

int max_shift(const std::vector<int>& from, const std::vector<int>& to) {
  int best = 0;
  for (std::size_t k = 0; k < from.size(); ++k) best = std::max(best, std::abs(to[k] - from[k]));
  return best;
}

}  // namespace

void validate_general_op(const Geometry& geom, const GeneralOp& op) {
  const int n = geom.size();
  if (!strictly_increasing_in(op.rows0, n) || !strictly_increasing_in(op.cols0, n))
    throw ConstraintError(Kind::Bounds, 0, "initial rows and columns must be strictly increasing within 1.." + std::to_string(n));
  if (op.moves.empty()) throw ConstraintError(Kind::Bounds, 0, "an operation needs at least one move");

  for (std::size_t m = 0; m < op.moves.size(); ++m) {
    const Move& mv = op.moves[m];
    const int idx = static_cast<int>(m) + 1;
    if (mv.row_dest.size() != op.rows0.size() || mv.col_dest.size() != op.cols0.size())
      throw ConstraintError(Kind::Bounds, idx, "destination sequences must match the tweezer size");
    if (!in_range(mv.row_dest, n) || !in_range(mv.col_dest, n))
      throw ConstraintError(Kind::Bounds, idx, "destination outside 1.." + std::to_string(n));
    if (!increasing(mv.row_dest)) throw ConstraintError(Kind::Order, idx, "row order not preserved");
    if (!increasing(mv.col_dest)) throw ConstraintError(Kind::Order, idx, "column order not preserved");
  }

  std::vector<char> in_rows0(n + 1, 0), in_cols0(n + 1, 0);
  for (int i : op.rows0) in_rows0[i] = 1;
  for (int j : op.cols0) in_cols0[j] = 1;

  // Each loaded spot follows its own trajectory and must avoid every
  // occupied site that was not captured.
  for (std::size_t k = 0; k < op.rows0.size(); ++k) {
    const auto row = geom.row_words(op.rows0[k]);
    for (std::size_t l = 0; l < op.cols0.size(); ++l) {
      if (!detail::test_bit(row, op.cols0[l])) continue;
      for (std::size_t m = 0; m < op.moves.size(); ++m) {
        const int i = op.moves[m].row_dest[k];
        const int j = op.moves[m].col_dest[l];
        if (in_rows0[i] && in_cols0[j]) continue;
        if (detail::test_bit(geom.row_words(i), j))
          throw ConstraintError(Kind::Collision, static_cast<int>(m) + 1,
                                "atom from (" + std::to_string(op.rows0[k]) + "," + std::to_string(op.cols0[l]) +
                                    ") passes occupied site (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
}

Geometry execute_general_op(const Geometry& geom, const GeneralOp& op) {
  Geometry out = geom;
  if (op.moves.empty()) return out;
  const Move& last = op.moves.back();
  std::vector<std::pair<int, int>> landing;
  for (std::size_t k = 0; k < op.rows0.size(); ++k)
    for (std::size_t l = 0; l < op.cols0.size(); ++l)
      if (geom.at(op.rows0[k], op.cols0[l])) {
        out.set(op.rows0[k], op.cols0[l], false);
        landing.emplace_back(last.row_dest[k], last.col_dest[l]);
      }
  for (auto [i, j] : landing) out.set(i, j, true);
  return out;
}

double move_distance(const GeneralOp& op, int m) {
  if (m < 1 || m > static_cast<int>(op.moves.size())) throw std::out_of_range("move index out of range");
  const Move& mv = op.moves[m - 1];
  const auto& prev_rows = m == 1 ? op.rows0 : op.moves[m - 2].row_dest;
  const auto& prev_cols = m == 1 ? op.cols0 : op.moves[m - 2].col_dest;
  if (mv.row_dest.size() != prev_rows.size() || mv.col_dest.size() != prev_cols.size())
    throw std::invalid_argument("destination sequences must match the tweezer size");
  const double dr = max_shift(prev_rows, mv.row_dest);
  const double dc = max_shift(prev_cols, mv.col_dest);
  return std::sqrt(dr * dr + dc * dc);
}

double op_cost(const GeneralOp& op, CostModel model) {
  double total = 0.0;
  for (int m = 1; m <= static_cast<int>(op.moves.size()); ++m) {
    const double d = move_distance(op, m);
    total += model == CostModel::Linear ? d : std::sqrt(d);
  }
  return total;
}

std::vector<GeneralOp> lift_simple_to_general(const Plan& plan) {
  std::vector<GeneralOp> out;
  out.reserve(plan.size());
  for (const ShiftOp& op : plan.ops) {
    Move mv{op.rows, op.cols};
    const bool horizontal = op.dir == Direction::Left || op.dir == Direction::Right;
    const int step = (op.dir == Direction::Left || op.dir == Direction::Up) ? -1 : 1;
    for (int& x : horizontal ? mv.col_dest : mv.row_dest) x += step;
    out.push_back(GeneralOp{op.rows, op.cols, {std::move(mv)}});
  }
  return out;
}

double total_transport_cost(std::span<const GeneralOp> ops, CostModel model) {
  double total = 0.0;
  for (const auto& op : ops) total += op_cost(op, model);
  return total;
}

double cost_general(std::span<const GeneralOp> ops, const CostParams& params, CostModel model,
                    const std::optional<Geometry>& initial) {
  if (initial) {
    Geometry current = *initial;
    for (const auto& op : ops) {
      validate_general_op(current, op);
      current = execute_general_op(current, op);
    }
  }
  return static_cast<double>(ops.size()) * params.t1 + total_transport_cost(ops, model) * params.t2;
}

PlanMetrics plan_metrics(const Geometry& initial, const Plan& plan, const CostParams& params) {
  const int n = initial.size();
  PlanMetrics metrics;
  metrics.op_count = static_cast<long>(plan.size());
  metrics.total_transport_cost = static_cast<double>(plan.size());
  metrics.estimated_time_us = cost_simple(plan, params);

  // Atom identities: index of the starting site, -1 for vacant.
  std::vector<int> id(static_cast<std::size_t>(n) * n, -1);
  int atoms = 0;
  for (int i = 1; i <= n; ++i)
    detail::for_each_set_bit(initial.row_words(i), [&](int j) { id[(i - 1) * n + (j - 1)] = atoms++; });
  std::vector<long> moved_by(atoms, 0);

  Geometry current = initial;
  std::vector<std::uint64_t> mask(detail::words_for(n)), sel(mask.size());
  std::vector<std::pair<int, int>> sources;
  std::vector<int> carried;
  for (std::size_t k = 0; k < plan.ops.size(); ++k) {
    const ShiftOp& op = plan.ops[k];
    Geometry next(0);
    try {
      next = apply_op(current, op);
    } catch (const MoveError& e) {
      throw e.with_op_index(static_cast<long>(k));
    }

    std::fill(mask.begin(), mask.end(), 0);
    for (int j : op.cols) detail::set_bit(mask, j);
    sources.clear();
    for (int i : op.rows) {
      const auto row = current.row_words(i);
      for (std::size_t w = 0; w < mask.size(); ++w) sel[w] = row[w] & mask[w];
      detail::for_each_set_bit(sel, [&](int j) { sources.emplace_back(i, j); });
    }
    const int di = op.dir == Direction::Up ? -1 : op.dir == Direction::Down ? 1 : 0;
    const int dj = op.dir == Direction::Left ? -1 : op.dir == Direction::Right ? 1 : 0;
    carried.clear();
    for (auto [i, j] : sources) {
      int& slot = id[(i - 1) * n + (j - 1)];
      carried.push_back(slot);
      ++moved_by[slot];
      slot = -1;
    }
    for (std::size_t s = 0; s < sources.size(); ++s)
      id[(sources[s].first - 1 + di) * n + (sources[s].second - 1 + dj)] = carried[s];
    metrics.total_atom_moves += static_cast<long>(sources.size());
    current = std::move(next);
  }

  if (!plan.empty()) metrics.avg_atoms_per_op = static_cast<double>(metrics.total_atom_moves) / plan.size();
  if (atoms > 0) {
    long per_atom = 0;
    for (long c : moved_by) per_atom += c;
    metrics.avg_distance_per_atom = static_cast<double>(metrics.total_atom_moves) / atoms;
    metrics.avg_ops_per_atom = static_cast<double>(per_atom) / atoms;
  }
  return metrics;
}

}  // namespace atomshuttle
