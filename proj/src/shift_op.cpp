#include "atomshuttle/shift_op.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "atomshuttle/errors.hpp"
#include "bits.hpp"

namespace atomshuttle {

namespace {

void check_index_set(const std::vector<int>& indices, int n, const char* what) {
  int prev = 0;
  for (int v : indices) {
    if (v < 1 || v > n)
      throw std::invalid_argument(std::string(what) + " index " + std::to_string(v) + " outside 1.." +
                                  std::to_string(n));
    if (v <= prev) throw std::invalid_argument(std::string(what) + " indices must be strictly increasing");
    prev = v;
  }
}

std::vector<std::uint64_t> column_mask(const std::vector<int>& cols, int words) {
  std::vector<std::uint64_t> mask(words, 0);
  for (int c : cols) detail::set_bit(mask, c);
  return mask;
}

std::vector<int> mirrored(const std::vector<int>& indices, int n) {
  std::vector<int> out;
  out.reserve(indices.size());
  for (auto it = indices.rbegin(); it != indices.rend(); ++it) out.push_back(n + 1 - *it);
  return out;
}

void apply_horizontal(Geometry& out, const ShiftOp& op, std::span<const std::uint64_t> mask) {
  const int n = out.size();
  const std::size_t w = mask.size();
  std::vector<std::uint64_t> moved(w), dest(w);
  for (int i : op.rows) {
    auto row = out.row_words(i);
    for (std::size_t k = 0; k < w; ++k) moved[k] = row[k] & mask[k];
    if (!detail::any(moved)) continue;
    if (op.dir == Direction::Left) {
      if (detail::test_bit(moved, 1)) throw MoveError(MoveError::Kind::Boundary, i, 1);
      detail::shift_toward_low(moved, dest);
    } else {
      if (detail::test_bit(moved, n)) throw MoveError(MoveError::Kind::Boundary, i, n);
      detail::shift_toward_high(moved, dest);
    }
    for (std::size_t k = 0; k < w; ++k) {
      const std::uint64_t clash = dest[k] & row[k] & ~mask[k];
      if (clash) throw MoveError(MoveError::Kind::Collision, i, static_cast<int>(k) * 64 + std::countr_zero(clash) + 1);
    }
    // A uniform shift is injective, so moved atoms cannot land on each other.
    if (detail::popcount(dest) != detail::popcount(moved))
      throw MoveError(MoveError::Kind::Collision, i, detail::first_set(dest));
    for (std::size_t k = 0; k < w; ++k) row[k] = (row[k] & ~mask[k]) | dest[k];
  }
}

void apply_vertical(Geometry& out, const ShiftOp& op, std::span<const std::uint64_t> mask) {
  const int n = out.size();
  const std::size_t w = mask.size();
  const int step = op.dir == Direction::Up ? -1 : 1;
  std::vector<std::uint64_t> lifted(op.rows.size() * w);
  for (std::size_t r = 0; r < op.rows.size(); ++r) {
    auto row = out.row_words(op.rows[r]);
    for (std::size_t k = 0; k < w; ++k) {
      lifted[r * w + k] = row[k] & mask[k];
      row[k] &= ~mask[k];
    }
  }
  for (std::size_t r = 0; r < op.rows.size(); ++r) {
    std::span<const std::uint64_t> moved(lifted.data() + r * w, w);
    if (!detail::any(moved)) continue;
    const int src = op.rows[r];
    const int dst = src + step;
    if (dst < 1 || dst > n) throw MoveError(MoveError::Kind::Boundary, src, detail::first_set(moved));
    auto target = out.row_words(dst);
    for (std::size_t k = 0; k < w; ++k) {
      const std::uint64_t clash = target[k] & moved[k];
      if (clash) throw MoveError(MoveError::Kind::Collision, dst, static_cast<int>(k) * 64 + std::countr_zero(clash) + 1);
      target[k] |= moved[k];
    }
  }
}

}  // namespace

char to_char(Direction dir) noexcept {
  switch (dir) {
    case Direction::Left:
      return 'L';
    case Direction::Right:
      return 'R';
    case Direction::Up:
      return 'U';
    case Direction::Down:
      return 'D';
  }
  return '?';
}

Direction direction_from_string(std::string_view text) {
  if (text == "L") return Direction::Left;
  if (text == "R") return Direction::Right;
  if (text == "U") return Direction::Up;
  if (text == "D") return Direction::Down;
  throw std::invalid_argument("unknown direction '" + std::string(text) + "'");
}

Plan& Plan::then(const Plan& next) {
  ops.insert(ops.end(), next.ops.begin(), next.ops.end());
  return *this;
}

Plan concat(Plan first, const Plan& second) {
  first.then(second);
  return first;
}

void check_op(const ShiftOp& op, int n) {
  check_index_set(op.rows, n, "row");
  check_index_set(op.cols, n, "column");
}

Geometry apply_op(const Geometry& geom, const ShiftOp& op) {
  check_op(op, geom.size());
  if (op.moves_nothing()) return geom;
  Geometry out = geom;
  const auto mask = column_mask(op.cols, geom.words_per_row());
  if (op.dir == Direction::Left || op.dir == Direction::Right)
    apply_horizontal(out, op, mask);
  else
    apply_vertical(out, op, mask);
  return out;
}

Geometry apply_plan(const Geometry& geom, const Plan& plan) {
  Geometry current = geom;
  for (std::size_t k = 0; k < plan.ops.size(); ++k) {
    try {
      current = apply_op(current, plan.ops[k]);
    } catch (const MoveError& e) {
      throw e.with_op_index(static_cast<long>(k));
    }
  }
  return current;
}

int moved_atom_count(const Geometry& geom, const ShiftOp& op) {
  if (op.moves_nothing()) return 0;
  const auto mask = column_mask(op.cols, geom.words_per_row());
  int total = 0;
  for (int i : op.rows) {
    auto row = geom.row_words(i);
    for (std::size_t k = 0; k < mask.size(); ++k) total += std::popcount(row[k] & mask[k]);
  }
  return total;
}

ShiftOp rotate_op(const ShiftOp& op, int n) {
  ShiftOp out;
  out.rows = mirrored(op.cols, n);
  out.cols = op.rows;
  switch (op.dir) {
    case Direction::Up:
      out.dir = Direction::Left;
      break;
    case Direction::Down:
      out.dir = Direction::Right;
      break;
    case Direction::Left:
      out.dir = Direction::Down;
      break;
    case Direction::Right:
      out.dir = Direction::Up;
      break;
  }
  return out;
}

ShiftOp unrotate_op(const ShiftOp& op, int n) {
  ShiftOp out;
  out.rows = op.cols;
  out.cols = mirrored(op.rows, n);
  switch (op.dir) {
    case Direction::Left:
      out.dir = Direction::Up;
      break;
    case Direction::Right:
      out.dir = Direction::Down;
      break;
    case Direction::Up:
      out.dir = Direction::Right;
      break;
    case Direction::Down:
      out.dir = Direction::Left;
      break;
  }
  return out;
}

Plan unrotate_plan(const Plan& plan, int n) {
  Plan out;
  out.ops.reserve(plan.ops.size());
  for (const auto& op : plan.ops) out.ops.push_back(unrotate_op(op, n));
  return out;
}

}  // namespace atomshuttle
