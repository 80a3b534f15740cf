#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "atomshuttle/geometry.hpp"

namespace atomshuttle {

enum class Direction { Left, Right, Up, Down };

char to_char(Direction dir) noexcept;
/// Accepts "L", "R", "U", "D". Throws std::invalid_argument otherwise.
Direction direction_from_string(std::string_view text);

/// One simple tweezer operation: every atom on rows x cols moves one site in
/// `dir`. Row and column indices are 1-based and strictly increasing. An
/// empty row or column set is legal and moves nothing.
struct ShiftOp {
  Direction dir = Direction::Left;
  std::vector<int> rows;
  std::vector<int> cols;

  bool moves_nothing() const noexcept { return rows.empty() || cols.empty(); }
  bool operator==(const ShiftOp&) const = default;
};

/// Ordered sequence of shift operations, applied front to back.
struct Plan {
  std::vector<ShiftOp> ops;

  std::size_t size() const noexcept { return ops.size(); }
  bool empty() const noexcept { return ops.empty(); }

  /// Appends `next` so that its ops run after ours.
  Plan& then(const Plan& next);

  bool operator==(const Plan&) const = default;
};

/// `first` followed by `second`.
Plan concat(Plan first, const Plan& second);

/// Throws std::invalid_argument when the op's index sets are not strictly
/// increasing within 1..n.
void check_op(const ShiftOp& op, int n);

/// Applies one shift. Throws MoveError on boundary exit or collision.
Geometry apply_op(const Geometry& geom, const ShiftOp& op);
/// Left fold of apply_op. A MoveError carries the failing op's index.
Geometry apply_plan(const Geometry& geom, const Plan& plan);

/// Number of atoms the op would displace on `geom`.
int moved_atom_count(const Geometry& geom, const ShiftOp& op);

/// Maps an op acting on `A` to the op with the same effect on rotate90(A).
ShiftOp rotate_op(const ShiftOp& op, int n);
/// Maps an op acting on rotate90(A) back to the equivalent op on `A`.
ShiftOp unrotate_op(const ShiftOp& op, int n);
Plan unrotate_plan(const Plan& plan, int n);

}  // namespace atomshuttle
