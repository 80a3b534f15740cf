#include "atomshuttle/errors.hpp"

namespace atomshuttle {

namespace {

std::string describe_move(MoveError::Kind kind, int row, int col, long op_index) {
  std::string text = kind == MoveError::Kind::Boundary ? "atom at (" : "collision at (";
  text += std::to_string(row) + ", " + std::to_string(col) + ")";
  if (kind == MoveError::Kind::Boundary) text += " would leave the lattice";
  if (op_index >= 0) text += " in op " + std::to_string(op_index);
  return text;
}

}  // namespace

MoveError::MoveError(Kind kind, int row, int col, long op_index)
    : std::runtime_error(describe_move(kind, row, col, op_index)),
      kind_(kind),
      row_(row),
      col_(col),
      op_index_(op_index) {}

ConstraintError::ConstraintError(Kind kind, int move_index, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + " violation in move " + std::to_string(move_index) + ": " +
                         detail),
      kind_(kind),
      move_index_(move_index) {}

const char* to_string(MoveError::Kind kind) noexcept {
  switch (kind) {
    case MoveError::Kind::Boundary:
      return "boundary";
    case MoveError::Kind::Collision:
      return "collision";
  }
  return "unknown";
}

const char* to_string(ConstraintError::Kind kind) noexcept {
  switch (kind) {
    case ConstraintError::Kind::Order:
      return "order";
    case ConstraintError::Kind::Collision:
      return "collision";
    case ConstraintError::Kind::Bounds:
      return "bounds";
  }
  return "unknown";
}

}  // namespace atomshuttle
