#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace atomshuttle {

/// Raised when a shift operation would push an atom off the lattice or put
/// two atoms on one site. Coordinates are 1-based and name the offending
/// site: the atom's source site for boundary errors, the contested
/// destination for collisions.
class MoveError : public std::runtime_error {
 public:
  enum class Kind { Boundary, Collision };

  MoveError(Kind kind, int row, int col, long op_index = -1);

  Kind kind() const noexcept { return kind_; }
  int row() const noexcept { return row_; }
  int col() const noexcept { return col_; }
  /// Index of the failing op inside a plan, or -1 for a single apply_op.
  long op_index() const noexcept { return op_index_; }

  MoveError with_op_index(long index) const { return MoveError(kind_, row_, col_, index); }

 private:
  Kind kind_;
  int row_;
  int col_;
  long op_index_;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PruneVerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InsufficientAtomsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A decomposition strategy could not be applied to the instance. The
/// dispatcher catches these and moves on to the next strategy.
class StrategyFailure : public std::runtime_error {
 public:
  StrategyFailure(std::string strategy, const std::string& reason)
      : std::runtime_error(strategy + ": " + reason), strategy_(std::move(strategy)), reason_(reason) {}

  const std::string& strategy() const noexcept { return strategy_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string strategy_;
  std::string reason_;
};

/// Violation of the general-operation constraints. move_index is 1-based
/// (0 refers to the initial lattice I0 x J0).
class ConstraintError : public std::runtime_error {
 public:
  enum class Kind { Order, Collision, Bounds };

  ConstraintError(Kind kind, int move_index, const std::string& detail);

  Kind kind() const noexcept { return kind_; }
  int move_index() const noexcept { return move_index_; }

 private:
  Kind kind_;
  int move_index_;
};

const char* to_string(MoveError::Kind kind) noexcept;
const char* to_string(ConstraintError::Kind kind) noexcept;

}  // namespace atomshuttle
