#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace atomshuttle {

/// Occupancy of an n x n static trap lattice.
///
/// Indices in the public API are 1-based (row i, column j in 1..n). Rows are
/// bit-packed, one 64-bit word per 64 columns; column j of a row is bit
/// (j - 1) of that row's word span. Padding bits past column n are always 0.
class Geometry {
 public:
  Geometry() = default;
  explicit Geometry(int n);

  /// Parses rows of '0'/'1' characters. Throws std::invalid_argument on a
  /// non-square shape or any other character.
  static Geometry from_rows(std::span<const std::string> rows);
  static Geometry from_matrix(const std::vector<std::vector<int>>& cells);

  int size() const noexcept { return n_; }
  int words_per_row() const noexcept { return words_; }

  bool at(int i, int j) const;
  void set(int i, int j, bool occupied);

  int atom_count() const noexcept;
  int row_count(int i) const;

  std::span<const std::uint64_t> row_words(int i) const;
  std::span<std::uint64_t> row_words(int i);

  std::vector<std::string> to_rows() const;

  bool operator==(const Geometry&) const = default;

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

std::vector<int> row_sums(const Geometry& geom);
std::vector<int> col_sums(const Geometry& geom);

/// Counter-clockwise quarter turn: site (i, j) moves to (n + 1 - j, i).
/// Column 1 of the result is row 1 of the input, so a left shift in rotated
/// space is an up shift in the original.
Geometry rotate90(const Geometry& geom);
/// Inverse of rotate90 (a clockwise quarter turn).
Geometry rotate90_inverse(const Geometry& geom);

/// True when every row has its atoms packed into its leftmost columns.
bool is_left_aligned(const Geometry& geom);
/// True when A(i,j) >= A(i,j+1) holds for every row and every j >= x
/// (with A(i,n+1) = 0).
bool is_partially_left_aligned(const Geometry& geom, int x);

}  // namespace atomshuttle
