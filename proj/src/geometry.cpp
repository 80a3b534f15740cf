#include "atomshuttle/geometry.hpp"

#include <algorithm>
#include <stdexcept>

#include "bits.hpp"

namespace atomshuttle {

using detail::for_each_set_bit;

Geometry::Geometry(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("lattice side must be non-negative");
  words_ = detail::words_for(n);
  bits_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(words_), 0);
}

Geometry Geometry::from_rows(std::span<const std::string> rows) {
  const int n = static_cast<int>(rows.size());
  Geometry geom(n);
  for (int i = 1; i <= n; ++i) {
    const std::string& row = rows[i - 1];
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("row " + std::to_string(i) + " has length " + std::to_string(row.size()) +
                                  ", expected " + std::to_string(n));
    for (int j = 1; j <= n; ++j) {
      const char c = row[j - 1];
      if (c == '1')
        geom.set(i, j, true);
      else if (c != '0')
        throw std::invalid_argument("row " + std::to_string(i) + " contains a character other than 0/1");
    }
  }
  return geom;
}

Geometry Geometry::from_matrix(const std::vector<std::vector<int>>& cells) {
  const int n = static_cast<int>(cells.size());
  Geometry geom(n);
  for (int i = 1; i <= n; ++i) {
    if (static_cast<int>(cells[i - 1].size()) != n) throw std::invalid_argument("matrix is not square");
    for (int j = 1; j <= n; ++j) {
      const int v = cells[i - 1][j - 1];
      if (v != 0 && v != 1) throw std::invalid_argument("cells must be 0 or 1");
      geom.set(i, j, v == 1);
    }
  }
  return geom;
}

bool Geometry::at(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("site outside the lattice");
  return detail::test_bit(row_words(i), j);
}

void Geometry::set(int i, int j, bool occupied) {
  if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("site outside the lattice");
  if (occupied)
    detail::set_bit(row_words(i), j);
  else
    detail::clear_bit(row_words(i), j);
}

int Geometry::atom_count() const noexcept { return detail::popcount(bits_); }

int Geometry::row_count(int i) const { return detail::popcount(row_words(i)); }

std::span<const std::uint64_t> Geometry::row_words(int i) const {
  if (i < 1 || i > n_) throw std::out_of_range("row outside the lattice");
  return {bits_.data() + static_cast<std::size_t>(i - 1) * words_, static_cast<std::size_t>(words_)};
}

std::span<std::uint64_t> Geometry::row_words(int i) {
  if (i < 1 || i > n_) throw std::out_of_range("row outside the lattice");
  return {bits_.data() + static_cast<std::size_t>(i - 1) * words_, static_cast<std::size_t>(words_)};
}

std::vector<std::string> Geometry::to_rows() const {
  std::vector<std::string> rows(n_, std::string(n_, '0'));
  for (int i = 1; i <= n_; ++i) for_each_set_bit(row_words(i), [&](int j) { rows[i - 1][j - 1] = '1'; });
  return rows;
}

std::vector<int> row_sums(const Geometry& geom) {
  std::vector<int> sums(geom.size());
  for (int i = 1; i <= geom.size(); ++i) sums[i - 1] = geom.row_count(i);
  return sums;
}

std::vector<int> col_sums(const Geometry& geom) {
  std::vector<int> sums(geom.size(), 0);
  for (int i = 1; i <= geom.size(); ++i) for_each_set_bit(geom.row_words(i), [&](int j) { ++sums[j - 1]; });
  return sums;
}

Geometry rotate90(const Geometry& geom) {
  const int n = geom.size();
  Geometry out(n);
  for (int i = 1; i <= n; ++i)
    for_each_set_bit(geom.row_words(i), [&](int j) { detail::set_bit(out.row_words(n + 1 - j), i); });
  return out;
}

Geometry rotate90_inverse(const Geometry& geom) {
  const int n = geom.size();
  Geometry out(n);
  for (int i = 1; i <= n; ++i)
    for_each_set_bit(geom.row_words(i), [&](int j) { detail::set_bit(out.row_words(j), n + 1 - i); });
  return out;
}

bool is_partially_left_aligned(const Geometry& geom, int x) {
  const int n = geom.size();
  for (int i = 1; i <= n; ++i) {
    bool seen_gap = false;
    for (int j = std::max(x, 1); j <= n; ++j) {
      const bool occupied = geom.at(i, j);
      if (occupied && seen_gap) return false;
      if (!occupied) seen_gap = true;
    }
  }
  return true;
}

bool is_left_aligned(const Geometry& geom) { return is_partially_left_aligned(geom, 1); }

}  // namespace atomshuttle
