#pragma once

// Slow, obviously-correct reference implementations used to check the
// library. Everything here works on plain 0-based int matrices.

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "atomshuttle/cost.hpp"
#include "atomshuttle/geometry.hpp"
#include "atomshuttle/shift_op.hpp"

namespace oracle {

using Dense = std::vector<std::vector<int>>;

inline Dense dense(const atomshuttle::Geometry& g) {
  const int n = g.size();
  Dense d(n, std::vector<int>(n, 0));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) d[i - 1][j - 1] = g.at(i, j) ? 1 : 0;
  return d;
}

inline atomshuttle::Geometry geometry(const Dense& d) { return atomshuttle::Geometry::from_matrix(d); }

inline int count(const Dense& d) {
  int c = 0;
  for (const auto& r : d)
    for (int v : r) c += v;
  return c;
}

// Moves every selected atom one site; nullopt on boundary exit or collision.
inline std::optional<Dense> step(const Dense& a, const atomshuttle::ShiftOp& op) {
  const int n = static_cast<int>(a.size());
  int di = 0, dj = 0;
  switch (op.dir) {
    case atomshuttle::Direction::Left: dj = -1; break;
    case atomshuttle::Direction::Right: dj = 1; break;
    case atomshuttle::Direction::Up: di = -1; break;
    case atomshuttle::Direction::Down: di = 1; break;
  }
  Dense out = a;
  std::vector<std::pair<int, int>> movers;
  for (int i : op.rows)
    for (int j : op.cols)
      if (a[i - 1][j - 1]) movers.emplace_back(i - 1, j - 1);
  for (auto [i, j] : movers) out[i][j] = 0;
  for (auto [i, j] : movers) {
    const int ni = i + di, nj = j + dj;
    if (ni < 0 || ni >= n || nj < 0 || nj >= n) return std::nullopt;
    if (out[ni][nj]) return std::nullopt;
    out[ni][nj] = 1;
  }
  return out;
}

inline std::optional<Dense> replay(Dense a, const atomshuttle::Plan& plan) {
  for (const auto& op : plan.ops) {
    auto next = step(a, op);
    if (!next) return std::nullopt;
    a = std::move(*next);
  }
  return a;
}

inline Dense pack_left(const Dense& a) {
  Dense out(a.size(), std::vector<int>(a.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    int r = 0;
    for (int v : a[i]) r += v;
    for (int j = 0; j < r; ++j) out[i][j] = 1;
  }
  return out;
}

// Anchor-by-anchor scan for a full LxL block.
inline bool has_grid(const Dense& a, int atoms) {
  const int n = static_cast<int>(a.size());
  int L = 0;
  while ((L + 1) * (L + 1) <= atoms) ++L;
  if (L == 0) return true;
  for (int i0 = 0; i0 + L <= n; ++i0)
    for (int j0 = 0; j0 + L <= n; ++j0) {
      bool full = true;
      for (int i = i0; i < i0 + L && full; ++i)
        for (int j = j0; j < j0 + L && full; ++j) full = a[i][j] == 1;
      if (full) return true;
    }
  return false;
}

// Every (R, C) pair realized by some n x n binary matrix, encoded base n+1.
inline std::set<std::pair<int, int>> realizable_margins(int n) {
  std::set<std::pair<int, int>> out;
  const int cells = n * n;
  for (long mask = 0; mask < (1L << cells); ++mask) {
    int rcode = 0, ccode = 0;
    for (int i = 0; i < n; ++i) {
      int r = 0;
      for (int j = 0; j < n; ++j) r += (mask >> (i * n + j)) & 1;
      rcode = rcode * (n + 1) + r;
    }
    for (int j = 0; j < n; ++j) {
      int c = 0;
      for (int i = 0; i < n; ++i) c += (mask >> (i * n + j)) & 1;
      ccode = ccode * (n + 1) + c;
    }
    out.emplace(rcode, ccode);
  }
  return out;
}

inline std::vector<int> decode(int code, int n) {
  std::vector<int> v(n);
  for (int k = n - 1; k >= 0; --k) {
    v[k] = code % (n + 1);
    code /= n + 1;
  }
  return v;
}

enum class Verdict { Ok, Bounds, Order, Collision };

// Literal sweep-set reading of the general-op constraints: every pair of
// tweezer lines keeps its order, and every occupied, uncaptured site in the
// swept set is only ever reached by empty spots.
inline Verdict check_general(const Dense& a, const atomshuttle::GeneralOp& op) {
  const int n = static_cast<int>(a.size());
  auto inside = [n](int v) { return v >= 1 && v <= n; };
  for (std::size_t k = 0; k < op.rows0.size(); ++k)
    if (!inside(op.rows0[k]) || (k && op.rows0[k] <= op.rows0[k - 1])) return Verdict::Bounds;
  for (std::size_t k = 0; k < op.cols0.size(); ++k)
    if (!inside(op.cols0[k]) || (k && op.cols0[k] <= op.cols0[k - 1])) return Verdict::Bounds;
  if (op.moves.empty()) return Verdict::Bounds;

  for (const auto& mv : op.moves) {
    if (mv.row_dest.size() != op.rows0.size() || mv.col_dest.size() != op.cols0.size()) return Verdict::Bounds;
    for (int v : mv.row_dest)
      if (!inside(v)) return Verdict::Bounds;
    for (int v : mv.col_dest)
      if (!inside(v)) return Verdict::Bounds;
    for (std::size_t p = 0; p < mv.row_dest.size(); ++p)
      for (std::size_t q = p + 1; q < mv.row_dest.size(); ++q)
        if (mv.row_dest[p] >= mv.row_dest[q]) return Verdict::Order;
    for (std::size_t p = 0; p < mv.col_dest.size(); ++p)
      for (std::size_t q = p + 1; q < mv.col_dest.size(); ++q)
        if (mv.col_dest[p] >= mv.col_dest[q]) return Verdict::Order;
  }

  auto captured = [&](int i, int j) {
    return std::count(op.rows0.begin(), op.rows0.end(), i) && std::count(op.cols0.begin(), op.cols0.end(), j);
  };
  for (const auto& mv : op.moves)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (!a[i - 1][j - 1] || captured(i, j)) continue;
        for (std::size_t k = 0; k < mv.row_dest.size(); ++k)
          for (std::size_t l = 0; l < mv.col_dest.size(); ++l)
            if (mv.row_dest[k] == i && mv.col_dest[l] == j && a[op.rows0[k] - 1][op.cols0[l] - 1])
              return Verdict::Collision;
      }
  return Verdict::Ok;
}

// Site-by-site execution; nullopt if two atoms ever share a site.
inline std::optional<Dense> execute_general(const Dense& a, const atomshuttle::GeneralOp& op) {
  std::vector<std::pair<std::size_t, std::size_t>> loaded;
  for (std::size_t k = 0; k < op.rows0.size(); ++k)
    for (std::size_t l = 0; l < op.cols0.size(); ++l)
      if (a[op.rows0[k] - 1][op.cols0[l] - 1]) loaded.emplace_back(k, l);
  Dense rest = a;
  for (auto [k, l] : loaded) rest[op.rows0[k] - 1][op.cols0[l] - 1] = 0;
  for (const auto& mv : op.moves) {
    Dense frame = rest;
    for (auto [k, l] : loaded) {
      int& cell = frame[mv.row_dest[k] - 1][mv.col_dest[l] - 1];
      if (cell) return std::nullopt;
      cell = 1;
    }
    if (&mv == &op.moves.back()) return frame;
  }
  return rest;
}

inline Dense random_dense(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Dense d(n, std::vector<int>(n, 0));
  for (auto& r : d)
    for (auto& v : r) v = coin(rng) ? 1 : 0;
  return d;
}

}  // namespace oracle

namespace atomshuttle {

// Readable gtest failure output.
inline void PrintTo(const Geometry& g, std::ostream* os) {
  *os << "\n";
  for (const auto& row : g.to_rows()) *os << "  " << row << "\n";
}

}  // namespace atomshuttle
