#include "atomshuttle/instance.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "atomshuttle/errors.hpp"
#include "atomshuttle/rng.hpp"

namespace atomshuttle {

const char* to_string(ProblemKind kind) noexcept { return kind == ProblemKind::Grid ? "grid" : "arbitrary"; }

ProblemKind problem_kind_from_string(std::string_view text) {
  if (text == "grid") return ProblemKind::Grid;
  if (text == "arbitrary") return ProblemKind::Arbitrary;
  throw std::invalid_argument("unknown problem kind '" + std::string(text) + "'");
}

int grid_side(int atom_count) {
  if (atom_count < 0) throw std::invalid_argument("atom count must be non-negative");
  long r = static_cast<long>(std::sqrt(static_cast<double>(atom_count)));
  while (r * r > atom_count) --r;
  while ((r + 1) * (r + 1) <= atom_count) ++r;
  return static_cast<int>(r);
}

ProblemInstance generate_instance(int n, double alpha, std::uint64_t seed, ProblemKind kind) {
  if (n < 1) throw std::invalid_argument("lattice side must be positive");
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("alpha must lie in [0, 1]");

  Xoshiro256StarStar rng(seed);
  ProblemInstance instance;
  instance.n = n;
  instance.kind = kind;
  instance.alpha = alpha;
  instance.seed = seed;
  instance.initial = Geometry(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (rng.uniform01() < alpha) instance.initial.set(i, j, true);

  if (kind == ProblemKind::Arbitrary) {
    const int sites = n * n;
    const int atoms = instance.initial.atom_count();
    std::vector<int> order(sites);
    std::iota(order.begin(), order.end(), 0);
    for (int k = 0; k < atoms; ++k) {
      const auto pick = k + static_cast<int>(rng.bounded(static_cast<std::uint64_t>(sites - k)));
      std::swap(order[k], order[pick]);
    }
    Geometry target(n);
    for (int k = 0; k < atoms; ++k) target.set(order[k] / n + 1, order[k] % n + 1, true);
    instance.target = std::move(target);
  }
  return instance;
}

void check_instance(const ProblemInstance& instance) {
  if (instance.initial.size() != instance.n) throw std::invalid_argument("initial geometry size differs from n");
  if (instance.kind == ProblemKind::Arbitrary) {
    if (!instance.target) throw std::invalid_argument("arbitrary instance without a target");
    if (instance.target->size() != instance.n) throw std::invalid_argument("target geometry size differs from n");
    if (instance.target->atom_count() != instance.initial.atom_count())
      throw std::invalid_argument("target atom count differs from the initial atom count");
  }
}

bool verify_arbitrary(const Geometry& final_geom, const Geometry& target) {
  if (final_geom.size() != target.size())
    throw DimensionMismatch("geometries of side " + std::to_string(final_geom.size()) + " and " +
                            std::to_string(target.size()));
  return final_geom == target;
}

bool verify_grid(const Geometry& final_geom, int atom_count) {
  const int side = grid_side(atom_count);
  const int n = final_geom.size();
  if (side == 0) return true;
  if (side > n) return false;

  // prefix[i][j] = atoms in rows 1..i, columns 1..j
  const int stride = n + 1;
  std::vector<int> prefix(static_cast<std::size_t>(stride) * stride, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      prefix[i * stride + j] = prefix[(i - 1) * stride + j] + prefix[i * stride + j - 1] -
                               prefix[(i - 1) * stride + j - 1] + (final_geom.at(i, j) ? 1 : 0);

  const int full = side * side;
  for (int i0 = 1; i0 + side - 1 <= n; ++i0)
    for (int j0 = 1; j0 + side - 1 <= n; ++j0) {
      const int i1 = i0 + side - 1;
      const int j1 = j0 + side - 1;
      const int inside = prefix[i1 * stride + j1] - prefix[(i0 - 1) * stride + j1] - prefix[i1 * stride + j0 - 1] +
                         prefix[(i0 - 1) * stride + j0 - 1];
      if (inside == full) return true;
    }
  return false;
}

bool verify(const ProblemInstance& instance, const Geometry& final_geom) {
  if (instance.kind == ProblemKind::Grid) return verify_grid(final_geom, instance.atom_count());
  if (!instance.target) throw std::invalid_argument("arbitrary instance without a target");
  return verify_arbitrary(final_geom, *instance.target);
}

}  // namespace atomshuttle
