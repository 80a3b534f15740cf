#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "atomshuttle/geometry.hpp"

namespace atomshuttle {

enum class ProblemKind { Arbitrary, Grid };

const char* to_string(ProblemKind kind) noexcept;
ProblemKind problem_kind_from_string(std::string_view text);

/// A reconfiguration problem. Arbitrary instances carry an explicit target
/// with the same atom count as `initial`; grid instances do not (the
/// verifier accepts any placement containing a full L x L block).
struct ProblemInstance {
  int n = 0;
  Geometry initial;
  ProblemKind kind = ProblemKind::Grid;
  std::optional<Geometry> target;
  double alpha = 0.0;
  std::uint64_t seed = 0;

  int atom_count() const noexcept { return initial.atom_count(); }
};

/// floor(sqrt(atom_count)), exact for all non-negative ints.
int grid_side(int atom_count);

/// Samples an instance. Every site of the initial geometry is occupied
/// independently with probability alpha. Arbitrary targets place exactly N
/// atoms uniformly among the n^2 sites via a partial Fisher-Yates shuffle.
/// The random stream is documented in rng.hpp; identical arguments always
/// give identical instances.
ProblemInstance generate_instance(int n, double alpha, std::uint64_t seed, ProblemKind kind);

/// Throws std::invalid_argument when an arbitrary instance's target is
/// missing, sized differently, or holds a different atom count.
void check_instance(const ProblemInstance& instance);

/// Cell-for-cell equality. Throws DimensionMismatch on differing sizes.
bool verify_arbitrary(const Geometry& final_geom, const Geometry& target);

/// True iff final_geom contains a fully occupied L x L block anywhere, with
/// L = floor(sqrt(atom_count)). Uses 2D prefix sums.
bool verify_grid(const Geometry& final_geom, int atom_count);

/// Dispatches on the instance kind.
bool verify(const ProblemInstance& instance, const Geometry& final_geom);

}  // namespace atomshuttle
