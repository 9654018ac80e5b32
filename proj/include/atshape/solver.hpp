#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "atshape/generators.hpp"
#include "atshape/shape.hpp"

namespace atshape {

/// Thrown when a request exceeds a configured search bound.
struct bound_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A named building block. Its minimum occupied shift must be 0, so a
/// placement is identified by the shift of its leading class.
struct Tile {
  std::string name;
  GradedShape shape;

  Tile(std::string name, GradedShape shape);
};

struct Placement {
  std::string tile;
  std::int64_t shift = 0;

  bool operator==(const Placement&) const = default;
};

/// A multiset of placements, canonically sorted by (shift, tile name).
struct Tiling {
  std::vector<Placement> placements;

  bool operator==(const Tiling&) const = default;
};

struct SolverConfig {
  std::int64_t tiling_cap = 10000;  ///< stop exhaustive enumeration after this many tilings
  std::int64_t rank_bound = 200;    ///< largest target rank the exhaustive search accepts
};

enum class PeelStatus { tiled, stuck, nondeterministic };

struct PeelResult {
  PeelStatus status = PeelStatus::stuck;
  Tiling tiling;       // valid when status == tiled
  std::string detail;  // diagnostic for the failure statuses
};

/// Direct sum of all shifted tile shapes named by `tiling`. Tile names must
/// be unique within `tiles`.
GradedShape tiling_sum(const Tiling& tiling, std::span<const Tile> tiles);

/// The placements of a named decomposition as a canonical tiling.
Tiling decomposition_tiling(const NamedDecomposition& decomposition);

/// Deterministic peeling: repeatedly place, at the minimum uncovered shift,
/// the tile whose leading class matches the uncovered class there (when both
/// classes are uncovered, the one with larger multiplicity goes first, ties
/// F before A). Requires every tile to lead with a single class of
/// multiplicity 1 and all leading classes to be pairwise distinct; violations
/// yield PeelStatus::nondeterministic. Returned tilings are re-summed and
/// checked against the target before they are handed back.
PeelResult greedy_peel(const GradedShape& target, std::span<const Tile> tiles);

struct ExhaustiveResult {
  std::vector<Tiling> tilings;
  bool capped = false;  ///< enumeration stopped at the cap; the list may be incomplete
};

/// Complete backtracking enumeration of all tilings up to multiset equality,
/// branching at the minimum uncovered shift and trying tiles in input order.
/// Throws bound_error when the target rank exceeds config.rank_bound.
ExhaustiveResult exhaustive_tilings(const GradedShape& target, std::span<const Tile> tiles,
                                    const SolverConfig& config = {});

enum class RatioVerdict { excluded, not_excluded };

/// Aggregate F:A ratio obstruction: a twisted tile is excluded when its
/// untwisted partner already matches the target's ratio exactly and the tile
/// itself sits strictly below it (any mix would drag the total under the
/// target). A tile carrying A against an A-free target is excluded outright.
RatioVerdict obstruction_ratio(const GradedShape& target, const Tile& tile);

struct DivisibilityReport {
  bool possible = true;
  Int modulus;    ///< gcd of the tiles' F-counts
  Int remainder;  ///< countF(target) mod modulus (countF itself when modulus is 0)
};

/// Counting obstruction: every tiling's F-count is a multiple of the gcd of
/// the tiles' F-counts, so a target violating that admits no tiling.
DivisibilityReport obstruction_divisibility(const GradedShape& target, std::span<const Tile> tiles);

struct CaseReport {
  bool feasible = false;
  Tiling tiling;  // valid when feasible
  std::string detail;
  std::optional<std::size_t> tiling_count;  // set when the exhaustive pass ran
  bool exhaustive_capped = false;
};

struct UpperShapeReport {
  CaseReport case1;
  CaseReport case2;
};

/// The two candidate tile sets for the upper shape.
std::vector<Tile> case1_tiles(std::int64_t side);  ///< {U1, U1xA}
std::vector<Tile> case2_tiles(std::int64_t side);  ///< {U2}

/// Tiles the Weil grid of the given side with both candidate tile sets,
/// reporting feasibility of each; the exhaustive uniqueness pass runs when
/// the grid rank is within config.rank_bound.
UpperShapeReport infer_upper_shape(std::int64_t side, const SolverConfig& config = {});

}  // namespace atshape
