#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "atshape/shape.hpp"

namespace atshape {

// Canonical tile labels used by the named decompositions and the solver's
// built-in tile sets.
inline constexpr std::string_view kCase1TileName = "U1";
inline constexpr std::string_view kCase1TwistTileName = "U1xA";
inline constexpr std::string_view kCase2TileName = "U2";

/// One summand of a decomposition: a grounded tile placed at `shift`.
struct Summand {
  GradedShape tile;
  std::string label;
  std::int64_t shift = 0;
};

/// A decomposition presented as a list of shifted tiles. `total` is always
/// recomputed from the summands, never supplied by the caller.
struct NamedDecomposition {
  std::vector<Summand> summands;
  GradedShape total;

  static NamedDecomposition of(std::vector<Summand> summands);
};

/// One F at each shift 0..length-1 (the split projective-space shape).
GradedShape projective_space_shape(std::int64_t length);

/// The Weil-transfer grid shape for an odd side length, computed by the
/// closed-form diagonal/pair count per shift: one F at every even shift 2i
/// (the swap-fixed diagonal) plus one F and one A at shift i+j for every
/// unordered pair i < j. countF = side(side+1)/2, countA = side(side-1)/2.
GradedShape weil_closed(std::int64_t side);

/// Independent brute-force route to the same shape: enumerate all side^2
/// basis cells (i, j) and split each swap orbit; a fixed cell gives F{2i},
/// a 2-element orbit gives F{i+j} + A{i+j}.
GradedShape weil_oracle(std::int64_t side);

/// First candidate upper shape: F F ... F (length entries, odd length).
GradedShape upper_case1(std::int64_t length);

/// Second candidate upper shape: F A F A ... F, starting and ending with F;
/// (length+1)/2 copies of F alternating with (length-1)/2 copies of A.
GradedShape upper_case2(std::int64_t length);

/// Case-1 tiling of the Weil grid: U1 at even shifts 0..side-1 and U1xA at
/// odd shifts 1..side-2.
NamedDecomposition decomposition_M(std::int64_t side);

/// Case-2 tiling of the Weil grid: U2 at every shift 0..side-1.
NamedDecomposition decomposition_second(std::int64_t side);

/// The involution-variety grid: U2 at shifts 0..side-2 (one row fewer).
NamedDecomposition decomposition_third(std::int64_t side);

struct InvolutionCounts {
  Int a;        ///< 2^i * C((side-1)/2, i)
  Int b;        ///< C(side, i) * C(side-i, i)
  Int count_f;  ///< (b + a) / 2
  Int count_a;  ///< (b - a) / 2
};

/// Class counts of the rank-i isotropic-ideal variety's shape. Throws
/// std::logic_error if (b +- a)/2 fails to be integral (never expected).
InvolutionCounts involution_counts(std::int64_t side, std::int64_t index);

/// Rank of the flag variety of (index-plane inside (side-index)-plane)
/// flags: the multinomial side! / (index! * (side-2*index)! * index!).
/// Counted by literal enumeration of disjoint subset pairs for small sides
/// and by exact factorial arithmetic for large ones.
Int flag_rank_oracle(std::int64_t side, std::int64_t index);

/// Whether decomposition_third(side).total plus upper_case2(side) shifted by
/// side-1 reassembles the full Weil grid.
bool verify_final_identity(std::int64_t side);

/// Exact binomial coefficient via the Pascal recurrence (no floating point).
Int binomial(std::int64_t n, std::int64_t k);

}  // namespace atshape
