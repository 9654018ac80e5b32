#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "atshape/generators.hpp"
#include "atshape/shape.hpp"
#include "atshape/solver.hpp"
#include "atshape/verify.hpp"

namespace atshape {

using json = nlohmann::json;

/// Exact integers are emitted as JSON numbers while they fit a signed 64-bit
/// value and as decimal strings beyond that; parsing accepts both forms.
json int_to_json(const Int& value);
Int int_from_json(const json& value);

/// "p/q" with the fraction fully reduced, or "inf" for the A-free case.
std::string ratio_to_string(const Ratio& ratio);

/// Canonical shape serialization: records {shift, class, mult} sorted by
/// shift and then class (F before A), with no zero-multiplicity records.
/// Textual equality of the serialized form equals semantic equality.
json shape_to_json(const GradedShape& shape);
GradedShape shape_from_json(const json& value);

json stats_to_json(const ShapeStats& shape_stats);
json params_to_json(const Params& params);

/// Placement records {tile, shift} sorted by shift and then tile name.
json tiling_to_json(const Tiling& tiling);

/// The shape's class letters in shift order, when the shape occupies a
/// contiguous run of shifts with exactly one class of multiplicity 1 each;
/// nullopt otherwise (and for the empty shape).
std::optional<std::string> shape_word(const GradedShape& shape);

/// One grid row per summand: its word starting at the placement column.
struct GridRow {
  std::int64_t shift = 0;
  std::string tile;
  std::string word;
};

std::vector<GridRow> grid_rows(const NamedDecomposition& decomposition);

/// The raw line grid of the Weil-transfer shape: `side` rows of length
/// `side`, row k starting at column k, alternating F-lines and A-lines.
std::vector<GridRow> line_grid_rows(std::int64_t side);

json grid_to_json(const std::vector<GridRow>& rows);

/// Fixed-width text rendering (two characters per column).
std::string render_grid(const std::vector<GridRow>& rows);

/// Multi-line human-readable listing: optional word line, one line per
/// occupied shift, and a closing stats line.
std::string describe_shape(const GradedShape& shape);

std::string describe_tiling(const Tiling& tiling);

json report_to_json(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

json sweep_to_json(const SweepResult& sweep);
std::string sweep_to_text(const SweepResult& sweep);

}  // namespace atshape
