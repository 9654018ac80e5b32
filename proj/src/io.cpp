#include "atshape/io.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace atshape {

namespace {

constexpr auto kInt64Max = std::numeric_limits<std::int64_t>::max();
constexpr auto kInt64Min = std::numeric_limits<std::int64_t>::min();

ArtinClass class_from_string(const std::string& text) {
  if (text == "F") {
    return ArtinClass::F;
  }
  if (text == "A") {
    return ArtinClass::A;
  }
  throw std::invalid_argument("unknown class '" + text + "' (expected \"F\" or \"A\")");
}

std::string cell_to_text(const ClassCounts& counts) {
  std::string out;
  const auto append = [&out](const Int& mult, char letter) {
    if (mult == 0) {
      return;
    }
    if (!out.empty()) {
      out += ' ';
    }
    if (mult != 1) {
      out += mult.str();
    }
    out += letter;
  };
  append(counts.f, 'F');
  append(counts.a, 'A');
  return out;
}

}  // namespace

json int_to_json(const Int& value) {
  if (value >= kInt64Min && value <= kInt64Max) {
    return value.convert_to<std::int64_t>();
  }
  return value.str();
}

Int int_from_json(const json& value) {
  if (value.is_number_unsigned()) {
    return Int(value.get<std::uint64_t>());
  }
  if (value.is_number_integer()) {
    return Int(value.get<std::int64_t>());
  }
  if (value.is_string()) {
    try {
      return Int(value.get<std::string>());
    } catch (const std::exception&) {
      throw std::invalid_argument("not a decimal integer: '" + value.get<std::string>() + "'");
    }
  }
  throw std::invalid_argument("expected an integer or a decimal string, got " + value.dump());
}

std::string ratio_to_string(const Ratio& ratio) {
  if (ratio.infinite) {
    return "inf";
  }
  return numerator(ratio.value).str() + "/" + denominator(ratio.value).str();
}

json shape_to_json(const GradedShape& shape) {
  json records = json::array();
  for (const auto& [shift, counts] : shape.entries()) {
    if (counts.f != 0) {
      records.push_back({{"shift", shift}, {"class", "F"}, {"mult", int_to_json(counts.f)}});
    }
    if (counts.a != 0) {
      records.push_back({{"shift", shift}, {"class", "A"}, {"mult", int_to_json(counts.a)}});
    }
  }
  return records;
}

GradedShape shape_from_json(const json& value) {
  if (!value.is_array()) {
    throw std::invalid_argument("shape serialization must be an array of records");
  }
  GradedShape::Entries entries;
  for (const auto& record : value) {
    if (!record.is_object() || !record.contains("shift") || !record.contains("class") ||
        !record.contains("mult")) {
      throw std::invalid_argument("shape record must carry shift, class and mult: " +
                                  record.dump());
    }
    if (!record.at("shift").is_number_integer() && !record.at("shift").is_number_unsigned()) {
      throw std::invalid_argument("shape record shift must be an integer: " + record.dump());
    }
    const auto shift = record.at("shift").get<std::int64_t>();
    if (shift < 0) {
      throw std::invalid_argument("shape record shift must be >= 0, got " +
                                  std::to_string(shift));
    }
    const ArtinClass cls = class_from_string(record.at("class").get<std::string>());
    const Int mult = int_from_json(record.at("mult"));
    if (mult < 0) {
      throw std::invalid_argument("shape record mult must be >= 0, got " + mult.str());
    }
    entries[shift].of(cls) += mult;
  }
  return GradedShape::from_entries(std::move(entries));
}

json stats_to_json(const ShapeStats& shape_stats) {
  return json{{"rank", int_to_json(shape_stats.rank)},
              {"countF", int_to_json(shape_stats.count_f)},
              {"countA", int_to_json(shape_stats.count_a)},
              {"ratio", ratio_to_string(shape_stats.ratio)}};
}

json params_to_json(const Params& params) {
  return json{{"p", params.p}, {"n", params.n}, {"N", params.N}};
}

json tiling_to_json(const Tiling& tiling) {
  json records = json::array();
  for (const auto& placement : tiling.placements) {
    records.push_back({{"tile", placement.tile}, {"shift", placement.shift}});
  }
  return records;
}

std::optional<std::string> shape_word(const GradedShape& shape) {
  if (shape.empty()) {
    return std::nullopt;
  }
  std::string word;
  std::int64_t expected = shape.min_shift();
  for (const auto& [shift, counts] : shape.entries()) {
    if (shift != expected) {
      return std::nullopt;  // gap
    }
    const bool single_f = counts.f == 1 && counts.a == 0;
    const bool single_a = counts.f == 0 && counts.a == 1;
    if (!single_f && !single_a) {
      return std::nullopt;
    }
    word += single_f ? 'F' : 'A';
    ++expected;
  }
  return word;
}

std::vector<GridRow> grid_rows(const NamedDecomposition& decomposition) {
  std::vector<GridRow> rows;
  rows.reserve(decomposition.summands.size());
  for (const auto& summand : decomposition.summands) {
    const auto word = shape_word(summand.tile);
    if (!word.has_value()) {
      throw std::invalid_argument("grid rows need word-like tiles (one class per shift, "
                                  "multiplicity 1, no gaps)");
    }
    rows.push_back({summand.shift + summand.tile.min_shift(), summand.label, *word});
  }
  std::sort(rows.begin(), rows.end(), [](const GridRow& lhs, const GridRow& rhs) {
    return std::tie(lhs.shift, lhs.tile) < std::tie(rhs.shift, rhs.tile);
  });
  return rows;
}

std::vector<GridRow> line_grid_rows(std::int64_t side) {
  if (side < 1 || side % 2 == 0) {
    throw std::invalid_argument("line grid needs an odd side >= 1");
  }
  std::vector<GridRow> rows;
  rows.reserve(static_cast<std::size_t>(side));
  for (std::int64_t k = 0; k < side; ++k) {
    const bool is_f = k % 2 == 0;
    rows.push_back({k, is_f ? "F-line" : "A-line",
                    std::string(static_cast<std::size_t>(side), is_f ? 'F' : 'A')});
  }
  return rows;
}

json grid_to_json(const std::vector<GridRow>& rows) {
  json records = json::array();
  for (const auto& row : rows) {
    records.push_back({{"shift", row.shift}, {"tile", row.tile}, {"word", row.word}});
  }
  return records;
}

std::string render_grid(const std::vector<GridRow>& rows) {
  std::string out;
  for (const auto& row : rows) {
    out.append(static_cast<std::size_t>(2 * row.shift), ' ');
    for (std::size_t i = 0; i < row.word.size(); ++i) {
      if (i > 0) {
        out += ' ';
      }
      out += row.word[i];
    }
    out += '\n';
  }
  return out;
}

std::string describe_shape(const GradedShape& shape) {
  std::ostringstream out;
  if (const auto word = shape_word(shape)) {
    out << "word:";
    for (const char letter : *word) {
      out << ' ' << letter;
    }
    out << '\n';
  }
  if (shape.empty()) {
    out << "  (empty)\n";
  }
  for (const auto& [shift, counts] : shape.entries()) {
    out << "  " << shift << ": " << cell_to_text(counts) << '\n';
  }
  const ShapeStats shape_stats = stats(shape);
  out << "rank " << shape_stats.rank << "  F " << shape_stats.count_f << "  A "
      << shape_stats.count_a << "  ratio " << ratio_to_string(shape_stats.ratio) << '\n';
  return out.str();
}

std::string describe_tiling(const Tiling& tiling) {
  std::ostringstream out;
  for (const auto& placement : tiling.placements) {
    out << "  " << placement.shift << ": " << placement.tile << '\n';
  }
  return out.str();
}

json report_to_json(const VerificationReport& report) {
  json details = json::array();
  for (const auto& detail : report.details) {
    details.push_back({{"name", detail.name},
                       {"verdict", std::string(verdict_name(detail.verdict))},
                       {"info", detail.info}});
  }
  return json{{"check", std::string(check_name(report.check))},
              {"verdict", std::string(verdict_name(report.verdict))},
              {"details", std::move(details)}};
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "verify " << check_name(report.check) << "  p=" << report.params.p
      << " n=" << report.params.n << " N=" << report.params.N << ": "
      << verdict_name(report.verdict) << '\n';
  for (const auto& detail : report.details) {
    out << "  [" << verdict_name(detail.verdict) << "] " << detail.name << ": " << detail.info
        << '\n';
  }
  return out.str();
}

json sweep_to_json(const SweepResult& sweep) {
  json rows = json::array();
  for (const auto& row : sweep.rows) {
    json entry{{"params", params_to_json(row.params)}};
    if (row.skipped) {
      entry["skipped"] = true;
      entry["note"] = row.note;
    } else {
      json reports = json::array();
      for (const auto& report : row.reports) {
        reports.push_back(report_to_json(report));
      }
      entry["reports"] = std::move(reports);
    }
    rows.push_back(std::move(entry));
  }
  return json{{"rows", std::move(rows)},
              {"failures", sweep.failures},
              {"skipped", sweep.skipped}};
}

std::string sweep_to_text(const SweepResult& sweep) {
  std::ostringstream out;
  for (const auto& row : sweep.rows) {
    out << "p=" << row.params.p << " n=" << row.params.n << " N=" << row.params.N;
    if (row.skipped) {
      out << "  skipped: " << row.note << '\n';
      continue;
    }
    for (const auto& report : row.reports) {
      out << "  " << check_name(report.check) << "=" << verdict_name(report.verdict);
    }
    out << '\n';
  }
  out << "sweep: " << sweep.rows.size() << " instance(s), " << sweep.skipped << " skipped, "
      << sweep.failures << " failure(s)\n";
  return out.str();
}

}  // namespace atshape
