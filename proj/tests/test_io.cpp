#include "doctest.h"

#include <map>
#include <stdexcept>

#include "atshape/generators.hpp"
#include "atshape/io.hpp"
#include "atshape/shape.hpp"
#include "atshape/verify.hpp"

using namespace atshape;

namespace {
const ArtinClass F = ArtinClass::F;
const ArtinClass A = ArtinClass::A;

// Per-column class counts recovered from rendered grid rows.
GradedShape::Entries column_counts(const std::vector<GridRow>& rows) {
  GradedShape::Entries columns;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.word.size(); ++i) {
      auto& cell = columns[row.shift + static_cast<std::int64_t>(i)];
      (row.word[i] == 'F' ? cell.f : cell.a) += 1;
    }
  }
  return columns;
}
}  // namespace

TEST_CASE("shape serialization is canonical") {
  const json records = shape_to_json(weil_closed(3));
  REQUIRE(records.is_array());
  REQUIRE(records.size() == 8);
  CHECK(records[0] == json{{"shift", 0}, {"class", "F"}, {"mult", 1}});
  // F precedes A at the same shift
  CHECK(records[1]["shift"] == 1);
  CHECK(records[1]["class"] == "F");
  CHECK(records[2]["shift"] == 1);
  CHECK(records[2]["class"] == "A");
  CHECK(records[3]["mult"] == 2);

  CHECK(shape_to_json(GradedShape()) == json::array());
  CHECK(shape_from_json(shape_to_json(weil_closed(9))) == weil_closed(9));
}

TEST_CASE("shape parsing validates records") {
  CHECK(shape_from_json(json::array()) == GradedShape());

  // duplicate records aggregate, string multiplicities are accepted
  const json tolerant = json::array({json{{"shift", 0}, {"class", "F"}, {"mult", 1}},
                                     json{{"shift", 0}, {"class", "F"}, {"mult", "2"}}});
  CHECK(shape_from_json(tolerant) == GradedShape::single(0, F, 3));

  CHECK_THROWS_AS(shape_from_json(json{{"not", "an array"}}), std::invalid_argument);
  CHECK_THROWS_AS(shape_from_json(json::array({json{{"shift", -1}, {"class", "F"}, {"mult", 1}}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(shape_from_json(json::array({json{{"shift", 0}, {"class", "B"}, {"mult", 1}}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(shape_from_json(json::array({json{{"shift", 0}, {"class", "F"}, {"mult", -1}}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(shape_from_json(json::array({json{{"shift", 0}, {"class", "F"}}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(shape_from_json(json::array({json{{"shift", 0.5}, {"class", "F"}, {"mult", 1}}})),
                  std::invalid_argument);
}

TEST_CASE("big multiplicities survive the round trip as strings") {
  const Int big = binomial(81, 40) * binomial(41, 40);
  const GradedShape shape = GradedShape::single(7, A, big);
  const json records = shape_to_json(shape);
  CHECK(records[0]["mult"].is_string());
  CHECK(shape_from_json(records) == shape);
  CHECK(int_from_json(int_to_json(big)) == big);
  CHECK(int_to_json(Int(12)) == json(12));
}

TEST_CASE("ratio rendering") {
  CHECK(ratio_to_string(stats(weil_closed(3)).ratio) == "2/1");
  CHECK(ratio_to_string(stats(upper_case2(9)).ratio) == "5/4");
  CHECK(ratio_to_string(stats(projective_space_shape(4)).ratio) == "inf");
  CHECK(ratio_to_string(Ratio{false, Rational(6, 3)}) == "2/1");
}

TEST_CASE("shape words") {
  CHECK(shape_word(upper_case2(3)) == "FAF");
  CHECK(shape_word(projective_space_shape(1)) == "F");
  CHECK_FALSE(shape_word(weil_closed(3)).has_value());
  CHECK_FALSE(shape_word(GradedShape()).has_value());
  CHECK_FALSE(shape_word(make_shape({{0, F, 1}, {2, F, 1}})).has_value());  // gap
  CHECK_FALSE(shape_word(GradedShape::single(0, F, 2)).has_value());
  // a word may start above shift 0
  CHECK(shape_word(shifted(upper_case2(3), 2)) == "FAF");
}

TEST_CASE("grid rows follow the staircase layout") {
  const auto lines = line_grid_rows(3);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0].shift == 0);
  CHECK(lines[0].tile == "F-line");
  CHECK(lines[0].word == "FFF");
  CHECK(lines[1].word == "AAA");
  CHECK(lines[2].word == "FFF");

  const auto second = grid_rows(decomposition_second(3));
  REQUIRE(second.size() == 3);
  for (std::int64_t i = 0; i < 3; ++i) {
    CHECK(second[static_cast<std::size_t>(i)].shift == i);
    CHECK(second[static_cast<std::size_t>(i)].word == "FAF");
  }

  const auto third = grid_rows(decomposition_third(3));
  CHECK(third.size() == 2);

  CHECK(render_grid(line_grid_rows(3)) == "F F F\n  A A A\n    F F F\n");
  CHECK(render_grid(grid_rows(decomposition_third(1))).empty());
}

TEST_CASE("grid letters reproduce the shape per column") {
  for (const std::int64_t side : {1, 3, 9}) {
    CHECK(column_counts(line_grid_rows(side)) == weil_closed(side).entries());
    CHECK(column_counts(grid_rows(decomposition_M(side))) == weil_closed(side).entries());
    CHECK(column_counts(grid_rows(decomposition_second(side))) == weil_closed(side).entries());
    CHECK(column_counts(grid_rows(decomposition_third(side))) ==
          decomposition_third(side).total.entries());
  }
}

TEST_CASE("describe_shape lists cells and stats") {
  const std::string text = describe_shape(weil_closed(3));
  CHECK(text.find("2F A") != std::string::npos);
  CHECK(text.find("rank 9  F 6  A 3  ratio 2/1") != std::string::npos);
  const std::string word = describe_shape(upper_case2(3));
  CHECK(word.find("word: F A F") != std::string::npos);
  CHECK(describe_shape(GradedShape()).find("(empty)") != std::string::npos);
}

TEST_CASE("verification reports render both ways") {
  const Params params = Params::make(3, 1);
  const VerificationReport report = run_verification(Check::main3, params, {});
  CHECK(report.verdict == Verdict::pass);

  const json body = report_to_json(report);
  CHECK(body["check"] == "main3");
  CHECK(body["verdict"] == "pass");
  REQUIRE(body["details"].is_array());
  CHECK(body["details"][0]["name"] == "divisibility-obstruction");
  const std::string info = body["details"][0]["info"].get<std::string>();
  CHECK(info.find("countF=4") != std::string::npos);
  CHECK(info.find("(mod 3)") != std::string::npos);

  const std::string text = report_to_text(report);
  CHECK(text.find("verify main3") != std::string::npos);
  CHECK(text.find("pass") != std::string::npos);

  const VerificationReport flagged = run_verification(Check::proposition, params, {});
  CHECK(flagged.verdict == Verdict::flagged);
}

TEST_CASE("tiling serialization is sorted by shift then tile") {
  const PeelResult peel = greedy_peel(weil_closed(3), case1_tiles(3));
  REQUIRE(peel.status == PeelStatus::tiled);
  const json records = tiling_to_json(peel.tiling);
  REQUIRE(records.size() == 3);
  CHECK(records[0] == json{{"tile", "U1"}, {"shift", 0}});
  CHECK(records[1] == json{{"tile", "U1xA"}, {"shift", 1}});
  CHECK(records[2] == json{{"tile", "U1"}, {"shift", 2}});
}
