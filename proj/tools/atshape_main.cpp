// Command-line surface for the graded Artin-Tate shape calculus: compute the
// named shapes, render grid diagrams, run the tiling solver and the named
// verifications, and sweep (p, n) ranges.
//
// Exit codes: 0 success, 1 verification/decomposition failure, 2 usage error,
// 3 bound exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "atshape/generators.hpp"
#include "atshape/io.hpp"
#include "atshape/shape.hpp"
#include "atshape/solver.hpp"
#include "atshape/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBound = 3;

struct CommonOptions {
  long long p = 0;
  int n = 0;
  std::string format = "text";
  long long max_side = 1000;
  std::int64_t cap = 10000;
  std::int64_t rank_bound = 200;

  bool structured() const { return format == "structured"; }

  atshape::Params params() const {
    const auto result = atshape::Params::make(p, n);
    if (result.N > max_side) {
      throw atshape::bound_error("N=" + std::to_string(result.N) + " exceeds --max-N " +
                                 std::to_string(max_side));
    }
    return result;
  }

  atshape::SolverConfig solver() const { return {cap, rank_bound}; }
};

void add_instance_options(CLI::App& cmd, CommonOptions& opts) {
  cmd.add_option("--p", opts.p, "odd prime p")->required();
  cmd.add_option("--n", opts.n, "exponent n >= 1")->required();
}

void add_output_options(CLI::App& cmd, CommonOptions& opts) {
  cmd.add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  cmd.add_option("--max-N", opts.max_side, "largest side length N = p^n accepted")
      ->capture_default_str();
}

void add_solver_options(CLI::App& cmd, CommonOptions& opts) {
  cmd.add_option("--cap", opts.cap, "stop exhaustive enumeration after this many tilings")
      ->capture_default_str();
  cmd.add_option("--rank-bound", opts.rank_bound, "largest target rank the exhaustive search accepts")
      ->capture_default_str();
}

atshape::GradedShape shape_by_kind(const std::string& kind, const atshape::Params& params) {
  if (kind == "proj") {
    return atshape::projective_space_shape(params.N);
  }
  if (kind == "weil") {
    return atshape::weil_closed(params.N);
  }
  if (kind == "upper1") {
    return atshape::upper_case1(params.N);
  }
  if (kind == "upper2") {
    return atshape::upper_case2(params.N);
  }
  if (kind == "my") {
    return atshape::decomposition_third(params.N).total;
  }
  throw std::invalid_argument("unknown shape kind '" + kind + "'");
}

int run_shape(const CommonOptions& opts, const std::string& kind) {
  const auto params = opts.params();
  const auto shape = shape_by_kind(kind, params);
  if (opts.structured()) {
    const atshape::json out{{"params", atshape::params_to_json(params)},
                            {"kind", kind},
                            {"shape", atshape::shape_to_json(shape)},
                            {"stats", atshape::stats_to_json(atshape::stats(shape))}};
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "shape " << kind << "  p=" << params.p << " n=" << params.n
              << " N=" << params.N << '\n'
              << atshape::describe_shape(shape);
  }
  return kExitOk;
}

int run_grid(const CommonOptions& opts, const std::string& kind) {
  const auto params = opts.params();
  std::vector<atshape::GridRow> rows;
  if (kind == "shapeR") {
    rows = atshape::line_grid_rows(params.N);
  } else if (kind == "M") {
    rows = atshape::grid_rows(atshape::decomposition_M(params.N));
  } else if (kind == "second") {
    rows = atshape::grid_rows(atshape::decomposition_second(params.N));
  } else if (kind == "third") {
    rows = atshape::grid_rows(atshape::decomposition_third(params.N));
  } else {
    throw std::invalid_argument("unknown grid kind '" + kind + "'");
  }
  if (opts.structured()) {
    const atshape::json out{{"params", atshape::params_to_json(params)},
                            {"kind", kind},
                            {"rows", atshape::grid_to_json(rows)}};
    std::cout << out.dump() << '\n';
  } else {
    std::cout << atshape::render_grid(rows);
  }
  return kExitOk;
}

atshape::GradedShape read_shape_file(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  } else {
    std::ifstream file(path);
    if (!file) {
      throw std::invalid_argument("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    text = buffer.str();
  }
  atshape::json parsed;
  try {
    parsed = atshape::json::parse(text);
  } catch (const std::exception& error) {
    throw std::invalid_argument("invalid JSON in '" + path + "': " + error.what());
  }
  if (parsed.is_object() && parsed.contains("shape")) {
    return atshape::shape_from_json(parsed.at("shape"));
  }
  return atshape::shape_from_json(parsed);
}

int run_decompose(const CommonOptions& opts, const std::string& target_kind,
                  const std::string& target_file, const std::string& tile_choice,
                  bool exhaustive) {
  const auto params = opts.params();
  atshape::GradedShape target;
  std::string target_name = target_kind;
  if (!target_file.empty()) {
    target = read_shape_file(target_file);
    target_name = "file:" + target_file;
  } else if (target_kind == "weil") {
    target = atshape::weil_closed(params.N);
  } else if (target_kind == "third") {
    target = atshape::decomposition_third(params.N).total;
  } else {
    throw std::invalid_argument("unknown decompose target '" + target_kind + "'");
  }

  struct CaseRun {
    std::string name;
    std::vector<atshape::Tile> tiles;
  };
  std::vector<CaseRun> runs;
  if (tile_choice == "case1" || tile_choice == "both") {
    runs.push_back({"case1", atshape::case1_tiles(params.N)});
  }
  if (tile_choice == "case2" || tile_choice == "both") {
    runs.push_back({"case2", atshape::case2_tiles(params.N)});
  }

  bool all_feasible = true;
  atshape::json cases = atshape::json::array();
  std::ostringstream text;
  for (const auto& run : runs) {
    const atshape::PeelResult peel = atshape::greedy_peel(target, run.tiles);
    const bool feasible = peel.status == atshape::PeelStatus::tiled;
    all_feasible = all_feasible && feasible;

    atshape::json entry{{"tiles", run.name}, {"feasible", feasible}};
    text << run.name << " (";
    for (std::size_t i = 0; i < run.tiles.size(); ++i) {
      text << (i ? ", " : "") << run.tiles[i].name;
    }
    text << "): ";
    if (feasible) {
      entry["tiling"] = atshape::tiling_to_json(peel.tiling);
      text << "tiled, " << peel.tiling.placements.size() << " placements\n"
           << atshape::describe_tiling(peel.tiling);
    } else {
      entry["detail"] = peel.detail;
      text << (peel.status == atshape::PeelStatus::stuck ? "stuck" : "nondeterministic") << " ("
           << peel.detail << ")\n";
    }
    if (exhaustive) {
      const atshape::ExhaustiveResult all =
          atshape::exhaustive_tilings(target, run.tiles, opts.solver());
      entry["exhaustive"] =
          atshape::json{{"count", all.tilings.size()}, {"capped", all.capped}};
      text << "  exhaustive: " << all.tilings.size() << " tiling(s)"
           << (all.capped ? " (capped)" : "") << '\n';
    }
    cases.push_back(std::move(entry));
  }

  if (opts.structured()) {
    const atshape::json out{{"params", atshape::params_to_json(params)},
                            {"target", target_name},
                            {"cases", std::move(cases)}};
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "decompose " << target_name << "  p=" << params.p << " n=" << params.n
              << " N=" << params.N << '\n'
              << text.str();
  }
  return all_feasible ? kExitOk : kExitVerificationFailure;
}

int run_verify(const CommonOptions& opts, const std::string& check_text) {
  const auto params = opts.params();
  const auto check = atshape::parse_check(check_text);
  if (!check.has_value()) {
    throw std::invalid_argument("unknown check '" + check_text + "'");
  }
  const atshape::VerificationReport report =
      atshape::run_verification(*check, params, {opts.solver()});
  if (opts.structured()) {
    const atshape::json out{{"params", atshape::params_to_json(params)},
                            {"report", atshape::report_to_json(report)}};
    std::cout << out.dump() << '\n';
  } else {
    std::cout << atshape::report_to_text(report);
  }
  return report.verdict == atshape::Verdict::fail ? kExitVerificationFailure : kExitOk;
}

int run_sweep(const CommonOptions& opts, const std::vector<long long>& primes, int n_max) {
  if (n_max < 1) {
    throw std::invalid_argument("--n-max must be >= 1");
  }
  const atshape::SweepResult sweep =
      atshape::run_sweep(primes, n_max, opts.max_side, {opts.solver()});
  if (opts.structured()) {
    std::cout << atshape::sweep_to_json(sweep).dump() << '\n';
  } else {
    std::cout << atshape::sweep_to_text(sweep);
  }
  return sweep.failures > 0 ? kExitVerificationFailure : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"calculus and verifier for graded Artin-Tate motive shapes"};
  app.require_subcommand(1);

  CommonOptions opts;

  std::string shape_kind;
  auto* shape_cmd = app.add_subcommand("shape", "print a named shape and its stats");
  shape_cmd->add_option("kind", shape_kind, "one of proj, weil, upper1, upper2, my")
      ->required()
      ->check(CLI::IsMember({"proj", "weil", "upper1", "upper2", "my"}));
  add_instance_options(*shape_cmd, opts);
  add_output_options(*shape_cmd, opts);

  std::string grid_kind;
  auto* grid_cmd = app.add_subcommand("grid", "render a decomposition as a letter grid");
  grid_cmd->add_option("kind", grid_kind, "one of M, second, third, shapeR")
      ->required()
      ->check(CLI::IsMember({"M", "second", "third", "shapeR"}));
  add_instance_options(*grid_cmd, opts);
  add_output_options(*grid_cmd, opts);

  std::string decompose_target = "weil";
  std::string decompose_file;
  std::string decompose_tiles = "both";
  bool decompose_exhaustive = false;
  auto* decompose_cmd = app.add_subcommand("decompose", "tile a target shape with the candidate tile sets");
  decompose_cmd->add_option("--target", decompose_target, "built-in target shape")
      ->check(CLI::IsMember({"weil", "third"}))
      ->capture_default_str();
  decompose_cmd
      ->add_option("--target-file", decompose_file,
                   "read the target from a serialized shape file ('-' for stdin)")
      ->excludes("--target");
  decompose_cmd->add_option("--tiles", decompose_tiles, "tile set(s) to use")
      ->check(CLI::IsMember({"case1", "case2", "both"}))
      ->capture_default_str();
  decompose_cmd->add_flag("--exhaustive", decompose_exhaustive,
                          "also enumerate all tilings (subject to --rank-bound and --cap)");
  add_instance_options(*decompose_cmd, opts);
  add_output_options(*decompose_cmd, opts);
  add_solver_options(*decompose_cmd, opts);

  std::string verify_check;
  auto* verify_cmd = app.add_subcommand("verify", "run one named verification");
  verify_cmd
      ->add_option("check", verify_check,
                   "one of main1, main2, main3, lemma, identity, proposition")
      ->required()
      ->check(CLI::IsMember({"main1", "main2", "main3", "lemma", "identity", "proposition"}));
  add_instance_options(*verify_cmd, opts);
  add_output_options(*verify_cmd, opts);
  add_solver_options(*verify_cmd, opts);

  std::vector<long long> sweep_primes;
  int sweep_n_max = 1;
  auto* sweep_cmd = app.add_subcommand("sweep", "run every verification over a (p, n) range");
  sweep_cmd->add_option("--p", sweep_primes, "odd primes to sweep (comma separated)")
      ->delimiter(',');
  sweep_cmd->add_option("--n-max", sweep_n_max, "run n = 1..n-max for each p")
      ->capture_default_str();
  add_output_options(*sweep_cmd, opts);
  add_solver_options(*sweep_cmd, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (shape_cmd->parsed()) {
      return run_shape(opts, shape_kind);
    }
    if (grid_cmd->parsed()) {
      return run_grid(opts, grid_kind);
    }
    if (decompose_cmd->parsed()) {
      return run_decompose(opts, decompose_target, decompose_file, decompose_tiles,
                           decompose_exhaustive);
    }
    if (verify_cmd->parsed()) {
      return run_verify(opts, verify_check);
    }
    if (sweep_cmd->parsed()) {
      return run_sweep(opts, sweep_primes, sweep_n_max);
    }
  } catch (const atshape::bound_error& error) {
    std::cerr << "bound exceeded: " << error.what() << '\n';
    return kExitBound;
  } catch (const std::invalid_argument& error) {
    std::cerr << "error: " << error.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& error) {
    std::cerr << "internal error: " << error.what() << '\n';
    return kExitVerificationFailure;
  }
  return kExitUsage;
}
