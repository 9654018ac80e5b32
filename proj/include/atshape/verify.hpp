#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "atshape/shape.hpp"
#include "atshape/solver.hpp"

namespace atshape {

enum class Check { main1, main2, main3, lemma, identity, proposition };

std::optional<Check> parse_check(std::string_view name);
std::string_view check_name(Check check);

/// All checks in canonical order (the order a sweep runs them).
std::span<const Check> all_checks();

enum class Verdict { pass, fail, flagged, skipped };

std::string_view verdict_name(Verdict verdict);

struct CheckDetail {
  std::string name;
  Verdict verdict = Verdict::pass;
  std::string info;
};

/// Result of one named verification on one (p, n) instance. The verdict is
/// "pass" only when every asserted multiset equality held exactly; known
/// discrepancies are "flagged", never silently passed or failed. Sub-checks
/// whose search exceeds the configured rank bound are "skipped" with a
/// notice and do not affect the verdict.
struct VerificationReport {
  Check check = Check::main1;
  Params params;
  Verdict verdict = Verdict::pass;
  std::vector<CheckDetail> details;
};

struct VerifyOptions {
  SolverConfig solver;
};

VerificationReport run_verification(Check check, const Params& params,
                                    const VerifyOptions& options = {});

struct SweepRow {
  Params params;
  bool skipped = false;
  std::string note;
  std::vector<VerificationReport> reports;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  int failures = 0;
  int skipped = 0;
};

/// Runs every check for each (p, 1..n_max); instances with p^n beyond
/// max_side are skipped with a notice. Throws std::invalid_argument when a
/// listed p is not an odd prime.
SweepResult run_sweep(std::span<const long long> primes, int n_max, long long max_side,
                      const VerifyOptions& options = {});

}  // namespace atshape
