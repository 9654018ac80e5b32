#include "doctest.h"

#include "property_suites.hpp"

using namespace atshape::testing;

namespace {
void check_suite(const SuiteResult& result, int expected_cases) {
  INFO("first failure: " << result.first_failure);
  CHECK(result.cases == expected_cases);
  CHECK(result.failures == 0);
}
}  // namespace

TEST_CASE("semiring laws hold on random shapes") {
  check_suite(run_semiring_laws(0x5eed0001, 1000), 1000);
}

TEST_CASE("shift and tensor are compatible") {
  check_suite(run_shift_tensor_compat(0x5eed0002, 1000), 1000);
}

TEST_CASE("restriction is a semiring homomorphism") {
  check_suite(run_restrict_homomorphism(0x5eed0003, 1000), 1000);
}

TEST_CASE("tilings re-sum to their targets") {
  check_suite(run_tiling_soundness(0x5eed0004, 1000), 1000);
}

TEST_CASE("greedy tilings appear in the exhaustive enumeration") {
  check_suite(run_greedy_exhaustive_agreement(0x5eed0005, 1000), 1000);
}

TEST_CASE("serialization round-trips and is canonical") {
  check_suite(run_serialization_roundtrip(0x5eed0006, 1000), 1000);
}
