#include <doctest.h>

#include "property_checks.hpp"

namespace {

constexpr int kCases = 1000;
constexpr std::uint64_t kSeed = 20240611;

void expect(const props::Outcome& o) {
  INFO(o.name << ": " << o.first_failure);
  CHECK(o.cases >= kCases);
  CHECK(o.failures == 0);
}

}  // namespace

TEST_CASE("token remediation matches the matrix oracle") { expect(props::oracle_equivalence(kSeed, kCases)); }
TEST_CASE("token remediation is idempotent") { expect(props::token_idempotence(kSeed + 1, kCases)); }
TEST_CASE("frame remediation is idempotent") { expect(props::frame_idempotence(kSeed + 2, kCases)); }
TEST_CASE("remediation only removes links") { expect(props::conservativity(kSeed + 3, kCases)); }
TEST_CASE("each target keeps at most one source") { expect(props::target_uniqueness(kSeed + 4, kCases)); }
TEST_CASE("head direction only changes the chosen source") {
  expect(props::head_flag_only_changes_choice(kSeed + 5, kCases));
}
TEST_CASE("divergence detection matches a direct scan") { expect(props::divergences_match_scan(kSeed + 6, kCases)); }
TEST_CASE("partition covers every link once") { expect(props::partition_completeness(kSeed + 7, kCases)); }
TEST_CASE("alignment text round trip") { expect(props::alignment_round_trip(kSeed + 8, kCases)); }
TEST_CASE("CoNLL-2009 round trip") { expect(props::conll_round_trip(kSeed + 9, kCases)); }
TEST_CASE("projection JSON round trip") { expect(props::projection_json_round_trip(kSeed + 10, kCases)); }
TEST_CASE("remediation JSON round trip") { expect(props::remediation_json_round_trip(kSeed + 11, kCases)); }
TEST_CASE("BIO frames round trip") { expect(props::frames_round_trip(kSeed + 12, kCases)); }
TEST_CASE("evaluation swaps precision and recall") { expect(props::eval_symmetry(kSeed + 13, kCases)); }
TEST_CASE("adding a correct prediction never lowers recall") {
  expect(props::eval_monotonicity(kSeed + 14, kCases));
}
TEST_CASE("misalignment ignores sentence order") { expect(props::misalignment_permutation(kSeed + 15, kCases)); }
TEST_CASE("predicate filter invariants") { expect(props::filter_properties(kSeed + 16, kCases)); }
TEST_CASE("audit ignores sentence order") { expect(props::audit_order_independence(kSeed + 17, kCases)); }
TEST_CASE("every projected label comes from its source") { expect(props::label_provenance(kSeed + 18, kCases)); }
TEST_CASE("parallel kernels match serial") { expect(props::parallel_matches_serial(kSeed + 19, kCases)); }
