#include "gradext/claims.hpp"

#include <map>
#include <set>

#include "doctest.h"
#include "gradext/fixtures.hpp"

using namespace gradext;

namespace {

struct Row {
  const char* claim;
  const char* instance;
  const char* verdict;
  const char* reason;
};

// Every registered claim on every registered fixture, in ledger order.
// These are locked oracle outcomes: the CLM-L3.4 violation on the cyclic
// group algebra is exact on both sides, and the only bounded undecided is
// the Klein-four instance of CLM-T3.5.
const std::vector<Row>& expected_rows() {
  static const std::vector<Row> rows = {
      {"CLM-C3.6", "morita_f2_m2", "consistent", ""},
      {"CLM-C3.6", "morita_f2c2_m2", "consistent", ""},
      {"CLM-C4.1", "c2_group_algebra_p2", "undecided",
       "hypothesis-not-satisfied"},
      {"CLM-C4.1", "m2_f2_c2graded", "consistent", ""},
      {"CLM-EQ4.1", "morita_f2_m2", "undecided", "hypothesis-not-satisfied"},
      {"CLM-EQ4.1", "t2_f2_zgraded", "undecided", "hypothesis-not-satisfied"},
      {"CLM-EX3.6", "kronecker_p2_zgraded", "consistent", ""},
      {"CLM-L2.3", "morita_f2_m2", "consistent", ""},
      {"CLM-L2.3", "morita_f2c2_m2", "consistent", ""},
      {"CLM-L3.3", "c2_group_algebra_p2", "consistent", ""},
      {"CLM-L3.3", "c3_group_algebra_p2", "consistent", ""},
      {"CLM-L3.3", "m2_f2_c2graded", "consistent", ""},
      {"CLM-L3.3", "skew_f3_x2_c2", "consistent", ""},
      {"CLM-L3.3", "v4_group_algebra_p2_c2graded", "consistent", ""},
      {"CLM-L3.4", "c2_group_algebra_p2", "violated", ""},
      {"CLM-L3.4", "c3_group_algebra_p2", "consistent", ""},
      {"CLM-L3.4", "m2_f2_c2graded", "consistent", ""},
      {"CLM-L3.4", "skew_f3_x2_c2", "consistent", ""},
      {"CLM-L3.4", "v4_group_algebra_p2_c2graded", "consistent", ""},
      {"CLM-L3.5", "c2_group_algebra_p2", "consistent", ""},
      {"CLM-L3.5", "c3_group_algebra_p2", "consistent", ""},
      {"CLM-L3.5", "m2_f2_c2graded", "consistent", ""},
      {"CLM-L3.5", "skew_f3_x2_c2", "consistent", ""},
      {"CLM-L3.5", "v4_group_algebra_p2_c2graded", "consistent", ""},
      {"CLM-T3.12", "morita_f2_m2", "consistent", ""},
      {"CLM-T3.12", "morita_f2c2_m2", "consistent", ""},
      {"CLM-T3.5", "c2_group_algebra_p2", "consistent", ""},
      {"CLM-T3.5", "c3_group_algebra_p2", "consistent", ""},
      {"CLM-T3.5", "kronecker_p2_zgraded", "undecided",
       "hypothesis-not-satisfied"},
      {"CLM-T3.5", "m2_f2_c2graded", "consistent", ""},
      {"CLM-T3.5", "skew_f3_x2_c2", "consistent", ""},
      {"CLM-T3.5", "t2_f2_zgraded", "undecided", "hypothesis-not-satisfied"},
      {"CLM-T3.5", "v4_group_algebra_p2_c2graded", "undecided",
       "not-exact-at-bounds"},
      {"CLM-T3.9", "morita_f2_m2", "consistent", ""},
      {"CLM-T3.9", "morita_f2c2_m2", "consistent", ""},
  };
  return rows;
}

const Row* find_row(const std::string& claim, const std::string& instance) {
  for (const auto& r : expected_rows())
    if (claim == r.claim && instance == r.instance) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("the registry names eleven claims over real fixtures") {
  const auto& reg = claim_registry();
  REQUIRE(reg.size() == 11);
  std::set<std::string> ids;
  std::size_t rows = 0;
  for (const auto& info : reg) {
    CHECK(ids.insert(info.id).second);
    CHECK(info.id.rfind("CLM-", 0) == 0);
    CHECK(!info.statement.empty());
    REQUIRE(!info.fixtures.empty());
    for (const auto& fx : info.fixtures) {
      CHECK(is_fixture(fx));
      CHECK(find_row(info.id, fx) != nullptr);
      ++rows;
    }
  }
  CHECK(rows == expected_rows().size());
}

TEST_CASE("the paper suite reproduces the locked verdict table, "
          "byte-identically across thread counts") {
  auto one = run_suite("paper-claims", {}, 1);
  auto two = run_suite("paper-claims", {}, 2);
  CHECK(ledger_text(one.ledger) == ledger_text(two.ledger));
  CHECK(one.exit_code == 1);  // the designed violation
  CHECK(two.exit_code == 1);

  const auto& entries = one.ledger["entries"];
  REQUIRE(entries.size() == expected_rows().size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    const Row& r = expected_rows()[i];  // ledger order is (claim, instance)
    CHECK(e["claim"].get<std::string>() == r.claim);
    CHECK(e["instance"].get<std::string>() == r.instance);
    CHECK(e["verdict"].get<std::string>() == r.verdict);
    CHECK(e["reason"].get<std::string>() == r.reason);
    // canonical entry shape; timings never enter the ledger
    std::vector<std::string> keys;
    for (auto it = e.begin(); it != e.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"claim", "instance", "parameters",
                                           "verdict", "reason", "evidence"});
    CHECK(e["parameters"]["max_dim"] == 4);
  }
}

TEST_CASE("the sanity suite and the combined suite behave") {
  auto sane = run_suite("finite-type-sanity", {}, 1);
  CHECK(sane.exit_code == 0);
  REQUIRE(sane.ledger["entries"].size() == 9);
  for (const auto& e : sane.ledger["entries"]) {
    CHECK(e["claim"].get<std::string>() == "finite-type-zero");
    CHECK(e["verdict"].get<std::string>() == "consistent");
    CHECK(e["evidence"]["ext_dim"]["value"] == 0);
    CHECK(e["evidence"]["ext_dim"]["exact"] == true);
  }

  auto all = run_suite("all", {}, 2);
  CHECK(all.exit_code == 1);
  CHECK(all.ledger["entries"].size() == expected_rows().size() + 9);

  auto bad = run_suite("no-such-suite", {}, 1);
  CHECK(bad.exit_code == 3);
  CHECK(bad.ledger.contains("error"));
}

TEST_CASE("the designed violation carries two exact certificates") {
  auto v = run_claim("CLM-L3.4", "c2_group_algebra_p2", {});
  CHECK(v.verdict == "violated");
  CHECK(v.claim == "CLM-L3.4");
  CHECK(v.instance == "c2_group_algebra_p2");
  CHECK(v.params.max_dim == 4);
  CHECK(v.runtime_ms >= 0);
  CHECK(v.evidence["gen_time_graded"]["kind"] == "finite");
  CHECK(v.evidence["gen_time_graded"]["value"] == 0);
  CHECK(v.evidence["gen_time_graded"]["exact"] == true);
  CHECK(v.evidence["gen_time_ungraded"]["kind"] == "infinite");
  CHECK(v.evidence["gen_time_ungraded"]["exact"] == true);
}

TEST_CASE("the bounded undecided row shows exact counts on both sides") {
  auto v = run_claim("CLM-T3.5", "v4_group_algebra_p2_c2graded", {});
  CHECK(v.verdict == "undecided");
  CHECK(v.reason == "not-exact-at-bounds");
  CHECK(v.evidence["hypothesis"]["strongly_graded"] == true);
  CHECK(v.evidence["graded_ext_dim"]["exact"] == true);
  CHECK(v.evidence["graded_ext_dim"]["value"] == 0);
  CHECK(v.evidence["component_ext_dim"]["exact"] == true);
  CHECK(v.evidence["component_ext_dim"]["value"] == 0);
  CHECK(v.evidence["ext_dim"]["exact"] == false);
  CHECK(v.evidence["component_indecomposables"]["indecomposables"] == 2);
  CHECK(v.evidence["component_indecomposables"]["complete"] == true);
  CHECK(v.evidence["indecomposables"]["indecomposables"].get<Index>() >= 6);
  CHECK(v.evidence["indecomposables"]["complete"] == true);
}

TEST_CASE("hypothesis-gated rows still report exact side facts") {
  auto v = run_claim("CLM-EQ4.1", "morita_f2_m2", {});
  CHECK(v.verdict == "undecided");
  CHECK(v.reason == "hypothesis-not-satisfied");
  CHECK(v.evidence["ring_dim"] == 9);
  CHECK(v.evidence["hypothesis"]["strongly_graded"] == false);
  CHECK(v.evidence["ext_dim_ring"]["value"] == 0);
  CHECK(v.evidence["ext_dim_ring"]["exact"] == true);
  CHECK(v.evidence["ext_dim_diagonal"]["value"] == 0);
  CHECK(v.evidence["equality_observed"] == true);

  auto w = run_claim("CLM-EX3.6", "kronecker_p2_zgraded", {});
  CHECK(w.verdict == "consistent");
  CHECK(w.evidence["strong_grading"]["strongly_graded"] == false);
  CHECK(w.evidence["vertices"] == 2);
  CHECK(w.evidence["rank_one_per_vertex_classes"] == 3);
  CHECK(w.evidence["total_ring_classified"] == false);
  CHECK(w.evidence["component_ext_dim"]["value"] == 0);
}

TEST_CASE("a starved budget never flips a verdict") {
  ClaimParams tiny;
  tiny.budget = 1.0;
  for (const auto& info : claim_registry())
    for (const auto& fx : info.fixtures) {
      ClaimVerdict v = run_claim(info.id, fx, tiny);
      if (v.verdict == "undecided") {
        CHECK(!v.reason.empty());
      } else {
        // a decided verdict must agree with the default-parameter decision
        const Row* r = find_row(info.id, fx);
        REQUIRE(r != nullptr);
        CHECK(v.verdict == r->verdict);
      }
    }
  auto v = run_claim("CLM-L2.3", "morita_f2c2_m2", tiny);
  CHECK(v.verdict == "undecided");
  CHECK(v.reason == "budget-exceeded");
  CHECK(v.evidence.contains("estimate"));
  CHECK(v.evidence.contains("budget"));
}

TEST_CASE("unknown names and wrong kinds are input errors") {
  CHECK_THROWS_AS(run_claim("CLM-NOPE", "c2_group_algebra_p2", {}),
                  UnknownClaim);
  CHECK_THROWS_AS(run_claim("CLM-L2.3", "no_such_fixture", {}),
                  ValidationError);
  // a context claim on an algebra instance
  CHECK_THROWS_AS(run_claim("CLM-L2.3", "c2_group_algebra_p2", {}),
                  ValidationError);
  // instances pass through directly as well
  auto v = run_claim("CLM-T3.5", fixture("c2_group_algebra_p2"), {});
  CHECK(v.verdict == "consistent");
}
