#pragma once

#include <json.hpp>

#include "gradext/extdim.hpp"
#include "gradext/io.hpp"

namespace gradext {

// Knobs every claim run is stamped with.  seed only feeds randomized
// consumers (none of the registered checks draw randomness; it is recorded
// so ledgers stay comparable with seeded tooling).
struct ClaimParams {
  Index max_dim = 4;
  Index slack = 2;
  Index gen_bound = 8;
  Index cap = 8;
  double budget = kDefaultBudget;
  std::uint64_t seed = 0;
};

// Outcome of one claim on one instance.  verdict is "consistent" or
// "violated" only when every quantity involved was computed exactly at the
// stamped bounds: a finite classification replayed or derived (semisimple,
// serial, carried across a checked equivalence), or a purely algebraic
// identity.  Anything else stays "undecided" with the reason spelled out.
struct ClaimVerdict {
  std::string claim;
  std::string instance;
  ClaimParams params;
  std::string verdict;  // consistent | violated | undecided
  std::string reason;   // empty | hypothesis-not-satisfied | budget-exceeded |
                        // not-exact-at-bounds | ...
  nlohmann::ordered_json evidence;
  double runtime_ms = 0;  // informational; never serialized into ledgers
};

struct ClaimInfo {
  std::string id;
  std::string statement;
  std::vector<std::string> fixtures;  // applicable built-in instances
};

// The registered claims, fixed order.
const std::vector<ClaimInfo>& claim_registry();

// Run one claim on a named fixture, or on an explicit instance.  Unknown
// claim ids throw UnknownClaim; a kind mismatch throws ValidationError;
// BudgetExceeded is caught and folded into an undecided verdict.
ClaimVerdict run_claim(const std::string& claim, const std::string& instance,
                       const ClaimParams& prm = {});
ClaimVerdict run_claim(const std::string& claim, const Instance& instance,
                       const ClaimParams& prm = {});

// Suites: "paper-claims" (every registered claim on every applicable
// fixture), "finite-type-sanity" (zero extension dimension witnessed on
// every fixture carrying a classification), "all" (both).  The ledger is
// canonically ordered by (claim, instance) and deterministic for fixed
// inputs regardless of thread count.  exit_code: 0 clean, 1 any violated,
// 2 any budget-exceeded, 3 input errors (including unknown suite names).
struct SuiteResult {
  nlohmann::ordered_json ledger;
  int exit_code = 0;
};
SuiteResult run_suite(const std::string& suite, const ClaimParams& prm = {},
                      Index threads = 1);

// Canonical byte form of a ledger (what run_suite callers should write).
std::string ledger_text(const nlohmann::ordered_json& ledger);

}  // namespace gradext
