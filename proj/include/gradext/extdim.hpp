#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gradext/ctx.hpp"
#include "gradext/decomp.hpp"
#include "gradext/enumerate.hpp"
#include "gradext/gctx.hpp"

namespace gradext {

// Extension closure of a module M inside a finite universe of isomorphism
// classes.  Level 0 holds only the zero module, level 1 is the additive
// closure of M (summands of finite direct sums), and level n takes additive
// closure of middle terms of short exact sequences whose kernel lies at
// level n-1 and whose cokernel at level 1.  Everything is computed relative
// to explicit bounds; certified membership is sound and replays from
// scratch, absence only ever means "not found within these bounds".

struct LedgerParams {
  Index max_dim = 4;        // universe holds every class of dimension <= this
  Index slack = 2;          // padding summand allowance inside an ext step
  Index gen_dim_bound = 8;  // generator candidate total dimension cap
  Index level_cap = 8;      // levels explored before reporting "not reached"
  double budget = kDefaultBudget;
};

// marker for "zero module" in witness slots and "no padding" in ext steps
inline constexpr Index kNoRef = -1;

// hard ceiling on the predicted subspace count of one exhaustive scan
inline constexpr double kSubspaceScanLimit = 1e6;

// number of subspaces of F_p^dim (sum of Gaussian binomials), as a double
double subspace_count_estimate(Scalar p, Index dim);

// One realized (submodule class, quotient class) pair of the middle
// x (+) pad, with a verified witness pair of morphisms.
struct ProfileEntry {
  Index sub = kNoRef;   // universe class of the submodule, kNoRef for zero
  Index quot = kNoRef;  // universe class of the quotient, kNoRef for zero
  FpMatrix incl;        // universe[sub] -> x (+) pad
  FpMatrix onto;        // x (+) pad -> universe[quot]
};

// Every isomorphism class of dimension <= max_dim, each with its certified
// decomposition and indecomposable-class multiset, plus a lazily filled
// cache of extension profiles.  A profile scans all invariant subspaces of
// x (+) pad (refused above kSubspaceScanLimit predicted subspaces) and keeps
// one witness per distinct class pair.  Shared by every ledger over the
// same algebra and dimension cap, so the scans run once.
struct UniverseTable {
  AlgebraPtr alg;
  Index max_dim = 4;
  double budget = kDefaultBudget;
  std::vector<Module> universe;             // sorted by (dim, digest)
  std::vector<Decomposition<Module>> decs;  // aligned with universe
  std::vector<std::vector<Index>> part_class;  // class per part, aligned
  std::vector<std::vector<Index>> parts;       // the same classes, sorted
  std::vector<Index> indecs;                   // classes with a single part
  bool complete = true;
  std::vector<std::string> notes;

  // class index of an arbitrary module, or nullopt when it falls outside
  // the universe (too big, or undecidable within budget)
  std::optional<Index> classify(const Module& m) const;
  const std::vector<ProfileEntry>& profile(Index x, Index pad) const;

  std::map<std::vector<Index>, Index> by_parts;
  mutable std::map<std::pair<Index, Index>, std::vector<ProfileEntry>> cache;
  mutable std::mutex lock;
};

using UniversePtr = std::shared_ptr<UniverseTable>;

UniversePtr build_universe(const AlgebraPtr& a, Index max_dim,
                           double budget = kDefaultBudget);

// Short exact sequence certificate placing universe member x at some level:
// 0 -> universe[sub] -> x (+) pad -> universe[quot] -> 0 with sub certified
// one level below and quot at level 1.  kNoRef in sub/quot means the zero
// module, in pad it means no padding.
struct ExtWitness {
  Index x = kNoRef;
  Index pad = kNoRef;
  Index sub = kNoRef;
  Index quot = kNoRef;
  FpMatrix incl;  // universe[sub] -> x (+) pad
  FpMatrix onto;  // x (+) pad -> universe[quot]
};

// Split certificate: the member embeds into a direct sum of certified
// targets with a retraction (retr * emb = id).  At level 1 the target is
// gen_copies copies of the generator; deeper levels list one universe
// member per generator-part, each standing for the middle of that member's
// ExtWitness at the same level (the member itself when its cert has no
// padding).
struct AddWitness {
  Index gen_copies = 0;
  std::vector<Index> sources;
  FpMatrix emb;
  FpMatrix retr;
};

struct Certificate {
  Index member = kNoRef;
  std::optional<ExtWitness> ext;
  std::optional<AddWitness> add;
};

struct LedgerLevel {
  std::vector<Index> members;      // sorted universe indices
  std::vector<Certificate> certs;  // aligned with members
};

// Per-generator ledger of certified level sets over a shared universe.
// levels[0] is empty (the zero module alone), levels[1] the additive
// closure of the generator; higher levels are filled on demand.
struct ClassLedger {
  UniversePtr table;
  Module generator;
  Decomposition<Module> gen_dec;
  std::vector<Index> gen_classes;  // class per generator part (or kNoRef)
  Index slack = 2;
  Index level_cap = 8;
  std::vector<LedgerLevel> levels;
};

ClassLedger make_ledger(const UniversePtr& u, const Module& gen,
                        const LedgerParams& prm = {});

// computes levels up through n if needed, then returns level n
const LedgerLevel& bracket_level(ClassLedger& led, Index n);

// membership among already computed levels
bool ledger_member(const ClassLedger& led, Index level, Index cls);
std::optional<Index> member_level(const ClassLedger& led, Index cls);

// full from-scratch verification of every certificate in every computed
// level, plus monotonicity of the level sets; returns false and a reason
// instead of throwing so tamper tests can observe failures
bool replay_ledger(const ClassLedger& led, std::string* why = nullptr);

// least n with every universe class certified at level n+1, exploring
// levels up to level_cap + 1; nullopt when not reached or when the level
// sets stabilize short of the universe
std::optional<Index> gen_time_bounded(ClassLedger& led);

struct ExtDimResult {
  std::optional<Index> value;  // min generation time over the candidates
  std::optional<Module> generator;
  std::optional<ClassLedger> ledger;  // ledger of the reported generator
  Index candidates_tried = 0;
  LedgerParams params;
};

// minimum of gen_time_bounded over direct sums of distinct indecomposable
// classes with total dimension <= gen_dim_bound, largest candidates first,
// stopping early once 0 is achieved
ExtDimResult ext_dim_bounded(const UniversePtr& u, const LedgerParams& prm);
ExtDimResult ext_dim_bounded(const AlgebraPtr& a,
                             const LedgerParams& prm = {});

// Radical-series certificate: with generator (+)_i A/J^i the chains
// 0 -> rad X -> X -> top X -> 0 certify every universe member by level
// max Loewy length, so generation time on the universe is at most
// bound = that level - 1.  Every member's top-level certificate is a
// replayable ExtWitness along its radical series.
struct LoewyCertificate {
  Module generator;
  Index loewy = 1;  // Loewy length of the algebra
  Index bound = 0;  // universe certified inside [generator]_{bound+1}
  bool covered = true;
  ClassLedger ledger;
};

LoewyCertificate loewy_generator_certificate(const AlgebraPtr& a,
                                             const LedgerParams& prm = {});

// Graded ledgers run over the smash product, where graded submodules,
// degree-preserving morphisms and graded summands match the plain ones on
// identical coordinates; universe classes are the graded classes with
// suspensions counted separately.  Finite grading groups only.
struct GradedLedger {
  SmashedAlgebra smash;
  ClassLedger ledger;
};

GradedLedger make_graded_ledger(const GradedAlgebraPtr& g,
                                const GradedModule& gen,
                                const LedgerParams& prm = {});
std::optional<Index> classify_graded(const GradedLedger& led,
                                     const GradedModule& m);
ExtDimResult graded_ext_dim_bounded(const GradedAlgebraPtr& g,
                                    const LedgerParams& prm = {});

// generation time of a graded module versus its underlying module, each
// within its own universe at the same bounds
struct ForgetfulComparison {
  std::optional<Index> graded;
  std::optional<Index> ungraded;
  bool agree = true;
  GradedLedger graded_ledger;
  ClassLedger ungraded_ledger;
};

ForgetfulComparison forgetful_compare(const GradedModule& m,
                                      const LedgerParams& prm = {});

}  // namespace gradext
