#include "gradext/claims.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <future>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "gradext/enumerate.hpp"
#include "gradext/fixtures.hpp"

// Verdict policy: "consistent" and "violated" are only ever emitted when
// every quantity on both sides of the statement is exact, meaning it comes
// with a completeness certificate (a replayed classification, a semisimple
// or serial structure theorem, a vanishing-Ext stabilization argument, or a
// checked equivalence carrying one across).  Everything else stays
// "undecided" with the blocking reason recorded.

namespace gradext {
namespace {

using ojson = nlohmann::ordered_json;

constexpr const char* kConsistent = "consistent";
constexpr const char* kViolated = "violated";
constexpr const char* kUndecided = "undecided";
constexpr const char* kHypothesis = "hypothesis-not-satisfied";
constexpr const char* kNotExact = "not-exact-at-bounds";

LedgerParams to_ledger(const ClaimParams& p) {
  LedgerParams lp;
  lp.max_dim = p.max_dim;
  lp.slack = p.slack;
  lp.gen_dim_bound = p.gen_bound;
  lp.level_cap = p.cap;
  lp.budget = p.budget;
  return lp;
}

std::uint64_t budget_bits(double b) { return std::bit_cast<std::uint64_t>(b); }

ojson params_json(const ClaimParams& p) {
  ojson j;
  j["max_dim"] = p.max_dim;
  j["slack"] = p.slack;
  j["gen_bound"] = p.gen_bound;
  j["cap"] = p.cap;
  j["budget"] = p.budget;
  j["seed"] = p.seed;
  return j;
}

// ---- shared bounded universes, one per (algebra, cap, budget) ----

UniversePtr shared_universe(const AlgebraPtr& a, Index max_dim, double budget) {
  using Key = std::tuple<std::uint64_t, Index, std::uint64_t>;
  static std::mutex mu;
  static std::map<Key, UniversePtr> cache;
  Key k{a->digest(), max_dim, budget_bits(budget)};
  {
    std::lock_guard<std::mutex> g(mu);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
  }
  auto u = build_universe(a, max_dim, budget);
  std::lock_guard<std::mutex> g(mu);
  auto [it, fresh] = cache.emplace(k, u);
  return it->second;
}

// ---- complete classifications ----

// Exactly `cert.count` indecomposables exist, all of dimension
// <= cert.max_dim, with `how` naming the certificate that says so.
struct Classification {
  TypeCert cert;
  std::string how;
};

bool replay_count(const AlgebraPtr& a, Index count, Index max_dim,
                  double budget) {
  auto ctx = AlgebraContext::get(a);
  auto en = enumerate_indecomposables(*ctx, max_dim, budget);
  return en.complete && (Index)en.classes.size() == count;
}

std::optional<Classification> semisimple_classification(const AlgebraPtr& a,
                                                        double budget) {
  auto ctx = AlgebraContext::get(a);
  if (ctx->radical.cols() != 0) return std::nullopt;
  Index mx = 0;
  for (const auto& s : ctx->simples) mx = std::max(mx, s.dim);
  Index count = (Index)ctx->simples.size();
  if (!replay_count(a, count, mx, budget)) return std::nullopt;
  return Classification{{count, mx},
                        "semisimple algebra: the indecomposables are the "
                        "simple modules, replayed by enumeration"};
}

bool pims_uniserial(const AlgebraPtr& a) {
  auto ctx = AlgebraContext::get(a);
  for (const auto& pm : ctx->pims) {
    for (const auto& span : ctx->module_radical_powers(pm)) {
      if (span.cols() == 0) break;
      auto sub = submodule(pm, span);
      Index top = 0;
      for (Index m : ctx->top_multiplicities(sub.mod)) top += m;
      if (top != 1) return false;
    }
  }
  return true;
}

std::optional<Classification> serial_classification(const AlgebraPtr& a,
                                                    double budget) {
  if (!pims_uniserial(a) || !pims_uniserial(opposite_algebra(a)))
    return std::nullopt;
  auto ctx = AlgebraContext::get(a);
  std::vector<Module> cands;
  for (const auto& pm : ctx->pims) {
    cands.push_back(pm);
    for (const auto& span : ctx->module_radical_powers(pm)) {
      if (span.cols() == 0) break;
      cands.push_back(quotient_module(pm, span).mod);
    }
  }
  std::vector<Module> classes;
  for (const auto& c : cands) {
    bool dup = false;
    for (const auto& k : classes) {
      auto iso = are_isomorphic(c, k, budget);
      if (iso.status == Tri::Unknown) return std::nullopt;
      if (iso.status == Tri::Yes) {
        dup = true;
        break;
      }
    }
    if (!dup) classes.push_back(c);
  }
  Index mx = 0;
  for (const auto& c : classes) mx = std::max(mx, c.dim);
  Index count = (Index)classes.size();
  if (!replay_count(a, count, mx, budget)) return std::nullopt;
  return Classification{{count, mx},
                        "serial algebra: every indecomposable is a radical "
                        "quotient of a principal indecomposable, replayed by "
                        "enumeration"};
}

std::optional<Classification> classify_algebra(const AlgebraPtr& a,
                                               double budget) {
  using Key = std::pair<std::uint64_t, std::uint64_t>;
  static std::mutex mu;
  static std::map<Key, std::optional<Classification>> memo;
  Key k{a->digest(), budget_bits(budget)};
  {
    std::lock_guard<std::mutex> g(mu);
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
  }
  std::optional<Classification> out = semisimple_classification(a, budget);
  if (!out) out = serial_classification(a, budget);
  std::lock_guard<std::mutex> g(mu);
  memo.emplace(k, out);
  return out;
}

std::optional<Classification> classify_doc(const AlgebraDoc& d,
                                           double budget) {
  if (d.cert) {
    using Key = std::tuple<std::uint64_t, Index, Index, std::uint64_t>;
    static std::mutex mu;
    static std::map<Key, bool> memo;
    const AlgebraPtr& a = d.alg->alg;
    Key k{a->digest(), d.cert->count, d.cert->max_dim, budget_bits(budget)};
    bool ok;
    {
      std::lock_guard<std::mutex> g(mu);
      auto it = memo.find(k);
      ok = it != memo.end()
               ? it->second
               : memo
                     .emplace(k, replay_count(a, d.cert->count,
                                              d.cert->max_dim, budget))
                     .first->second;
    }
    if (ok)
      return Classification{
          *d.cert, "declared classification, replayed by enumeration"};
  }
  return classify_algebra(d.alg->alg, budget);
}

// Classification of the smash product of a strongly graded algebra, carried
// across the degree functor from the identity component and replayed by
// enumeration upstairs.  Graded classes count suspensions separately; the
// replay would catch any mismatch.
std::optional<Classification> smash_classification(const GradedAlgebraPtr& g,
                                                   const ClaimParams& prm) {
  using Key = std::pair<std::uint64_t, std::uint64_t>;
  static std::mutex mu;
  static std::map<Key, std::optional<Classification>> memo;
  Key k{g->digest(), budget_bits(prm.budget)};
  {
    std::lock_guard<std::mutex> lk(mu);
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
  }
  std::optional<Classification> out;
  if (g->group.is_finite() && is_strongly_graded(*g).strongly_graded) {
    auto part = identity_component(*g);
    auto base = classify_algebra(part.alg, prm.budget);
    if (base) {
      auto bctx = AlgebraContext::get(part.alg);
      auto en =
          enumerate_indecomposables(*bctx, base->cert.max_dim, prm.budget);
      if (en.complete && (Index)en.classes.size() == base->cert.count) {
        Index mx = 0;
        for (const auto& x : en.classes)
          mx = std::max(mx, dade_inverse(g, x).mod.dim);
        auto sm = smash_product(g);
        if (replay_count(sm.alg, base->cert.count, mx, prm.budget))
          out = Classification{
              {base->cert.count, mx},
              "identity-component classification (" + base->how +
                  ") carried across the degree functor and replayed over "
                  "the smash product"};
      }
    }
  }
  std::lock_guard<std::mutex> lk(mu);
  memo.emplace(k, out);
  return out;
}

// ---- dimension values ----

struct DimValue {
  enum Kind { Finite, Infinite, Unk };
  Kind kind = Unk;
  Index value = 0;
  bool exact = false;
  std::string how;
};

ojson dim_json(const DimValue& v) {
  ojson j;
  j["kind"] = v.kind == DimValue::Finite
                  ? "finite"
                  : v.kind == DimValue::Infinite ? "infinite" : "unknown";
  if (v.kind == DimValue::Finite) j["value"] = v.value;
  j["exact"] = v.exact;
  j["how"] = v.how;
  return j;
}

bool dims_equal(const DimValue& a, const DimValue& b) {
  if (a.kind != b.kind) return false;
  return a.kind != DimValue::Finite || a.value == b.value;
}

bool dims_le(const DimValue& a, const DimValue& b) {
  if (a.kind == DimValue::Infinite) return b.kind == DimValue::Infinite;
  if (b.kind == DimValue::Infinite) return true;
  return a.value <= b.value;
}

// Extension dimension of an algebra.  With a classification the value is 0
// exactly: the sum of all indecomposables generates every module at level
// one, witnessed over the bounded universe.  Without one the bounded search
// result is reported as non-exact.
DimValue ext_dim_value(const AlgebraPtr& a,
                       const std::optional<Classification>& cls,
                       const ClaimParams& prm) {
  LedgerParams lp = to_ledger(prm);
  if (cls) {
    Index d = std::max(prm.max_dim, cls->cert.max_dim);
    auto u = shared_universe(a, d, prm.budget);
    bool coherent = u->complete;
    Index small = 0;
    for (Index c : u->indecs) {
      if (u->universe[c].dim > cls->cert.max_dim) {
        coherent = false;
        break;
      }
      ++small;
    }
    if (coherent && small == cls->cert.count) {
      Module gen = zero_module(a);
      for (Index c : u->indecs) gen = direct_sum(gen, u->universe[c]);
      auto led = make_ledger(u, gen, lp);
      const auto& l1 = bracket_level(led, 1);
      if ((Index)l1.members.size() == (Index)u->universe.size())
        return {DimValue::Finite, 0, true,
                cls->how + "; the sum of all " + std::to_string(small) +
                    " indecomposables generates everything at level one"};
    }
  }
  auto r = ext_dim_bounded(shared_universe(a, prm.max_dim, prm.budget), lp);
  if (r.value)
    return {DimValue::Finite, *r.value, false,
            "bounded search over " + std::to_string(r.candidates_tried) +
                " candidate generators; no completeness certificate"};
  return {DimValue::Unk, 0, false,
          "no candidate generator reached a finite level within the bounds"};
}

struct GradedDim {
  DimValue val;
  std::optional<Classification> cls;  // smash-side classification
  std::optional<SmashedAlgebra> sm;
};

GradedDim graded_ext_dim_value(const GradedAlgebraPtr& g,
                               const ClaimParams& prm) {
  GradedDim out;
  if (!g->group.is_finite()) {
    out.val = {DimValue::Unk, 0, false,
               "infinite grading group: no smash model at these bounds"};
    return out;
  }
  out.sm = smash_product(g);
  out.cls = smash_classification(g, prm);
  out.val = ext_dim_value(out.sm->alg, out.cls, prm);
  if (out.val.exact)
    out.val.how = "graded classes via the smash product; " + out.val.how;
  return out;
}

// Generation time of a ledger's generator against the indecomposables of
// its universe.  Exact answers: 0 when additive closure covers a complete
// list, 1 when level two covers it and additive closure provably misses a
// class, and infinity when Ext^1 vanishes on add(generator) (every bracket
// level then equals the additive closure in the full category) while a
// class stays outside.  Anything else is a bounded, non-exact report.
DimValue gen_time_value(ClassLedger& led,
                        const std::optional<Classification>& cls) {
  const auto& u = *led.table;
  bool complete_list = false;
  if (cls && u.complete && u.max_dim >= cls->cert.max_dim) {
    bool coherent = true;
    Index small = 0;
    for (Index c : u.indecs) {
      if (u.universe[c].dim > cls->cert.max_dim) {
        coherent = false;
        break;
      }
      ++small;
    }
    complete_list = coherent && small == cls->cert.count;
  }
  const auto& l1 = bracket_level(led, 1);
  std::vector<Index> missing;
  for (Index c : u.indecs)
    if (!std::binary_search(l1.members.begin(), l1.members.end(), c))
      missing.push_back(c);
  if (missing.empty())
    return {DimValue::Finite, 0, complete_list,
            complete_list
                ? "the additive closure of the generator covers the "
                  "complete indecomposable list"
                : "the additive closure covers the bounded universe; no "
                  "completeness certificate"};
  auto ctx = AlgebraContext::get(u.alg);
  if (ctx->ext1_dim(led.generator, led.generator) == 0)
    return {DimValue::Infinite, 0, true,
            "Ext^1 vanishes on add(generator), so every bracket level "
            "equals the additive closure, and a class of dimension " +
                std::to_string(u.universe[missing.front()].dim) +
                " stays outside"};
  for (Index n = 2; n <= led.level_cap + 1; ++n) {
    std::vector<Index> prev = led.levels[n - 1].members;
    const auto& lvl = bracket_level(led, n);
    bool all = true;
    for (Index c : u.indecs)
      if (!std::binary_search(lvl.members.begin(), lvl.members.end(), c)) {
        all = false;
        break;
      }
    if (all) {
      bool exact = complete_list && n == 2;
      return {DimValue::Finite, n - 1, exact,
              exact ? "level two covers the complete list while additive "
                      "closure provably misses a class"
                    : "bounded level count; the lower bound is not "
                      "certified at these bounds"};
    }
    if (lvl.members == prev)
      return {DimValue::Unk, 0, false,
              "bracket levels stabilized below the bounded universe "
              "without a vanishing-Ext certificate"};
  }
  return {DimValue::Unk, 0, false,
          "level cap reached before the bounded universe was covered"};
}

// ---- small helpers ----

FpMatrix basis_col(Scalar p, Index dim, Index i) {
  FpMatrix v = FpMatrix::zero(p, dim, 1);
  v.set(i, 0, 1);
  return v;
}

ojson strong_json(const StrongGradingReport& r) {
  ojson j;
  j["strongly_graded"] = r.strongly_graded;
  if (!r.strongly_graded) {
    j["reason"] = r.reason;
    if (r.witness_pair)
      j["witness_pair"] =
          ojson::array({r.witness_pair->first, r.witness_pair->second});
  }
  return j;
}

ojson split_json(const SeparabilityReport& rep) {
  ojson j;
  j["r_side_split"] = rep.r_side.split;
  j["s_side_split"] = rep.s_side.split;
  j["r_complement_dim"] = rep.r_side.complement_dim;
  j["s_complement_dim"] = rep.s_side.complement_dim;
  return j;
}

ojson count_json(const UniversePtr& u) {
  ojson j;
  j["indecomposables"] = (Index)u->indecs.size();
  j["max_dim"] = u->max_dim;
  j["complete"] = u->complete;
  return j;
}

ClaimVerdict make_v(const char* verdict, const char* reason, ojson ev) {
  ClaimVerdict v;
  v.verdict = verdict;
  v.reason = reason;
  v.evidence = std::move(ev);
  return v;
}

const GradedMoritaContext& need_context(const Instance& fx,
                                        const char* claim) {
  if (fx.kind != "context" || !fx.context)
    throw ValidationError(std::string(claim) +
                          " needs a context instance, got kind '" + fx.kind +
                          "'");
  return *fx.context;
}

// Identity-degree slice of a bridging bimodule, as a bimodule over the two
// identity components.  Homogeneity makes the slice invariant, and
// Bimodule::make re-verifies the laws.
Bimodule identity_slice(const Bimodule& b, const std::vector<GElem>& deg,
                        GElem e, const DegreeZeroPart& lpart,
                        const DegreeZeroPart& rpart) {
  Scalar p = lpart.alg->p();
  std::vector<Index> rows;
  for (Index t = 0; t < b.dim; ++t)
    if (deg[t] == e) rows.push_back(t);
  Index k = (Index)rows.size();
  auto restrict_action = [&](const FpMatrix& full) {
    FpMatrix m = FpMatrix::zero(p, k, k);
    for (Index r = 0; r < k; ++r)
      for (Index c = 0; c < k; ++c) m.set(r, c, full(rows[r], rows[c]));
    return m;
  };
  std::vector<FpMatrix> lact, ract;
  for (Index u : lpart.indices) lact.push_back(restrict_action(b.lact[u]));
  for (Index v : rpart.indices) ract.push_back(restrict_action(b.ract[v]));
  return Bimodule::make(lpart.alg, rpart.alg, std::move(lact),
                        std::move(ract));
}

// Unit-vector embedding of the identity component into its ring.
FpMatrix component_embedding(const GradedAlgebraPtr& g,
                             const DegreeZeroPart& part) {
  Scalar p = g->alg->p();
  FpMatrix f = FpMatrix::zero(p, g->alg->dim(), (Index)part.indices.size());
  for (Index u = 0; u < (Index)part.indices.size(); ++u)
    f.set(part.indices[u], u, 1);
  return f;
}

// ---- the claims ----

ClaimVerdict clm_l2_3(const Instance& fx, const ClaimParams& prm) {
  const auto& c = need_context(fx, "CLM-L2.3");
  ojson ev;
  SeparabilityReport rep;
  try {
    rep = separable_equivalence_check(c.ctx.m, c.ctx.n, prm.budget);
  } catch (const NotProjectiveOneSided& e) {
    ev["hypothesis"] = ojson{{"projective_bimodules", false},
                             {"detail", e.what()}};
    return make_v(kUndecided, kHypothesis, std::move(ev));
  }
  ev["hypothesis"] = split_json(rep);
  if (!rep.r_side.split || !rep.s_side.split)
    return make_v(kUndecided, kHypothesis, std::move(ev));
  DimValue vr =
      ext_dim_value(c.r->alg, classify_doc(fx.algebra, prm.budget), prm);
  DimValue vs =
      ext_dim_value(c.s->alg, classify_doc(*fx.second, prm.budget), prm);
  ev["ext_dim_r"] = dim_json(vr);
  ev["ext_dim_s"] = dim_json(vs);
  if (!vr.exact || !vs.exact)
    return make_v(kUndecided, kNotExact, std::move(ev));
  return make_v(dims_equal(vr, vs) ? kConsistent : kViolated, "",
                std::move(ev));
}

ClaimVerdict clm_l3_3(const Instance& fx, const ClaimParams& prm) {
  const auto& g = fx.algebra.alg;
  auto rep = is_strongly_graded(*g);
  ojson ev;
  ev["hypothesis"] = strong_json(rep);
  if (!rep.strongly_graded || !g->group.is_finite()) {
    if (!g->group.is_finite())
      ev["hypothesis"]["finite_group"] = false;
    return make_v(kUndecided, kHypothesis, std::move(ev));
  }
  LedgerParams lp = to_ledger(prm);
  GradedModule m = fx.module ? *fx.module : regular_graded_module(g);
  auto sm = smash_product(g);
  auto scls = smash_classification(g, prm);
  Index ds = std::max(prm.max_dim, scls ? scls->cert.max_dim : Index(0));
  auto su = shared_universe(sm.alg, ds, prm.budget);
  auto sled = make_ledger(su, to_smashed(sm, m), lp);
  DimValue graded = gen_time_value(sled, scls);
  auto part = identity_component(*g);
  auto bcls = classify_algebra(part.alg, prm.budget);
  Index db = std::max(prm.max_dim, bcls ? bcls->cert.max_dim : Index(0));
  auto bu = shared_universe(part.alg, db, prm.budget);
  Module fm = dade_degree_functor(g, g->group.identity(), m);
  auto bled = make_ledger(bu, fm, lp);
  DimValue image = gen_time_value(bled, bcls);
  ev["gen_time_graded"] = dim_json(graded);
  ev["gen_time_image"] = dim_json(image);
  ev["module_dim"] = m.mod.dim;
  if (!graded.exact || !image.exact)
    return make_v(kUndecided, kNotExact, std::move(ev));
  return make_v(dims_le(image, graded) ? kConsistent : kViolated, "",
                std::move(ev));
}

ClaimVerdict clm_l3_4(const Instance& fx, const ClaimParams& prm) {
  const auto& g = fx.algebra.alg;
  ojson ev;
  if (!g->group.is_finite()) {
    ev["hypothesis"] = ojson{{"finite_group", false}};
    return make_v(kUndecided, kHypothesis, std::move(ev));
  }
  LedgerParams lp = to_ledger(prm);
  GradedModule m = fx.module ? *fx.module : regular_graded_module(g);
  auto sm = smash_product(g);
  auto scls = smash_classification(g, prm);
  Index ds = std::max(prm.max_dim, scls ? scls->cert.max_dim : Index(0));
  auto su = shared_universe(sm.alg, ds, prm.budget);
  auto sled = make_ledger(su, to_smashed(sm, m), lp);
  DimValue graded = gen_time_value(sled, scls);
  auto ucls = classify_doc(fx.algebra, prm.budget);
  Index du = std::max(prm.max_dim, ucls ? ucls->cert.max_dim : Index(0));
  auto uu = shared_universe(g->alg, du, prm.budget);
  auto uled = make_ledger(uu, m.mod, lp);
  DimValue plain = gen_time_value(uled, ucls);
  ev["gen_time_graded"] = dim_json(graded);
  ev["gen_time_ungraded"] = dim_json(plain);
  ev["module_dim"] = m.mod.dim;
  if (!graded.exact || !plain.exact)
    return make_v(kUndecided, kNotExact, std::move(ev));
  return make_v(dims_equal(graded, plain) ? kConsistent : kViolated, "",
                std::move(ev));
}

ClaimVerdict clm_l3_5(const Instance& fx, const ClaimParams& prm) {
  const auto& g = fx.algebra.alg;
  auto rep = is_strongly_graded(*g);
  ojson ev;
  ev["hypothesis"] = strong_json(rep);
  if (!rep.strongly_graded || !g->group.is_finite()) {
    if (!g->group.is_finite())
      ev["hypothesis"]["finite_group"] = false;
    return make_v(kUndecided, kHypothesis, std::move(ev));
  }
  auto gd = graded_ext_dim_value(g, prm);
  ev["graded_ext_dim"] = dim_json(gd.val);
  if (!gd.cls || !gd.val.exact)
    return make_v(kUndecided, kNotExact, std::move(ev));
  // ungraded generation of the underlying modules of all graded classes
  auto sctx = AlgebraContext::get(gd.sm->alg);
  auto en =
      enumerate_indecomposables(*sctx, gd.cls->cert.max_dim, prm.budget);
  Index mx = prm.max_dim;
  for (const auto& x : en.classes) mx = std::max(mx, x.dim);
  auto ru = shared_universe(g->alg, mx, prm.budget);
  std::vector<Index> targets;
  bool located = en.complete && ru->complete;
  for (const auto& x : en.classes) {
    auto cls = ru->classify(from_smashed(*gd.sm, x).mod.mod);
    if (!cls) {
      located = false;
      break;
    }
    targets.push_back(*cls);
  }
  DimValue mixed;
  if (located) {
    std::vector<Index> gen_parts;
    bool certified = true;
    for (Index t : targets) {
      if (!ru->decs[t].all_certified) certified = false;
      for (Index pc : ru->parts[t]) gen_parts.push_back(pc);
    }
    std::sort(gen_parts.begin(), gen_parts.end());
    gen_parts.erase(std::unique(gen_parts.begin(), gen_parts.end()),
                    gen_parts.end());
    Module gen = zero_module(g->alg);
    for (Index pc : gen_parts) gen = direct_sum(gen, ru->universe[pc]);
    auto led = make_ledger(ru, gen, to_ledger(prm));
    const auto& l1 = bracket_level(led, 1);
    bool covered = true;
    for (Index t : targets)
      if (!std::binary_search(l1.members.begin(), l1.members.end(), t))
        covered = false;
    if (covered)
      mixed = {DimValue::Finite, 0, certified,
               "the sum of the indecomposable parts of every graded class "
               "puts each underlying module in its additive closure"};
    else
      mixed = {DimValue::Unk, 0, false,
               "additive closure failed to cover a located target"};
    ev["graded_classes"] = (Index)en.classes.size();
    ev["generator_parts"] = (Index)gen_parts.size();
  } else {
    mixed = {DimValue::Unk, 0, false,
             "an underlying module fell outside the bounded universe"};
  }
  ev["mixed_ext_dim"] = dim_json(mixed);
  if (!gd.val.exact || !mixed.exact)
    return make_v(kUndecided, kNotExact, std::move(ev));
  return make_v(dims_le(gd.val, mixed) ? kConsistent : kViolated, "",
                std::move(ev));
}

ClaimVerdict clm_t3_5(const Instance& fx, const ClaimParams& prm) {
  const auto& g = fx.algebra.alg;
  auto rep = is_strongly_graded(*g);
  ojson ev;
  ev["hypothesis"] = strong_json(rep);
  if (!rep.strongly_graded)
    return make_v(kUndecided, kHypothesis, std::move(ev));
  DimValue vr =
      ext_dim_value(g->alg, classify_doc(fx.algebra, prm.budget), prm);
  auto gd = graded_ext_dim_value(g, prm);
  auto part = identity_component(*g);
  DimValue ve =
      ext_dim_value(part.alg, classify_algebra(part.alg, prm.budget), prm);
  ev["ext_dim"] = dim_json(vr);
  ev["graded_ext_dim"] = dim_json(gd.val);
  ev["component_ext_dim"] = dim_json(ve);
  ev["indecomposables"] =
      count_json(shared_universe(g->alg, prm.max_dim, prm.budget));
  ev["component_indecomposables"] =
      count_json(shared_universe(part.alg, prm.max_dim, prm.budget));
  if (!vr.exact || !gd.val.exact || !ve.exact)
    return make_v(kUndecided, kNotExact, std::move(ev));
  bool eq = dims_equal(vr, gd.val) && dims_equal(gd.val, ve);
  return make_v(eq ? kConsistent : kViolated, "", std::move(ev));
}

ClaimVerdict clm_ex3_6(const Instance& fx, const ClaimParams& prm) {
  const auto& g = fx.algebra.alg;
  auto rep = is_strongly_graded(*g);
  ojson ev;
  ev["strong_grading"] = strong_json(rep);
  ev["support"] = g->support();
  auto part = identity_component(*g);
  DimValue ve =
      ext_dim_value(part.alg, classify_algebra(part.alg, prm.budget), prm);
  ev["component_ext_dim"] = dim_json(ve);
  ev["total_ring_classified"] =
      classify_doc(fx.algebra, prm.budget).has_value();
  // indecomposables with both identity-degree basis idempotents of rank one
  Scalar p = g->alg->p();
  std::vector<Index> verts;
  for (Index i : g->component(g->group.identity())) {
    FpMatrix x = basis_col(p, g->alg->dim(), i);
    if (g->alg->mul(x, x) == x) verts.push_back(i);
  }
  Index d = std::max<Index>(2, prm.max_dim);
  auto u = shared_universe(g->alg, d, prm.budget);
  Index balanced = 0;
  for (Index c : u->indecs) {
    const Module& m = u->universe[c];
    if (m.dim != (Index)verts.size()) continue;
    bool all_one = true;
    for (Index i : verts)
      if (rank_of(m.act(basis_col(p, g->alg->dim(), i))) != 1) all_one = false;
    if (all_one) ++balanced;
  }
  ev["vertices"] = (Index)verts.size();
  ev["rank_one_per_vertex_classes"] = balanced;
  ev["indecomposables"] = count_json(u);
  bool exact_counts = u->complete;
  if (!ve.exact || !exact_counts)
    return make_v(kUndecided, kNotExact, std::move(ev));
  bool separated = !rep.strongly_graded && ve.kind == DimValue::Finite &&
                   ve.value == 0 && balanced >= 3;
  return make_v(separated ? kConsistent : kViolated, "", std::move(ev));
}

ClaimVerdict clm_c3_6(const Instance& fx, const ClaimParams& prm) {
  const auto& c = need_context(fx, "CLM-C3.6");
  ojson ev;
  auto rep_r = is_strongly_graded(*c.r);
  auto rep_s = is_strongly_graded(*c.s);
  ojson hyp;
  hyp["r_strongly_graded"] = rep_r.strongly_graded;
  hyp["s_strongly_graded"] = rep_s.strongly_graded;
  hyp["finite_group"] = c.r->group.is_finite();
  if (!rep_r.strongly_graded || !rep_s.strongly_graded ||
      !c.r->group.is_finite()) {
    ev["hypothesis"] = std::move(hyp);
    return make_v(kUndecided, kHypothesis, std::move(ev));
  }
  GElem e = c.r->group.identity();
  auto pr = identity_component(*c.r);
  auto ps = identity_component(*c.s);
  // the identity components inherit the bridges: their identity-degree
  // slices, checked for a separable equivalence
  bool sep = false;
  try {
    Bimodule ms = identity_slice(c.ctx.m, c.mdeg, e, pr, ps);
    Bimodule ns = identity_slice(c.ctx.n, c.ndeg, e, ps, pr);
    auto srep = separable_equivalence_check(ms, ns, prm.budget);
    sep = srep.r_side.split && srep.s_side.split;
    hyp["component_separable_equivalence"] = split_json(srep);
  } catch (const NotProjectiveOneSided& ex) {
    hyp["component_separable_equivalence"] =
        ojson{{"projective_bimodules", false}, {"detail", ex.what()}};
  }
  // each ring is faithfully flat over its identity component
  auto flat_r = faithfully_flat_check(component_embedding(c.r, pr), pr.alg,
                                      c.r->alg);
  auto flat_s = faithfully_flat_check(component_embedding(c.s, ps), ps.alg,
                                      c.s->alg);
  hyp["r_flat_over_component"] =
      ojson{{"flat", flat_r.flat}, {"faithful", flat_r.faithful}};
  hyp["s_flat_over_component"] =
      ojson{{"flat", flat_s.flat}, {"faithful", flat_s.faithful}};
  ev["hypothesis"] = std::move(hyp);
  if (!sep) return make_v(kUndecided, kHypothesis, std::move(ev));
  auto cls_r = classify_doc(fx.algebra, prm.budget);
  auto cls_s = classify_doc(*fx.second, prm.budget);
  DimValue vr = ext_dim_value(c.r->alg, cls_r, prm);
  DimValue vs = ext_dim_value(c.s->alg, cls_s, prm);
  ev["ext_dim_r"] = dim_json(vr);
  ev["ext_dim_s"] = dim_json(vs);
  ev["r_finite_type"] = cls_r.has_value();
  ev["s_finite_type"] = cls_s.has_value();
  if (!vr.exact || !vs.exact)
    return make_v(kUndecided, kNotExact, std::move(ev));
  bool fin_match = (vr.kind == DimValue::Finite) == (vs.kind == DimValue::Finite);
  bool type_match = cls_r.has_value() == cls_s.has_value();
  return make_v(fin_match && type_match ? kConsistent : kViolated, "",
                std::move(ev));
}

ClaimVerdict clm_t3_9(const Instance& fx, const ClaimParams& prm) {
  const auto& c = need_context(fx, "CLM-T3.9");
  ojson ev;
  auto grep = graded_context_check(c);
  ojson hyp;
  hyp["strong"] = grep.strong;
  hyp["unital_components_r"] = unital_components(c.r);
  hyp["unital_components_s"] = unital_components(c.s);
  hyp["graded_equivalence"] = grep.equivalence;
  hyp["pairings_onto"] =
      ojson{{"phi", grep.base.phi_onto}, {"psi", grep.base.psi_onto}};
  bool ok = grep.strong && grep.equivalence &&
            hyp["unital_components_r"].get<bool>() &&
            hyp["unital_components_s"].get<bool>();
  ev["hypothesis"] = std::move(hyp);
  if (!ok) return make_v(kUndecided, kHypothesis, std::move(ev));
  DimValue vr =
      ext_dim_value(c.r->alg, classify_doc(fx.algebra, prm.budget), prm);
  DimValue vs =
      ext_dim_value(c.s->alg, classify_doc(*fx.second, prm.budget), prm);
  auto gr = graded_ext_dim_value(c.r, prm);
  auto gs = graded_ext_dim_value(c.s, prm);
  ev["ext_dim_r"] = dim_json(vr);
  ev["ext_dim_s"] = dim_json(vs);
  ev["graded_ext_dim_r"] = dim_json(gr.val);
  ev["graded_ext_dim_s"] = dim_json(gs.val);
  if (!vr.exact || !vs.exact || !gr.val.exact || !gs.val.exact)
    return make_v(kUndecided, kNotExact, std::move(ev));
  bool eq = dims_equal(vr, vs) && dims_equal(gr.val, gs.val);
  return make_v(eq ? kConsistent : kViolated, "", std::move(ev));
}

ClaimVerdict clm_t3_12(const Instance& fx, const ClaimParams& prm) {
  const auto& c = need_context(fx, "CLM-T3.12");
  ojson ev;
  ojson hyp;
  hyp["finite_group"] = c.r->group.is_finite();
  if (!c.r->group.is_finite()) {
    ev["hypothesis"] = std::move(hyp);
    return make_v(kUndecided, kHypothesis, std::move(ev));
  }
  try {
    GradedBimodule gm = GradedBimodule::make(c.r, c.s, c.ctx.m, c.mdeg);
    GradedBimodule gn = GradedBimodule::make(c.s, c.r, c.ctx.n, c.ndeg);
    auto srep = graded_separable_equivalence_check(gm, gn, prm.budget);
    hyp["graded_separable_equivalence"] = split_json(srep);
    if (!srep.r_side.split || !srep.s_side.split) {
      ev["hypothesis"] = std::move(hyp);
      return make_v(kUndecided, kHypothesis, std::move(ev));
    }
  } catch (const NotProjectiveOneSided& ex) {
    hyp["graded_separable_equivalence"] =
        ojson{{"projective_bimodules", false}, {"detail", ex.what()}};
    ev["hypothesis"] = std::move(hyp);
    return make_v(kUndecided, kHypothesis, std::move(ev));
  }
  ev["hypothesis"] = std::move(hyp);
  DimValue vr =
      ext_dim_value(c.r->alg, classify_doc(fx.algebra, prm.budget), prm);
  DimValue vs =
      ext_dim_value(c.s->alg, classify_doc(*fx.second, prm.budget), prm);
  auto gr = graded_ext_dim_value(c.r, prm);
  auto gs = graded_ext_dim_value(c.s, prm);
  ev["ext_dim_r"] = dim_json(vr);
  ev["ext_dim_s"] = dim_json(vs);
  ev["graded_ext_dim_r"] = dim_json(gr.val);
  ev["graded_ext_dim_s"] = dim_json(gs.val);
  if (!vr.exact || !vs.exact || !gr.val.exact || !gs.val.exact)
    return make_v(kUndecided, kNotExact, std::move(ev));
  bool eq = dims_equal(vr, vs) && dims_equal(gr.val, gs.val);
  return make_v(eq ? kConsistent : kViolated, "", std::move(ev));
}

ClaimVerdict clm_eq4_1(const Instance& fx, const ClaimParams& prm) {
  // The context ring with one bridge, graded over the integers; the claim
  // equates its extension dimension with the diagonal's when the grading is
  // strong.  Both shapes of instance are accepted: a graded algebra, or a
  // context whose ring gets assembled here.
  GradedAlgebraPtr lam;
  if (fx.kind == "context" && fx.context) {
    const auto& c = *fx.context;
    MoritaContextData d;
    d.a = c.r->alg;
    d.b = c.s->alg;
    d.m_dim = c.ctx.m.dim;
    d.n_dim = c.ctx.n.dim;
    d.a_on_m = c.ctx.m.lact;
    d.m_from_b = c.ctx.m.ract;
    d.b_on_n = c.ctx.n.lact;
    d.n_from_a = c.ctx.n.ract;
    d.phi.resize(d.m_dim);
    for (Index i = 0; i < d.m_dim; ++i)
      for (Index j = 0; j < d.n_dim; ++j)
        d.phi[i].push_back(c.ctx.phi.col(i * d.n_dim + j));
    d.psi.resize(d.n_dim);
    for (Index j = 0; j < d.n_dim; ++j)
      for (Index i = 0; i < d.m_dim; ++i)
        d.psi[j].push_back(c.ctx.psi.col(j * d.m_dim + i));
    lam = morita_context_ring(d);
  } else {
    lam = fx.algebra.alg;
  }
  ojson ev;
  ev["ring_dim"] = lam->alg->dim();
  auto rep = is_strongly_graded(*lam);
  ev["hypothesis"] = strong_json(rep);
  auto part = identity_component(*lam);
  DimValue vl =
      ext_dim_value(lam->alg, classify_algebra(lam->alg, prm.budget), prm);
  DimValue vd =
      ext_dim_value(part.alg, classify_algebra(part.alg, prm.budget), prm);
  ev["ext_dim_ring"] = dim_json(vl);
  ev["ext_dim_diagonal"] = dim_json(vd);
  if (vl.exact && vd.exact)
    ev["equality_observed"] = dims_equal(vl, vd);
  if (!rep.strongly_graded)
    return make_v(kUndecided, kHypothesis, std::move(ev));
  if (!vl.exact || !vd.exact)
    return make_v(kUndecided, kNotExact, std::move(ev));
  return make_v(dims_equal(vl, vd) ? kConsistent : kViolated, "",
                std::move(ev));
}

ClaimVerdict clm_c4_1(const Instance& fx, const ClaimParams& prm) {
  const auto& g = fx.algebra.alg;
  Scalar p = g->alg->p();
  ojson ev;
  std::optional<CornerContextReport> rep;
  Index chosen = kNoRef;
  for (Index i : g->component(g->group.identity())) {
    FpMatrix w = basis_col(p, g->alg->dim(), i);
    if (!(g->alg->mul(w, w) == w)) continue;
    auto r = corner_context(g, w);
    bool full = r.rwr_full && r.rvr_full;
    if (!rep || full) {
      rep = std::move(r);
      chosen = i;
      if (full) break;
    }
  }
  ojson hyp;
  hyp["strongly_graded"] = is_strongly_graded(*g).strongly_graded;
  hyp["unital_components"] = unital_components(g);
  if (!rep) {
    hyp["identity_degree_idempotent"] = false;
    ev["hypothesis"] = std::move(hyp);
    return make_v(kUndecided, kHypothesis, std::move(ev));
  }
  hyp["idempotent_basis_index"] = chosen;
  hyp["rwr_full"] = rep->rwr_full;
  hyp["rvr_full"] = rep->rvr_full;
  bool ok = hyp["strongly_graded"].get<bool>() &&
            hyp["unital_components"].get<bool>() && rep->rwr_full &&
            rep->rvr_full && rep->corner && rep->complement;
  ev["hypothesis"] = std::move(hyp);
  if (!ok) return make_v(kUndecided, kHypothesis, std::move(ev));
  ojson concl;
  concl["context_equivalence"] = rep->check && rep->check->equivalence;
  concl["corner_components_unital"] = rep->corner_components_unital;
  concl["complement_components_unital"] = rep->complement_components_unital;
  DimValue vc = ext_dim_value(
      rep->corner->alg, classify_algebra(rep->corner->alg, prm.budget), prm);
  DimValue vv = ext_dim_value(
      rep->complement->alg,
      classify_algebra(rep->complement->alg, prm.budget), prm);
  concl["ext_dim_corner"] = dim_json(vc);
  concl["ext_dim_complement"] = dim_json(vv);
  bool type_c = classify_algebra(rep->corner->alg, prm.budget).has_value();
  bool type_v =
      classify_algebra(rep->complement->alg, prm.budget).has_value();
  concl["corner_finite_type"] = type_c;
  concl["complement_finite_type"] = type_v;
  ev["conclusion"] = std::move(concl);
  if (!vc.exact || !vv.exact)
    return make_v(kUndecided, kNotExact, std::move(ev));
  bool good = ev["conclusion"]["context_equivalence"].get<bool>() &&
              ev["conclusion"]["corner_components_unital"].get<bool>() &&
              ev["conclusion"]["complement_components_unital"].get<bool>() &&
              dims_equal(vc, vv) && type_c == type_v;
  return make_v(good ? kConsistent : kViolated, "", std::move(ev));
}

// Suite-internal check: a declared classification forces extension
// dimension zero, witnessed leg by leg.
ClaimVerdict check_finite_type_zero(const Instance& fx,
                                    const ClaimParams& prm) {
  ojson ev;
  bool any = false, inexact = false, bad = false;
  auto leg = [&](const AlgebraDoc& d, const char* key) {
    if (!d.cert) return;
    any = true;
    DimValue v = ext_dim_value(d.alg->alg, classify_doc(d, prm.budget), prm);
    ev[key] = dim_json(v);
    ev[std::string(key) + "_declared"] =
        ojson{{"count", d.cert->count}, {"max_dim", d.cert->max_dim}};
    if (!v.exact)
      inexact = true;
    else if (v.kind != DimValue::Finite || v.value != 0)
      bad = true;
  };
  leg(fx.algebra, "ext_dim");
  if (fx.second) leg(*fx.second, "ext_dim_second");
  if (!any) {
    ev["hypothesis"] = ojson{{"declared_classification", false}};
    return make_v(kUndecided, kHypothesis, std::move(ev));
  }
  if (inexact) return make_v(kUndecided, kNotExact, std::move(ev));
  return make_v(bad ? kViolated : kConsistent, "", std::move(ev));
}

// ---- registry ----

struct ClaimEntry {
  ClaimInfo info;
  ClaimVerdict (*fn)(const Instance&, const ClaimParams&);
};

const std::vector<ClaimEntry>& all_entries() {
  static const std::vector<ClaimEntry> tbl = [] {
    const std::vector<std::string> graded_five = {
        "c2_group_algebra_p2", "c3_group_algebra_p2",
        "v4_group_algebra_p2_c2graded", "skew_f3_x2_c2", "m2_f2_c2graded"};
    std::vector<std::string> graded_seven = graded_five;
    graded_seven.push_back("kronecker_p2_zgraded");
    graded_seven.push_back("t2_f2_zgraded");
    const std::vector<std::string> contexts = {"morita_f2_m2",
                                               "morita_f2c2_m2"};
    std::vector<ClaimEntry> t;
    t.push_back({{"CLM-L2.3",
                  "separably equivalent algebras have equal extension "
                  "dimension",
                  contexts},
                 clm_l2_3});
    t.push_back({{"CLM-L3.3",
                  "the identity-degree functor of a strong grading never "
                  "raises generation time",
                  graded_five},
                 clm_l3_3});
    t.push_back({{"CLM-L3.4",
                  "graded and ungraded generation times of a graded module "
                  "agree",
                  graded_five},
                 clm_l3_4});
    t.push_back({{"CLM-L3.5",
                  "graded extension dimension is at most the extension "
                  "dimension of the graded family inside the ungraded "
                  "category",
                  graded_five},
                 clm_l3_5});
    t.push_back({{"CLM-T3.5",
                  "for a strong grading the extension dimension, the graded "
                  "one and the identity component's all agree",
                  graded_seven},
                 clm_t3_5});
    t.push_back({{"CLM-EX3.6",
                  "a non-strong positive grading can separate the ring's "
                  "extension dimension from its degree-zero part's",
                  {"kronecker_p2_zgraded"}},
                 clm_ex3_6});
    t.push_back({{"CLM-C3.6",
                  "strongly graded rings with separably equivalent identity "
                  "components share finiteness of extension dimension and "
                  "of representation type",
                  contexts},
                 clm_c3_6});
    t.push_back({{"CLM-T3.9",
                  "a graded Morita equivalence of strongly graded rings "
                  "with unital components preserves extension dimensions, "
                  "graded and ungraded",
                  contexts},
                 clm_t3_9});
    t.push_back({{"CLM-T3.12",
                  "a graded separable equivalence over a finite grading "
                  "group preserves extension dimensions, graded and "
                  "ungraded",
                  contexts},
                 clm_t3_12});
    t.push_back({{"CLM-EQ4.1",
                  "a strongly graded one-bridge context ring shares its "
                  "extension dimension with the diagonal",
                  {"t2_f2_zgraded", "morita_f2_m2"}},
                 clm_eq4_1});
    t.push_back({{"CLM-C4.1",
                  "both Peirce corners of a full degree-identity idempotent "
                  "are context-linked and share extension dimension and "
                  "representation type",
                  {"m2_f2_c2graded", "c2_group_algebra_p2"}},
                 clm_c4_1});
    t.push_back({{"finite-type-zero",
                  "a replayed classification forces extension dimension "
                  "zero with an all-indecomposable generator",
                  {}},
                 check_finite_type_zero});
    return t;
  }();
  return tbl;
}

const ClaimEntry& find_entry(const std::string& claim) {
  for (const auto& e : all_entries())
    if (e.info.id == claim) return e;
  throw UnknownClaim("unknown claim '" + claim + "'");
}

ojson verdict_json(const ClaimVerdict& v) {
  ojson j;
  j["claim"] = v.claim;
  j["instance"] = v.instance;
  j["parameters"] = params_json(v.params);
  j["verdict"] = v.verdict;
  j["reason"] = v.reason;
  j["evidence"] = v.evidence.is_null() ? ojson::object() : v.evidence;
  return j;
}

}  // namespace

const std::vector<ClaimInfo>& claim_registry() {
  static const std::vector<ClaimInfo> reg = [] {
    std::vector<ClaimInfo> r;
    for (const auto& e : all_entries())
      if (e.info.id != "finite-type-zero") r.push_back(e.info);
    return r;
  }();
  return reg;
}

ClaimVerdict run_claim(const std::string& claim, const Instance& instance,
                       const ClaimParams& prm) {
  const auto& entry = find_entry(claim);
  auto t0 = std::chrono::steady_clock::now();
  ClaimVerdict v;
  try {
    v = entry.fn(instance, prm);
  } catch (const BudgetExceeded& e) {
    v = ClaimVerdict{};
    v.verdict = kUndecided;
    v.reason = "budget-exceeded";
    v.evidence = ojson{{"estimate", e.estimate}, {"budget", e.budget}};
  }
  v.claim = claim;
  v.instance = instance.name;
  v.params = prm;
  v.runtime_ms = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  return v;
}

ClaimVerdict run_claim(const std::string& claim, const std::string& instance,
                       const ClaimParams& prm) {
  return run_claim(claim, fixture(instance), prm);
}

SuiteResult run_suite(const std::string& suite, const ClaimParams& prm,
                      Index threads) {
  std::vector<std::pair<std::string, std::string>> tasks;
  bool known = false;
  if (suite == "paper-claims" || suite == "all") {
    known = true;
    for (const auto& info : claim_registry())
      for (const auto& fx : info.fixtures) tasks.push_back({info.id, fx});
  }
  if (suite == "finite-type-sanity" || suite == "all") {
    known = true;
    for (const auto& name : fixture_names()) {
      const Instance& fx = fixture(name);
      if (fx.algebra.cert || (fx.second && fx.second->cert))
        tasks.push_back({"finite-type-zero", name});
    }
  }
  if (!known) {
    ojson ledger;
    ledger["suite"] = suite;
    ledger["error"] = "unknown suite '" + suite + "'";
    return {std::move(ledger), 3};
  }
  std::sort(tasks.begin(), tasks.end());
  std::vector<ClaimVerdict> results(tasks.size());
  bool input_error = false;
  auto work = [&](std::size_t i) {
    try {
      results[i] = run_claim(tasks[i].first, tasks[i].second, prm);
    } catch (const Error& e) {
      ClaimVerdict v;
      v.claim = tasks[i].first;
      v.instance = tasks[i].second;
      v.params = prm;
      v.verdict = kUndecided;
      v.reason = "input-error";
      v.evidence = ojson{{"detail", e.what()}};
      results[i] = std::move(v);
      input_error = true;
    }
  };
  Index t = std::max<Index>(1, std::min<Index>(threads, (Index)tasks.size()));
  if (t <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) work(i);
  } else {
    std::vector<std::future<void>> futs;
    for (Index w = 0; w < t; ++w)
      futs.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = (std::size_t)w; i < tasks.size();
             i += (std::size_t)t)
          work(i);
      }));
    for (auto& f : futs) f.get();
  }
  ojson ledger;
  ledger["suite"] = suite;
  ledger["parameters"] = params_json(prm);
  ledger["entries"] = ojson::array();
  int exit_code = input_error ? 3 : 0;
  for (const auto& v : results) {
    ledger["entries"].push_back(verdict_json(v));
    if (exit_code < 2 && v.reason == "budget-exceeded") exit_code = 2;
    if (exit_code < 1 && v.verdict == kViolated) exit_code = 1;
  }
  return {std::move(ledger), exit_code};
}

std::string ledger_text(const nlohmann::ordered_json& ledger) {
  return ledger.dump(2) + "\n";
}

}  // namespace gradext
