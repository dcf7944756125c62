#include <doctest.h>

#include <algorithm>
#include <set>

#include "gradext/build.hpp"
#include "gradext/extdim.hpp"
#include "helpers.hpp"

using namespace gradext;

namespace {

// F_2[x]/x^3, the serial length-3 reference
AlgebraPtr nakayama3() {
  PathRelation cube;
  cube.terms = {{1, {0, 0, 0}}};
  return path_algebra_quotient(2, 1, {{0, 0, "x"}}, {cube})->alg;
}

AlgebraPtr two_fields(Scalar p) {
  return Algebra::make(p, 2, {"e1", "e2"}, {{0, 0, 0, 1}, {1, 1, 1, 1}},
                       {1, 1});
}

GradedAlgebraPtr graded_dual_numbers(Scalar p) {
  return GradedAlgebra::make(testref::dual_numbers(p), GradeGroup::cyclic(2),
                             {0, 1});
}

GradedAlgebraPtr checkerboard(Scalar p) {
  return GradedAlgebra::make(testref::mat2_algebra(p), GradeGroup::cyclic(2),
                             {0, 1, 1, 0});
}

Index must_class(const UniverseTable& u, const Module& m) {
  auto c = u.classify(m);
  REQUIRE(c);
  return *c;
}

const Certificate& cert_of(const LedgerLevel& lvl, Index cls) {
  auto it = std::lower_bound(lvl.members.begin(), lvl.members.end(), cls);
  REQUIRE(it != lvl.members.end());
  REQUIRE(*it == cls);
  return lvl.certs[it - lvl.members.begin()];
}

// underlying plain module of a smash module: each base element acts as the
// sum of its copies over the group
Module forget_grading(const SmashedAlgebra& s, const Module& x) {
  const Index d = s.base->alg->dim();
  const Index ng = s.alg->dim() / d;
  std::vector<FpMatrix> rho;
  for (Index i = 0; i < d; ++i) {
    FpMatrix acc = FpMatrix::zero(obj_p(x), x.dim, x.dim);
    for (Index g = 0; g < ng; ++g) acc = acc + x.rho[g * d + i];
    rho.push_back(acc);
  }
  return Module::make(s.base->alg, std::move(rho));
}

}  // namespace

TEST_CASE("subspace counts follow the Galois numbers") {
  CHECK(subspace_count_estimate(2, 1) == doctest::Approx(2));
  CHECK(subspace_count_estimate(2, 2) == doctest::Approx(5));
  CHECK(subspace_count_estimate(2, 3) == doctest::Approx(16));
  CHECK(subspace_count_estimate(2, 4) == doctest::Approx(67));
  CHECK(subspace_count_estimate(2, 6) == doctest::Approx(2825));
  CHECK(subspace_count_estimate(5, 2) == doctest::Approx(8));
  CHECK(subspace_count_estimate(2, 8) == doctest::Approx(417199));
  // first sizes past the scan guard
  CHECK(subspace_count_estimate(2, 9) > 8.2e6);
  CHECK(subspace_count_estimate(5, 6) > 3.5e6);
}

TEST_CASE("universe tables classify modules into enumerated classes") {
  auto c2 = testref::cyclic2_algebra(2);
  auto u = build_universe(c2, 4);
  CHECK(u->complete);
  CHECK(u->universe.size() == 8);  // a.k + b.A with a + 2b <= 4
  CHECK(u->indecs.size() == 2);
  CHECK(u->by_parts.size() == 8);

  Module reg = regular_module(c2);
  Index a_cls = must_class(*u, reg);
  CHECK(u->universe[a_cls].dim == 2);
  CHECK(u->decs[a_cls].parts.size() == 1);

  Index aa = must_class(*u, direct_sum(reg, reg));
  CHECK(u->parts[aa] == std::vector<Index>{a_cls, a_cls});

  CHECK(!u->classify(zero_module(c2)));
  CHECK(!u->classify(direct_sum(direct_sum(reg, reg), reg)));  // dim 6 > 4
}

TEST_CASE("middle profiles refuse astronomically large scans") {
  auto u = build_universe(testref::dual_numbers(5), 4);
  Module reg = regular_module(u->alg);
  Module k = AlgebraContext::get(u->alg)->simples[0];
  Index a2 = must_class(*u, direct_sum(reg, reg));
  Index k2 = must_class(*u, direct_sum(k, k));
  // middle of dimension 6 over F_5: about 3.6 million subspaces
  try {
    u->profile(a2, k2);
    CHECK(false);
  } catch (const BudgetExceeded& e) {
    CHECK(e.estimate > 3.5e6);
    CHECK(e.budget == doctest::Approx(kSubspaceScanLimit));
  }
  // a dimension 4 middle is fine
  CHECK(!u->profile(a2, kNoRef).empty());
}

TEST_CASE("additive closure of a generator is level one") {
  auto c2 = testref::cyclic2_algebra(2);
  auto u = build_universe(c2, 4);
  auto ctx = AlgebraContext::get(c2);

  ClassLedger led = make_ledger(u, ctx->simples[0], {});
  REQUIRE(led.levels.size() == 2);
  CHECK(led.levels[0].members.empty());
  CHECK(led.levels[1].members.size() == 4);  // k, k^2, k^3, k^4
  for (size_t i = 0; i < led.levels[1].certs.size(); ++i) {
    const Certificate& c = led.levels[1].certs[i];
    REQUIRE(c.add);
    CHECK(c.add->gen_copies ==
          static_cast<Index>(u->decs[c.member].parts.size()));
    CHECK(c.add->sources.empty());
  }

  // a generator hitting every indecomposable covers everything at once
  ClassLedger full =
      make_ledger(u, direct_sum(regular_module(c2), ctx->simples[0]), {});
  CHECK(full.levels[1].members.size() == 8);
  CHECK(gen_time_bounded(full) == 0);
}

TEST_CASE("one extension step covers the group algebra universe") {
  auto c2 = testref::cyclic2_algebra(2);
  auto u = build_universe(c2, 4);
  auto ctx = AlgebraContext::get(c2);
  Index k_cls = must_class(*u, ctx->simples[0]);
  Index a_cls = must_class(*u, regular_module(c2));

  ClassLedger led = make_ledger(u, ctx->simples[0], {});
  const LedgerLevel& l2 = bracket_level(led, 2);
  CHECK(l2.members.size() == 8);
  for (Index m : led.levels[1].members) CHECK(ledger_member(led, 2, m));

  const Certificate& ca = cert_of(l2, a_cls);
  REQUIRE(ca.ext);
  CHECK(ca.ext->pad == kNoRef);
  CHECK(ca.ext->sub == k_cls);
  CHECK(ca.ext->quot == k_cls);

  CHECK(gen_time_bounded(led) == 1);
  CHECK(member_level(led, a_cls) == 2);
  CHECK(member_level(led, k_cls) == 1);
}

TEST_CASE("generation time over a truncated polynomial algebra") {
  auto nak = nakayama3();
  auto ctx = AlgebraContext::get(nak);
  auto u = build_universe(nak, 3);
  CHECK(u->universe.size() == 6);
  Module reg = regular_module(nak);
  Module aj2 = quotient_module(reg, ctx->rad_powers[1]).mod;
  Index a_cls = must_class(*u, reg);

  LedgerParams tight;
  tight.max_dim = 3;
  tight.slack = 0;
  ClassLedger led = make_ledger(u, ctx->simples[0], tight);
  CHECK(led.levels[1].members.size() == 3);  // k, k^2, k^3
  const LedgerLevel& l2 = bracket_level(led, 2);
  CHECK(l2.members.size() == 5);
  CHECK(!ledger_member(led, 2, a_cls));  // needs a length 2 submodule first
  CHECK(gen_time_bounded(led) == 2);
  CHECK(member_level(led, a_cls) == 3);

  ClassLedger everything =
      make_ledger(u, direct_sum(direct_sum(reg, aj2), ctx->simples[0]), tight);
  CHECK(gen_time_bounded(everything) == 0);
}

TEST_CASE("split summands of certified middles enter the same level") {
  auto nak = nakayama3();
  auto ctx = AlgebraContext::get(nak);
  auto u = build_universe(nak, 4);
  CHECK(u->universe.size() == 10);

  Module reg = regular_module(nak);
  Module k = ctx->simples[0];
  Module aj2 = quotient_module(reg, ctx->rad_powers[1]).mod;
  Index k_cls = must_class(*u, k);
  Index a_cls = must_class(*u, reg);
  Index aj2_cls = must_class(*u, aj2);
  Index ak_cls = must_class(*u, direct_sum(reg, k));
  Index aj2k_cls = must_class(*u, direct_sum(aj2, k));
  Index k4_cls = must_class(*u, direct_sum(direct_sum(k, k), direct_sum(k, k)));

  LedgerParams tight;
  tight.max_dim = 4;
  tight.slack = 0;
  ClassLedger led = make_ledger(u, aj2, tight);
  CHECK(led.levels[1].members.size() == 2);  // the generator and its square

  const LedgerLevel& l2 = bracket_level(led, 2);
  CHECK(l2.members.size() == 8);
  CHECK(!ledger_member(led, 2, aj2k_cls));

  // the serial module of length 3 plus a simple arises as an extension of
  // the generator by itself, and its two summands split off at the same level
  const Certificate& cak = cert_of(l2, ak_cls);
  REQUIRE(cak.ext);
  CHECK(cak.ext->sub == aj2_cls);
  CHECK(cak.ext->quot == aj2_cls);
  const Certificate& ca = cert_of(l2, a_cls);
  REQUIRE(ca.add);
  CHECK(ca.add->sources == std::vector<Index>{ak_cls});
  const Certificate& ck4 = cert_of(l2, k4_cls);
  REQUIRE(ck4.add);
  CHECK(ck4.add->sources == std::vector<Index>(4, ak_cls));

  const LedgerLevel& l3 = bracket_level(led, 3);
  CHECK(l3.members.size() == 10);
  const Certificate& cj = cert_of(l3, aj2k_cls);
  REQUIRE(cj.ext);
  CHECK(cj.ext->sub == k_cls);
  CHECK(cj.ext->quot == aj2_cls);
  CHECK(gen_time_bounded(led) == 2);

  // a tiny level cap stops before coverage and reports no value
  ClassLedger capped = make_ledger(u, aj2, tight);
  capped.level_cap = 1;
  CHECK(!gen_time_bounded(capped));
}

TEST_CASE("certificates replay and tampering is caught") {
  auto c2 = testref::cyclic2_algebra(2);
  auto u = build_universe(c2, 4);
  auto ctx = AlgebraContext::get(c2);
  Index a_cls = must_class(*u, regular_module(c2));

  ClassLedger led = make_ledger(u, ctx->simples[0], {});
  bracket_level(led, 2);
  std::string why;
  CHECK(replay_ledger(led, &why));

  ClassLedger bent = led;
  for (Certificate& c : bent.levels[2].certs)
    if (c.member == a_cls) c.ext->incl = FpMatrix::zero(2, 2, 1);
  CHECK(!replay_ledger(bent, &why));
  CHECK(why.find("exact sequence") != std::string::npos);

  ClassLedger shorn = led;
  shorn.levels[2].certs.pop_back();
  CHECK(!replay_ledger(shorn, &why));

  ClassLedger relabeled = led;
  for (Certificate& c : relabeled.levels[2].certs)
    if (c.member == a_cls) c.ext->sub = a_cls;  // not one level below
  CHECK(!replay_ledger(relabeled, &why));

  // the deeper ledger with split closure certificates also replays
  auto nak = nakayama3();
  auto un = build_universe(nak, 4);
  LedgerParams tight;
  tight.max_dim = 4;
  tight.slack = 0;
  Module aj2 = quotient_module(regular_module(nak),
                               AlgebraContext::get(nak)->rad_powers[1])
                   .mod;
  ClassLedger closure = make_ledger(un, aj2, tight);
  bracket_level(closure, 3);
  CHECK(replay_ledger(closure, &why));
}

TEST_CASE("smallest generators achieve dimension zero on finite type algebras") {
  LedgerParams prm;

  auto r1 = ext_dim_bounded(two_fields(2), prm);
  CHECK(r1.value == 0);
  REQUIRE(r1.generator);
  CHECK(decompose(*r1.generator).parts.size() == 2);
  CHECK(r1.candidates_tried == 1);

  auto r2 = ext_dim_bounded(testref::cyclic2_algebra(2), prm);
  CHECK(r2.value == 0);
  REQUIRE(r2.generator);
  CHECK(r2.generator->dim == 3);  // the simple plus the regular module

  LedgerParams d3;
  d3.max_dim = 3;
  auto r3 = ext_dim_bounded(nakayama3(), d3);
  CHECK(r3.value == 0);
  REQUIRE(r3.generator);
  CHECK(decompose(*r3.generator).parts.size() == 3);
  REQUIRE(r3.ledger);
  CHECK(replay_ledger(*r3.ledger));

  auto r4 = ext_dim_bounded(testref::mat2_algebra(2), prm);
  CHECK(r4.value == 0);
  CHECK(r4.candidates_tried == 1);

  auto u5 = build_universe(testref::triangular2(2), 4);
  CHECK(u5->universe.size() == 21);
  auto r5 = ext_dim_bounded(u5, prm);
  CHECK(r5.value == 0);
  REQUIRE(r5.generator);
  CHECK(decompose(*r5.generator).parts.size() == 3);
}

TEST_CASE("radical chains certify the regular generator") {
  LedgerParams d3;
  d3.max_dim = 3;
  d3.slack = 0;
  auto nak = nakayama3();
  auto cert = loewy_generator_certificate(nak, d3);
  CHECK(cert.loewy == 3);
  CHECK(cert.bound == 2);
  CHECK(cert.covered);
  CHECK(cert.generator.dim == 6);  // lengths 1, 2, 3 stacked
  REQUIRE(cert.ledger.levels.size() == 4);
  for (Index n = 2; n <= 3; ++n)
    for (const Certificate& c : cert.ledger.levels[n].certs) CHECK(c.ext);
  // the last level gives every universe member a radical layer witness
  CHECK(cert.ledger.levels[3].members.size() ==
        cert.ledger.table->universe.size());
  CHECK(replay_ledger(cert.ledger));

  auto flat = loewy_generator_certificate(two_fields(2), {});
  CHECK(flat.loewy == 1);
  CHECK(flat.bound == 0);
  CHECK(flat.covered);
  CHECK(flat.ledger.levels.size() == 2);

  auto group = loewy_generator_certificate(testref::cyclic2_algebra(2), {});
  CHECK(group.loewy == 2);
  CHECK(group.bound == 1);
  CHECK(group.covered);
  CHECK(replay_ledger(group.ledger));
}

TEST_CASE("graded brackets run over the smash product") {
  auto gd = graded_dual_numbers(2);
  LedgerParams prm;
  prm.max_dim = 2;

  // the graded regular module alone stalls: extensions by it split
  GradedModule reg = regular_graded_module(gd);
  GradedLedger alone = make_graded_ledger(gd, reg, prm);
  CHECK(alone.ledger.table->universe.size() == 7);
  CHECK(alone.ledger.levels[1].members.size() == 1);
  CHECK(!gen_time_bounded(alone.ledger));
  CHECK(alone.ledger.levels[2].members == alone.ledger.levels[1].members);

  // adding both simples certifies the shifted regular module in one step
  Module sk = Module::make(testref::dual_numbers(2),
                           {FpMatrix::identity(2, 1), FpMatrix::zero(2, 1, 1)});
  GradedModule k0 = GradedModule::make(gd, sk, {0});
  GradedModule k1 = suspension(k0, 1);
  GradedModule gen = direct_sum(direct_sum(k0, k1), reg);
  GradedLedger led = make_graded_ledger(gd, gen, prm);
  CHECK(gen_time_bounded(led.ledger) == 1);

  auto shift_cls = classify_graded(led, suspension(reg, 1));
  auto k0_cls = classify_graded(led, k0);
  auto k1_cls = classify_graded(led, k1);
  REQUIRE(shift_cls);
  REQUIRE(k0_cls);
  REQUIRE(k1_cls);
  CHECK(member_level(led.ledger, *shift_cls) == 2);
  const Certificate& c = cert_of(led.ledger.levels[2], *shift_cls);
  REQUIRE(c.ext);
  CHECK(c.ext->sub == *k0_cls);  // the socle of the shift sits in degree zero
  CHECK(c.ext->quot == *k1_cls);
  CHECK(replay_ledger(led.ledger));

  // a strongly graded matrix algebra is graded finite type at dimension zero
  auto cb = checkerboard(2);
  auto rcb = graded_ext_dim_bounded(cb, prm);
  CHECK(rcb.value == 0);
  REQUIRE(rcb.generator);
  CHECK(decompose(*rcb.generator).parts.size() == 2);
}

TEST_CASE("graded witnesses remain exact after forgetting the grading") {
  auto gd = graded_dual_numbers(2);
  LedgerParams prm;
  prm.max_dim = 2;
  Module sk = Module::make(testref::dual_numbers(2),
                           {FpMatrix::identity(2, 1), FpMatrix::zero(2, 1, 1)});
  GradedModule k0 = GradedModule::make(gd, sk, {0});
  GradedModule gen =
      direct_sum(direct_sum(k0, suspension(k0, 1)), regular_graded_module(gd));
  GradedLedger led = make_graded_ledger(gd, gen, prm);
  bracket_level(led.ledger, 2);

  const UniverseTable& u = *led.ledger.table;
  auto forget = [&](Index cls) {
    return cls == kNoRef ? zero_module(led.smash.base->alg)
                         : forget_grading(led.smash, u.universe[cls]);
  };
  Index checked = 0;
  for (const Certificate& c : led.ledger.levels[2].certs) {
    if (!c.ext) continue;
    const ExtWitness& e = *c.ext;
    Module mid = forget_grading(
        led.smash, e.pad == kNoRef
                       ? u.universe[e.x]
                       : direct_sum(u.universe[e.x], u.universe[e.pad]));
    CHECK(verify_extension(forget(e.sub), mid, forget(e.quot), e.incl, e.onto));
    ++checked;
  }
  CHECK(checked > 0);

  // forgetting the smash regular module recovers the plain regular module
  Module plain = forget_grading(
      led.smash, to_smashed(led.smash, regular_graded_module(gd)));
  CHECK(are_isomorphic(plain, regular_module(testref::dual_numbers(2)))
            .status == Tri::Yes);
}

TEST_CASE("larger windows and padding never lose certified classes") {
  auto nak = nakayama3();
  auto ctx = AlgebraContext::get(nak);
  auto u2 = build_universe(nak, 2);
  auto u3 = build_universe(nak, 3);

  auto build = [&](const UniversePtr& u, Index slack) {
    LedgerParams prm;
    prm.max_dim = u->max_dim;
    prm.slack = slack;
    ClassLedger led = make_ledger(u, ctx->simples[0], prm);
    return led;
  };
  ClassLedger l20 = build(u2, 0), l22 = build(u2, 2);
  ClassLedger l30 = build(u3, 0), l32 = build(u3, 2);
  auto t20 = gen_time_bounded(l20), t22 = gen_time_bounded(l22);
  auto t30 = gen_time_bounded(l30), t32 = gen_time_bounded(l32);
  REQUIRE(t20);
  REQUIRE(t30);
  CHECK(*t20 == 1);
  CHECK(*t30 == 2);

  // more padding never slows generation at a fixed window
  REQUIRE(t22);
  REQUIRE(t32);
  CHECK(*t22 <= *t20);
  CHECK(*t32 <= *t30);

  // at a fixed window, each computed level only grows with the padding
  const size_t shared2 = std::min(l20.levels.size(), l22.levels.size());
  for (size_t n = 1; n < shared2; ++n)
    for (Index m : l20.levels[n].members)
      CHECK(ledger_member(l22, n, m));
  const size_t shared3 = std::min(l30.levels.size(), l32.levels.size());
  for (size_t n = 1; n < shared3; ++n)
    for (Index m : l30.levels[n].members)
      CHECK(ledger_member(l32, n, m));

  // a wider window keeps every class and never certifies one later
  for (Index c = 0; c < static_cast<Index>(u2->universe.size()); ++c) {
    auto in3 = u3->classify(u2->universe[c]);
    REQUIRE(in3);
    auto lvl2 = member_level(l20, c);
    auto lvl3 = member_level(l30, *in3);
    REQUIRE(lvl2);
    REQUIRE(lvl3);
    CHECK(*lvl3 <= *lvl2);
  }
}
