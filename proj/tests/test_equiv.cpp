#include "gradext/equiv.hpp"

#include "doctest.h"
#include "gradext/build.hpp"
#include "helpers.hpp"

using namespace gradext;
using namespace testref;

namespace {

// M_2(F_2) with the off-diagonal in degree 1
GradedAlgebraPtr checkerboard() {
  return GradedAlgebra::make(mat2_algebra(2), GradeGroup::cyclic(2),
                             {0, 1, 1, 0});
}

// F_3[x]/x^2 twisted by x -> -x, strongly graded with a local base
GradedAlgebraPtr skew_duals3() {
  auto a = dual_numbers(3);
  std::vector<FpMatrix> action{FpMatrix::identity(3, 2),
                               FpMatrix::from_rows(3, {{1, 0}, {0, 2}})};
  return skew_group_algebra(a, GradeGroup::cyclic(2), action);
}

GradedAlgebraPtr z_triangular2() {
  return GradedAlgebra::make(triangular2(2), GradeGroup::integers(), {0, 0, 1});
}

// F_2 x F_2
AlgebraPtr product_field(Scalar p) {
  return Algebra::make(p, 2, {"e1", "e2"}, {{0, 0, 0, 1}, {1, 1, 1, 1}},
                       {1, 1});
}

}  // namespace

TEST_CASE("the degree functor lands in the identity component") {
  auto c2 = group_algebra(2, GradeGroup::cyclic(2));
  auto greg = regular_graded_module(c2);
  Module at_e = dade_degree_functor(c2, 0, greg);
  Module at_g = dade_degree_functor(c2, 1, greg);
  CHECK(at_e.dim == 1);
  CHECK(at_g.dim == 1);
  CHECK(at_e.alg->dim() == 1);

  // the regular graded module restricts to the regular module of the base
  auto skew = skew_duals3();
  auto base = identity_component(*skew);
  Module restricted = dade_degree_functor(skew, 0, regular_graded_module(skew));
  CHECK(restricted.dim == 2);
  CHECK(are_isomorphic(restricted, regular_module(base.alg)).status == Tri::Yes);

  // on arrows: graded endomorphisms of the regular module are scalars here
  auto homs = graded_hom_basis(greg, greg);
  REQUIRE(homs.size() == 1);
  FpMatrix down = dade_on_morphism(c2, 0, greg, greg, homs[0]);
  CHECK(down.rows() == 1);
  CHECK(down.cols() == 1);

  // right multiplication by g permutes the degrees, so it is not graded
  FpMatrix swap = FpMatrix::from_rows(2, {{0, 1}, {1, 0}});
  CHECK(is_morphism(swap, greg.mod, greg.mod));
  CHECK_THROWS_AS(dade_on_morphism(c2, 0, greg, greg, swap), NotHomomorphism);

  CHECK_THROWS_AS(dade_degree_functor(c2, 5, greg), ValidationError);
  CHECK_THROWS_AS(
      dade_degree_functor(c2, 0, regular_graded_module(checkerboard())),
      AlgebraMismatch);
  CHECK_THROWS_AS(
      dade_degree_functor(z_triangular2(), 0,
                          regular_graded_module(z_triangular2())),
      NotStronglyGraded);
}

TEST_CASE("the inverse functor rebuilds graded modules from the base") {
  auto c2 = group_algebra(2, GradeGroup::cyclic(2));
  auto base = identity_component(*c2);
  GradedModule lift = dade_inverse(c2, regular_module(base.alg));
  CHECK(lift.mod.dim == 2);
  CHECK(lift.component(0).size() == 1);
  CHECK(lift.component(1).size() == 1);
  CHECK(are_isomorphic(lift, regular_graded_module(c2)).status == Tri::Yes);

  Module back = dade_degree_functor(c2, 0, lift);
  CHECK(are_isomorphic(back, regular_module(base.alg)).status == Tri::Yes);

  // local base: lifting the simple gives a two dimensional graded module
  auto skew = skew_duals3();
  auto sbase = identity_component(*skew);
  std::vector<FpMatrix> rho{FpMatrix::identity(3, 1), FpMatrix::zero(3, 1, 1)};
  Module simple = Module::make(sbase.alg, std::move(rho));
  GradedModule slift = dade_inverse(skew, simple);
  CHECK(slift.mod.dim == 2);
  CHECK(slift.component(0).size() == 1);
  CHECK(slift.component(1).size() == 1);
  Module sback = dade_degree_functor(skew, 0, slift);
  CHECK(are_isomorphic(sback, simple).status == Tri::Yes);

  CHECK(dade_inverse(c2, zero_module(base.alg)).mod.dim == 0);
  CHECK_THROWS_AS(dade_inverse(c2, regular_module(cyclic2_algebra(2))),
                  AlgebraMismatch);
}

TEST_CASE("bounded universes certify the degree equivalence") {
  auto rep = verify_dade_equivalence(group_algebra(2, GradeGroup::cyclic(2)), 3);
  CHECK(rep.fully_faithful);
  CHECK(rep.dense);
  CHECK(rep.pairs_checked == 1);  // one graded class of dimension <= 3
  CHECK(rep.members_checked == 4);

  auto crep = verify_dade_equivalence(checkerboard(), 3);
  CHECK(crep.fully_faithful);
  CHECK(crep.dense);
  CHECK(crep.pairs_checked == 4);  // two graded classes: both column shifts

  auto srep = verify_dade_equivalence(skew_duals3(), 3);
  CHECK(srep.fully_faithful);
  CHECK(srep.dense);

  CHECK_THROWS_AS(verify_dade_equivalence(z_triangular2(), 2),
                  NotStronglyGraded);
}

TEST_CASE("morita context reports") {
  auto idc = identity_context(cyclic2_algebra(2));
  auto rep = context_check(idc);
  CHECK(rep.m_valid);
  CHECK(rep.n_valid);
  CHECK(rep.balanced);
  CHECK(rep.pairings_bimodule);
  CHECK(rep.associative);
  CHECK(rep.m_unital);
  CHECK(rep.n_unital);
  CHECK(rep.phi_onto);
  CHECK(rep.psi_onto);
  CHECK(rep.equivalence);

  CHECK(context_check(matrix_morita_context(base_field(2), 2)).equivalence);
  CHECK(context_check(matrix_morita_context(cyclic2_algebra(2), 2)).equivalence);

  // killing one pairing breaks associativity and surjectivity, nothing else
  auto broken = idc;
  broken.psi = FpMatrix::zero(2, 2, 4);
  auto brep = context_check(broken);
  CHECK(brep.m_valid);
  CHECK(brep.balanced);
  CHECK(brep.pairings_bimodule);
  CHECK(!brep.associative);
  CHECK(!brep.psi_onto);
  CHECK(brep.phi_onto);
  CHECK(!brep.equivalence);

  auto misshaped = idc;
  misshaped.phi = FpMatrix::zero(2, 3, 4);
  CHECK_THROWS_AS(context_check(misshaped), DimensionMismatch);

  MoritaContext open_legs;
  open_legs.m = regular_bimodule(cyclic2_algebra(2));
  open_legs.n = regular_bimodule(dual_numbers(2));
  open_legs.phi = FpMatrix::zero(2, 2, 4);
  open_legs.psi = FpMatrix::zero(2, 2, 4);
  CHECK_THROWS_AS(context_check(open_legs), AlgebraMismatch);
}

TEST_CASE("graded context strength separates the two notions") {
  // tautological grading: every degree component pairs onto the base
  auto c2 = group_algebra(2, GradeGroup::cyclic(2));
  GradedMoritaContext gc;
  gc.r = c2;
  gc.s = c2;
  gc.ctx = identity_context(c2->alg);
  gc.mdeg = c2->deg;
  gc.ndeg = c2->deg;
  auto grep = graded_context_check(gc);
  CHECK(grep.base.equivalence);
  CHECK(grep.graded_bimodules);
  CHECK(grep.graded_pairings);
  REQUIRE(grep.strong_r.size() == 2);
  for (const auto& sc : grep.strong_r) {
    CHECK(sc.d_dim == 1);
    CHECK(sc.idempotent);
    CHECK(sc.unital);
    CHECK(sc.pairing_onto);
  }
  CHECK(grep.strong);
  CHECK(grep.equivalence);

  // corner of the checkerboard: graded equivalent but not strongly, because
  // the bridging spaces sit in degree 1 while both corners live in degree 0
  auto cc = corner_context(checkerboard(), FpMatrix::column(2, {1, 0, 0, 0}));
  REQUIRE(cc.ctx.has_value());
  auto crep = graded_context_check(*cc.ctx);
  CHECK(crep.base.equivalence);
  CHECK(crep.graded_bimodules);
  CHECK(crep.graded_pairings);
  CHECK(crep.equivalence);
  CHECK(!crep.strong);
  bool saw_failure = false;
  for (const auto& sc : crep.strong_r)
    if (!sc.unital || !sc.pairing_onto) saw_failure = true;
  CHECK(saw_failure);
}

TEST_CASE("separable equivalence splits the regular bimodule") {
  auto a = cyclic2_algebra(2);
  auto sep = separable_equivalence_check(regular_bimodule(a), regular_bimodule(a));
  CHECK(sep.r_side.split);
  CHECK(sep.s_side.split);
  CHECK(sep.r_side.complement_dim == 0);
  CHECK(sep.s_side.complement_dim == 0);
  CHECK((sep.r_side.retr * sep.r_side.emb == FpMatrix::identity(2, 2)));

  // morita pair through row and column bimodules
  auto f2 = base_field(2);
  auto mat = matrix_algebra(f2, 2);
  auto msep = separable_equivalence_check(row_bimodule(f2, mat, 2),
                                          column_bimodule(f2, mat, 2));
  CHECK(msep.r_side.split);
  CHECK(msep.s_side.split);
  CHECK(msep.r_side.complement_dim == 0);
  CHECK(msep.s_side.complement_dim == 0);

  // F_2[C_2] over F_2: separable in one direction only
  std::vector<FpMatrix> lact{a->left_mult_basis(0), a->left_mult_basis(1)};
  Bimodule m = Bimodule::make(a, f2, lact, {FpMatrix::identity(2, 2)});
  std::vector<FpMatrix> ract;
  FpMatrix e0 = FpMatrix::column(2, {1, 0});
  FpMatrix e1 = FpMatrix::column(2, {0, 1});
  ract.push_back(a->right_mult(e0));
  ract.push_back(a->right_mult(e1));
  Bimodule n = Bimodule::make(f2, a, {FpMatrix::identity(2, 2)}, ract);
  auto lop = separable_equivalence_check(m, n);
  CHECK(!lop.r_side.split);          // R (x) R is an indecomposable 4-fold
  CHECK(lop.r_side.complement_dim == 4);
  CHECK(lop.s_side.split);           // R (x)_R R collapses to R = k + k
  CHECK(lop.s_side.complement_dim == 1);
  CHECK((lop.s_side.retr * lop.s_side.emb == FpMatrix::identity(2, 1)));

  // a non-projective leg is a precondition failure, not a verdict
  auto duals = dual_numbers(2);
  std::vector<FpMatrix> krho{FpMatrix::identity(2, 1), FpMatrix::zero(2, 1, 1)};
  Bimodule km = bimodule_from_left(Module::make(duals, std::move(krho)));
  std::vector<FpMatrix> dract{duals->right_mult(e0), duals->right_mult(e1)};
  Bimodule dn = Bimodule::make(km.right, duals, {FpMatrix::identity(2, 2)}, dract);
  CHECK_THROWS_AS(separable_equivalence_check(km, dn), NotProjectiveOneSided);
}

TEST_CASE("graded separable equivalence tracks degrees") {
  auto c2 = group_algebra(2, GradeGroup::cyclic(2));
  auto gsep = graded_separable_equivalence_check(regular_graded_bimodule(c2),
                                                 regular_graded_bimodule(c2));
  CHECK(gsep.r_side.split);
  CHECK(gsep.s_side.split);
  CHECK(gsep.r_side.complement_dim == 0);

  auto cb = checkerboard();
  auto csep = graded_separable_equivalence_check(regular_graded_bimodule(cb),
                                                 regular_graded_bimodule(cb));
  CHECK(csep.r_side.split);
  CHECK(csep.s_side.split);
  CHECK(csep.r_side.complement_dim == 0);
  CHECK(csep.s_side.complement_dim == 0);
}

TEST_CASE("flat morphisms and faithfulness") {
  auto a = cyclic2_algebra(2);
  auto id = faithfully_flat_check(FpMatrix::identity(2, 2), a, a);
  CHECK(id.flat);
  CHECK(id.faithful);

  // the unit map into a free extension is faithfully flat
  auto f2 = base_field(2);
  FpMatrix unit_map = FpMatrix::column(2, {1, 0});
  auto ext = faithfully_flat_check(unit_map, f2, a);
  CHECK(ext.flat);
  CHECK(ext.faithful);

  // projecting a product onto one factor kills the other simple
  auto prod = product_field(2);
  FpMatrix onto_first = FpMatrix::from_rows(2, {{1, 0}});
  auto proj = faithfully_flat_check(onto_first, prod, f2);
  CHECK(proj.flat);
  CHECK(!proj.faithful);

  FpMatrix not_morphism = FpMatrix::from_rows(2, {{1, 1}});
  CHECK_THROWS_AS(faithfully_flat_check(not_morphism, prod, f2),
                  NotAlgebraMorphism);
}

TEST_CASE("corner contexts") {
  auto cb = checkerboard();
  auto rep = corner_context(cb, FpMatrix::column(2, {1, 0, 0, 0}));
  CHECK(rep.rwr_full);
  CHECK(rep.rvr_full);
  REQUIRE(rep.corner.has_value());
  REQUIRE(rep.complement.has_value());
  CHECK(rep.corner->alg->dim() == 1);
  CHECK(rep.complement->alg->dim() == 1);
  CHECK(rep.corner_components_unital);
  CHECK(rep.complement_components_unital);
  REQUIRE(rep.check.has_value());
  CHECK(rep.check->equivalence);

  // degenerate idempotents leave the corresponding side empty
  auto whole = corner_context(cb, cb->alg->unit());
  CHECK(whole.rwr_full);
  CHECK(!whole.rvr_full);
  CHECK(whole.corner.has_value());
  CHECK(!whole.complement.has_value());
  CHECK(!whole.ctx.has_value());

  auto none = corner_context(cb, FpMatrix::zero(2, 4, 1));
  CHECK(!none.rwr_full);
  CHECK(!none.corner.has_value());

  // a central idempotent spans a proper ideal and pairs to nothing
  auto prod = product_field(2);
  auto pg = GradedAlgebra::make(prod, GradeGroup::cyclic(2), {0, 0});
  auto prep = corner_context(pg, FpMatrix::column(2, {1, 0}));
  CHECK(!prep.rwr_full);
  CHECK(!prep.rvr_full);
  REQUIRE(prep.check.has_value());
  CHECK(!prep.check->phi_onto);
  CHECK(!prep.check->equivalence);

  // integer graded corner: empty backward bridge
  auto zrep = corner_context(z_triangular2(), FpMatrix::column(2, {1, 0, 0}));
  CHECK(!zrep.rwr_full);
  CHECK(!zrep.rvr_full);
  REQUIRE(zrep.ctx.has_value());
  CHECK(zrep.ctx->mdeg == std::vector<GElem>{1});
  CHECK(zrep.ctx->ndeg.empty());
  CHECK(!zrep.check->phi_onto);
  auto zgrep = graded_context_check(*zrep.ctx);
  CHECK(!zgrep.strong);
  CHECK(!zgrep.equivalence);

  CHECK_THROWS_AS(corner_context(cb, FpMatrix::column(2, {1, 1, 0, 0})),
                  NotHomogeneous);
  CHECK_THROWS_AS(corner_context(cb, FpMatrix::column(2, {0, 1, 0, 0})),
                  NotIdempotent);
}
