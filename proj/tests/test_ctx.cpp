#include <doctest.h>

#include "gradext/build.hpp"
#include "gradext/ctx.hpp"
#include "helpers.hpp"

using namespace gradext;

namespace {

GradeGroup v4() {
  return GradeGroup::product(GradeGroup::cyclic(2), GradeGroup::cyclic(2));
}

AlgebraPtr kronecker(Scalar p) {
  return path_algebra_quotient(p, 2, {{0, 1, "a"}, {0, 1, "b"}}, {})->alg;
}

AlgebraPtr nakayama3() {
  PathRelation cube;
  cube.terms = {{1, {0, 0, 0}}};
  return path_algebra_quotient(2, 1, {{0, 0, "x"}}, {cube})->alg;
}

AlgebraPtr two_fields(Scalar p) {
  return Algebra::make(p, 2, {"u", "v"}, {{0, 0, 0, 1}, {1, 1, 1, 1}},
                       {1, 1});
}

}  // namespace

TEST_CASE("radical spans of hand built algebras") {
  auto d = testref::dual_numbers(2);
  CHECK(same_space(algebra_radical(d), FpMatrix::column(2, {0, 1})));
  CHECK(loewy_length(d) == 2);
  CHECK(!is_semisimple(d));

  auto d3 = testref::dual_numbers(3);
  CHECK(same_space(algebra_radical(d3), FpMatrix::column(3, {0, 1})));

  auto c2 = testref::cyclic2_algebra(2);
  CHECK(same_space(algebra_radical(c2), FpMatrix::column(2, {1, 1})));

  CHECK(algebra_radical(testref::mat2_algebra(2)).cols() == 0);
  CHECK(is_semisimple(testref::mat2_algebra(2)));
  CHECK(is_semisimple(testref::mat2_algebra(3)));
  CHECK(is_semisimple(two_fields(2)));
  CHECK(loewy_length(testref::mat2_algebra(2)) == 1);

  auto t2 = testref::triangular2(2);
  CHECK(same_space(algebra_radical(t2), FpMatrix::column(2, {0, 0, 1})));
  CHECK(loewy_length(t2) == 2);
}

TEST_CASE("radical of group algebras tracks the characteristic") {
  CHECK(is_semisimple(group_algebra(2, GradeGroup::cyclic(3))->alg));
  CHECK(is_semisimple(group_algebra(3, GradeGroup::cyclic(2))->alg));
  CHECK(is_semisimple(group_algebra(5, GradeGroup::cyclic(3))->alg));

  auto f3c3 = group_algebra(3, GradeGroup::cyclic(3))->alg;
  CHECK(algebra_radical(f3c3).cols() == 2);
  CHECK(loewy_length(f3c3) == 3);

  auto f5c5 = group_algebra(5, GradeGroup::cyclic(5))->alg;
  CHECK(algebra_radical(f5c5).cols() == 4);
  CHECK(loewy_length(f5c5) == 5);

  auto f2v4 = group_algebra(2, v4())->alg;
  auto powers = radical_powers(f2v4);
  REQUIRE(powers.size() == 2);
  CHECK(powers[0].cols() == 3);
  CHECK(powers[1].cols() == 1);
  CHECK(loewy_length(f2v4) == 3);
}

TEST_CASE("radical of a bound quiver algebra is the arrow ideal") {
  auto kr = kronecker(2);
  FpMatrix j = algebra_radical(kr);
  CHECK(j.cols() == 2);
  // both arrows sit in the radical (they are the basis columns 2 and 3)
  CHECK(space_contains(j, FpMatrix::column(2, {0, 0, 1, 0})));
  CHECK(space_contains(j, FpMatrix::column(2, {0, 0, 0, 1})));
  CHECK(loewy_length(kr) == 2);

  auto nak = nakayama3();
  CHECK(algebra_radical(nak).cols() == 2);
  CHECK(loewy_length(nak) == 3);
}

TEST_CASE("context inventory for a local algebra") {
  auto ctx = AlgebraContext::get(testref::cyclic2_algebra(2));
  REQUIRE(ctx->simples.size() == 1);
  CHECK(ctx->simples[0].dim == 1);
  REQUIRE(ctx->pims.size() == 1);
  CHECK(ctx->pims[0].dim == 2);
  CHECK(ctx->loewy == 2);
  // memoized: same pointer on the second request
  CHECK(AlgebraContext::get(testref::cyclic2_algebra(2)).get() == ctx.get());
}

TEST_CASE("context inventory across semisimple and triangular cases") {
  auto m2 = AlgebraContext::get(testref::mat2_algebra(2));
  REQUIRE(m2->simples.size() == 1);
  CHECK(m2->simples[0].dim == 2);
  CHECK(are_isomorphic(m2->pims[0], m2->simples[0]).status == Tri::Yes);

  auto c3 = AlgebraContext::get(group_algebra(2, GradeGroup::cyclic(3))->alg);
  REQUIRE(c3->simples.size() == 2);
  CHECK(c3->simples[0].dim + c3->simples[1].dim == 3);

  auto t2 = AlgebraContext::get(testref::triangular2(2));
  REQUIRE(t2->simples.size() == 2);
  CHECK(t2->simples[0].dim == 1);
  CHECK(t2->simples[1].dim == 1);
  Index pim_dims = t2->pims[0].dim + t2->pims[1].dim;
  CHECK(pim_dims == 3);
  for (std::size_t i = 0; i < 2; ++i) {
    auto counts = t2->top_multiplicities(t2->pims[i]);
    CHECK(counts[i] == 1);
    CHECK(counts[1 - i] == 0);
  }

  auto kr = AlgebraContext::get(kronecker(2));
  REQUIRE(kr->simples.size() == 2);
  Index a = kr->pims[0].dim, b = kr->pims[1].dim;
  CHECK(((a == 1 && b == 3) || (a == 3 && b == 1)));
}

TEST_CASE("module radical, socle and top of regular modules") {
  auto v = AlgebraContext::get(group_algebra(2, v4())->alg);
  Module reg = regular_module(v->alg);
  CHECK(v->module_radical(reg).cols() == 3);
  CHECK(v->module_socle(reg).cols() == 1);
  CHECK(v->top_of(reg).mod.dim == 1);
  auto powers = v->module_radical_powers(reg);
  REQUIRE(powers.size() == 2);
  CHECK(powers[1].cols() == 1);

  auto t2 = AlgebraContext::get(testref::triangular2(2));
  Module regt = regular_module(t2->alg);
  CHECK(t2->module_radical(regt).cols() == 1);
  CHECK(t2->module_socle(regt).cols() == 2);
  auto counts = t2->top_multiplicities(regt);
  CHECK(counts == std::vector<Index>{1, 1});

  auto m2 = AlgebraContext::get(testref::mat2_algebra(2));
  Module regm = regular_module(m2->alg);
  CHECK(m2->module_radical(regm).cols() == 0);
  CHECK(m2->module_socle(regm).cols() == 4);
}

TEST_CASE("projective covers and syzygies") {
  auto ctx = AlgebraContext::get(testref::cyclic2_algebra(2));
  Module k = ctx->simples[0];
  Cover c = ctx->projective_cover(k);
  CHECK(c.proj_mod.dim == 2);
  CHECK(verify_extension(c.syzygy.mod, c.proj_mod, k, c.syzygy.incl, c.onto));
  CHECK(c.syzygy.mod.dim == 1);
  CHECK(are_isomorphic(c.syzygy.mod, k).status == Tri::Yes);
  CHECK(ctx->syzygy(regular_module(ctx->alg)).dim == 0);

  auto nak = AlgebraContext::get(nakayama3());
  CHECK(nak->syzygy(nak->simples[0]).dim == 2);

  auto v = AlgebraContext::get(group_algebra(2, v4())->alg);
  Cover cv = v->projective_cover(v->simples[0]);
  CHECK(cv.proj_mod.dim == 4);
  CHECK(cv.syzygy.mod.dim == 3);

  auto t2 = AlgebraContext::get(testref::triangular2(2));
  Module both = direct_sum(t2->simples[0], t2->simples[1]);
  Cover ct = t2->projective_cover(both);
  CHECK(ct.proj_mod.dim == 3);
  CHECK(ct.syzygy.mod.dim == 1);
  CHECK(verify_extension(ct.syzygy.mod, ct.proj_mod, both, ct.syzygy.incl,
                         ct.onto));
}

TEST_CASE("ext dimensions for small self extensions") {
  auto c2 = AlgebraContext::get(testref::cyclic2_algebra(2));
  Module k = c2->simples[0];
  CHECK(c2->ext1_dim(k, k) == 1);
  CHECK(c2->ext2_dim(k, k) == 1);
  CHECK(c2->ext1_dim(regular_module(c2->alg), k) == 0);

  auto v = AlgebraContext::get(group_algebra(2, v4())->alg);
  Module kv = v->simples[0];
  CHECK(v->ext1_dim(kv, kv) == 2);
  CHECK(v->ext2_dim(kv, kv) == 3);

  auto m2 = AlgebraContext::get(testref::mat2_algebra(2));
  CHECK(m2->ext1_dim(m2->simples[0], m2->simples[0]) == 0);

  auto t2 = AlgebraContext::get(testref::triangular2(2));
  Index x = t2->ext1_dim(t2->simples[0], t2->simples[1]);
  Index y = t2->ext1_dim(t2->simples[1], t2->simples[0]);
  CHECK(x + y == 1);
  CHECK(t2->ext1_dim(t2->simples[0], t2->simples[0]) == 0);
  CHECK(t2->ext1_dim(t2->simples[1], t2->simples[1]) == 0);

  auto nak = AlgebraContext::get(nakayama3());
  Module kn = nak->simples[0];
  CHECK(nak->ext1_dim(kn, kn) == 1);
  CHECK(nak->ext2_dim(kn, kn) == 1);
  CHECK(static_cast<Index>(nak->ext1_classes(kn, kn).size()) == 1);
}

TEST_CASE("middle terms realize extension classes") {
  auto ctx = AlgebraContext::get(testref::cyclic2_algebra(2));
  Module k = ctx->simples[0];
  auto classes = ctx->ext1_classes(k, k);
  REQUIRE(classes.size() == 1);
  Extension e = ctx->middle_term(k, k, classes[0]);
  CHECK(e.middle.dim == 2);
  CHECK(are_isomorphic(e.middle, regular_module(ctx->alg)).status == Tri::Yes);
  CHECK(verify_extension(k, e.middle, k, e.incl, e.onto));
  // tampering with the surjection breaks exactness
  CHECK(!verify_extension(k, e.middle, k, e.incl,
                          FpMatrix::zero(2, 1, e.middle.dim)));

  // the zero class gives the split extension
  FpMatrix zero_cls = FpMatrix::zero(2, 1, ctx->syzygy(k).dim);
  Extension s = ctx->middle_term(k, k, zero_cls);
  CHECK(decompose(s.middle).parts.size() == 2);

  // nonsplit middle over the four group stays indecomposable
  auto v = AlgebraContext::get(group_algebra(2, v4())->alg);
  Module kv = v->simples[0];
  auto vcls = v->ext1_classes(kv, kv);
  REQUIRE(vcls.size() == 2);
  Extension ev = v->middle_term(kv, kv, vcls[0]);
  CHECK(ev.middle.dim == 2);
  CHECK(decompose(ev.middle).parts.size() == 1);
}
