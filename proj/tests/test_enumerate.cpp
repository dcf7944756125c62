#include <doctest.h>

#include <algorithm>

#include "gradext/build.hpp"
#include "gradext/enumerate.hpp"
#include "helpers.hpp"

using namespace gradext;

namespace {

Index count_indecomposable(const std::vector<Module>& classes) {
  Index n = 0;
  for (const auto& m : classes)
    if (decompose(m).parts.size() == 1) ++n;
  return n;
}

}  // namespace

TEST_CASE("bounded submodules of small regular modules") {
  auto c2 = testref::cyclic2_algebra(2);
  Module r = regular_module(c2);
  auto subs = bounded_submodules(r, 2);
  CHECK(subs.complete);
  CHECK(subs.subs.size() == 3);  // 0, the radical line, everything
  auto line_only = bounded_submodules(r, 1);
  CHECK(line_only.subs.size() == 2);

  // a tiny budget reports incompleteness instead of lying
  auto cut = bounded_submodules(r, 2, 2.0);
  CHECK(!cut.complete);
}

TEST_CASE("module classes over a local pair of points") {
  auto ctx = AlgebraContext::get(testref::cyclic2_algebra(2));
  auto res = enumerate_modules(*ctx, 2);
  CHECK(res.complete);
  REQUIRE(res.classes.size() == 3);
  CHECK(res.classes[0].dim == 1);
  CHECK(res.classes[1].dim == 2);
  CHECK(res.classes[2].dim == 2);
  CHECK(count_indecomposable(res.classes) == 2);  // k and the regular module
}

TEST_CASE("module classes over a truncated polynomial algebra follow partitions") {
  PathRelation cube;
  cube.terms = {{1, {0, 0, 0}}};
  auto nak = path_algebra_quotient(2, 1, {{0, 0, "x"}}, {cube})->alg;
  auto ctx = AlgebraContext::get(nak);
  auto res = enumerate_modules(*ctx, 3);
  CHECK(res.complete);
  // partitions with parts <= 3: one of 1, two of 2, three of 3
  CHECK(res.classes.size() == 6);
  CHECK(count_indecomposable(res.classes) == 3);
  auto more = enumerate_modules(*ctx, 4);
  CHECK(more.classes.size() == 10);
  CHECK(count_indecomposable(more.classes) == 3);
}

TEST_CASE("module classes over a semisimple algebra are multiples of the simple") {
  auto ctx = AlgebraContext::get(testref::mat2_algebra(2));
  auto res = enumerate_modules(*ctx, 4);
  CHECK(res.complete);
  REQUIRE(res.classes.size() == 2);
  CHECK(res.classes[0].dim == 2);
  CHECK(res.classes[1].dim == 4);
}

TEST_CASE("triangular matrices have six small classes") {
  auto ctx = AlgebraContext::get(testref::triangular2(2));
  auto res = enumerate_modules(*ctx, 2);
  CHECK(res.complete);
  CHECK(res.classes.size() == 6);
  CHECK(count_indecomposable(res.classes) == 3);  // two simples and one cover
}

TEST_CASE("two parallel arrows give three rigid gluings") {
  auto kr = path_algebra_quotient(2, 2, {{0, 1, "a"}, {0, 1, "b"}}, {})->alg;
  auto ctx = AlgebraContext::get(kr);
  auto res = enumerate_modules(*ctx, 2);
  CHECK(res.complete);
  CHECK(res.classes.size() == 8);
  // vertex dimension (1,1) indecomposables: one per point of the line
  FpMatrix e0 = FpMatrix::column(2, {1, 0, 0, 0});
  FpMatrix e1 = FpMatrix::column(2, {0, 1, 0, 0});
  Index glued = 0;
  for (const auto& m : res.classes) {
    if (m.dim != 2 || decompose(m).parts.size() != 1) continue;
    if (rank_of(m.act(e0)) == 1 && rank_of(m.act(e1)) == 1) ++glued;
  }
  CHECK(glued == 3);
}

TEST_CASE("four group classes up to dimension four") {
  auto v4 = GradeGroup::product(GradeGroup::cyclic(2), GradeGroup::cyclic(2));
  auto ctx = AlgebraContext::get(group_algebra(2, v4)->alg);
  auto small = enumerate_modules(*ctx, 2);
  CHECK(small.complete);
  CHECK(small.classes.size() == 5);
  CHECK(count_indecomposable(small.classes) == 4);  // k and three planes

  auto res = enumerate_modules(*ctx, 4);
  CHECK(res.complete);
  CHECK(count_indecomposable(res.classes) >= 7);
  // every class stays within the bound and is distinct from the others
  for (const auto& m : res.classes) CHECK(m.dim <= 4);
}

TEST_CASE("graded classes separate suspensions") {
  auto ga = GradedAlgebra::make(testref::dual_numbers(2),
                                GradeGroup::cyclic(2), {0, 1});
  auto g = GradedContext::get(ga);
  auto res = enumerate_graded_modules(*g, 2);
  CHECK(res.complete);
  CHECK(res.classes.size() == 7);
  Index glued = 0;
  for (const auto& m : res.classes)
    if (m.mod.dim == 2 && decompose(m).parts.size() == 1) ++glued;
  // the regular module and its suspension are distinct graded classes
  CHECK(glued == 2);
}
