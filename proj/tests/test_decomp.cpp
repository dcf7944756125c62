#include <doctest.h>

#include "gradext/build.hpp"
#include "gradext/decomp.hpp"
#include "helpers.hpp"

using namespace gradext;
using namespace testref;

namespace {

Module trivial_module(const AlgebraPtr& group_alg) {
  std::vector<FpMatrix> rho(static_cast<size_t>(group_alg->dim()),
                            FpMatrix::identity(group_alg->p(), 1));
  return Module::make(group_alg, std::move(rho));
}

std::vector<Index> part_dims(const Decomposition<Module>& d) {
  std::vector<Index> out;
  for (const auto& s : d.parts) out.push_back(obj_dim(s.part));
  return out;
}

std::vector<Index> part_dims(const Decomposition<GradedModule>& d) {
  std::vector<Index> out;
  for (const auto& s : d.parts) out.push_back(obj_dim(s.part));
  return out;
}

}  // namespace

TEST_CASE("local algebras have indecomposable regular modules") {
  auto d = decompose(regular_module(cyclic2_algebra(2)));
  CHECK(d.parts.size() == 1);
  CHECK(d.all_certified);

  // Klein four group algebra: local of dimension 4
  auto v4 = group_algebra(
      2, GradeGroup::product(GradeGroup::cyclic(2), GradeGroup::cyclic(2)));
  auto dv = decompose(regular_module(v4->alg));
  CHECK(dv.parts.size() == 1);
  CHECK(dv.all_certified);

  auto dd = decompose(regular_module(dual_numbers(3)));
  CHECK(dd.parts.size() == 1);
}

TEST_CASE("semisimple group algebra splits by coprime factors") {
  // F_2[C_3]: x^3 - 1 = (x+1)(x^2+x+1), simples of dimension 1 and 2
  auto c3 = group_algebra(2, GradeGroup::cyclic(3));
  auto d = decompose(regular_module(c3->alg));
  CHECK(part_dims(d) == std::vector<Index>{1, 2});
  CHECK(d.all_certified);
}

TEST_CASE("matrix algebra regular module is two copies of the column space") {
  auto d = decompose(regular_module(mat2_algebra(2)));
  REQUIRE(part_dims(d) == std::vector<Index>{2, 2});
  auto iso = are_isomorphic(d.parts[0].part, d.parts[1].part);
  CHECK(iso.status == Tri::Yes);
  REQUIRE(iso.witness.has_value());
  CHECK(is_morphism(*iso.witness, d.parts[0].part, d.parts[1].part));
}

TEST_CASE("path algebra projectives") {
  std::vector<Arrow> kron_arrows = {{0, 1, "a"}, {0, 1, "b"}};
  auto kr = path_algebra_quotient(2, 2, kron_arrows, {});
  CHECK(part_dims(decompose(regular_module(kr->alg))) ==
        std::vector<Index>{1, 3});

  std::vector<Arrow> one = {{0, 1, "a"}};
  auto t2 = path_algebra_quotient(2, 2, one, {});
  CHECK(part_dims(decompose(regular_module(t2->alg))) ==
        std::vector<Index>{1, 2});
}

TEST_CASE("direct sums decompose and projectors verify") {
  auto a = cyclic2_algebra(2);
  Module r = regular_module(a);
  Module k = trivial_module(a);
  auto d = decompose(direct_sum(direct_sum(r, k), r));
  CHECK(part_dims(d) == std::vector<Index>{1, 2, 2});
  for (const auto& s : d.parts)
    CHECK(s.proj * s.emb == FpMatrix::identity(2, obj_dim(s.part)));
}

TEST_CASE("isomorphism testing with witnesses") {
  auto a = cyclic2_algebra(2);
  Module r = regular_module(a);
  Module k = trivial_module(a);
  Module kk = direct_sum(k, k);

  CHECK(are_isomorphic(r, kk).status == Tri::No);  // 2-dim but different
  CHECK(are_isomorphic(r, k).status == Tri::No);

  // the radical of the regular module is the trivial module
  auto s = submodule(r, FpMatrix::column(2, {1, 1}));
  auto iso = are_isomorphic(s.mod, k);
  CHECK(iso.status == Tri::Yes);

  // sum order does not matter
  auto iso2 = are_isomorphic(direct_sum(r, k), direct_sum(k, r));
  CHECK(iso2.status == Tri::Yes);
  REQUIRE(iso2.witness.has_value());
  CHECK(is_morphism(*iso2.witness, direct_sum(r, k), direct_sum(k, r)));
  CHECK(inverse(*iso2.witness).has_value());
}

TEST_CASE("graded decomposition") {
  auto ga = group_algebra(2, GradeGroup::cyclic(2));
  GradedModule r = regular_graded_module(ga);
  auto d = decompose(r);
  CHECK(d.parts.size() == 1);
  CHECK(d.all_certified);

  // regular sum against its suspension: graded isomorphic via right shift
  auto iso = are_isomorphic(r, suspension(r, 1));
  CHECK(iso.status == Tri::Yes);
  REQUIRE(iso.witness.has_value());
  CHECK(is_graded_morphism(*iso.witness, r, suspension(r, 1)));

  std::vector<Arrow> kron_arrows = {{0, 1, "a"}, {0, 1, "b"}};
  auto kr = path_algebra_quotient(2, 2, kron_arrows, {});
  auto dk = decompose(regular_graded_module(kr));
  CHECK(part_dims(dk) == std::vector<Index>{1, 3});

  // suspensions of distinct projectives stay distinct
  auto niso = are_isomorphic(dk.parts[0].part, suspension(dk.parts[1].part, 1));
  CHECK(niso.status == Tri::No);
}

TEST_CASE("zero module decomposes to nothing") {
  auto d = decompose(zero_module(cyclic2_algebra(2)));
  CHECK(d.parts.empty());
  CHECK(d.all_certified);
}
