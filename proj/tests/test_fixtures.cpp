#include "gradext/fixtures.hpp"

#include <filesystem>

#include "doctest.h"

using namespace gradext;

TEST_CASE("the fixture catalog loads, replays certificates, round trips") {
  const auto& names = fixture_names();
  REQUIRE(names.size() == 11);
  for (const auto& n : names) {
    CHECK(is_fixture(n));
    // construction replays any declared classification by enumeration
    const Instance& fx = fixture(n);
    CHECK(fx.name == n);
    CHECK((fx.kind == "algebra" || fx.kind == "context"));
    CHECK(!fx.provenance.empty());
    std::string text = serialize_instance(fx);
    Instance back = parse_instance(text);
    CHECK(serialize_instance(back) == text);
    CHECK(back.algebra.alg->digest() == fx.algebra.alg->digest());
  }
  CHECK(!is_fixture("no_such_fixture"));
  CHECK_THROWS_AS(fixture("no_such_fixture"), ValidationError);
}

TEST_CASE("fixtures carry the advertised structure") {
  const auto& c2 = fixture("c2_group_algebra_p2");
  REQUIRE(c2.algebra.cert);
  CHECK(c2.algebra.cert->count == 2);
  CHECK(c2.algebra.cert->max_dim == 2);
  CHECK(is_strongly_graded(*c2.algebra.alg).strongly_graded);

  const auto& v4 = fixture("v4_group_algebra_p2_c2graded");
  CHECK(!v4.algebra.cert);  // honest: no bounded certificate exists for it
  CHECK(v4.algebra.alg->alg->dim() == 4);
  CHECK(v4.algebra.alg->group.order() == 2);
  CHECK(is_strongly_graded(*v4.algebra.alg).strongly_graded);

  const auto& kron = fixture("kronecker_p2_zgraded");
  CHECK(!kron.algebra.cert);
  CHECK(!kron.algebra.alg->group.is_finite());
  auto rep = is_strongly_graded(*kron.algebra.alg);
  CHECK(!rep.strongly_graded);
  CHECK(rep.witness_pair);

  const auto& skew = fixture("skew_f3_x2_c2");
  CHECK(skew.algebra.alg->alg->p() == 3);
  REQUIRE(skew.algebra.cert);
  CHECK(skew.algebra.cert->count == 4);
  CHECK(skew.algebra.cert->max_dim == 2);

  const auto& mor = fixture("morita_f2c2_m2");
  CHECK(mor.kind == "context");
  REQUIRE(mor.second);
  CHECK(mor.second->alg->alg->dim() == 8);
  CHECK(!mor.second->cert);  // classified at runtime instead
  REQUIRE(mor.context);
  CHECK(context_check(mor.context->ctx).equivalence);

  const auto& t2 = fixture("t2_f2_zgraded");
  CHECK(!t2.algebra.alg->group.is_finite());
  CHECK(!is_strongly_graded(*t2.algebra.alg).strongly_graded);
}

TEST_CASE("fixture files emit and load back byte-identically") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "gradext_fixture_emit";
  fs::remove_all(dir);
  fs::create_directories(dir);
  write_fixture_files(dir.string());
  for (const auto& n : fixture_names()) {
    fs::path file = dir / (n + ".json");
    REQUIRE(fs::exists(file));
    Instance fx = load_instance(file.string());
    CHECK(serialize_instance(fx) == serialize_instance(fixture(n)));
  }
  fs::remove_all(dir);
}
