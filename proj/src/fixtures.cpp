#include "gradext/fixtures.hpp"

#include <map>
#include <mutex>

#include "gradext/enumerate.hpp"
#include "gradext/errors.hpp"

namespace gradext {

namespace {

GradedAlgebraPtr trivially_graded(const AlgebraPtr& a) {
  return GradedAlgebra::make(a, GradeGroup::trivial(),
                             std::vector<GElem>(static_cast<std::size_t>(a->dim()), 0));
}

AlgebraPtr base_field(Scalar p) {
  return Algebra::make(p, 1, {"1"}, {{0, 0, 0, 1}}, {1});
}

AlgebraPtr product_of_two_fields(Scalar p) {
  return Algebra::make(p, 2, {"e1", "e2"}, {{0, 0, 0, 1}, {1, 1, 1, 1}}, {1, 1});
}

AlgebraPtr truncated_polynomials(Scalar p, Index n) {
  std::vector<std::string> names;
  std::vector<StructureEntry> st;
  std::vector<Scalar> unit(static_cast<std::size_t>(n), 0);
  unit[0] = 1;
  for (Index i = 0; i < n; ++i) {
    names.push_back(i == 0 ? "1" : "x" + std::to_string(i));
    for (Index j = 0; j < n; ++j)
      if (i + j < n) st.push_back({i, j, i + j, 1});
  }
  return Algebra::make(p, n, std::move(names), st, unit);
}

AlgebraPtr mat2(Scalar p) {
  // basis e11, e12, e21, e22; e_{ab} e_{cd} = [b == c] e_{ad}
  std::vector<StructureEntry> st;
  auto at = [](Index a, Index b) { return 2 * a + b; };
  for (Index a = 0; a < 2; ++a)
    for (Index b = 0; b < 2; ++b)
      for (Index d = 0; d < 2; ++d) st.push_back({at(a, b), at(b, d), at(a, d), 1});
  return Algebra::make(p, 4, {"e11", "e12", "e21", "e22"}, st, {1, 0, 0, 1});
}

AlgebraPtr upper_triangular2(Scalar p) {
  // basis e11, e22, e12
  return Algebra::make(p, 3, {"e11", "e22", "e12"},
                       {{0, 0, 0, 1}, {1, 1, 1, 1}, {0, 2, 2, 1}, {2, 1, 2, 1}},
                       {1, 1, 0});
}

GradeGroup klein_four() {
  // (a, b) with a the low bit, products by xor
  Mat t(4, 4);
  for (Index i = 0; i < 4; ++i)
    for (Index j = 0; j < 4; ++j) t(i, j) = i ^ j;
  return GradeGroup::from_table(std::move(t), 0);
}

Instance make_fixture(const std::string& name) {
  Instance doc;
  doc.kind = "algebra";
  doc.name = name;
  if (name == "semisimple_product_p2") {
    doc.provenance = "product of two copies of F_2, trivially graded";
    doc.algebra = {trivially_graded(product_of_two_fields(2)), TypeCert{2, 1}};
  } else if (name == "nakayama_x3_p2") {
    doc.provenance = "truncated polynomials F_2[x]/(x^3), trivially graded";
    doc.algebra = {trivially_graded(truncated_polynomials(2, 3)), TypeCert{3, 3}};
  } else if (name == "c2_group_algebra_p2") {
    doc.provenance = "group algebra of the order-2 cyclic group over F_2, "
                     "tautological grading";
    doc.algebra = {group_algebra(2, GradeGroup::cyclic(2)), TypeCert{2, 2}};
  } else if (name == "c3_group_algebra_p2") {
    doc.provenance = "group algebra of the order-3 cyclic group over F_2, "
                     "tautological grading; semisimple since 2 does not "
                     "divide 3";
    doc.algebra = {group_algebra(2, GradeGroup::cyclic(3)), TypeCert{2, 2}};
  } else if (name == "v4_group_algebra_p2_c2graded") {
    doc.provenance = "group algebra of the Klein four group over F_2, graded "
                     "by the order-2 quotient killing the first factor; the "
                     "identity component is the group algebra of the first "
                     "factor";
    auto taut = group_algebra(2, klein_four());
    doc.algebra = {GradedAlgebra::make(taut->alg, GradeGroup::cyclic(2),
                                       {0, 0, 1, 1}),
                   std::nullopt};
  } else if (name == "skew_f3_x2_c2") {
    doc.provenance = "skew group algebra of F_3[x]/(x^2) by the order-2 group "
                     "acting by x -> -x, graded by the group; a serial "
                     "algebra with Kupisch series (2, 2)";
    auto duals = truncated_polynomials(3, 2);
    doc.algebra = {skew_group_algebra(duals, GradeGroup::cyclic(2),
                                      {FpMatrix::identity(3, 2),
                                       FpMatrix::from_rows(3, {{1, 0}, {0, 2}})}),
                   TypeCert{4, 2}};
  } else if (name == "m2_f2_c2graded") {
    doc.provenance = "2 x 2 matrices over F_2 with the checkerboard grading: "
                     "diagonal matrix units in degree 0, off-diagonal in "
                     "degree 1";
    doc.algebra = {GradedAlgebra::make(mat2(2), GradeGroup::cyclic(2),
                                       {0, 1, 1, 0}),
                   TypeCert{1, 2}};
  } else if (name == "t2_f2_zgraded") {
    doc.provenance = "upper triangular 2 x 2 matrices over F_2 with the "
                     "integer grading by diagonal distance; the degree-one "
                     "component has no inverse partner";
    doc.algebra = {GradedAlgebra::make(upper_triangular2(2),
                                       GradeGroup::integers(), {0, 0, 1}),
                   TypeCert{3, 2}};
  } else if (name == "kronecker_p2_zgraded") {
    doc.provenance = "path algebra of two vertices with two parallel arrows "
                     "over F_2, graded by path length; not strongly graded "
                     "and of infinite representation type";
    doc.algebra = {path_algebra_quotient(2, 2,
                                         {{0, 1, "a"}, {0, 1, "b"}}, {}),
                   std::nullopt};
  } else if (name == "morita_f2_m2" || name == "morita_f2c2_m2") {
    doc.kind = "context";
    const bool over_c2 = name == "morita_f2c2_m2";
    AlgebraPtr a;
    GradedAlgebraPtr r;
    if (over_c2) {
      doc.provenance = "standard context between the group algebra of the "
                       "order-2 group over F_2 and its 2 x 2 matrix algebra, "
                       "graded by the group degree of the scalar factor";
      r = group_algebra(2, GradeGroup::cyclic(2));
      a = r->alg;
    } else {
      doc.provenance = "standard context between F_2 and its 2 x 2 matrix "
                       "algebra, trivially graded";
      a = base_field(2);
      r = trivially_graded(a);
    }
    auto ctx = matrix_morita_context(a, 2);
    const Index d = a->dim();
    GradedAlgebraPtr s;
    std::vector<GElem> mdeg, ndeg;
    if (over_c2) {
      // matrix algebra basis (row, col, i), bridges (slot, i): the degree is
      // the group degree of the scalar index i throughout
      std::vector<GElem> sdeg;
      for (Index slot = 0; slot < 4; ++slot)
        for (Index i = 0; i < d; ++i) sdeg.push_back(r->deg[static_cast<std::size_t>(i)]);
      s = GradedAlgebra::make(ctx.m.right, r->group, sdeg);
      for (Index slot = 0; slot < 2; ++slot)
        for (Index i = 0; i < d; ++i) mdeg.push_back(r->deg[static_cast<std::size_t>(i)]);
      ndeg = mdeg;
    } else {
      s = trivially_graded(ctx.m.right);
      mdeg.assign(static_cast<std::size_t>(ctx.m.dim), 0);
      ndeg.assign(static_cast<std::size_t>(ctx.n.dim), 0);
    }
    doc.algebra = {r, over_c2 ? TypeCert{2, 2} : TypeCert{1, 1}};
    doc.second = AlgebraDoc{s, over_c2 ? std::optional<TypeCert>{}
                                       : std::optional<TypeCert>{TypeCert{1, 2}}};
    doc.context = GradedMoritaContext{r, s, std::move(ctx), std::move(mdeg),
                                      std::move(ndeg)};
  } else {
    throw ValidationError("unknown fixture '" + name + "'");
  }
  return doc;
}

void replay_cert(const std::string& name, const AlgebraDoc& d) {
  if (!d.cert) return;
  auto ctx = AlgebraContext::get(d.alg->alg);
  auto en = enumerate_indecomposables(*ctx, d.cert->max_dim);
  if (!en.complete ||
      static_cast<Index>(en.classes.size()) != d.cert->count)
    throw ValidationError(
        "fixture '" + name + "': declared classification (" +
        std::to_string(d.cert->count) + " indecomposables up to dimension " +
        std::to_string(d.cert->max_dim) + ") does not replay; enumeration " +
        (en.complete ? "found " + std::to_string(en.classes.size()) : "was cut short"));
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "c2_group_algebra_p2",   "c3_group_algebra_p2",
      "v4_group_algebra_p2_c2graded", "skew_f3_x2_c2",
      "m2_f2_c2graded",        "kronecker_p2_zgraded",
      "t2_f2_zgraded",         "nakayama_x3_p2",
      "semisimple_product_p2", "morita_f2_m2",
      "morita_f2c2_m2"};
  return names;
}

bool is_fixture(const std::string& name) {
  for (const auto& n : fixture_names())
    if (n == name) return true;
  return false;
}

const Instance& fixture(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, Instance> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  Instance doc = make_fixture(name);
  replay_cert(name, doc.algebra);
  if (doc.second) replay_cert(name, *doc.second);
  return cache.emplace(name, std::move(doc)).first->second;
}

void write_fixture_files(const std::string& dir) {
  for (const auto& n : fixture_names())
    save_instance(fixture(n), dir + "/" + n + ".json");
}

}  // namespace gradext
