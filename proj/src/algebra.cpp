#include "gradext/algebra.hpp"

#include <algorithm>
#include <set>

namespace gradext {

Algebra::Algebra(Scalar p, Index dim, std::vector<std::string> basis_names,
                 const std::vector<StructureEntry>& structure,
                 std::vector<Scalar> unit)
    : p_(p), dim_(dim), names_(std::move(basis_names)) {
  if (dim < 1) throw ValidationError("algebra dimension must be >= 1");
  if (dim > 4096) throw ValidationError("algebra dimension above desk scale");
  if (names_.empty())
    for (Index i = 0; i < dim; ++i) names_.push_back("b" + std::to_string(i));
  if (static_cast<Index>(names_.size()) != dim)
    throw ValidationError("basis name count != dim");
  left_.assign(static_cast<size_t>(dim), FpMatrix::zero(p, dim, dim));
  std::vector<Mat> raw(static_cast<size_t>(dim), Mat::Zero(dim, dim));
  for (const auto& e : structure) {
    if (e.i < 0 || e.i >= dim || e.j < 0 || e.j >= dim || e.k < 0 || e.k >= dim)
      throw ValidationError("structure constant index out of range");
    raw[static_cast<size_t>(e.i)](e.k, e.j) += e.c;
  }
  for (Index i = 0; i < dim; ++i)
    left_[static_cast<size_t>(i)] = FpMatrix(p, raw[static_cast<size_t>(i)]);
  if (static_cast<Index>(unit.size()) != dim)
    throw ValidationError("unit coordinate count != dim");
  unit_ = FpMatrix::column(p, unit);
  validate();
  std::vector<Scalar> bytes{p_, dim_};
  for (const auto& l : left_)
    for (Scalar s : l.row_major()) bytes.push_back(s);
  for (Scalar s : unit_.row_major()) bytes.push_back(s);
  digest_ = fnv1a(bytes);
}

AlgebraPtr Algebra::make(Scalar p, Index dim,
                         std::vector<std::string> basis_names,
                         const std::vector<StructureEntry>& structure,
                         std::vector<Scalar> unit) {
  return std::make_shared<const Algebra>(p, dim, std::move(basis_names),
                                         structure, std::move(unit));
}

const FpMatrix& Algebra::left_mult_basis(Index i) const {
  return left_.at(static_cast<size_t>(i));
}

FpMatrix Algebra::left_mult(const FpMatrix& x) const {
  if (x.rows() != dim_ || x.cols() != 1)
    throw DimensionMismatch("left_mult expects a coordinate column");
  FpMatrix acc = FpMatrix::zero(p_, dim_, dim_);
  for (Index i = 0; i < dim_; ++i)
    if (x(i, 0) != 0) acc = acc + scale(x(i, 0), left_[static_cast<size_t>(i)]);
  return acc;
}

FpMatrix Algebra::right_mult(const FpMatrix& x) const {
  if (x.rows() != dim_ || x.cols() != 1)
    throw DimensionMismatch("right_mult expects a coordinate column");
  // Column j of the result is e_j * x.
  FpMatrix acc = FpMatrix::zero(p_, dim_, dim_);
  for (Index j = 0; j < dim_; ++j) {
    FpMatrix col = left_[static_cast<size_t>(j)] * x;
    for (Index k = 0; k < dim_; ++k) acc.set(k, j, col(k, 0));
  }
  return acc;
}

FpMatrix Algebra::mul(const FpMatrix& x, const FpMatrix& y) const {
  return left_mult(x) * y;
}

std::vector<StructureEntry> Algebra::structure() const {
  std::vector<StructureEntry> out;
  for (Index i = 0; i < dim_; ++i)
    for (Index j = 0; j < dim_; ++j)
      for (Index k = 0; k < dim_; ++k) {
        const Scalar c = left_[static_cast<size_t>(i)](k, j);
        if (c != 0) out.push_back({i, j, k, c});
      }
  return out;
}

void Algebra::validate() const {
  for (Index i = 0; i < dim_; ++i) {
    FpMatrix ei = FpMatrix::zero(p_, dim_, 1);
    ei.set(i, 0, 1);
    if (!(left_mult(unit_) * ei == ei))
      throw ValidationError("unit fails on the left at basis " +
                            std::to_string(i));
    if (!(left_[static_cast<size_t>(i)] * unit_ == ei))
      throw ValidationError("unit fails on the right at basis " +
                            std::to_string(i));
  }
  // (e_i e_j) e_k == e_i (e_j e_k) in coordinates.
  for (Index i = 0; i < dim_; ++i)
    for (Index j = 0; j < dim_; ++j) {
      FpMatrix ej = FpMatrix::zero(p_, dim_, 1);
      ej.set(j, 0, 1);
      FpMatrix eiej = left_[static_cast<size_t>(i)] * ej;
      FpMatrix lhs = left_mult(eiej);  // left mult by (e_i e_j)
      FpMatrix rhs = left_[static_cast<size_t>(i)] * left_[static_cast<size_t>(j)];
      if (!(lhs == rhs))
        throw ValidationError("associativity fails at pair (" +
                              std::to_string(i) + "," + std::to_string(j) + ")");
    }
}

GradedAlgebraPtr GradedAlgebra::make(AlgebraPtr alg, GradeGroup group,
                                     std::vector<GElem> deg) {
  auto ga = std::make_shared<GradedAlgebra>();
  ga->alg = std::move(alg);
  ga->group = std::move(group);
  ga->deg = std::move(deg);
  if (static_cast<Index>(ga->deg.size()) != ga->alg->dim())
    throw ValidationError("degree vector length != dim");
  for (GElem d : ga->deg)
    if (!ga->group.contains(d))
      throw ValidationError("degree outside the grading group");
  auto rep = validate_graded(*ga);
  if (!rep.ok) throw ValidationError("grading invalid: " + rep.violations[0]);
  return ga;
}

std::vector<Index> GradedAlgebra::component(GElem sigma) const {
  std::vector<Index> out;
  for (Index i = 0; i < alg->dim(); ++i)
    if (deg[static_cast<size_t>(i)] == sigma) out.push_back(i);
  return out;
}

FpMatrix GradedAlgebra::component_basis(GElem sigma) const {
  auto idx = component(sigma);
  FpMatrix out = FpMatrix::zero(alg->p(), alg->dim(), static_cast<Index>(idx.size()));
  for (Index j = 0; j < static_cast<Index>(idx.size()); ++j)
    out.set(idx[static_cast<size_t>(j)], j, 1);
  return out;
}

std::vector<GElem> GradedAlgebra::support() const {
  std::set<GElem> s(deg.begin(), deg.end());
  return std::vector<GElem>(s.begin(), s.end());
}

std::uint64_t GradedAlgebra::digest() const {
  std::vector<Scalar> bytes{static_cast<Scalar>(alg->digest()),
                            group.is_finite() ? group.order() : -1};
  for (GElem d : deg) bytes.push_back(d);
  if (group.is_finite())
    for (Index i = 0; i < group.order(); ++i)
      for (Index j = 0; j < group.order(); ++j)
        bytes.push_back(group.table()(i, j));
  return fnv1a(bytes);
}

GradingReport validate_graded(const GradedAlgebra& ga) {
  GradingReport rep;
  const Algebra& a = *ga.alg;
  // Unit must be concentrated in the identity degree.
  for (Index i = 0; i < a.dim(); ++i)
    if (a.unit()(i, 0) != 0 &&
        ga.deg[static_cast<size_t>(i)] != ga.group.identity()) {
      rep.ok = false;
      rep.violations.push_back("unit has a component in a nonidentity degree (basis " +
                               std::to_string(i) + ")");
    }
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j) {
      const GElem want =
          ga.group.mul(ga.deg[static_cast<size_t>(i)], ga.deg[static_cast<size_t>(j)]);
      const FpMatrix& li = a.left_mult_basis(i);
      for (Index k = 0; k < a.dim(); ++k)
        if (li(k, j) != 0 && ga.deg[static_cast<size_t>(k)] != want) {
          rep.ok = false;
          rep.violations.push_back(
              "product e" + std::to_string(i) + "*e" + std::to_string(j) +
              " hits basis " + std::to_string(k) + " outside degree");
        }
    }
  return rep;
}

StrongGradingReport is_strongly_graded(const GradedAlgebra& ga) {
  StrongGradingReport rep;
  const Algebra& a = *ga.alg;
  const Scalar p = a.p();

  auto component_product_span = [&](GElem s, GElem t) {
    auto is = ga.component(s);
    auto it = ga.component(t);
    FpMatrix prods = FpMatrix::zero(p, a.dim(), 0);
    for (Index bi : is)
      for (Index bj : it) {
        FpMatrix ej = FpMatrix::zero(p, a.dim(), 1);
        ej.set(bj, 0, 1);
        prods = hstack(prods, a.left_mult_basis(bi) * ej);
      }
    return canonical_basis(prods);
  };

  if (!ga.group.is_finite()) {
    auto sup = ga.support();
    for (GElem s : sup) {
      if (s == 0) continue;
      // A nonzero degree with finite support forces a zero partner, so
      // R_s R_{-s} cannot contain 1.
      rep.strongly_graded = false;
      rep.witness_pair = {s, -s};
      rep.product_span = component_product_span(s, -s);
      rep.reason =
          "integer grading with support beyond degree 0: R_" + std::to_string(s) +
          " R_" + std::to_string(-s) + " is a proper subspace of R_0";
      return rep;
    }
    rep.strongly_graded = true;
    rep.reason = "support is {0}: the grading is concentrated at the identity";
    return rep;
  }

  for (GElem s : ga.group.elements())
    for (GElem t : ga.group.elements()) {
      const GElem st = ga.group.mul(s, t);
      FpMatrix span = component_product_span(s, t);
      FpMatrix target = canonical_basis(ga.component_basis(st));
      if (!(same_space(span, target))) {
        rep.strongly_graded = false;
        rep.witness_pair = {s, t};
        rep.product_span = span;
        rep.reason = "span(R_s R_t) != R_st for (s,t)=(" + std::to_string(s) +
                     "," + std::to_string(t) + ")";
        return rep;
      }
    }

  // Verdict is true: also solve 1 = sum u_i v_i with u_i in R_s, v_i in
  // R_{s^-1} for every s, as a replayable witness.
  for (GElem s : ga.group.elements()) {
    const GElem si = ga.group.inv(s);
    auto is = ga.component(s);
    auto it = ga.component(si);
    FpMatrix prods = FpMatrix::zero(p, a.dim(), 0);
    std::vector<std::pair<Index, Index>> pairs;
    for (Index bi : is)
      for (Index bj : it) {
        FpMatrix ej = FpMatrix::zero(p, a.dim(), 1);
        ej.set(bj, 0, 1);
        prods = hstack(prods, a.left_mult_basis(bi) * ej);
        pairs.emplace_back(bi, bj);
      }
    auto sol = solve(prods, a.unit());
    if (!sol)
      throw Error("strong grading witness solve failed unexpectedly");
    std::vector<std::pair<FpMatrix, FpMatrix>> terms;
    for (Index c = 0; c < sol->rows(); ++c) {
      if ((*sol)(c, 0) == 0) continue;
      FpMatrix u = FpMatrix::zero(p, a.dim(), 1);
      u.set(pairs[static_cast<size_t>(c)].first, 0, (*sol)(c, 0));
      FpMatrix v = FpMatrix::zero(p, a.dim(), 1);
      v.set(pairs[static_cast<size_t>(c)].second, 0, 1);
      terms.emplace_back(u, v);
    }
    rep.unit_witness[s] = std::move(terms);
  }
  rep.strongly_graded = true;
  rep.reason = "span(R_s R_t) = R_st for every pair";
  return rep;
}

DegreeZeroPart identity_component(const GradedAlgebra& ga) {
  const Algebra& a = *ga.alg;
  auto idx = ga.component(ga.group.identity());
  if (idx.empty()) throw ValidationError("grading has empty identity component");
  const Index d = static_cast<Index>(idx.size());
  std::vector<StructureEntry> st;
  std::vector<Index> pos(static_cast<size_t>(a.dim()), -1);
  for (Index t = 0; t < d; ++t) pos[static_cast<size_t>(idx[static_cast<size_t>(t)])] = t;
  for (Index ii = 0; ii < d; ++ii)
    for (Index jj = 0; jj < d; ++jj) {
      FpMatrix ej = FpMatrix::zero(a.p(), a.dim(), 1);
      ej.set(idx[static_cast<size_t>(jj)], 0, 1);
      FpMatrix prod = a.left_mult_basis(idx[static_cast<size_t>(ii)]) * ej;
      for (Index k = 0; k < a.dim(); ++k)
        if (prod(k, 0) != 0) {
          if (pos[static_cast<size_t>(k)] < 0)
            throw ValidationError("identity component is not closed under product");
          st.push_back({ii, jj, pos[static_cast<size_t>(k)], prod(k, 0)});
        }
    }
  std::vector<Scalar> unit;
  for (Index t = 0; t < d; ++t)
    unit.push_back(a.unit()(idx[static_cast<size_t>(t)], 0));
  std::vector<std::string> names;
  for (Index t = 0; t < d; ++t)
    names.push_back(a.basis_names()[static_cast<size_t>(idx[static_cast<size_t>(t)])]);
  DegreeZeroPart out;
  out.alg = Algebra::make(a.p(), d, std::move(names), st, std::move(unit));
  out.indices = idx;
  return out;
}

QuotientAlgebra quotient_algebra(const AlgebraPtr& a, const FpMatrix& ideal_cols) {
  const Scalar p = a->p();
  const Index n = a->dim();
  FpMatrix basis = canonical_basis(ideal_cols);
  // Two-sided ideal check.
  for (Index i = 0; i < n; ++i) {
    if (!space_contains(basis, a->left_mult_basis(i) * basis))
      throw ValidationError("span is not a left ideal");
    FpMatrix ei = FpMatrix::zero(p, n, 1);
    ei.set(i, 0, 1);
    if (!space_contains(basis, a->right_mult(ei) * basis))
      throw ValidationError("span is not a right ideal");
  }
  QuotientSpace qs = quotient_space(n, basis);
  const Index q = qs.proj.rows();
  std::vector<StructureEntry> st;
  for (Index i = 0; i < q; ++i)
    for (Index j = 0; j < q; ++j) {
      FpMatrix prod = qs.proj * a->mul(qs.section.col(i), qs.section.col(j));
      for (Index k = 0; k < q; ++k)
        if (prod(k, 0) != 0) st.push_back({i, j, k, prod(k, 0)});
    }
  FpMatrix u = qs.proj * a->unit();
  std::vector<Scalar> unit;
  for (Index k = 0; k < q; ++k) unit.push_back(u(k, 0));
  QuotientAlgebra out;
  out.alg = Algebra::make(p, q, {}, st, std::move(unit));
  out.proj = qs.proj;
  out.section = qs.section;
  return out;
}

AlgebraPtr opposite_algebra(const AlgebraPtr& a) {
  std::vector<StructureEntry> st;
  for (const auto& e : a->structure()) st.push_back({e.j, e.i, e.k, e.c});
  std::vector<Scalar> unit;
  for (Index k = 0; k < a->dim(); ++k) unit.push_back(a->unit()(k, 0));
  std::vector<std::string> names = a->basis_names();
  return Algebra::make(a->p(), a->dim(), std::move(names), st, std::move(unit));
}

}  // namespace gradext
