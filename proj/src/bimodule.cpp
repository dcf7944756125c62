#include "gradext/bimodule.hpp"

#include "gradext/build.hpp"

namespace gradext {

namespace {

FpMatrix basis_col(Scalar p, Index dim, Index i) {
  FpMatrix e = FpMatrix::zero(p, dim, 1);
  e.set(i, 0, 1);
  return e;
}

FpMatrix combine(Scalar p, Index dim, const std::vector<FpMatrix>& acts,
                 const FpMatrix& x) {
  FpMatrix acc = FpMatrix::zero(p, dim, dim);
  for (Index i = 0; i < x.rows(); ++i)
    if (x(i, 0) != 0) acc = acc + scale(x(i, 0), acts[static_cast<size_t>(i)]);
  return acc;
}

}  // namespace

Bimodule Bimodule::make(AlgebraPtr left, AlgebraPtr right,
                        std::vector<FpMatrix> lact, std::vector<FpMatrix> ract) {
  Bimodule m;
  m.left = std::move(left);
  m.right = std::move(right);
  m.lact = std::move(lact);
  m.ract = std::move(ract);
  if (!m.left || !m.right) throw ValidationError("bimodule needs both algebras");
  const Scalar p = m.left->p();
  if (m.right->p() != p)
    throw ModulusMismatch("bimodule sides live over different fields");
  if (static_cast<Index>(m.lact.size()) != m.left->dim() ||
      static_cast<Index>(m.ract.size()) != m.right->dim())
    throw DimensionMismatch("one action matrix per algebra basis element");
  m.dim = m.lact.empty() ? (m.ract.empty() ? 0 : m.ract[0].rows())
                         : m.lact[0].rows();
  for (const auto& a : m.lact)
    if (a.rows() != m.dim || a.cols() != m.dim || a.mod() != p)
      throw DimensionMismatch("action matrices must be square and over F_p");
  for (const auto& a : m.ract)
    if (a.rows() != m.dim || a.cols() != m.dim || a.mod() != p)
      throw DimensionMismatch("action matrices must be square and over F_p");
  const FpMatrix id = FpMatrix::identity(p, m.dim);
  if (!(combine(p, m.dim, m.lact, m.left->unit()) == id))
    throw ValidationError("left unit does not act as the identity");
  if (!(combine(p, m.dim, m.ract, m.right->unit()) == id))
    throw ValidationError("right unit does not act as the identity");
  for (Index i = 0; i < m.left->dim(); ++i)
    for (Index j = 0; j < m.left->dim(); ++j) {
      FpMatrix lhs = m.lact[static_cast<size_t>(i)] * m.lact[static_cast<size_t>(j)];
      FpMatrix rhs = combine(p, m.dim, m.lact,
                             m.left->left_mult_basis(i).col(j));
      if (!(lhs == rhs))
        throw ValidationError("left action ignores structure constants");
    }
  for (Index i = 0; i < m.right->dim(); ++i)
    for (Index j = 0; j < m.right->dim(); ++j) {
      // anti-representation: acting by e_j then e_i multiplies as e_j e_i
      FpMatrix lhs = m.ract[static_cast<size_t>(i)] * m.ract[static_cast<size_t>(j)];
      FpMatrix rhs = combine(p, m.dim, m.ract,
                             m.right->left_mult_basis(j).col(i));
      if (!(lhs == rhs))
        throw ValidationError("right action ignores structure constants");
    }
  for (const auto& a : m.lact)
    for (const auto& b : m.ract)
      if (!(a * b == b * a))
        throw ValidationError("left and right actions do not commute");
  return m;
}

FpMatrix Bimodule::act_left(const FpMatrix& x) const {
  if (x.rows() != left->dim() || x.cols() != 1)
    throw DimensionMismatch("act_left expects a left coordinate column");
  return combine(left->p(), dim, lact, x);
}

FpMatrix Bimodule::act_right(const FpMatrix& y) const {
  if (y.rows() != right->dim() || y.cols() != 1)
    throw DimensionMismatch("act_right expects a right coordinate column");
  return combine(left->p(), dim, ract, y);
}

std::uint64_t Bimodule::digest() const {
  std::vector<Scalar> bytes{static_cast<Scalar>(left->digest()),
                            static_cast<Scalar>(right->digest()), dim};
  for (const auto& a : lact)
    for (Scalar s : a.row_major()) bytes.push_back(s);
  for (const auto& a : ract)
    for (Scalar s : a.row_major()) bytes.push_back(s);
  return fnv1a(bytes);
}

Bimodule regular_bimodule(const AlgebraPtr& a) {
  std::vector<FpMatrix> lact, ract;
  for (Index i = 0; i < a->dim(); ++i) {
    lact.push_back(a->left_mult_basis(i));
    ract.push_back(a->right_mult(basis_col(a->p(), a->dim(), i)));
  }
  return Bimodule::make(a, a, std::move(lact), std::move(ract));
}

Module left_module(const Bimodule& m) { return Module::make(m.left, m.lact); }

Module right_module(const Bimodule& m) {
  return Module::make(opposite_algebra(m.right), m.ract);
}

Bimodule bimodule_from_left(const Module& m) {
  auto scalars = group_algebra(m.alg->p(), GradeGroup::trivial())->alg;
  std::vector<FpMatrix> ract{FpMatrix::identity(m.alg->p(), m.dim)};
  return Bimodule::make(m.alg, scalars, m.rho, std::move(ract));
}

Module to_enveloping(const Bimodule& m) {
  return to_enveloping(m, enveloping_algebra(m.left, m.right));
}

Module to_enveloping(const Bimodule& m, const AlgebraPtr& env) {
  const Index da = m.left->dim(), db = m.right->dim();
  if (env->dim() != da * db || env->p() != m.left->p())
    throw AlgebraMismatch("enveloping algebra does not fit the bimodule");
  std::vector<FpMatrix> rho;
  rho.reserve(static_cast<size_t>(da * db));
  for (Index i = 0; i < da; ++i)
    for (Index j = 0; j < db; ++j)
      rho.push_back(m.lact[static_cast<size_t>(i)] * m.ract[static_cast<size_t>(j)]);
  return Module::make(env, std::move(rho));
}

Bimodule from_enveloping(const AlgebraPtr& left, const AlgebraPtr& right,
                         const Module& over_env) {
  auto env = enveloping_algebra(left, right);
  if (over_env.alg->digest() != env->digest())
    throw AlgebraMismatch("module does not live over the enveloping algebra");
  const Scalar p = left->p();
  const Index da = left->dim(), db = right->dim(), d = over_env.dim;
  std::vector<FpMatrix> lact, ract;
  for (Index i = 0; i < da; ++i) {
    FpMatrix acc = FpMatrix::zero(p, d, d);
    for (Index j = 0; j < db; ++j) {
      Scalar c = right->unit()(j, 0);
      if (c != 0)
        acc = acc + scale(c, over_env.rho[static_cast<size_t>(i * db + j)]);
    }
    lact.push_back(acc);
  }
  for (Index j = 0; j < db; ++j) {
    FpMatrix acc = FpMatrix::zero(p, d, d);
    for (Index i = 0; i < da; ++i) {
      Scalar c = left->unit()(i, 0);
      if (c != 0)
        acc = acc + scale(c, over_env.rho[static_cast<size_t>(i * db + j)]);
    }
    ract.push_back(acc);
  }
  return Bimodule::make(left, right, std::move(lact), std::move(ract));
}

IsoResult<Module> bimodules_isomorphic(const Bimodule& a, const Bimodule& b,
                                       double budget) {
  if (a.left->digest() != b.left->digest() ||
      a.right->digest() != b.right->digest())
    throw AlgebraMismatch("bimodules over different algebra pairs");
  auto env = enveloping_algebra(a.left, a.right);
  return are_isomorphic(to_enveloping(a, env), to_enveloping(b, env), budget);
}

TensorProduct tensor_over_algebra(const Bimodule& m, const Bimodule& n) {
  if (m.right->digest() != n.left->digest())
    throw AlgebraMismatch("tensor legs meet different algebras");
  const Scalar p = m.left->p();
  const Index dm = m.dim, dn = n.dim, ds = m.right->dim();
  const Index full = dm * dn;
  Mat rels = Mat::Zero(full, ds * dm * dn);
  for (Index t = 0; t < ds; ++t)
    for (Index i = 0; i < dm; ++i)
      for (Index j = 0; j < dn; ++j) {
        const Index col = (t * dm + i) * dn + j;
        const FpMatrix& rm = m.ract[static_cast<size_t>(t)];
        const FpMatrix& ln = n.lact[static_cast<size_t>(t)];
        for (Index k = 0; k < dm; ++k)
          if (rm(k, i) != 0) rels(k * dn + j, col) += rm(k, i);
        for (Index l = 0; l < dn; ++l)
          if (ln(l, j) != 0) rels(i * dn + l, col) -= ln(l, j);
      }
  FpMatrix sub = canonical_basis(FpMatrix(p, std::move(rels)));
  QuotientSpace q = quotient_space(full, sub);
  std::vector<FpMatrix> lact, ract;
  const FpMatrix idn = FpMatrix::identity(p, dn);
  const FpMatrix idm = FpMatrix::identity(p, dm);
  for (Index i = 0; i < m.left->dim(); ++i)
    lact.push_back(q.proj * kron(m.lact[static_cast<size_t>(i)], idn) * q.section);
  for (Index j = 0; j < n.right->dim(); ++j)
    ract.push_back(q.proj * kron(idm, n.ract[static_cast<size_t>(j)]) * q.section);
  TensorProduct out;
  out.prod = Bimodule::make(m.left, n.right, std::move(lact), std::move(ract));
  out.proj = q.proj;
  out.section = q.section;
  return out;
}

Bimodule row_bimodule(const AlgebraPtr& a, const AlgebraPtr& mat, Index n) {
  const Scalar p = a->p();
  const Index d = a->dim();
  if (mat->dim() != n * n * d || mat->p() != p)
    throw AlgebraMismatch("matrix algebra does not fit the base algebra");
  std::vector<FpMatrix> lact, ract;
  const FpMatrix idn = FpMatrix::identity(p, n);
  for (Index i = 0; i < d; ++i) lact.push_back(kron(idn, a->left_mult_basis(i)));
  for (Index r = 0; r < n; ++r)
    for (Index c = 0; c < n; ++c)
      for (Index j = 0; j < d; ++j) {
        FpMatrix unit = FpMatrix::zero(p, n, n);
        unit.set(c, r, 1);
        ract.push_back(kron(unit, a->right_mult(basis_col(p, d, j))));
      }
  return Bimodule::make(a, mat, std::move(lact), std::move(ract));
}

Bimodule column_bimodule(const AlgebraPtr& a, const AlgebraPtr& mat, Index n) {
  const Scalar p = a->p();
  const Index d = a->dim();
  if (mat->dim() != n * n * d || mat->p() != p)
    throw AlgebraMismatch("matrix algebra does not fit the base algebra");
  std::vector<FpMatrix> lact, ract;
  const FpMatrix idn = FpMatrix::identity(p, n);
  for (Index r = 0; r < n; ++r)
    for (Index c = 0; c < n; ++c)
      for (Index j = 0; j < d; ++j) {
        FpMatrix unit = FpMatrix::zero(p, n, n);
        unit.set(r, c, 1);
        lact.push_back(kron(unit, a->left_mult_basis(j)));
      }
  for (Index i = 0; i < d; ++i)
    ract.push_back(kron(idn, a->right_mult(basis_col(p, d, i))));
  return Bimodule::make(mat, a, std::move(lact), std::move(ract));
}

GradedBimodule GradedBimodule::make(GradedAlgebraPtr left, GradedAlgebraPtr right,
                                    Bimodule bim, std::vector<GElem> deg) {
  GradedBimodule g;
  g.left = std::move(left);
  g.right = std::move(right);
  g.bim = std::move(bim);
  g.deg = std::move(deg);
  if (!g.left || !g.right) throw ValidationError("graded bimodule needs both gradings");
  if (g.left->alg->digest() != g.bim.left->digest() ||
      g.right->alg->digest() != g.bim.right->digest())
    throw AlgebraMismatch("gradings belong to different algebras");
  if (!(g.left->group == g.right->group))
    throw ValidationError("both sides must be graded by one group");
  if (static_cast<Index>(g.deg.size()) != g.bim.dim)
    throw DimensionMismatch("one degree per basis vector");
  const GradeGroup& grp = g.left->group;
  for (GElem e : g.deg)
    if (!grp.contains(e)) throw ValidationError("degree outside the group");
  for (Index i = 0; i < g.bim.left->dim(); ++i) {
    GElem s = g.left->deg[static_cast<size_t>(i)];
    const FpMatrix& act = g.bim.lact[static_cast<size_t>(i)];
    for (Index k = 0; k < g.bim.dim; ++k) {
      GElem want = grp.mul(s, g.deg[static_cast<size_t>(k)]);
      for (Index l = 0; l < g.bim.dim; ++l)
        if (act(l, k) != 0 && g.deg[static_cast<size_t>(l)] != want)
          throw ValidationError("left action breaks the grading");
    }
  }
  for (Index j = 0; j < g.bim.right->dim(); ++j) {
    GElem t = g.right->deg[static_cast<size_t>(j)];
    const FpMatrix& act = g.bim.ract[static_cast<size_t>(j)];
    for (Index k = 0; k < g.bim.dim; ++k) {
      GElem want = grp.mul(g.deg[static_cast<size_t>(k)], t);
      for (Index l = 0; l < g.bim.dim; ++l)
        if (act(l, k) != 0 && g.deg[static_cast<size_t>(l)] != want)
          throw ValidationError("right action breaks the grading");
    }
  }
  return g;
}

std::vector<Index> GradedBimodule::component(GElem delta) const {
  std::vector<Index> idx;
  for (Index k = 0; k < bim.dim; ++k)
    if (deg[static_cast<size_t>(k)] == delta) idx.push_back(k);
  return idx;
}

std::uint64_t GradedBimodule::digest() const {
  std::vector<Scalar> bytes{static_cast<Scalar>(bim.digest()),
                            static_cast<Scalar>(left->digest()),
                            static_cast<Scalar>(right->digest())};
  for (GElem e : deg) bytes.push_back(e);
  return fnv1a(bytes);
}

GradedBimodule regular_graded_bimodule(const GradedAlgebraPtr& a) {
  return GradedBimodule::make(a, a, regular_bimodule(a->alg), a->deg);
}

GradedModule to_enveloping(const GradedBimodule& m, const GradedAlgebraPtr& genv) {
  return GradedModule::make(genv, to_enveloping(m.bim, genv->alg), m.deg);
}

IsoResult<GradedModule> bimodules_isomorphic(const GradedBimodule& a,
                                             const GradedBimodule& b,
                                             double budget) {
  if (a.left->digest() != b.left->digest() ||
      a.right->digest() != b.right->digest())
    throw AlgebraMismatch("graded bimodules over different algebra pairs");
  auto genv = graded_enveloping_algebra(a.left, a.right);
  return are_isomorphic(to_enveloping(a, genv), to_enveloping(b, genv), budget);
}

GradedTensorProduct tensor_over_algebra(const GradedBimodule& m,
                                        const GradedBimodule& n) {
  if (m.right->digest() != n.left->digest())
    throw AlgebraMismatch("tensor legs meet different graded algebras");
  TensorProduct t = tensor_over_algebra(m.bim, n.bim);
  const GradeGroup& grp = m.left->group;
  const Index dn = n.bim.dim;
  std::vector<GElem> deg;
  for (Index col = 0; col < t.section.cols(); ++col) {
    bool found = false;
    GElem d = grp.identity();
    for (Index row = 0; row < t.section.rows(); ++row) {
      if (t.section(row, col) == 0) continue;
      GElem here = grp.mul(m.deg[static_cast<size_t>(row / dn)],
                           n.deg[static_cast<size_t>(row % dn)]);
      if (!found) {
        d = here;
        found = true;
      } else if (here != d) {
        throw Error("tensor quotient representative is not homogeneous");
      }
    }
    deg.push_back(d);
  }
  GradedTensorProduct out;
  out.prod = GradedBimodule::make(m.left, n.right, std::move(t.prod), std::move(deg));
  out.proj = std::move(t.proj);
  out.section = std::move(t.section);
  return out;
}

}  // namespace gradext
