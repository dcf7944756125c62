#include "gradext/module.hpp"

#include <set>

namespace gradext {

Module Module::make(AlgebraPtr alg, std::vector<FpMatrix> rho) {
  Module m;
  m.alg = std::move(alg);
  m.rho = std::move(rho);
  if (static_cast<Index>(m.rho.size()) != m.alg->dim())
    throw DimensionMismatch("one action matrix per algebra basis element");
  m.dim = m.rho.empty() ? 0 : m.rho[0].rows();
  const Scalar p = m.alg->p();
  for (const auto& r : m.rho)
    if (r.rows() != m.dim || r.cols() != m.dim || r.mod() != p)
      throw DimensionMismatch("action matrices must be square and over F_p");
  if (!(m.act(m.alg->unit()) == FpMatrix::identity(p, m.dim)))
    throw ValidationError("unit does not act as the identity");
  for (Index i = 0; i < m.alg->dim(); ++i)
    for (Index j = 0; j < m.alg->dim(); ++j) {
      FpMatrix lhs = m.rho[static_cast<size_t>(i)] * m.rho[static_cast<size_t>(j)];
      FpMatrix ej = FpMatrix::zero(p, m.alg->dim(), 1);
      ej.set(j, 0, 1);
      FpMatrix rhs = m.act(m.alg->left_mult_basis(i) * ej);
      if (!(lhs == rhs))
        throw ValidationError("action ignores structure constants at (" +
                              std::to_string(i) + "," + std::to_string(j) + ")");
    }
  return m;
}

FpMatrix Module::act(const FpMatrix& x) const {
  if (x.rows() != alg->dim() || x.cols() != 1)
    throw DimensionMismatch("act expects an algebra coordinate column");
  FpMatrix acc = FpMatrix::zero(alg->p(), dim, dim);
  for (Index i = 0; i < alg->dim(); ++i)
    if (x(i, 0) != 0) acc = acc + scale(x(i, 0), rho[static_cast<size_t>(i)]);
  return acc;
}

std::uint64_t Module::digest() const {
  std::vector<Scalar> bytes{static_cast<Scalar>(alg->digest()), dim};
  for (const auto& r : rho)
    for (Scalar s : r.row_major()) bytes.push_back(s);
  return fnv1a(bytes);
}

Module regular_module(const AlgebraPtr& a) {
  std::vector<FpMatrix> rho;
  for (Index i = 0; i < a->dim(); ++i) rho.push_back(a->left_mult_basis(i));
  return Module::make(a, std::move(rho));
}

Module zero_module(const AlgebraPtr& a) {
  std::vector<FpMatrix> rho(static_cast<size_t>(a->dim()),
                            FpMatrix::zero(a->p(), 0, 0));
  return Module::make(a, std::move(rho));
}

Module direct_sum(const Module& a, const Module& b) {
  if (a.alg->digest() != b.alg->digest())
    throw AlgebraMismatch("direct sum over different algebras");
  const Scalar p = a.alg->p();
  std::vector<FpMatrix> rho;
  for (Index i = 0; i < a.alg->dim(); ++i) {
    FpMatrix blk = FpMatrix::zero(p, a.dim + b.dim, a.dim + b.dim);
    for (Index r = 0; r < a.dim; ++r)
      for (Index c = 0; c < a.dim; ++c)
        blk.set(r, c, a.rho[static_cast<size_t>(i)](r, c));
    for (Index r = 0; r < b.dim; ++r)
      for (Index c = 0; c < b.dim; ++c)
        blk.set(a.dim + r, a.dim + c, b.rho[static_cast<size_t>(i)](r, c));
    rho.push_back(blk);
  }
  return Module::make(a.alg, std::move(rho));
}

bool is_morphism(const FpMatrix& f, const Module& m, const Module& n) {
  if (f.rows() != n.dim || f.cols() != m.dim || f.mod() != m.alg->p())
    return false;
  if (m.alg->digest() != n.alg->digest()) return false;
  for (Index i = 0; i < m.alg->dim(); ++i)
    if (!(f * m.rho[static_cast<size_t>(i)] ==
          n.rho[static_cast<size_t>(i)] * f))
      return false;
  return true;
}

namespace {

FpMatrix devec(Scalar p, Index rows, Index cols, const FpMatrix& v) {
  Mat m(rows, cols);
  for (Index c = 0; c < cols; ++c)
    for (Index r = 0; r < rows; ++r) m(r, c) = v(c * rows + r, 0);
  return FpMatrix(p, m);
}

// rows of the intertwining system: vec(f rho_m(i)) - vec(rho_n(i) f) = 0
FpMatrix intertwine_system(const Module& m, const Module& n) {
  const Scalar p = m.alg->p();
  FpMatrix sys = FpMatrix::zero(p, 0, m.dim * n.dim);
  FpMatrix im = FpMatrix::identity(p, m.dim);
  FpMatrix in = FpMatrix::identity(p, n.dim);
  for (Index i = 0; i < m.alg->dim(); ++i) {
    FpMatrix row = kron(m.rho[static_cast<size_t>(i)].transpose(), in) -
                   kron(im, n.rho[static_cast<size_t>(i)]);
    sys = vstack(sys, row);
  }
  return sys;
}

}  // namespace

std::vector<FpMatrix> hom_basis(const Module& m, const Module& n) {
  if (m.alg->digest() != n.alg->digest())
    throw AlgebraMismatch("hom over different algebras");
  if (m.dim == 0 || n.dim == 0) return {};
  FpMatrix ker = nullspace(intertwine_system(m, n));
  std::vector<FpMatrix> out;
  for (Index c = 0; c < ker.cols(); ++c)
    out.push_back(devec(m.alg->p(), n.dim, m.dim, ker.col(c)));
  return out;
}

SubModule submodule(const Module& m, const FpMatrix& span_cols) {
  FpMatrix basis = canonical_basis(span_cols);
  for (Index i = 0; i < m.alg->dim(); ++i)
    if (!space_contains(basis, m.rho[static_cast<size_t>(i)] * basis))
      throw ValidationError("span is not invariant under the action");
  const Index d = basis.cols();
  std::vector<FpMatrix> rho;
  for (Index i = 0; i < m.alg->dim(); ++i) {
    auto c = solve(basis, m.rho[static_cast<size_t>(i)] * basis);
    if (!c) throw Error("submodule restriction solve failed unexpectedly");
    rho.push_back(*c);
  }
  SubModule out;
  out.mod = Module::make(m.alg, std::move(rho));
  out.incl = basis;
  (void)d;
  return out;
}

QuotModule quotient_module(const Module& m, const FpMatrix& sub_cols) {
  FpMatrix basis = canonical_basis(sub_cols);
  for (Index i = 0; i < m.alg->dim(); ++i)
    if (!space_contains(basis, m.rho[static_cast<size_t>(i)] * basis))
      throw ValidationError("span is not invariant under the action");
  QuotientSpace qs = quotient_space(m.dim, basis);
  std::vector<FpMatrix> rho;
  for (Index i = 0; i < m.alg->dim(); ++i)
    rho.push_back(qs.proj * m.rho[static_cast<size_t>(i)] * qs.section);
  QuotModule out;
  out.mod = Module::make(m.alg, std::move(rho));
  out.proj = qs.proj;
  out.section = qs.section;
  return out;
}

FpMatrix submodule_closure(const Module& m, const FpMatrix& seeds) {
  FpMatrix basis = canonical_basis(seeds);
  for (;;) {
    FpMatrix next = basis;
    for (Index i = 0; i < m.alg->dim(); ++i)
      next = space_sum(next, m.rho[static_cast<size_t>(i)] * basis);
    if (next.cols() == basis.cols()) return basis;
    basis = next;
  }
}

SubModule kernel_module(const FpMatrix& f, const Module& m, const Module& n) {
  if (!is_morphism(f, m, n)) throw NotHomomorphism("kernel of a non-morphism");
  return submodule(m, nullspace(f));
}

SubModule image_module(const FpMatrix& f, const Module& m, const Module& n) {
  if (!is_morphism(f, m, n)) throw NotHomomorphism("image of a non-morphism");
  return submodule(n, canonical_basis(f));
}

QuotModule cokernel_module(const FpMatrix& f, const Module& m, const Module& n) {
  if (!is_morphism(f, m, n)) throw NotHomomorphism("cokernel of a non-morphism");
  return quotient_module(n, canonical_basis(f));
}

bool is_algebra_morphism(const FpMatrix& g, const AlgebraPtr& a,
                         const AlgebraPtr& b) {
  if (g.rows() != b->dim() || g.cols() != a->dim() || g.mod() != a->p() ||
      a->p() != b->p())
    return false;
  if (!(g * a->unit() == b->unit())) return false;
  for (Index i = 0; i < a->dim(); ++i)
    for (Index j = 0; j < a->dim(); ++j) {
      FpMatrix ej = FpMatrix::zero(a->p(), a->dim(), 1);
      ej.set(j, 0, 1);
      FpMatrix lhs = g * (a->left_mult_basis(i) * ej);
      FpMatrix rhs = b->mul(g.col(i), g.col(j));
      if (!(lhs == rhs)) return false;
    }
  return true;
}

Module restrict_along(const FpMatrix& g, const AlgebraPtr& a,
                      const Module& over_b) {
  if (!is_algebra_morphism(g, a, over_b.alg))
    throw NotAlgebraMorphism("restriction along a non-morphism");
  std::vector<FpMatrix> rho;
  for (Index i = 0; i < a->dim(); ++i) rho.push_back(over_b.act(g.col(i)));
  return Module::make(a, std::move(rho));
}

GradedModule GradedModule::make(GradedAlgebraPtr galg, Module mod,
                                std::vector<GElem> deg) {
  if (galg->alg->digest() != mod.alg->digest())
    throw AlgebraMismatch("module algebra differs from the graded algebra");
  if (static_cast<Index>(deg.size()) != mod.dim)
    throw DimensionMismatch("one degree per module basis vector");
  for (GElem d : deg)
    if (!galg->group.contains(d))
      throw ValidationError("module degree outside the grading group");
  for (Index i = 0; i < galg->alg->dim(); ++i) {
    const GElem di = galg->deg[static_cast<size_t>(i)];
    const FpMatrix& r = mod.rho[static_cast<size_t>(i)];
    for (Index row = 0; row < mod.dim; ++row)
      for (Index col = 0; col < mod.dim; ++col)
        if (r(row, col) != 0 &&
            deg[static_cast<size_t>(row)] !=
                galg->group.mul(di, deg[static_cast<size_t>(col)]))
          throw ValidationError("action leaves the degree components at basis " +
                                std::to_string(i));
  }
  GradedModule g;
  g.mod = std::move(mod);
  g.galg = std::move(galg);
  g.deg = std::move(deg);
  return g;
}

std::vector<Index> GradedModule::component(GElem delta) const {
  std::vector<Index> out;
  for (Index i = 0; i < mod.dim; ++i)
    if (deg[static_cast<size_t>(i)] == delta) out.push_back(i);
  return out;
}

FpMatrix GradedModule::component_basis(GElem delta) const {
  auto idx = component(delta);
  FpMatrix out = FpMatrix::zero(mod.alg->p(), mod.dim, static_cast<Index>(idx.size()));
  for (Index j = 0; j < static_cast<Index>(idx.size()); ++j)
    out.set(idx[static_cast<size_t>(j)], j, 1);
  return out;
}

std::vector<GElem> GradedModule::support() const {
  std::set<GElem> s(deg.begin(), deg.end());
  return std::vector<GElem>(s.begin(), s.end());
}

std::uint64_t GradedModule::digest() const {
  std::vector<Scalar> bytes{static_cast<Scalar>(mod.digest()),
                            static_cast<Scalar>(galg->digest())};
  for (GElem d : deg) bytes.push_back(d);
  return fnv1a(bytes);
}

GradedModule regular_graded_module(const GradedAlgebraPtr& ga) {
  return GradedModule::make(ga, regular_module(ga->alg), ga->deg);
}

GradedModule direct_sum(const GradedModule& a, const GradedModule& b) {
  if (a.galg->digest() != b.galg->digest())
    throw AlgebraMismatch("direct sum over different graded algebras");
  std::vector<GElem> deg = a.deg;
  deg.insert(deg.end(), b.deg.begin(), b.deg.end());
  return GradedModule::make(a.galg, direct_sum(a.mod, b.mod), std::move(deg));
}

GradedModule suspension(const GradedModule& m, GElem sigma) {
  if (!m.galg->group.contains(sigma))
    throw ValidationError("suspension degree outside the grading group");
  std::vector<GElem> deg;
  for (GElem d : m.deg)
    deg.push_back(m.galg->group.mul(d, m.galg->group.inv(sigma)));
  return GradedModule::make(m.galg, m.mod, std::move(deg));
}

bool is_graded_morphism(const FpMatrix& f, const GradedModule& m,
                        const GradedModule& n) {
  if (!is_morphism(f, m.mod, n.mod)) return false;
  if (m.galg->digest() != n.galg->digest()) return false;
  for (Index r = 0; r < n.mod.dim; ++r)
    for (Index c = 0; c < m.mod.dim; ++c)
      if (f(r, c) != 0 &&
          n.deg[static_cast<size_t>(r)] != m.deg[static_cast<size_t>(c)])
        return false;
  return true;
}

std::vector<FpMatrix> graded_hom_basis(const GradedModule& m,
                                       const GradedModule& n) {
  if (m.galg->digest() != n.galg->digest())
    throw AlgebraMismatch("graded hom over different graded algebras");
  if (m.mod.dim == 0 || n.mod.dim == 0) return {};
  const Scalar p = m.mod.alg->p();
  FpMatrix sys = intertwine_system(m.mod, n.mod);
  // force entries across unequal degrees to zero
  for (Index c = 0; c < m.mod.dim; ++c)
    for (Index r = 0; r < n.mod.dim; ++r)
      if (m.deg[static_cast<size_t>(c)] != n.deg[static_cast<size_t>(r)]) {
        FpMatrix row = FpMatrix::zero(p, 1, m.mod.dim * n.mod.dim);
        row.set(0, c * n.mod.dim + r, 1);
        sys = vstack(sys, row);
      }
  FpMatrix ker = nullspace(sys);
  std::vector<FpMatrix> out;
  for (Index c = 0; c < ker.cols(); ++c)
    out.push_back(devec(p, n.mod.dim, m.mod.dim, ker.col(c)));
  return out;
}

bool is_homogeneous_subspace(const GradedModule& m, const FpMatrix& span_cols) {
  FpMatrix basis = canonical_basis(span_cols);
  for (Index c = 0; c < basis.cols(); ++c) {
    GElem d = 0;
    bool seen = false;
    for (Index r = 0; r < basis.rows(); ++r)
      if (basis(r, c) != 0) {
        if (!seen) {
          d = m.deg[static_cast<size_t>(r)];
          seen = true;
        } else if (m.deg[static_cast<size_t>(r)] != d) {
          return false;
        }
      }
  }
  return true;
}

GradedSubModule graded_submodule(const GradedModule& m, const FpMatrix& span_cols) {
  if (!is_homogeneous_subspace(m, span_cols))
    throw ValidationError("subspace is not homogeneous");
  SubModule s = submodule(m.mod, span_cols);
  std::vector<GElem> deg;
  for (Index c = 0; c < s.incl.cols(); ++c) {
    GElem d = m.galg->group.identity();
    for (Index r = 0; r < s.incl.rows(); ++r)
      if (s.incl(r, c) != 0) {
        d = m.deg[static_cast<size_t>(r)];
        break;
      }
    deg.push_back(d);
  }
  GradedSubModule out;
  out.mod = GradedModule::make(m.galg, std::move(s.mod), std::move(deg));
  out.incl = s.incl;
  return out;
}

GradedQuotModule graded_quotient_module(const GradedModule& m,
                                        const FpMatrix& sub_cols) {
  if (!is_homogeneous_subspace(m, sub_cols))
    throw ValidationError("subspace is not homogeneous");
  QuotModule q = quotient_module(m.mod, sub_cols);
  // quotient coordinates are the non-pivot coordinates of the ambient module
  std::vector<GElem> deg;
  for (Index r = 0; r < q.proj.rows(); ++r) {
    // the section column is the matching standard basis vector
    GElem d = m.galg->group.identity();
    for (Index c = 0; c < q.section.rows(); ++c)
      if (q.section(c, r) != 0) {
        d = m.deg[static_cast<size_t>(c)];
        break;
      }
    deg.push_back(d);
  }
  GradedQuotModule out;
  out.mod = GradedModule::make(m.galg, std::move(q.mod), std::move(deg));
  out.proj = q.proj;
  out.section = q.section;
  return out;
}

GradedSubModule graded_kernel_module(const FpMatrix& f, const GradedModule& m,
                                     const GradedModule& n) {
  if (!is_graded_morphism(f, m, n))
    throw NotHomomorphism("kernel of a non graded morphism");
  return graded_submodule(m, nullspace(f));
}

GradedSubModule graded_image_module(const FpMatrix& f, const GradedModule& m,
                                    const GradedModule& n) {
  if (!is_graded_morphism(f, m, n))
    throw NotHomomorphism("image of a non graded morphism");
  return graded_submodule(n, canonical_basis(f));
}

GradedQuotModule graded_cokernel_module(const FpMatrix& f, const GradedModule& m,
                                        const GradedModule& n) {
  if (!is_graded_morphism(f, m, n))
    throw NotHomomorphism("cokernel of a non graded morphism");
  return graded_quotient_module(n, canonical_basis(f));
}

HomDecomposition hom_graded_decomposition(const GradedModule& m,
                                          const GradedModule& n) {
  HomDecomposition out;
  out.total = static_cast<Index>(hom_basis(m.mod, n.mod).size());
  std::set<GElem> shifts;
  if (m.galg->group.is_finite()) {
    for (GElem s : m.galg->group.elements()) shifts.insert(s);
  } else {
    for (GElem dn : n.deg)
      for (GElem dm : m.deg) shifts.insert(dn - dm);
  }
  Index sum = 0;
  for (GElem s : shifts) {
    Index d = static_cast<Index>(graded_hom_basis(m, suspension(n, s)).size());
    sum += d;
    if (d > 0) out.by_shift[s] = d;
  }
  out.decomposes = (sum == out.total);
  return out;
}

}  // namespace gradext
