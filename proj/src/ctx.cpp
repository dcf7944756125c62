#include "gradext/ctx.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "gradext/errors.hpp"

namespace gradext {

namespace {

FpMatrix vec_of(const FpMatrix& f) {
  return FpMatrix::column(f.mod(), f.row_major());
}

struct Classified {
  Index idx = -1;
  FpMatrix witness;  // part -> simples[idx]
};

Classified classify_simple(const std::vector<Module>& simples,
                           const Module& m) {
  for (Index i = 0; i < static_cast<Index>(simples.size()); ++i) {
    auto r = are_isomorphic(m, simples[static_cast<std::size_t>(i)]);
    if (r.status == Tri::Unknown)
      throw Error("simple classification hit the scan budget");
    if (r.status == Tri::Yes) return {i, *r.witness};
  }
  throw Error("module does not match any simple");
}

AlgebraContext build_context(const AlgebraPtr& a) {
  AlgebraContext c;
  c.alg = a;
  c.radical = algebra_radical(a);
  c.rad_powers = radical_powers(a);
  c.loewy = static_cast<Index>(c.rad_powers.size()) + 1;
  c.semisimple = quotient_algebra(a, c.radical);

  // Simple modules: summands of the regular module of the semisimple
  // quotient, deduplicated, then pulled back along the quotient map.
  auto ss_reg = decompose(regular_module(c.semisimple.alg));
  if (!ss_reg.all_certified)
    throw Error("semisimple regular module decomposition not certified");
  std::vector<Module> ss_simples;
  for (const auto& part : ss_reg.parts) {
    bool fresh = true;
    for (const auto& seen : ss_simples) {
      auto r = are_isomorphic(part.part, seen);
      if (r.status == Tri::Unknown)
        throw Error("simple deduplication hit the scan budget");
      if (r.status == Tri::Yes) {
        fresh = false;
        break;
      }
    }
    if (fresh) ss_simples.push_back(part.part);
  }
  for (const auto& s : ss_simples)
    c.simples.push_back(restrict_along(c.semisimple.proj, a, s));

  // Projective indecomposables: summands of the regular module, matched to
  // the simples by their tops.
  auto reg = decompose(regular_module(a));
  if (!reg.all_certified)
    throw Error("regular module decomposition not certified");
  c.pims.assign(c.simples.size(), zero_module(a));
  std::vector<bool> found(c.simples.size(), false);
  for (const auto& part : reg.parts) {
    QuotModule top = c.top_of(part.part);
    Classified cl = classify_simple(c.simples, top.mod);
    auto idx = static_cast<std::size_t>(cl.idx);
    if (!found[idx]) {
      c.pims[idx] = part.part;
      found[idx] = true;
    }
  }
  for (bool f : found)
    if (!f) throw Error("a simple module has no projective cover summand");
  return c;
}

}  // namespace

std::shared_ptr<const AlgebraContext> AlgebraContext::get(const AlgebraPtr& a) {
  static std::mutex mu;
  static std::map<std::uint64_t, std::shared_ptr<const AlgebraContext>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(a->digest());
  if (it != cache.end()) return it->second;
  auto ctx = std::make_shared<const AlgebraContext>(build_context(a));
  cache.emplace(a->digest(), ctx);
  return ctx;
}

FpMatrix AlgebraContext::module_radical(const Module& m) const {
  FpMatrix acc = FpMatrix::zero(alg->p(), m.dim, 0);
  for (Index j = 0; j < radical.cols(); ++j)
    acc = hstack(acc, m.act(radical.col(j)));
  return canonical_basis(acc);
}

std::vector<FpMatrix> AlgebraContext::module_radical_powers(
    const Module& m) const {
  std::vector<FpMatrix> out;
  FpMatrix cur = module_radical(m);
  while (cur.cols() > 0) {
    out.push_back(cur);
    FpMatrix next = FpMatrix::zero(alg->p(), m.dim, 0);
    for (Index j = 0; j < radical.cols(); ++j)
      next = hstack(next, m.act(radical.col(j)) * cur);
    cur = canonical_basis(next);
  }
  return out;
}

FpMatrix AlgebraContext::module_socle(const Module& m) const {
  if (radical.cols() == 0)
    return canonical_basis(FpMatrix::identity(alg->p(), m.dim));
  FpMatrix stacked = m.act(radical.col(0));
  for (Index j = 1; j < radical.cols(); ++j)
    stacked = vstack(stacked, m.act(radical.col(j)));
  return nullspace(stacked);
}

QuotModule AlgebraContext::top_of(const Module& m) const {
  return quotient_module(m, module_radical(m));
}

std::vector<Index> AlgebraContext::top_multiplicities(const Module& m) const {
  std::vector<Index> counts(simples.size(), 0);
  QuotModule top = top_of(m);
  if (top.mod.dim == 0) return counts;
  auto dec = decompose(top.mod);
  if (!dec.all_certified) throw Error("top decomposition not certified");
  for (const auto& part : dec.parts) {
    Classified cl = classify_simple(simples, part.part);
    ++counts[static_cast<std::size_t>(cl.idx)];
  }
  return counts;
}

Cover AlgebraContext::projective_cover(const Module& m) const {
  const Scalar p = alg->p();
  QuotModule top = top_of(m);
  Module total = zero_module(alg);
  FpMatrix onto = FpMatrix::zero(p, m.dim, 0);
  if (top.mod.dim > 0) {
    auto dec = decompose(top.mod);
    if (!dec.all_certified) throw Error("top decomposition not certified");
    for (const auto& part : dec.parts) {
      Classified cl = classify_simple(simples, part.part);
      const Module& pim = pims[static_cast<std::size_t>(cl.idx)];
      QuotModule pim_top = top_of(pim);
      Classified pl = classify_simple(simples, pim_top.mod);
      if (pl.idx != cl.idx) throw Error("projective top mismatch");
      auto winv = inverse(cl.witness);
      if (!winv) throw Error("simple witness not invertible");
      // map the projective onto the matching summand of the top of M
      FpMatrix g = part.emb * (*winv) * pl.witness * pim_top.proj;
      auto homs = hom_basis(pim, m);
      FpMatrix sys = FpMatrix::zero(p, top.mod.dim * pim.dim, 0);
      for (const auto& h : homs) sys = hstack(sys, vec_of(top.proj * h));
      auto sol = solve(sys, vec_of(g));
      if (!sol) throw Error("projective lift system is inconsistent");
      FpMatrix phi = FpMatrix::zero(p, m.dim, pim.dim);
      for (std::size_t h = 0; h < homs.size(); ++h)
        phi = phi + scale((*sol)(static_cast<Index>(h), 0), homs[h]);
      total = direct_sum(total, pim);
      onto = hstack(onto, phi);
    }
  }
  if (!is_morphism(onto, total, m) || rank_of(onto) != m.dim)
    throw Error("projective cover construction failed");
  SubModule ker = kernel_module(onto, total, m);
  return Cover{std::move(total), std::move(onto), std::move(ker)};
}

Module AlgebraContext::syzygy(const Module& m) const {
  return projective_cover(m).syzygy.mod;
}

Index AlgebraContext::ext1_dim(const Module& m, const Module& n) const {
  Cover c = projective_cover(m);
  auto ext_homs = hom_basis(c.syzygy.mod, n);
  if (ext_homs.empty()) return 0;
  FpMatrix restrictions = FpMatrix::zero(alg->p(), n.dim * c.syzygy.mod.dim, 0);
  for (const auto& h : hom_basis(c.proj_mod, n))
    restrictions = hstack(restrictions, vec_of(h * c.syzygy.incl));
  return static_cast<Index>(ext_homs.size()) - rank_of(restrictions);
}

Index AlgebraContext::ext2_dim(const Module& m, const Module& n) const {
  return ext1_dim(syzygy(m), n);
}

std::vector<FpMatrix> AlgebraContext::ext1_classes(const Module& m,
                                                   const Module& n) const {
  Cover c = projective_cover(m);
  std::vector<FpMatrix> out;
  auto ext_homs = hom_basis(c.syzygy.mod, n);
  if (ext_homs.empty()) return out;
  FpMatrix acc = FpMatrix::zero(alg->p(), n.dim * c.syzygy.mod.dim, 0);
  for (const auto& h : hom_basis(c.proj_mod, n))
    acc = hstack(acc, vec_of(h * c.syzygy.incl));
  Index rank = rank_of(acc);
  for (const auto& e : ext_homs) {
    FpMatrix widened = hstack(acc, vec_of(e));
    Index r = rank_of(widened);
    if (r > rank) {
      out.push_back(e);
      acc = widened;
      rank = r;
    }
  }
  return out;
}

Extension AlgebraContext::middle_term(const Module& m, const Module& n,
                                      const FpMatrix& cls) const {
  const Scalar p = alg->p();
  Cover c = projective_cover(m);
  const Module& omega = c.syzygy.mod;
  if (!is_morphism(cls, omega, n))
    throw Error("extension class is not a morphism from the syzygy");
  Module sum = direct_sum(n, c.proj_mod);
  // graph of (cls, -incl): quotienting by it pushes the syzygy out along cls
  FpMatrix graph = FpMatrix::zero(p, sum.dim, 0);
  for (Index k = 0; k < omega.dim; ++k)
    graph = hstack(graph, vstack(cls.col(k),
                                 scale(p - 1, c.syzygy.incl.col(k))));
  QuotModule q = quotient_module(sum, graph);
  FpMatrix incl_n = q.proj * vstack(FpMatrix::identity(p, n.dim),
                                    FpMatrix::zero(p, c.proj_mod.dim, n.dim));
  FpMatrix big_onto = hstack(FpMatrix::zero(p, m.dim, n.dim), c.onto);
  if (!(big_onto * graph).is_zero())
    throw Error("extension projection is not well defined");
  FpMatrix onto_m = big_onto * q.section;
  if (!verify_extension(n, q.mod, m, incl_n, onto_m))
    throw Error("constructed sequence is not exact");
  return Extension{q.mod, incl_n, onto_m};
}

bool verify_extension(const Module& n, const Module& middle, const Module& m,
                      const FpMatrix& incl, const FpMatrix& onto) {
  if (middle.dim != n.dim + m.dim) return false;
  if (!is_morphism(incl, n, middle) || !is_morphism(onto, middle, m))
    return false;
  if (rank_of(incl) != n.dim || rank_of(onto) != m.dim) return false;
  return (onto * incl).is_zero();
}

}  // namespace gradext
