#include "gradext/gctx.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "gradext/errors.hpp"

namespace gradext {

namespace {

// diagonal projector onto the coordinates of one degree
FpMatrix degree_projector(const std::vector<GElem>& deg, Scalar p, GElem g) {
  FpMatrix out = FpMatrix::zero(p, static_cast<Index>(deg.size()),
                                static_cast<Index>(deg.size()));
  for (Index i = 0; i < static_cast<Index>(deg.size()); ++i)
    if (deg[static_cast<std::size_t>(i)] == g) out.set(i, i, 1);
  return out;
}

}  // namespace

SmashedAlgebra smash_product(const GradedAlgebraPtr& ga) {
  if (!ga->group.is_finite())
    throw Error("smash product needs a finite grading group");
  const Algebra& a = *ga->alg;
  const Scalar p = a.p();
  const Index d = a.dim();
  const Index ord = ga->group.order();
  std::vector<StructureEntry> entries;
  // (e_i # p_g)(e_j # p_h) = e_i e_j # p_h when deg e_j = g h^-1, else 0
  for (Index g = 0; g < ord; ++g) {
    for (Index h = 0; h < ord; ++h) {
      const GElem sel = ga->group.mul(g, ga->group.inv(h));
      for (Index j = 0; j < d; ++j) {
        if (ga->deg[static_cast<std::size_t>(j)] != sel) continue;
        for (Index i = 0; i < d; ++i) {
          const FpMatrix& li = a.left_mult_basis(i);
          for (Index k = 0; k < d; ++k) {
            const Scalar c = li(k, j);  // e_i e_j = sum_k c e_k
            if (c != 0)
              entries.push_back({g * d + i, h * d + j, h * d + k, c});
          }
        }
      }
    }
  }
  std::vector<std::string> names;
  std::vector<Scalar> unit(static_cast<std::size_t>(ord * d), 0);
  for (Index g = 0; g < ord; ++g)
    for (Index i = 0; i < d; ++i) {
      names.push_back(a.basis_names()[static_cast<std::size_t>(i)] + "#" +
                      std::to_string(g));
      unit[static_cast<std::size_t>(g * d + i)] = a.unit()(i, 0);
    }
  return SmashedAlgebra{ga, Algebra::make(p, ord * d, std::move(names),
                                          entries, std::move(unit))};
}

Module to_smashed(const SmashedAlgebra& s, const GradedModule& m) {
  if (m.galg->digest() != s.base->digest())
    throw Error("graded module does not live over the smashed algebra");
  const Scalar p = s.alg->p();
  const Index d = s.base->alg->dim();
  const Index ord = s.base->group.order();
  std::vector<FpMatrix> rho;
  rho.reserve(static_cast<std::size_t>(ord * d));
  for (Index g = 0; g < ord; ++g) {
    FpMatrix pg = degree_projector(m.deg, p, g);
    for (Index i = 0; i < d; ++i)
      rho.push_back(m.mod.rho[static_cast<std::size_t>(i)] * pg);
  }
  return Module::make(s.alg, std::move(rho));
}

Unsmashed from_smashed(const SmashedAlgebra& s, const Module& m) {
  if (m.alg->digest() != s.alg->digest())
    throw Error("module does not live over the smashed algebra");
  const Scalar p = s.alg->p();
  const Index d = s.base->alg->dim();
  const Index ord = s.base->group.order();
  const FpMatrix& u = s.base->alg->unit();
  FpMatrix basis = FpMatrix::zero(p, m.dim, 0);
  std::vector<GElem> deg;
  for (Index g = 0; g < ord; ++g) {
    // image of 1 # p_g is the degree g block
    FpMatrix proj = FpMatrix::zero(p, m.dim, m.dim);
    for (Index i = 0; i < d; ++i)
      if (u(i, 0) != 0)
        proj = proj + scale(u(i, 0), m.rho[static_cast<std::size_t>(g * d + i)]);
    FpMatrix block = canonical_basis(proj);
    for (Index c = 0; c < block.cols(); ++c) deg.push_back(g);
    basis = hstack(basis, block);
  }
  auto binv = inverse(basis);
  if (!binv) throw Error("smash projectors do not decompose the module");
  std::vector<FpMatrix> rho;
  for (Index i = 0; i < d; ++i) {
    FpMatrix total = FpMatrix::zero(p, m.dim, m.dim);
    for (Index g = 0; g < ord; ++g)
      total = total + m.rho[static_cast<std::size_t>(g * d + i)];
    rho.push_back((*binv) * total * basis);
  }
  GradedModule gm = GradedModule::make(s.base, Module::make(s.base->alg,
                                                            std::move(rho)),
                                       std::move(deg));
  return Unsmashed{std::move(gm), std::move(basis)};
}

std::shared_ptr<const GradedContext> GradedContext::get(
    const GradedAlgebraPtr& ga) {
  static std::mutex mu;
  static std::map<std::uint64_t, std::shared_ptr<const GradedContext>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(ga->digest());
  if (it != cache.end()) return it->second;
  auto ctx = std::make_shared<GradedContext>();
  ctx->galg = ga;
  ctx->smash = smash_product(ga);
  ctx->sctx = AlgebraContext::get(ctx->smash.alg);
  for (const auto& simple : ctx->sctx->simples)
    ctx->gsimples.push_back(from_smashed(ctx->smash, simple).mod);
  for (const auto& pim : ctx->sctx->pims)
    ctx->gpims.push_back(from_smashed(ctx->smash, pim).mod);
  cache.emplace(ga->digest(), ctx);
  return cache.at(ga->digest());
}

FpMatrix GradedContext::graded_radical(const GradedModule& m) const {
  return sctx->module_radical(to_smashed(smash, m));
}

GradedQuotModule GradedContext::graded_top(const GradedModule& m) const {
  return graded_quotient_module(m, graded_radical(m));
}

bool GradedContext::is_graded_simple(const GradedModule& m) const {
  if (m.mod.dim == 0) return false;
  Module sm = to_smashed(smash, m);
  if (sctx->module_radical(sm).cols() != 0) return false;
  auto dec = decompose(sm);
  if (!dec.all_certified)
    throw Error("graded simplicity scan hit the budget");
  return dec.parts.size() == 1;
}

GradedCover GradedContext::graded_cover(const GradedModule& m) const {
  Cover c = sctx->projective_cover(to_smashed(smash, m));
  Unsmashed up = from_smashed(smash, c.proj_mod);
  FpMatrix onto = c.onto * up.basis;
  if (!is_graded_morphism(onto, up.mod, m))
    throw Error("graded cover is not degree preserving");
  GradedSubModule syz = graded_kernel_module(onto, up.mod, m);
  return GradedCover{std::move(up.mod), std::move(onto), std::move(syz)};
}

GradedModule GradedContext::graded_syzygy(const GradedModule& m) const {
  return graded_cover(m).syzygy.mod;
}

Index GradedContext::ext1_dim(const GradedModule& m,
                              const GradedModule& n) const {
  return sctx->ext1_dim(to_smashed(smash, m), to_smashed(smash, n));
}

Index GradedContext::ext2_dim(const GradedModule& m,
                              const GradedModule& n) const {
  return sctx->ext2_dim(to_smashed(smash, m), to_smashed(smash, n));
}

std::vector<FpMatrix> GradedContext::ext1_classes(const GradedModule& m,
                                                  const GradedModule& n) const {
  return sctx->ext1_classes(to_smashed(smash, m), to_smashed(smash, n));
}

GradedExtension GradedContext::middle_term(const GradedModule& m,
                                           const GradedModule& n,
                                           const FpMatrix& cls) const {
  Extension e = sctx->middle_term(to_smashed(smash, m), to_smashed(smash, n),
                                  cls);
  Unsmashed um = from_smashed(smash, e.middle);
  auto binv = inverse(um.basis);
  FpMatrix incl = (*binv) * e.incl;
  FpMatrix onto = e.onto * um.basis;
  if (!is_graded_morphism(incl, n, um.mod) ||
      !is_graded_morphism(onto, um.mod, m) ||
      !verify_extension(n.mod, um.mod.mod, m.mod, incl, onto))
    throw Error("graded middle term failed verification");
  return GradedExtension{std::move(um.mod), std::move(incl), std::move(onto)};
}

}  // namespace gradext
