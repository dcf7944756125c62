#pragma once

#include "gradext/ctx.hpp"
#include "gradext/gctx.hpp"

namespace gradext {

// Dual module over the opposite algebra, action matrices transposed.
Module dual_module(const Module& m);

// Every submodule of dimension <= max_dim, as canonical column spans.
// Seeds are the cyclic closures of all p^dim vectors, then joins are taken
// to a fixpoint; if p^dim exceeds the budget the result is flagged partial.
struct SubmoduleList {
  std::vector<FpMatrix> subs;
  bool complete = true;
};
SubmoduleList bounded_submodules(const Module& m, Index max_dim,
                                 double budget = kDefaultBudget);

// Isomorphism classes of nonzero modules of dimension <= max_dim.  Each
// class arises as P / K with P the projective cover of its top and
// K <= rad P, so the search walks top multiplicities and, per top, the
// submodules of rad P of small codimension (found through the dual).
struct EnumerationResult {
  std::vector<Module> classes;  // dim ascending, pairwise non-isomorphic
  bool complete = true;
  std::vector<std::string> notes;
};
EnumerationResult enumerate_modules(const AlgebraContext& ctx, Index max_dim,
                                    double budget = kDefaultBudget);

// The indecomposable classes among enumerate_modules, kept only when the
// decomposition certifies.  Both enumerators replay from GRADEXT_CACHE_DIR
// when that directory is set; cached classes are re-validated on load.
EnumerationResult enumerate_indecomposables(const AlgebraContext& ctx,
                                            Index max_dim,
                                            double budget = kDefaultBudget);

// Same walk over the smash product, read back as graded modules; classes
// are up to degree preserving isomorphism, suspensions counted separately.
struct GradedEnumerationResult {
  std::vector<GradedModule> classes;
  bool complete = true;
  std::vector<std::string> notes;
};
GradedEnumerationResult enumerate_graded_modules(const GradedContext& gctx,
                                                 Index max_dim,
                                                 double budget = kDefaultBudget);

}  // namespace gradext
