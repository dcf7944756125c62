#pragma once

#include "gradext/ctx.hpp"

namespace gradext {

// For a finite grading group, graded modules are the same thing as modules
// over the smash product R # G: basis (e_i, g) standing for e_i # p_g with
// p_g the projection onto the degree g component, and product
//   (r # p_g)(s # p_h) = r * s_{g h^-1} # p_h .
// A graded module becomes a smash module on the same coordinates via
// (e_i # p_g) . v = e_i . (component_g v), and every smash module carries a
// grading by the projector images.  Degree preserving morphisms match smash
// morphisms with identical matrices, so radicals, covers, syzygies and Ext
// in the graded category are plain AlgebraContext computations upstairs.
struct SmashedAlgebra {
  GradedAlgebraPtr base;
  AlgebraPtr alg;  // dim = |G| * dim(base); (i, g) sits at g*dim(base)+i
};

SmashedAlgebra smash_product(const GradedAlgebraPtr& ga);

Module to_smashed(const SmashedAlgebra& s, const GradedModule& m);

// Reads a smash module back as a graded module on a degree aligned basis.
// basis columns express the new coordinates in the old ones, so basis is an
// isomorphism from the returned module onto the input smash module.
struct Unsmashed {
  GradedModule mod;
  FpMatrix basis;
};
Unsmashed from_smashed(const SmashedAlgebra& s, const Module& m);

struct GradedCover {
  GradedModule proj_mod;
  FpMatrix onto;
  GradedSubModule syzygy;
};

struct GradedExtension {
  GradedModule middle;
  FpMatrix incl;
  FpMatrix onto;
};

// Graded counterpart of AlgebraContext, built on the smash product context.
// Finite grading groups only; the infinite case has no smash product here.
struct GradedContext {
  GradedAlgebraPtr galg;
  SmashedAlgebra smash;
  std::shared_ptr<const AlgebraContext> sctx;
  std::vector<GradedModule> gsimples;  // pairwise non-isomorphic as graded
  std::vector<GradedModule> gpims;     // gpims[i] covers gsimples[i]

  static std::shared_ptr<const GradedContext> get(const GradedAlgebraPtr& ga);

  // Intersection of the maximal graded submodules; can be smaller than the
  // ungraded radical span (a graded module can be graded simple while its
  // underlying module is far from semisimple).
  FpMatrix graded_radical(const GradedModule& m) const;
  GradedQuotModule graded_top(const GradedModule& m) const;
  bool is_graded_simple(const GradedModule& m) const;

  GradedCover graded_cover(const GradedModule& m) const;
  GradedModule graded_syzygy(const GradedModule& m) const;

  // Degree preserving extension groups; classes are morphisms from the
  // smashed syzygy, directly consumable by middle_term.
  Index ext1_dim(const GradedModule& m, const GradedModule& n) const;
  Index ext2_dim(const GradedModule& m, const GradedModule& n) const;
  std::vector<FpMatrix> ext1_classes(const GradedModule& m,
                                     const GradedModule& n) const;
  GradedExtension middle_term(const GradedModule& m, const GradedModule& n,
                              const FpMatrix& cls) const;
};

}  // namespace gradext
