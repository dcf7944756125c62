#pragma once

#include "gradext/algebra.hpp"

namespace gradext {

// Left module over an Algebra: one action matrix per algebra basis element.
// make() verifies the unit acts as the identity and the action respects the
// structure constants, so a live Module really is a module.
struct Module {
  AlgebraPtr alg;
  std::vector<FpMatrix> rho;
  Index dim = 0;

  static Module make(AlgebraPtr alg, std::vector<FpMatrix> rho);

  // action of an arbitrary algebra element (coordinate column)
  FpMatrix act(const FpMatrix& x) const;
  std::uint64_t digest() const;
};

Module regular_module(const AlgebraPtr& a);
Module zero_module(const AlgebraPtr& a);
Module direct_sum(const Module& a, const Module& b);

// f: M -> N as a dim(N) x dim(M) matrix commuting with every action matrix.
bool is_morphism(const FpMatrix& f, const Module& m, const Module& n);

// Basis of the space of module morphisms M -> N, deterministic order.
std::vector<FpMatrix> hom_basis(const Module& m, const Module& n);

// Submodule spanned by the given columns; throws if not invariant.
struct SubModule {
  Module mod;
  FpMatrix incl;  // dim(M) x d, canonical homogeneous-free basis
};
SubModule submodule(const Module& m, const FpMatrix& span_cols);

// Quotient by an invariant subspace.
struct QuotModule {
  Module mod;
  FpMatrix proj;
  FpMatrix section;
};
QuotModule quotient_module(const Module& m, const FpMatrix& sub_cols);

// Smallest invariant subspace containing the seed columns.
FpMatrix submodule_closure(const Module& m, const FpMatrix& seeds);

SubModule kernel_module(const FpMatrix& f, const Module& m, const Module& n);
SubModule image_module(const FpMatrix& f, const Module& m, const Module& n);
QuotModule cokernel_module(const FpMatrix& f, const Module& m, const Module& n);

// Pull a module back along an algebra morphism g: A -> B given by its
// matrix (dim(B) x dim(A)); the morphism property is verified.
bool is_algebra_morphism(const FpMatrix& g, const AlgebraPtr& a, const AlgebraPtr& b);
Module restrict_along(const FpMatrix& g, const AlgebraPtr& a, const Module& over_b);

// Module graded over a graded algebra: a degree per basis vector, with
// R_sigma M_delta inside M_{sigma delta} (verified by make).
struct GradedModule {
  Module mod;
  GradedAlgebraPtr galg;
  std::vector<GElem> deg;

  static GradedModule make(GradedAlgebraPtr galg, Module mod,
                           std::vector<GElem> deg);

  std::vector<Index> component(GElem delta) const;
  FpMatrix component_basis(GElem delta) const;
  std::vector<GElem> support() const;
  std::uint64_t digest() const;
};

GradedModule regular_graded_module(const GradedAlgebraPtr& ga);
GradedModule direct_sum(const GradedModule& a, const GradedModule& b);

// Degree shift: same action, deg'(v) = deg(v) * sigma^{-1}.  A morphism
// M -> N(sigma) of graded modules sends M_delta into N_{delta sigma}.
GradedModule suspension(const GradedModule& m, GElem sigma);

// Degree-preserving morphisms only.
bool is_graded_morphism(const FpMatrix& f, const GradedModule& m,
                        const GradedModule& n);
std::vector<FpMatrix> graded_hom_basis(const GradedModule& m,
                                       const GradedModule& n);

// Whether a subspace splits into its intersections with the degree
// components; canonical_basis of such a span is itself homogeneous.
bool is_homogeneous_subspace(const GradedModule& m, const FpMatrix& span_cols);

struct GradedSubModule {
  GradedModule mod;
  FpMatrix incl;
};
GradedSubModule graded_submodule(const GradedModule& m, const FpMatrix& span_cols);

struct GradedQuotModule {
  GradedModule mod;
  FpMatrix proj;
  FpMatrix section;
};
GradedQuotModule graded_quotient_module(const GradedModule& m,
                                        const FpMatrix& sub_cols);

GradedSubModule graded_kernel_module(const FpMatrix& f, const GradedModule& m,
                                     const GradedModule& n);
GradedSubModule graded_image_module(const FpMatrix& f, const GradedModule& m,
                                    const GradedModule& n);
GradedQuotModule graded_cokernel_module(const FpMatrix& f, const GradedModule& m,
                                        const GradedModule& n);

// dim Hom(M, N) split by shift: the sigma entry counts morphisms
// M -> N(sigma).  The shifts that can occur are finitely many because both
// degree vectors are finite, so this works for Z gradings as well.
// Invariant: the values sum to dim Hom(M, N) over the underlying algebra
// when every hom is graded-decomposable; the all-shifts sum is returned too.
struct HomDecomposition {
  std::map<GElem, Index> by_shift;
  Index total = 0;       // dim Hom over the underlying algebra
  bool decomposes = true;  // total equals the sum of the pieces
};
HomDecomposition hom_graded_decomposition(const GradedModule& m,
                                          const GradedModule& n);

}  // namespace gradext
