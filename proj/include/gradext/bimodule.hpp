#pragma once

#include "gradext/decomp.hpp"

namespace gradext {

// Two-sided module: lact is a representation of the left algebra, ract an
// anti-representation of the right one, and the two commute.  make()
// verifies all of it, so a live Bimodule satisfies the bimodule laws.
struct Bimodule {
  AlgebraPtr left;
  AlgebraPtr right;
  std::vector<FpMatrix> lact;  // one per left basis element
  std::vector<FpMatrix> ract;  // one per right basis element, (-) * e_j
  Index dim = 0;

  static Bimodule make(AlgebraPtr left, AlgebraPtr right,
                       std::vector<FpMatrix> lact, std::vector<FpMatrix> ract);

  FpMatrix act_left(const FpMatrix& x) const;   // x: left coordinate column
  FpMatrix act_right(const FpMatrix& y) const;  // y: right coordinate column
  std::uint64_t digest() const;
};

Bimodule regular_bimodule(const AlgebraPtr& a);

// One-sided shadows.  right_module is a left module over the opposite
// algebra, which is what the anti-representation already is.
Module left_module(const Bimodule& m);
Module right_module(const Bimodule& m);

// A left module as a bimodule with scalars acting on the right.
Bimodule bimodule_from_left(const Module& m);

// Left modules over enveloping_algebra(left, right) on the same coordinates:
// basis (i, j) of the enveloping algebra acts by lact[i] * ract[j].  The two
// sided and one sided pictures determine each other.
Module to_enveloping(const Bimodule& m);
Module to_enveloping(const Bimodule& m, const AlgebraPtr& env);
Bimodule from_enveloping(const AlgebraPtr& left, const AlgebraPtr& right,
                         const Module& over_env);

// Bimodule isomorphism, delegated to module isomorphism over the enveloping
// algebra so there is a single iso engine.
IsoResult<Module> bimodules_isomorphic(const Bimodule& a, const Bimodule& b,
                                       double budget = kDefaultBudget);

// m tensor n over the shared middle algebra: the plain tensor product space
// with the balanced relations (m.s) x n - m x (s.n) divided out.  proj maps
// the pure tensor e_i x f_j (coordinate i*n.dim + j) to the quotient and
// section picks representatives, proj * section = identity.
struct TensorProduct {
  Bimodule prod;
  FpMatrix proj;
  FpMatrix section;
};
TensorProduct tensor_over_algebra(const Bimodule& m, const Bimodule& n);

// Row and column bimodules bridging a and the n x n matrix algebra over a:
// rows are (a, mat)-bimodules, columns (mat, a)-bimodules, both of dimension
// n * dim(a) with basis (slot, i) at slot*dim(a)+i.  mat must be
// matrix_algebra(a, n); the laws are re-verified against its structure.
Bimodule row_bimodule(const AlgebraPtr& a, const AlgebraPtr& mat, Index n);
Bimodule column_bimodule(const AlgebraPtr& a, const AlgebraPtr& mat, Index n);

// Graded bimodule: one degree per basis vector with
// left_sigma . M_tau . right_gamma inside M_{sigma tau gamma} (verified).
struct GradedBimodule {
  Bimodule bim;
  GradedAlgebraPtr left;
  GradedAlgebraPtr right;
  std::vector<GElem> deg;

  static GradedBimodule make(GradedAlgebraPtr left, GradedAlgebraPtr right,
                             Bimodule bim, std::vector<GElem> deg);

  std::vector<Index> component(GElem delta) const;
  std::uint64_t digest() const;
};

GradedBimodule regular_graded_bimodule(const GradedAlgebraPtr& a);

// Graded module over graded_enveloping_algebra(left, right) with the same
// degrees; genv must be that algebra (the wrap is verified).
GradedModule to_enveloping(const GradedBimodule& m, const GradedAlgebraPtr& genv);

IsoResult<GradedModule> bimodules_isomorphic(const GradedBimodule& a,
                                             const GradedBimodule& b,
                                             double budget = kDefaultBudget);

// Degrees multiply: deg(e_i x f_j) = deg(i) * deg(j); the balanced relations
// are homogeneous, so the quotient inherits a grading.
struct GradedTensorProduct {
  GradedBimodule prod;
  FpMatrix proj;
  FpMatrix section;
};
GradedTensorProduct tensor_over_algebra(const GradedBimodule& m,
                                        const GradedBimodule& n);

}  // namespace gradext
