#pragma once

#include "gradext/algebra.hpp"

namespace gradext {

// Group algebra F_p[G] with its tautological grading (deg of the basis
// element g is g itself).  Finite groups only.
GradedAlgebraPtr group_algebra(Scalar p, const GradeGroup& g);

// Skew group algebra A * G: basis (e_i, sigma) at index sigma*dim(A)+i,
// product (x, sigma)(y, tau) = (x * sigma(y), sigma tau).  action[sigma]
// must be an algebra automorphism and sigma -> action[sigma] a group
// homomorphism; both are verified.  Graded by G with deg(x, sigma) = sigma.
GradedAlgebraPtr skew_group_algebra(const AlgebraPtr& a, const GradeGroup& g,
                                    const std::vector<FpMatrix>& action);

// Generalized matrix ring
//   [ A  M ]
//   [ N  B ]
// assembled from two algebras, two bridging spaces with their four actions,
// and the two pairings.  All context axioms (bimodule laws, associativity of
// the pairings, compatibility) are enforced; failures throw
// ContextAxiomViolation.  The result carries the integer grading with A, B
// in degree 0, M in degree +1, N in degree -1.
struct MoritaContextData {
  AlgebraPtr a;
  AlgebraPtr b;
  Index m_dim = 0;
  Index n_dim = 0;
  std::vector<FpMatrix> a_on_m;    // per A basis element: m_dim x m_dim
  std::vector<FpMatrix> m_from_b;  // per B basis element: right action on M
  std::vector<FpMatrix> b_on_n;    // per B basis element: n_dim x n_dim
  std::vector<FpMatrix> n_from_a;  // per A basis element: right action on N
  // phi[i][j] = coordinates in A of the pairing of m_i with n_j
  std::vector<std::vector<FpMatrix>> phi;
  // psi[j][i] = coordinates in B of the pairing of n_j with m_i
  std::vector<std::vector<FpMatrix>> psi;
};
GradedAlgebraPtr morita_context_ring(const MoritaContextData& d);

// Corner algebra w A w for an idempotent w, with the inclusion of its basis
// into A and the projection x -> coordinates of w x w.
struct CornerAlgebra {
  AlgebraPtr alg;
  FpMatrix incl;  // dim(A) x d, columns are the corner basis inside A
  FpMatrix proj;  // d x dim(A)
};
CornerAlgebra corner_algebra(const AlgebraPtr& a, const FpMatrix& w);

// Bound quiver algebra kQ/I.  Relations must be linear combinations of
// parallel paths of one common length >= 2; the common length keeps the
// path-length grading exact under the degree cap, so no truncation error
// can creep in.  The quotient must be finite dimensional with all paths of
// some length n <= max_len falling into the ideal (or the quiver acyclic);
// otherwise NotAdmissible.  Returns the quotient with its length grading.
struct Arrow {
  Index src;
  Index dst;
  std::string name;
};
struct PathRelation {
  // coefficient and arrow index sequence per term
  std::vector<std::pair<Scalar, std::vector<Index>>> terms;
};
GradedAlgebraPtr path_algebra_quotient(Scalar p, Index n_vertices,
                                       const std::vector<Arrow>& arrows,
                                       const std::vector<PathRelation>& relations,
                                       Index max_len = 32,
                                       double budget = 200000);

// A tensor B^op: basis (i, j) at index i*dim(B)+j, with
// (x ten y)(x' ten y') = x x' ten y' y.
AlgebraPtr enveloping_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

// Same underlying algebra with degrees deg(i, j) = deg_a(i) * deg_b(j), the
// assignment under which a graded (a, b)-bimodule is exactly a graded left
// module over the result.  Needs both factors graded by one abelian group.
GradedAlgebraPtr graded_enveloping_algebra(const GradedAlgebraPtr& a,
                                           const GradedAlgebraPtr& b);

// n x n matrices over A: basis (r, c, i) at index (r*n+c)*dim(A)+i.
AlgebraPtr matrix_algebra(const AlgebraPtr& a, Index n);

}  // namespace gradext
