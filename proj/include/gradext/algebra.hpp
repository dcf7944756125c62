#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gradext/fp.hpp"
#include "gradext/group.hpp"

namespace gradext {

// One structure constant: e_i * e_j contains c * e_k.
struct StructureEntry {
  Index i, j, k;
  Scalar c;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

// Finite-dimensional associative unital algebra over F_p, given by structure
// constants on a fixed basis.  Instances are immutable once built; all
// failed validations throw, so a live Algebra satisfies the ring axioms.
class Algebra {
 public:
  Algebra(Scalar p, Index dim, std::vector<std::string> basis_names,
          const std::vector<StructureEntry>& structure,
          std::vector<Scalar> unit);

  Scalar p() const { return p_; }
  Index dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  const FpMatrix& unit() const { return unit_; }

  // Matrix of left multiplication by basis element e_i (columns index the
  // right factor).  left_mult_basis(i).col(j) = coordinates of e_i e_j.
  const FpMatrix& left_mult_basis(Index i) const;
  FpMatrix left_mult(const FpMatrix& x) const;   // x: dim x 1
  FpMatrix right_mult(const FpMatrix& x) const;  // matrix of (-) * x
  FpMatrix mul(const FpMatrix& x, const FpMatrix& y) const;

  std::vector<StructureEntry> structure() const;
  std::uint64_t digest() const { return digest_; }

  static AlgebraPtr make(Scalar p, Index dim,
                         std::vector<std::string> basis_names,
                         const std::vector<StructureEntry>& structure,
                         std::vector<Scalar> unit);

 private:
  Scalar p_;
  Index dim_;
  std::vector<std::string> names_;
  std::vector<FpMatrix> left_;  // per basis element
  FpMatrix unit_;
  std::uint64_t digest_;
  void validate() const;
};

// A grading places every basis element in one degree; compatibility with
// the multiplication and the unit is checked by validate_graded.
struct GradedAlgebra;
using GradedAlgebraPtr = std::shared_ptr<const GradedAlgebra>;

struct GradedAlgebra {
  AlgebraPtr alg;
  GradeGroup group;
  std::vector<GElem> deg;

  static GradedAlgebraPtr make(AlgebraPtr alg, GradeGroup group,
                               std::vector<GElem> deg);

  std::vector<Index> component(GElem sigma) const;  // basis indices
  FpMatrix component_basis(GElem sigma) const;      // dim x k columns
  std::vector<GElem> support() const;               // sorted, unique
  std::uint64_t digest() const;
};

struct GradingReport {
  bool ok = true;
  std::vector<std::string> violations;
};
GradingReport validate_graded(const GradedAlgebra& ga);

struct StrongGradingReport {
  bool strongly_graded = false;
  std::string reason;
  // Failing pair and the deficient product span, when not strongly graded.
  std::optional<std::pair<GElem, GElem>> witness_pair;
  std::optional<FpMatrix> product_span;
  // For finite groups and a true verdict: per-sigma expression of 1 as a sum
  // of products u_i v_i with u_i in R_sigma, v_i in R_{sigma^{-1}}.
  std::map<GElem, std::vector<std::pair<FpMatrix, FpMatrix>>> unit_witness;
};
StrongGradingReport is_strongly_graded(const GradedAlgebra& ga);

// Basis and structure of the degree-e component as a standalone algebra,
// plus the basis indices embedding it back.
struct DegreeZeroPart {
  AlgebraPtr alg;
  std::vector<Index> indices;
};
DegreeZeroPart identity_component(const GradedAlgebra& ga);

// Quotient by a two-sided ideal (the span of the given columns, verified).
struct QuotientAlgebra {
  AlgebraPtr alg;
  FpMatrix proj;     // new_dim x dim
  FpMatrix section;  // dim x new_dim
};
QuotientAlgebra quotient_algebra(const AlgebraPtr& a, const FpMatrix& ideal_cols);

AlgebraPtr opposite_algebra(const AlgebraPtr& a);

}  // namespace gradext
