#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gradext/errors.hpp"

namespace gradext {

using Scalar = std::int64_t;
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

bool is_prime(Scalar p);
Scalar mod_pow(Scalar base, Scalar exp, Scalar p);
Scalar mod_inverse(Scalar a, Scalar p);

// Dense matrix over F_p.  Entries are always reduced to [0, p).  The modulus
// rides along so mixed-field arithmetic is caught instead of silently wrong.
class FpMatrix {
 public:
  FpMatrix() : p_(2), m_(0, 0) {}
  FpMatrix(Scalar p, Mat m);

  static FpMatrix zero(Scalar p, Index rows, Index cols);
  static FpMatrix identity(Scalar p, Index n);
  static FpMatrix from_rows(Scalar p,
                            const std::vector<std::vector<Scalar>>& rows);
  static FpMatrix column(Scalar p, const std::vector<Scalar>& entries);

  Scalar mod() const { return p_; }
  Index rows() const { return m_.rows(); }
  Index cols() const { return m_.cols(); }
  const Mat& raw() const { return m_; }

  Scalar operator()(Index i, Index j) const { return m_(i, j); }
  void set(Index i, Index j, Scalar v);

  bool is_zero() const;
  FpMatrix transpose() const { return FpMatrix(p_, m_.transpose()); }
  FpMatrix col(Index j) const { return FpMatrix(p_, m_.col(j)); }
  FpMatrix block(Index i, Index j, Index r, Index c) const {
    return FpMatrix(p_, m_.block(i, j, r, c));
  }

  bool operator==(const FpMatrix& o) const {
    return p_ == o.p_ && m_.rows() == o.m_.rows() && m_.cols() == o.m_.cols() &&
           m_ == o.m_;
  }

  std::vector<Scalar> row_major() const;
  std::string to_string() const;

 private:
  Scalar p_;
  Mat m_;
};

FpMatrix operator+(const FpMatrix& a, const FpMatrix& b);
FpMatrix operator-(const FpMatrix& a, const FpMatrix& b);
FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
FpMatrix scale(Scalar c, const FpMatrix& a);

FpMatrix kron(const FpMatrix& a, const FpMatrix& b);
FpMatrix hstack(const FpMatrix& a, const FpMatrix& b);
FpMatrix vstack(const FpMatrix& a, const FpMatrix& b);

struct RrefResult {
  FpMatrix mat;
  Index rank = 0;
  std::vector<Index> pivots;  // pivot column per nonzero row, ascending
};

// Deterministic reduced row echelon form: leftmost-nonzero pivoting, pivot
// rows scaled monic, pivot columns cleared.  Unique for a given row space.
RrefResult rref(const FpMatrix& a);
Index rank_of(const FpMatrix& a);

// Solves a x = b for multi-column b.  Empty optional iff inconsistent.
// The returned solution is the one with non-pivot coordinates set to zero.
std::optional<FpMatrix> solve(const FpMatrix& a, const FpMatrix& b);

// Columns form a basis of the right kernel, in deterministic order (one
// basis vector per free column of rref(a), ascending).
FpMatrix nullspace(const FpMatrix& a);

std::optional<FpMatrix> inverse(const FpMatrix& a);

// Subspaces are carried as matrices whose columns span them.  The canonical
// representative is the transposed rref of the transpose: equal spaces give
// byte-equal canonical bases.
FpMatrix canonical_basis(const FpMatrix& span_cols);
bool same_space(const FpMatrix& a, const FpMatrix& b);
bool space_contains(const FpMatrix& space_cols, const FpMatrix& vec_cols);
FpMatrix space_sum(const FpMatrix& a, const FpMatrix& b);
FpMatrix space_intersection(const FpMatrix& a, const FpMatrix& b);

// Projection onto a complement of the given subspace: proj * sub == 0,
// proj * section == identity.  Coordinates of the quotient are the non-pivot
// coordinates of the subspace, so quotients are deterministic too.
struct QuotientSpace {
  FpMatrix proj;     // q x n
  FpMatrix section;  // n x q
};
QuotientSpace quotient_space(Index ambient_dim, const FpMatrix& sub_cols);

std::uint64_t fnv1a(const std::vector<Scalar>& data, std::uint64_t seed = 1469598103934665603ull);

}  // namespace gradext
