#include "gradext/fp.hpp"

#include <sstream>

namespace gradext {

bool is_prime(Scalar p) {
  if (p < 2) return false;
  for (Scalar d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Scalar mod_pow(Scalar base, Scalar exp, Scalar p) {
  Scalar r = 1 % p;
  base %= p;
  if (base < 0) base += p;
  while (exp > 0) {
    if (exp & 1) r = r * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return r;
}

Scalar mod_inverse(Scalar a, Scalar p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw Error("mod_inverse of zero");
  return mod_pow(a, p - 2, p);
}

namespace {

void check_modulus(Scalar p) {
  if (p < 2 || p > 251 || !is_prime(p))
    throw ValidationError("modulus must be a prime in [2, 251], got " +
                          std::to_string(p));
}

Mat reduced(Scalar p, Mat m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      Scalar v = m(i, j) % p;
      if (v < 0) v += p;
      m(i, j) = v;
    }
  return m;
}

void check_same_mod(const FpMatrix& a, const FpMatrix& b) {
  if (a.mod() != b.mod())
    throw ModulusMismatch("moduli differ: " + std::to_string(a.mod()) +
                          " vs " + std::to_string(b.mod()));
}

}  // namespace

FpMatrix::FpMatrix(Scalar p, Mat m) : p_(p), m_(std::move(m)) {
  check_modulus(p_);
  m_ = reduced(p_, std::move(m_));
}

FpMatrix FpMatrix::zero(Scalar p, Index rows, Index cols) {
  check_modulus(p);
  return FpMatrix(p, Mat::Zero(rows, cols));
}

FpMatrix FpMatrix::identity(Scalar p, Index n) {
  check_modulus(p);
  return FpMatrix(p, Mat::Identity(n, n));
}

FpMatrix FpMatrix::from_rows(Scalar p,
                             const std::vector<std::vector<Scalar>>& rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows[0].size());
  Mat m(r, c);
  for (Index i = 0; i < r; ++i) {
    if (static_cast<Index>(rows[i].size()) != c)
      throw DimensionMismatch("ragged rows in from_rows");
    for (Index j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return FpMatrix(p, std::move(m));
}

FpMatrix FpMatrix::column(Scalar p, const std::vector<Scalar>& entries) {
  Mat m(static_cast<Index>(entries.size()), 1);
  for (Index i = 0; i < m.rows(); ++i) m(i, 0) = entries[i];
  return FpMatrix(p, std::move(m));
}

void FpMatrix::set(Index i, Index j, Scalar v) {
  v %= p_;
  if (v < 0) v += p_;
  m_(i, j) = v;
}

bool FpMatrix::is_zero() const {
  return m_.size() == 0 || m_.isZero(0);
}

std::vector<Scalar> FpMatrix::row_major() const {
  std::vector<Scalar> out;
  out.reserve(static_cast<size_t>(m_.size()));
  for (Index i = 0; i < m_.rows(); ++i)
    for (Index j = 0; j < m_.cols(); ++j) out.push_back(m_(i, j));
  return out;
}

std::string FpMatrix::to_string() const {
  std::ostringstream os;
  os << "F" << p_ << " " << rows() << "x" << cols() << "\n" << m_;
  return os.str();
}

FpMatrix operator+(const FpMatrix& a, const FpMatrix& b) {
  check_same_mod(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("add: shapes differ");
  return FpMatrix(a.mod(), a.raw() + b.raw());
}

FpMatrix operator-(const FpMatrix& a, const FpMatrix& b) {
  check_same_mod(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("sub: shapes differ");
  return FpMatrix(a.mod(), a.raw() - b.raw());
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
  check_same_mod(a, b);
  if (a.cols() != b.rows())
    throw DimensionMismatch("mul: inner dimensions differ (" +
                            std::to_string(a.cols()) + " vs " +
                            std::to_string(b.rows()) + ")");
  // Entries are < 251 and inner dimensions stay desk-scale, so int64
  // accumulation cannot overflow before the reduction.
  return FpMatrix(a.mod(), a.raw() * b.raw());
}

FpMatrix scale(Scalar c, const FpMatrix& a) {
  return FpMatrix(a.mod(), c * a.raw());
}

FpMatrix kron(const FpMatrix& a, const FpMatrix& b) {
  check_same_mod(a, b);
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
          a(i, j) * b.raw();
  return FpMatrix(a.mod(), std::move(out));
}

FpMatrix hstack(const FpMatrix& a, const FpMatrix& b) {
  check_same_mod(a, b);
  if (a.rows() != b.rows()) throw DimensionMismatch("hstack: rows differ");
  Mat out(a.rows(), a.cols() + b.cols());
  out << a.raw(), b.raw();
  return FpMatrix(a.mod(), std::move(out));
}

FpMatrix vstack(const FpMatrix& a, const FpMatrix& b) {
  check_same_mod(a, b);
  if (a.cols() != b.cols()) throw DimensionMismatch("vstack: cols differ");
  Mat out(a.rows() + b.rows(), a.cols());
  out << a.raw(), b.raw();
  return FpMatrix(a.mod(), std::move(out));
}

RrefResult rref(const FpMatrix& a) {
  const Scalar p = a.mod();
  Mat m = a.raw();
  const Index rows = m.rows(), cols = m.cols();
  std::vector<Index> pivots;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index piv = -1;
    for (Index i = r; i < rows; ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) m.row(piv).swap(m.row(r));
    const Scalar inv = mod_inverse(m(r, c), p);
    for (Index j = c; j < cols; ++j) m(r, j) = m(r, j) * inv % p;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Scalar f = m(i, c);
      for (Index j = c; j < cols; ++j) {
        Scalar v = (m(i, j) - f * m(r, j)) % p;
        if (v < 0) v += p;
        m(i, j) = v;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  RrefResult res{FpMatrix(p, std::move(m)), r, std::move(pivots)};
  return res;
}

Index rank_of(const FpMatrix& a) { return rref(a).rank; }

std::optional<FpMatrix> solve(const FpMatrix& a, const FpMatrix& b) {
  check_same_mod(a, b);
  if (a.rows() != b.rows()) throw DimensionMismatch("solve: rhs rows differ");
  RrefResult r = rref(hstack(a, b));
  // Any pivot landing in the rhs block certifies inconsistency.
  for (Index pc : r.pivots)
    if (pc >= a.cols()) return std::nullopt;
  Mat x = Mat::Zero(a.cols(), b.cols());
  for (Index i = 0; i < static_cast<Index>(r.pivots.size()); ++i) {
    const Index pc = r.pivots[static_cast<size_t>(i)];
    for (Index j = 0; j < b.cols(); ++j) x(pc, j) = r.mat(i, a.cols() + j);
  }
  return FpMatrix(a.mod(), std::move(x));
}

FpMatrix nullspace(const FpMatrix& a) {
  const Scalar p = a.mod();
  RrefResult r = rref(a);
  std::vector<Index> free_cols;
  {
    size_t k = 0;
    for (Index c = 0; c < a.cols(); ++c) {
      if (k < r.pivots.size() && r.pivots[k] == c)
        ++k;
      else
        free_cols.push_back(c);
    }
  }
  Mat out = Mat::Zero(a.cols(), static_cast<Index>(free_cols.size()));
  for (Index k = 0; k < static_cast<Index>(free_cols.size()); ++k) {
    const Index fc = free_cols[static_cast<size_t>(k)];
    out(fc, k) = 1;
    for (Index i = 0; i < static_cast<Index>(r.pivots.size()); ++i) {
      const Scalar v = r.mat(i, fc);
      if (v != 0) out(r.pivots[static_cast<size_t>(i)], k) = p - v;
    }
  }
  return FpMatrix(p, std::move(out));
}

std::optional<FpMatrix> inverse(const FpMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("inverse: not square");
  auto x = solve(a, FpMatrix::identity(a.mod(), a.rows()));
  if (!x) return std::nullopt;
  if (rank_of(a) != a.rows()) return std::nullopt;
  return x;
}

FpMatrix canonical_basis(const FpMatrix& span_cols) {
  RrefResult r = rref(span_cols.transpose());
  Mat rows = r.mat.raw().topRows(r.rank);
  return FpMatrix(span_cols.mod(), rows.transpose());
}

bool same_space(const FpMatrix& a, const FpMatrix& b) {
  if (a.rows() != b.rows()) return false;
  return canonical_basis(a) == canonical_basis(b);
}

bool space_contains(const FpMatrix& space_cols, const FpMatrix& vec_cols) {
  if (vec_cols.cols() == 0) return true;
  if (space_cols.cols() == 0) return vec_cols.is_zero();
  return solve(space_cols, vec_cols).has_value();
}

FpMatrix space_sum(const FpMatrix& a, const FpMatrix& b) {
  return canonical_basis(hstack(a, b));
}

FpMatrix space_intersection(const FpMatrix& a, const FpMatrix& b) {
  // Kernel of [a | -b] pairs up coefficients that agree; read off the a part.
  if (a.cols() == 0 || b.cols() == 0)
    return FpMatrix::zero(a.mod(), a.rows(), 0);
  FpMatrix stacked = hstack(a, scale(-1, b));
  FpMatrix ker = nullspace(stacked);
  if (ker.cols() == 0) return FpMatrix::zero(a.mod(), a.rows(), 0);
  FpMatrix coeffs = ker.block(0, 0, a.cols(), ker.cols());
  return canonical_basis(a * coeffs);
}

QuotientSpace quotient_space(Index ambient_dim, const FpMatrix& sub_cols) {
  const Scalar p = sub_cols.mod();
  if (sub_cols.rows() != ambient_dim)
    throw DimensionMismatch("quotient_space: ambient dimension mismatch");
  RrefResult r = rref(sub_cols.transpose());
  std::vector<Index> free_coords;
  {
    size_t k = 0;
    for (Index c = 0; c < ambient_dim; ++c) {
      if (k < r.pivots.size() && r.pivots[k] == c)
        ++k;
      else
        free_coords.push_back(c);
    }
  }
  const Index q = static_cast<Index>(free_coords.size());
  // Reducing x modulo the subspace zeroes its pivot coordinates; what is
  // left lives on the free coordinates:  x_fc - sum_i x_{pc_i} rref(i, fc).
  Mat proj = Mat::Zero(q, ambient_dim);
  for (Index k = 0; k < q; ++k) proj(k, free_coords[static_cast<size_t>(k)]) = 1;
  for (Index i = 0; i < static_cast<Index>(r.pivots.size()); ++i) {
    const Index pc = r.pivots[static_cast<size_t>(i)];
    for (Index k = 0; k < q; ++k) {
      const Index fc = free_coords[static_cast<size_t>(k)];
      proj(k, pc) = (p - r.mat(i, fc)) % p;
    }
  }
  Mat section = Mat::Zero(ambient_dim, q);
  for (Index k = 0; k < q; ++k) section(free_coords[static_cast<size_t>(k)], k) = 1;
  QuotientSpace qs{FpMatrix(p, std::move(proj)), FpMatrix(p, std::move(section))};
  return qs;
}

std::uint64_t fnv1a(const std::vector<Scalar>& data, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (Scalar s : data) {
    auto u = static_cast<std::uint64_t>(s);
    for (int i = 0; i < 8; ++i) {
      h ^= (u >> (8 * i)) & 0xffu;
      h *= 1099511628211ull;
    }
  }
  return h;
}

}  // namespace gradext
