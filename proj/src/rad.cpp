#include "gradext/rad.hpp"

#include <vector>

#include "gradext/errors.hpp"

namespace gradext {

namespace {

Mat reduce_mod(Mat a, Scalar m) {
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) a(i, j) = ((a(i, j) % m) + m) % m;
  return a;
}

// Entries stay below m <= p * dim, so the int64 product a * b is exact:
// dim * m^2 is far under the overflow line at desk scale.
Mat mul_mod(const Mat& a, const Mat& b, Scalar m) {
  return reduce_mod(a * b, m);
}

Mat pow_mod(Mat base, Scalar e, Scalar m) {
  Mat acc = Mat::Identity(base.rows(), base.cols());
  while (e > 0) {
    if (e & 1) acc = mul_mod(acc, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return acc;
}

// Integer lift of the left multiplication matrix of the vector with the
// given coordinate column; the basis matrices already have entries in [0, p).
Mat lift_left(const Algebra& a, const FpMatrix& coords, Scalar m) {
  Mat acc = Mat::Zero(a.dim(), a.dim());
  for (Index i = 0; i < a.dim(); ++i) {
    Scalar c = coords(i, 0);
    if (c != 0) acc += c * a.left_mult_basis(i).raw();
  }
  return reduce_mod(acc, m);
}

}  // namespace

FpMatrix algebra_radical(const AlgebraPtr& aptr) {
  const Algebra& a = *aptr;
  const Scalar p = a.p();
  const Index n = a.dim();

  // Chain of subspaces, cut once per trace level until p^level covers dim.
  FpMatrix space = canonical_basis(FpMatrix::identity(p, n));
  Scalar pi = 1;  // p^i
  for (Index i = 0; pi <= n; ++i, pi *= p) {
    if (space.cols() == 0) break;
    const Scalar m = pi * p;  // traces live mod p^(i+1)
    const Index k = space.cols();
    std::vector<Mat> lifts;
    lifts.reserve(static_cast<std::size_t>(k));
    for (Index j = 0; j < k; ++j)
      lifts.push_back(lift_left(a, space.col(j), m));
    // constraint(row r, col c) applies "pair with basis vector r" to the
    // coordinates of the candidate in column c
    FpMatrix constraints = FpMatrix::zero(p, k, k);
    for (Index r = 0; r < k; ++r) {
      for (Index c = 0; c < k; ++c) {
        Mat prod = pow_mod(mul_mod(lifts[c], lifts[r], m), pi, m);
        Scalar t = prod.trace() % m;
        if (t % pi != 0)
          throw Error("radical chain: level trace not divisible by p^i");
        constraints.set(r, c, (t / pi) % p);
      }
    }
    space = canonical_basis(space * nullspace(constraints));
  }

  // Certify before returning: the span must be a two sided ideal ...
  for (Index i = 0; i < n; ++i) {
    if (space.cols() == 0) break;
    const FpMatrix& li = a.left_mult_basis(i);
    FpMatrix ri = a.right_mult(FpMatrix::identity(p, n).col(i));
    if (!space_contains(space, li * space) ||
        !space_contains(space, ri * space))
      throw Error("radical candidate is not a two sided ideal");
  }
  // ... and nilpotent.
  FpMatrix power = space;
  Index steps = 1;
  while (power.cols() > 0) {
    if (steps > n) throw Error("radical candidate is not nilpotent");
    FpMatrix next = FpMatrix::zero(p, n, 0);
    for (Index u = 0; u < power.cols(); ++u)
      next = hstack(next, a.left_mult(power.col(u)) * space);
    power = canonical_basis(next);
    ++steps;
  }
  return space;
}

bool is_semisimple(const AlgebraPtr& a) {
  return algebra_radical(a).cols() == 0;
}

std::vector<FpMatrix> radical_powers(const AlgebraPtr& a) {
  FpMatrix rad = algebra_radical(a);
  std::vector<FpMatrix> out;
  FpMatrix power = rad;
  while (power.cols() > 0) {
    out.push_back(power);
    FpMatrix next = FpMatrix::zero(a->p(), a->dim(), 0);
    for (Index u = 0; u < power.cols(); ++u)
      next = hstack(next, a->left_mult(power.col(u)) * rad);
    power = canonical_basis(next);
  }
  return out;
}

Index loewy_length(const AlgebraPtr& a) {
  return static_cast<Index>(radical_powers(a).size()) + 1;
}

}  // namespace gradext
