#include "gradext/group.hpp"

namespace gradext {

GradeGroup GradeGroup::integers() {
  GradeGroup g;
  g.kind_ = Kind::Integers;
  return g;
}

GradeGroup GradeGroup::trivial() { return cyclic(1); }

GradeGroup GradeGroup::cyclic(Index n) {
  if (n < 1) throw ValidationError("cyclic group order must be >= 1");
  Mat t(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) t(i, j) = (i + j) % n;
  return from_table(std::move(t), 0);
}

GradeGroup GradeGroup::from_table(Mat table, Index identity) {
  const Index n = table.rows();
  if (table.cols() != n || n < 1)
    throw ValidationError("group table must be square and nonempty");
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (table(i, j) < 0 || table(i, j) >= n)
        throw ValidationError("group table entry out of range at (" +
                              std::to_string(i) + "," + std::to_string(j) + ")");
  if (identity < 0 || identity >= n)
    throw ValidationError("group identity index out of range");
  for (Index i = 0; i < n; ++i)
    if (table(identity, i) != i || table(i, identity) != i)
      throw ValidationError("claimed identity fails on element " +
                            std::to_string(i));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        if (table(table(i, j), k) != table(i, table(j, k)))
          throw ValidationError("group table not associative at (" +
                                std::to_string(i) + "," + std::to_string(j) +
                                "," + std::to_string(k) + ")");
  std::vector<Index> inv(static_cast<size_t>(n), -1);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j)
      if (table(i, j) == identity && table(j, i) == identity) {
        inv[static_cast<size_t>(i)] = j;
        break;
      }
    if (inv[static_cast<size_t>(i)] < 0)
      throw ValidationError("element " + std::to_string(i) + " has no inverse");
  }
  GradeGroup g;
  g.kind_ = Kind::Finite;
  g.order_ = n;
  g.table_ = std::move(table);
  g.id_ = identity;
  g.inv_ = std::move(inv);
  return g;
}

GradeGroup GradeGroup::product(const GradeGroup& a, const GradeGroup& b) {
  if (!a.is_finite() || !b.is_finite())
    throw ValidationError("product requires finite factors");
  const Index n = a.order_, m = b.order_;
  Mat t(n * m, n * m);
  for (Index i1 = 0; i1 < n; ++i1)
    for (Index j1 = 0; j1 < m; ++j1)
      for (Index i2 = 0; i2 < n; ++i2)
        for (Index j2 = 0; j2 < m; ++j2)
          t(i1 * m + j1, i2 * m + j2) =
              a.table_(i1, i2) * m + b.table_(j1, j2);
  return from_table(std::move(t), a.id_ * m + b.id_);
}

GElem GradeGroup::identity() const {
  return kind_ == Kind::Integers ? 0 : id_;
}

GElem GradeGroup::mul(GElem a, GElem b) const {
  if (kind_ == Kind::Integers) return a + b;
  if (!contains(a) || !contains(b))
    throw ValidationError("group element index out of range");
  return table_(a, b);
}

GElem GradeGroup::inv(GElem a) const {
  if (kind_ == Kind::Integers) return -a;
  if (!contains(a)) throw ValidationError("group element index out of range");
  return inv_[static_cast<size_t>(a)];
}

bool GradeGroup::contains(GElem a) const {
  if (kind_ == Kind::Integers) return true;
  return a >= 0 && a < order_;
}

bool GradeGroup::is_abelian() const {
  if (kind_ == Kind::Integers) return true;
  for (Index i = 0; i < order_; ++i)
    for (Index j = i + 1; j < order_; ++j)
      if (table_(i, j) != table_(j, i)) return false;
  return true;
}

std::vector<GElem> GradeGroup::elements() const {
  if (kind_ == Kind::Integers)
    throw UnboundedSupport("Z has no finite element list; supply a window");
  std::vector<GElem> out;
  for (Index i = 0; i < order_; ++i) out.push_back(i);
  return out;
}

bool GradeGroup::operator==(const GradeGroup& o) const {
  if (kind_ != o.kind_) return false;
  if (kind_ == Kind::Integers) return true;
  return order_ == o.order_ && id_ == o.id_ && table_ == o.table_;
}

}  // namespace gradext
