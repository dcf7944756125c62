#pragma once

#include <string>
#include <vector>

#include "gradext/fp.hpp"

namespace gradext {

// Group elements are indices into a finite Cayley table, or arbitrary
// integers when the grading group is Z.
using GElem = std::int64_t;

class GradeGroup {
 public:
  enum class Kind { Finite, Integers };

  static GradeGroup integers();
  static GradeGroup trivial();
  static GradeGroup cyclic(Index n);
  // Table entries t(i,j) = index of g_i * g_j.  Group laws are verified.
  static GradeGroup from_table(Mat table, Index identity);
  static GradeGroup product(const GradeGroup& a, const GradeGroup& b);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  Index order() const { return order_; }
  const Mat& table() const { return table_; }

  GElem identity() const;
  GElem mul(GElem a, GElem b) const;
  GElem inv(GElem a) const;
  bool contains(GElem a) const;
  bool is_abelian() const;
  std::vector<GElem> elements() const;  // finite groups only

  bool operator==(const GradeGroup& o) const;

 private:
  Kind kind_ = Kind::Integers;
  Index order_ = 0;
  Mat table_;
  Index id_ = 0;
  std::vector<Index> inv_;
};

}  // namespace gradext
