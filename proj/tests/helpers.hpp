#pragma once

#include "gradext/algebra.hpp"

// Hand-built reference algebras used as oracles across test binaries.
namespace testref {

using namespace gradext;

// F_p[C_2]: basis {1, g}, g^2 = 1
inline AlgebraPtr cyclic2_algebra(Scalar p) {
  std::vector<StructureEntry> st = {
      {0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}};
  return Algebra::make(p, 2, {"1", "g"}, st, {1, 0});
}

// F_p[x]/x^2: basis {1, x}
inline AlgebraPtr dual_numbers(Scalar p) {
  std::vector<StructureEntry> st = {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}};
  return Algebra::make(p, 2, {"1", "x"}, st, {1, 0});
}

// M_2(F_p): basis e11, e12, e21, e22
inline AlgebraPtr mat2_algebra(Scalar p) {
  auto idx = [](Index a, Index b) { return 2 * a + b; };
  std::vector<StructureEntry> st;
  for (Index a = 0; a < 2; ++a)
    for (Index b = 0; b < 2; ++b)
      for (Index c = 0; c < 2; ++c)
        for (Index d = 0; d < 2; ++d)
          if (b == c) st.push_back({idx(a, b), idx(c, d), idx(a, d), 1});
  return Algebra::make(p, 4, {"e11", "e12", "e21", "e22"}, st, {1, 0, 0, 1});
}

// upper triangular 2x2: basis e11, e22, e12
inline AlgebraPtr triangular2(Scalar p) {
  std::vector<StructureEntry> st = {
      {0, 0, 0, 1}, {1, 1, 1, 1}, {0, 2, 2, 1}, {2, 1, 2, 1}};
  return Algebra::make(p, 3, {"e11", "e22", "e12"}, st, {1, 1, 0});
}

// F_p: one basis element
inline AlgebraPtr base_field(Scalar p) {
  return Algebra::make(p, 1, {"1"}, {{0, 0, 0, 1}}, {1});
}

}  // namespace testref
