#pragma once

#include "gradext/algebra.hpp"

namespace gradext {

// Columns spanning the Jacobson radical (largest nilpotent ideal).
//
// Char-p trace chain: lift the regular representation to integers and cut
// down the space step by step,
//   S_0 = A,  S_{i+1} = { a in S_i : Tr((L_a L_x)^{p^i}) / p^i = 0 (mod p)
//                         for every x in S_i },
// with traces taken mod p^{i+1}; the map is F_p-linear on S_i and the chain
// reaches the radical once p^i covers dim A.  The result is certified before
// returning: it is a two sided ideal and nilpotent, so it sits inside the
// radical; the chain construction gives the reverse inclusion.
FpMatrix algebra_radical(const AlgebraPtr& a);

bool is_semisimple(const AlgebraPtr& a);

// J^1, J^2, ... down to the last nonzero power, each as canonical columns.
std::vector<FpMatrix> radical_powers(const AlgebraPtr& a);

// Smallest k with J^k = 0 (1 for semisimple algebras).
Index loewy_length(const AlgebraPtr& a);

}  // namespace gradext
