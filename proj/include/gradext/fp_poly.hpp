#pragma once

#include <vector>

#include "gradext/fp.hpp"

namespace gradext {

// Polynomials over F_p as coefficient vectors, lowest degree first, trimmed.
// Only what the splitting and radical machinery needs.
struct Poly {
  Scalar p;
  std::vector<Scalar> c;

  Index deg() const { return static_cast<Index>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
};

Poly poly_from(Scalar p, std::vector<Scalar> coeffs);
Poly poly_x(Scalar p);
Poly poly_const(Scalar p, Scalar v);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& m);
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_monic(const Poly& a);
Poly poly_gcd(const Poly& a, const Poly& b);
Poly poly_derivative(const Poly& a);
Poly poly_pow_mod(const Poly& base, Scalar exp, const Poly& m);
FpMatrix poly_eval_matrix(const Poly& a, const FpMatrix& f);

// Minimal polynomial of a square matrix: lcm of the local minimal
// polynomials of the standard basis vectors (Krylov chains).
Poly minimal_polynomial(const FpMatrix& f);

// A nontrivial coprime factorization m = g * h if one can be found
// deterministically (linear root trials plus distinct-degree separation).
// Empty optional means m looked like a power of a single irreducible.
std::optional<std::pair<Poly, Poly>> coprime_split(const Poly& m);

}  // namespace gradext
