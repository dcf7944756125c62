#include "gradext/fp_poly.hpp"

namespace gradext {

namespace {

void trim(Poly& a) {
  while (!a.c.empty() && a.c.back() % a.p == 0) a.c.pop_back();
}

Scalar norm(Scalar v, Scalar p) {
  v %= p;
  if (v < 0) v += p;
  return v;
}

}  // namespace

Poly poly_from(Scalar p, std::vector<Scalar> coeffs) {
  Poly a{p, std::move(coeffs)};
  for (auto& v : a.c) v = norm(v, p);
  trim(a);
  return a;
}

Poly poly_x(Scalar p) { return poly_from(p, {0, 1}); }

Poly poly_const(Scalar p, Scalar v) { return poly_from(p, {v}); }

Poly poly_add(const Poly& a, const Poly& b) {
  std::vector<Scalar> c(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) c[i] += b.c[i];
  return poly_from(a.p, std::move(c));
}

Poly poly_sub(const Poly& a, const Poly& b) {
  std::vector<Scalar> c(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) c[i] -= b.c[i];
  return poly_from(a.p, std::move(c));
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly{a.p, {}};
  std::vector<Scalar> c(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j)
      c[i + j] = (c[i + j] + a.c[i] * b.c[j]) % a.p;
  return poly_from(a.p, std::move(c));
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error("poly division by zero");
  const Scalar p = a.p;
  std::vector<Scalar> rem = a.c;
  std::vector<Scalar> quo(
      a.c.size() >= b.c.size() ? a.c.size() - b.c.size() + 1 : 0, 0);
  const Scalar lead_inv = mod_inverse(b.c.back(), p);
  for (Index i = static_cast<Index>(rem.size()) - 1;
       i >= static_cast<Index>(b.c.size()) - 1; --i) {
    const Scalar coef = norm(rem[static_cast<size_t>(i)] * lead_inv, p);
    if (coef == 0) continue;
    const size_t shift = static_cast<size_t>(i) - (b.c.size() - 1);
    quo[shift] = coef;
    for (size_t j = 0; j < b.c.size(); ++j)
      rem[shift + j] = norm(rem[shift + j] - coef * b.c[j], p);
  }
  return {poly_from(p, std::move(quo)), poly_from(p, std::move(rem))};
}

Poly poly_mod(const Poly& a, const Poly& m) { return poly_divmod(a, m).second; }

Poly poly_monic(const Poly& a) {
  if (a.is_zero()) return a;
  const Scalar inv = mod_inverse(a.c.back(), a.p);
  std::vector<Scalar> c = a.c;
  for (auto& v : c) v = norm(v * inv, a.p);
  return poly_from(a.p, std::move(c));
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = poly_mod(x, y);
    x = y;
    y = r;
  }
  return poly_monic(x);
}

Poly poly_derivative(const Poly& a) {
  if (a.c.size() <= 1) return Poly{a.p, {}};
  std::vector<Scalar> c(a.c.size() - 1);
  for (size_t i = 1; i < a.c.size(); ++i)
    c[i - 1] = norm(static_cast<Scalar>(i) * a.c[i], a.p);
  return poly_from(a.p, std::move(c));
}

Poly poly_pow_mod(const Poly& base, Scalar exp, const Poly& m) {
  Poly r = poly_const(base.p, 1);
  Poly b = poly_mod(base, m);
  while (exp > 0) {
    if (exp & 1) r = poly_mod(poly_mul(r, b), m);
    b = poly_mod(poly_mul(b, b), m);
    exp >>= 1;
  }
  return r;
}

FpMatrix poly_eval_matrix(const Poly& a, const FpMatrix& f) {
  const Index n = f.rows();
  FpMatrix acc = FpMatrix::zero(f.mod(), n, n);
  FpMatrix pw = FpMatrix::identity(f.mod(), n);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] != 0) acc = acc + scale(a.c[i], pw);
    if (i + 1 < a.c.size()) pw = pw * f;
  }
  return acc;
}

Poly minimal_polynomial(const FpMatrix& f) {
  if (f.rows() != f.cols()) throw DimensionMismatch("min poly: not square");
  const Scalar p = f.mod();
  const Index n = f.rows();
  if (n == 0) return poly_const(p, 1);
  Poly m = poly_const(p, 1);
  for (Index seed = 0; seed < n; ++seed) {
    // Krylov chain from e_seed: first dependence gives the local min poly.
    FpMatrix chain = FpMatrix::zero(p, n, 0);
    FpMatrix v = FpMatrix::zero(p, n, 1);
    v.set(seed, 0, 1);
    std::vector<FpMatrix> iterates;
    while (true) {
      auto coeff = solve(chain, v);
      if (coeff && rank_of(chain) == chain.cols()) {
        std::vector<Scalar> c(static_cast<size_t>(chain.cols()) + 1, 0);
        for (Index i = 0; i < chain.cols(); ++i)
          c[static_cast<size_t>(i)] = norm(-(*coeff)(i, 0), p);
        c.back() = 1;
        Poly local = poly_from(p, std::move(c));
        Poly g = poly_gcd(m, local);
        m = poly_divmod(poly_mul(m, local), g).first;  // lcm
        break;
      }
      chain = hstack(chain, v);
      v = f * v;
    }
  }
  return poly_monic(m);
}

std::optional<std::pair<Poly, Poly>> coprime_split(const Poly& m_in) {
  const Scalar p = m_in.p;
  Poly m = poly_monic(m_in);
  if (m.deg() <= 1) return std::nullopt;
  auto split_by = [&](const Poly& g) -> std::optional<std::pair<Poly, Poly>> {
    if (g.is_zero() || g.deg() <= 0) return std::nullopt;
    // Strip every irreducible factor of g out of m, multiplicity and all;
    // what is left is coprime to the g-primary part.
    Poly rest = m;
    while (true) {
      Poly h = poly_gcd(rest, g);
      if (h.deg() <= 0) break;
      rest = poly_divmod(rest, h).first;
    }
    if (rest.deg() <= 0 || rest.deg() >= m.deg()) return std::nullopt;
    Poly primary = poly_divmod(m, rest).first;
    return std::make_pair(poly_monic(primary), poly_monic(rest));
  };

  // Linear factors first: cheap and catches the common eigenvalue splits.
  for (Scalar a = 0; a < p; ++a) {
    Poly lin = poly_from(p, {norm(-a, p), 1});
    Poly g = poly_gcd(m, lin);
    if (g.deg() == 1) {
      if (auto s = split_by(g)) return s;
    }
  }
  // Squarefree part, then distinct-degree separation on it.
  Poly d = poly_derivative(m);
  Poly sf = d.is_zero() ? m : poly_divmod(m, poly_gcd(m, d)).first;
  if (sf.deg() >= 2) {
    Poly x = poly_x(p);
    Poly frob = x;
    for (Index deg = 1; deg <= sf.deg(); ++deg) {
      frob = poly_pow_mod(frob, p, sf);
      Poly g = poly_gcd(sf, poly_sub(frob, x));
      if (g.deg() > 0 && g.deg() < m.deg()) {
        if (auto s = split_by(g)) return s;
      }
    }
  }
  return std::nullopt;
}

}  // namespace gradext
