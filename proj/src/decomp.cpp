#include "gradext/decomp.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace gradext {

Index obj_dim(const Module& m) { return m.dim; }
Index obj_dim(const GradedModule& m) { return m.mod.dim; }
Scalar obj_p(const Module& m) { return m.alg->p(); }
Scalar obj_p(const GradedModule& m) { return m.mod.alg->p(); }
std::uint64_t obj_digest(const Module& m) { return m.digest(); }
std::uint64_t obj_digest(const GradedModule& m) { return m.digest(); }
std::vector<FpMatrix> obj_homs(const Module& a, const Module& b) {
  return hom_basis(a, b);
}
std::vector<FpMatrix> obj_homs(const GradedModule& a, const GradedModule& b) {
  return graded_hom_basis(a, b);
}
bool obj_is_morphism(const FpMatrix& f, const Module& a, const Module& b) {
  return is_morphism(f, a, b);
}
bool obj_is_morphism(const FpMatrix& f, const GradedModule& a,
                     const GradedModule& b) {
  return is_graded_morphism(f, a, b);
}
std::vector<Scalar> obj_invariants(const Module& m) { return {m.dim}; }
std::vector<Scalar> obj_invariants(const GradedModule& m) {
  std::map<GElem, Scalar> counts;
  for (GElem d : m.deg) counts[d]++;
  std::vector<Scalar> out{m.mod.dim};
  for (const auto& [d, c] : counts) {
    out.push_back(d);
    out.push_back(c);
  }
  return out;
}
ModuleSub obj_sub(const Module& m, const FpMatrix& span_cols) {
  auto s = submodule(m, span_cols);
  return {std::move(s.mod), std::move(s.incl)};
}
GradedModuleSub obj_sub(const GradedModule& m, const FpMatrix& span_cols) {
  auto s = graded_submodule(m, span_cols);
  return {std::move(s.mod), std::move(s.incl)};
}

namespace {

// deterministic endomorphism pool: basis, pairwise sums, pairwise products
std::vector<FpMatrix> endo_pool(const std::vector<FpMatrix>& basis) {
  std::vector<FpMatrix> pool;
  std::set<std::vector<Scalar>> seen;
  auto push = [&](const FpMatrix& f) {
    if (pool.size() >= 240) return;
    auto key = f.row_major();
    if (seen.insert(std::move(key)).second) pool.push_back(f);
  };
  for (const auto& f : basis) push(f);
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) push(basis[i] + basis[j]);
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < basis.size(); ++j) push(basis[i] * basis[j]);
  return pool;
}

// next element of F_p^n in odometer order; false when wrapped to zero
bool odometer(std::vector<Scalar>& digits, Scalar p) {
  for (auto& d : digits) {
    if (++d < p) return true;
    d = 0;
  }
  return false;
}

FpMatrix combine(Scalar p, Index n, const std::vector<FpMatrix>& basis,
                 const std::vector<Scalar>& coeff) {
  FpMatrix acc = FpMatrix::zero(p, n, n);
  for (size_t i = 0; i < basis.size(); ++i)
    if (coeff[i] != 0) acc = acc + scale(coeff[i], basis[i]);
  return acc;
}

}  // namespace

template <class Obj>
Decomposition<Obj> decompose(const Obj& m, double budget) {
  Decomposition<Obj> out;
  const Scalar p = obj_p(m);
  const Index total = obj_dim(m);
  if (total == 0) return out;

  struct Piece {
    Obj part;
    FpMatrix emb;
    FpMatrix proj;
  };
  std::vector<Piece> work;
  work.push_back({m, FpMatrix::identity(p, total), FpMatrix::identity(p, total)});
  std::vector<Piece> leaves;

  auto split_piece = [&](Piece& x, const FpMatrix& k1, const FpMatrix& k2) {
    const Index d = obj_dim(x.part);
    auto s1 = obj_sub(x.part, k1);
    auto s2 = obj_sub(x.part, k2);
    FpMatrix change = hstack(s1.incl, s2.incl);
    auto inv = inverse(change);
    if (!inv) throw Error("decomposition split is not a direct sum");
    const Index d1 = s1.incl.cols();
    Piece p1{std::move(s1.part), x.emb * s1.incl,
             inv->block(0, 0, d1, d) * x.proj};
    Piece p2{std::move(s2.part), x.emb * s2.incl,
             inv->block(d1, 0, d - d1, d) * x.proj};
    work.push_back(std::move(p1));
    work.push_back(std::move(p2));
  };

  while (!work.empty()) {
    Piece x = std::move(work.back());
    work.pop_back();
    const Index d = obj_dim(x.part);
    if (d == 0) continue;
    auto homs = obj_homs(x.part, x.part);
    auto pool = endo_pool(homs);

    bool split = false;
    for (const auto& f : pool) {
      Poly mp = minimal_polynomial(f);
      auto fac = coprime_split(mp);
      if (!fac) continue;
      FpMatrix k1 = nullspace(poly_eval_matrix(fac->first, f));
      FpMatrix k2 = nullspace(poly_eval_matrix(fac->second, f));
      if (k1.cols() == 0 || k2.cols() == 0 || k1.cols() + k2.cols() != d)
        throw Error("coprime factor split failed to cover the module");
      split_piece(x, k1, k2);
      split = true;
      break;
    }
    if (split) continue;

    // every pool element has primary minimal polynomial; certify by scanning
    // End for a nontrivial idempotent
    const double card = std::pow(static_cast<double>(p),
                                 static_cast<double>(homs.size()));
    if (card > budget) {
      out.all_certified = false;
      out.notes.push_back("leaf of dimension " + std::to_string(d) +
                          " left uncertified: |End| = p^" +
                          std::to_string(homs.size()) + " exceeds budget");
      leaves.push_back(std::move(x));
      continue;
    }
    FpMatrix id = FpMatrix::identity(p, d);
    std::vector<Scalar> coeff(homs.size(), 0);
    bool found = false;
    while (odometer(coeff, p)) {
      FpMatrix e = combine(p, d, homs, coeff);
      if (e.is_zero() || e == id) continue;
      if (e * e == e) {
        FpMatrix k1 = canonical_basis(e);          // image
        FpMatrix k2 = nullspace(e);
        split_piece(x, k1, k2);
        found = true;
        break;
      }
    }
    if (!found) leaves.push_back(std::move(x));
  }

  std::sort(leaves.begin(), leaves.end(), [](const Piece& a, const Piece& b) {
    const Index da = obj_dim(a.part), db = obj_dim(b.part);
    if (da != db) return da < db;
    return obj_digest(a.part) < obj_digest(b.part);
  });
  FpMatrix check = FpMatrix::zero(p, total, total);
  for (auto& l : leaves) {
    check = check + l.emb * l.proj;
    out.parts.push_back({std::move(l.part), std::move(l.emb), std::move(l.proj)});
  }
  if (!(check == FpMatrix::identity(p, total)))
    throw Error("decomposition projectors do not sum to the identity");
  return out;
}

namespace {

// invertible element of Hom(a, b): basis elements first, then the whole span
template <class Obj>
IsoResult<Obj> leaf_iso(const Obj& a, const Obj& b, double budget) {
  IsoResult<Obj> r;
  if (obj_dim(a) != obj_dim(b) || obj_invariants(a) != obj_invariants(b)) {
    r.status = Tri::No;
    return r;
  }
  auto homs = obj_homs(a, b);
  if (homs.empty()) {
    r.status = Tri::No;
    return r;
  }
  for (const auto& f : homs)
    if (inverse(f)) {
      r.status = Tri::Yes;
      r.witness = f;
      return r;
    }
  const Scalar p = obj_p(a);
  const double card = std::pow(static_cast<double>(p),
                               static_cast<double>(homs.size()));
  if (card > budget) {
    r.status = Tri::Unknown;
    r.note = "iso scan over p^" + std::to_string(homs.size()) +
             " morphisms exceeds budget";
    return r;
  }
  std::vector<Scalar> coeff(homs.size(), 0);
  while (odometer(coeff, p)) {
    FpMatrix f = combine(p, obj_dim(b), homs, coeff);
    // rectangular-safe: dims match here, combine builds square over dim(b)
    if (inverse(f)) {
      r.status = Tri::Yes;
      r.witness = f;
      return r;
    }
  }
  r.status = Tri::No;
  return r;
}

}  // namespace

template <class Obj>
IsoResult<Obj> are_isomorphic(const Obj& a, const Obj& b, double budget) {
  IsoResult<Obj> r;
  if (obj_invariants(a) != obj_invariants(b)) {
    r.status = Tri::No;
    return r;
  }
  if (obj_digest(a) == obj_digest(b)) {
    r.status = Tri::Yes;
    r.witness = FpMatrix::identity(obj_p(a), obj_dim(a));
    return r;
  }
  if (obj_homs(a, a).size() != obj_homs(b, b).size() ||
      obj_homs(a, b).size() != obj_homs(b, a).size()) {
    r.status = Tri::No;
    return r;
  }

  auto da = decompose(a, budget);
  auto db = decompose(b, budget);
  const bool leaves_certified = da.all_certified && db.all_certified;

  if (da.parts.size() == db.parts.size()) {
    std::vector<bool> used(db.parts.size(), false);
    std::vector<std::pair<size_t, FpMatrix>> matches;
    bool any_unknown = false;
    for (const auto& pa : da.parts) {
      bool matched = false;
      for (size_t j = 0; j < db.parts.size(); ++j) {
        if (used[j]) continue;
        auto li = leaf_iso(pa.part, db.parts[j].part, budget);
        if (li.status == Tri::Yes) {
          used[j] = true;
          matches.emplace_back(j, *li.witness);
          matched = true;
          break;
        }
        if (li.status == Tri::Unknown) any_unknown = true;
      }
      if (!matched) {
        if (any_unknown || !leaves_certified) {
          r.status = Tri::Unknown;
          r.note = "decomposition matching hit the scan budget";
          return r;
        }
        r.status = Tri::No;
        return r;
      }
    }
    // assemble the global witness
    const Scalar p = obj_p(a);
    FpMatrix f = FpMatrix::zero(p, obj_dim(b), obj_dim(a));
    for (size_t i = 0; i < da.parts.size(); ++i)
      f = f + db.parts[matches[i].first].emb * matches[i].second *
                  da.parts[i].proj;
    if (!inverse(f) || !obj_is_morphism(f, a, b))
      throw Error("assembled isomorphism failed verification");
    r.status = Tri::Yes;
    r.witness = f;
    return r;
  }

  if (!leaves_certified) {
    r.status = Tri::Unknown;
    r.note = "part counts differ but some leaves are uncertified";
    return r;
  }
  r.status = Tri::No;
  return r;
}

template Decomposition<Module> decompose<Module>(const Module&, double);
template Decomposition<GradedModule> decompose<GradedModule>(const GradedModule&,
                                                             double);
template IsoResult<Module> are_isomorphic<Module>(const Module&, const Module&,
                                                  double);
template IsoResult<GradedModule> are_isomorphic<GradedModule>(
    const GradedModule&, const GradedModule&, double);

}  // namespace gradext
