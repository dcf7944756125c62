#include "gradext/build.hpp"

#include <algorithm>
#include <map>

namespace gradext {

GradedAlgebraPtr group_algebra(Scalar p, const GradeGroup& g) {
  if (!g.is_finite())
    throw ValidationError("group algebra needs a finite group");
  const Index n = g.order();
  std::vector<StructureEntry> st;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) st.push_back({i, j, g.mul(i, j), 1});
  std::vector<Scalar> unit(static_cast<size_t>(n), 0);
  unit[static_cast<size_t>(g.identity())] = 1;
  std::vector<std::string> names;
  for (Index i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
  auto alg = Algebra::make(p, n, std::move(names), st, std::move(unit));
  return GradedAlgebra::make(alg, g, g.elements());
}

GradedAlgebraPtr skew_group_algebra(const AlgebraPtr& a, const GradeGroup& g,
                                    const std::vector<FpMatrix>& action) {
  if (!g.is_finite())
    throw ValidationError("skew group algebra needs a finite group");
  const Index n = g.order();
  const Index d = a->dim();
  const Scalar p = a->p();
  if (static_cast<Index>(action.size()) != n)
    throw DimensionMismatch("one action matrix per group element required");
  for (GElem s : g.elements()) {
    const FpMatrix& f = action[static_cast<size_t>(s)];
    if (f.rows() != d || f.cols() != d || f.mod() != p)
      throw DimensionMismatch("action matrix shape or modulus is wrong");
    if (!inverse(f).has_value())
      throw NotAutomorphism("action of element " + std::to_string(s) +
                            " is not invertible");
    if (!(f * a->unit() == a->unit()))
      throw NotAutomorphism("action of element " + std::to_string(s) +
                            " moves the unit");
    for (Index i = 0; i < d; ++i)
      for (Index j = 0; j < d; ++j) {
        FpMatrix ei = FpMatrix::zero(p, d, 1);
        ei.set(i, 0, 1);
        FpMatrix ej = FpMatrix::zero(p, d, 1);
        ej.set(j, 0, 1);
        if (!(f * a->mul(ei, ej) == a->mul(f * ei, f * ej)))
          throw NotAutomorphism("action of element " + std::to_string(s) +
                                " is not multiplicative");
      }
  }
  if (!(action[static_cast<size_t>(g.identity())] == FpMatrix::identity(p, d)))
    throw ValidationError("identity element must act trivially");
  for (GElem s : g.elements())
    for (GElem t : g.elements())
      if (!(action[static_cast<size_t>(s)] * action[static_cast<size_t>(t)] ==
            action[static_cast<size_t>(g.mul(s, t))]))
        throw ValidationError("action is not a group homomorphism at (" +
                              std::to_string(s) + "," + std::to_string(t) + ")");

  std::vector<StructureEntry> st;
  for (GElem s : g.elements())
    for (Index i = 0; i < d; ++i)
      for (GElem t : g.elements())
        for (Index j = 0; j < d; ++j) {
          FpMatrix ej = FpMatrix::zero(p, d, 1);
          ej.set(j, 0, 1);
          FpMatrix z = a->left_mult_basis(i) * (action[static_cast<size_t>(s)] * ej);
          const GElem u = g.mul(s, t);
          for (Index k = 0; k < d; ++k)
            if (z(k, 0) != 0)
              st.push_back({s * d + i, t * d + j, u * d + k, z(k, 0)});
        }
  std::vector<Scalar> unit(static_cast<size_t>(n * d), 0);
  for (Index k = 0; k < d; ++k)
    unit[static_cast<size_t>(g.identity() * d + k)] = a->unit()(k, 0);
  std::vector<std::string> names;
  for (GElem s : g.elements())
    for (Index i = 0; i < d; ++i)
      names.push_back(a->basis_names()[static_cast<size_t>(i)] + "|" +
                      std::to_string(s));
  auto alg = Algebra::make(p, n * d, std::move(names), st, std::move(unit));
  std::vector<GElem> deg;
  for (GElem s : g.elements())
    for (Index i = 0; i < d; ++i) deg.push_back(s);
  return GradedAlgebra::make(alg, g, std::move(deg));
}

GradedAlgebraPtr morita_context_ring(const MoritaContextData& d) {
  const Scalar p = d.a->p();
  if (d.b->p() != p) throw ModulusMismatch("corner algebras over different fields");
  const Index da = d.a->dim(), db = d.b->dim(), dm = d.m_dim, dn = d.n_dim;
  auto want = [&](const std::vector<FpMatrix>& v, Index count, Index sz,
                  const char* what) {
    if (static_cast<Index>(v.size()) != count)
      throw DimensionMismatch(std::string(what) + ": wrong matrix count");
    for (const auto& m : v)
      if (m.rows() != sz || m.cols() != sz || m.mod() != p)
        throw DimensionMismatch(std::string(what) + ": wrong matrix shape");
  };
  want(d.a_on_m, da, dm, "a_on_m");
  want(d.m_from_b, db, dm, "m_from_b");
  want(d.b_on_n, db, dn, "b_on_n");
  want(d.n_from_a, da, dn, "n_from_a");
  if (static_cast<Index>(d.phi.size()) != dm ||
      (dm > 0 && static_cast<Index>(d.phi[0].size()) != dn))
    throw DimensionMismatch("phi must be m_dim x n_dim");
  if (static_cast<Index>(d.psi.size()) != dn ||
      (dn > 0 && static_cast<Index>(d.psi[0].size()) != dm))
    throw DimensionMismatch("psi must be n_dim x m_dim");

  // layout: A then B then M then N
  const Index oa = 0, ob = da, om = da + db, on = da + db + dm;
  const Index total = da + db + dm + dn;
  std::vector<StructureEntry> st;
  auto add_col = [&](Index i, Index j, Index off, const FpMatrix& col) {
    for (Index k = 0; k < col.rows(); ++k)
      if (col(k, 0) != 0) st.push_back({i, j, off + k, col(k, 0)});
  };
  auto basis_col = [&](Index dimn, Index j) {
    FpMatrix e = FpMatrix::zero(p, dimn, 1);
    e.set(j, 0, 1);
    return e;
  };
  for (Index i = 0; i < da; ++i)
    for (Index j = 0; j < da; ++j)
      add_col(oa + i, oa + j, oa, d.a->left_mult_basis(i) * basis_col(da, j));
  for (Index i = 0; i < db; ++i)
    for (Index j = 0; j < db; ++j)
      add_col(ob + i, ob + j, ob, d.b->left_mult_basis(i) * basis_col(db, j));
  for (Index i = 0; i < da; ++i)
    for (Index j = 0; j < dm; ++j)
      add_col(oa + i, om + j, om, d.a_on_m[static_cast<size_t>(i)] * basis_col(dm, j));
  for (Index j = 0; j < dm; ++j)
    for (Index i = 0; i < db; ++i)
      add_col(om + j, ob + i, om, d.m_from_b[static_cast<size_t>(i)] * basis_col(dm, j));
  for (Index i = 0; i < db; ++i)
    for (Index j = 0; j < dn; ++j)
      add_col(ob + i, on + j, on, d.b_on_n[static_cast<size_t>(i)] * basis_col(dn, j));
  for (Index j = 0; j < dn; ++j)
    for (Index i = 0; i < da; ++i)
      add_col(on + j, oa + i, on, d.n_from_a[static_cast<size_t>(i)] * basis_col(dn, j));
  for (Index i = 0; i < dm; ++i)
    for (Index j = 0; j < dn; ++j)
      add_col(om + i, on + j, oa, d.phi[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  for (Index i = 0; i < dn; ++i)
    for (Index j = 0; j < dm; ++j)
      add_col(on + i, om + j, ob, d.psi[static_cast<size_t>(i)][static_cast<size_t>(j)]);

  std::vector<Scalar> unit(static_cast<size_t>(total), 0);
  for (Index k = 0; k < da; ++k) unit[static_cast<size_t>(oa + k)] = d.a->unit()(k, 0);
  for (Index k = 0; k < db; ++k) unit[static_cast<size_t>(ob + k)] = d.b->unit()(k, 0);
  std::vector<std::string> names;
  for (Index k = 0; k < da; ++k) names.push_back("a:" + d.a->basis_names()[static_cast<size_t>(k)]);
  for (Index k = 0; k < db; ++k) names.push_back("b:" + d.b->basis_names()[static_cast<size_t>(k)]);
  for (Index k = 0; k < dm; ++k) names.push_back("m" + std::to_string(k));
  for (Index k = 0; k < dn; ++k) names.push_back("n" + std::to_string(k));

  AlgebraPtr alg;
  try {
    alg = Algebra::make(p, total, std::move(names), st, std::move(unit));
  } catch (const ValidationError& e) {
    throw ContextAxiomViolation(std::string("context ring axioms fail: ") + e.what());
  }
  std::vector<GElem> deg(static_cast<size_t>(total), 0);
  for (Index k = 0; k < dm; ++k) deg[static_cast<size_t>(om + k)] = 1;
  for (Index k = 0; k < dn; ++k) deg[static_cast<size_t>(on + k)] = -1;
  return GradedAlgebra::make(alg, GradeGroup::integers(), std::move(deg));
}

CornerAlgebra corner_algebra(const AlgebraPtr& a, const FpMatrix& w) {
  const Scalar p = a->p();
  const Index n = a->dim();
  if (w.rows() != n || w.cols() != 1 || w.mod() != p)
    throw DimensionMismatch("idempotent must be a coordinate column");
  if (!(a->mul(w, w) == w)) throw NotIdempotent("w * w != w");
  FpMatrix pinch = a->left_mult(w) * a->right_mult(w);  // x -> w x w
  FpMatrix incl = canonical_basis(pinch);
  const Index d = incl.cols();
  if (d == 0) throw ValidationError("corner of the zero idempotent is empty");
  auto coords = solve(incl, pinch);
  if (!coords) throw Error("corner projection solve failed unexpectedly");
  std::vector<StructureEntry> st;
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      FpMatrix prod = a->mul(incl.col(i), incl.col(j));
      auto c = solve(incl, prod);
      if (!c) throw Error("corner is not closed under product");
      for (Index k = 0; k < d; ++k)
        if ((*c)(k, 0) != 0) st.push_back({i, j, k, (*c)(k, 0)});
    }
  auto wc = solve(incl, w);
  if (!wc) throw Error("idempotent escapes its own corner");
  std::vector<Scalar> unit;
  for (Index k = 0; k < d; ++k) unit.push_back((*wc)(k, 0));
  CornerAlgebra out;
  out.alg = Algebra::make(p, d, {}, st, std::move(unit));
  out.incl = incl;
  out.proj = *coords;
  return out;
}

namespace {

struct Path {
  Index src, dst;
  std::vector<Index> arrows;
};

}  // namespace

GradedAlgebraPtr path_algebra_quotient(Scalar p, Index n_vertices,
                                       const std::vector<Arrow>& arrows,
                                       const std::vector<PathRelation>& relations,
                                       Index max_len, double budget) {
  if (n_vertices < 1) throw ValidationError("need at least one vertex");
  for (const auto& ar : arrows)
    if (ar.src < 0 || ar.src >= n_vertices || ar.dst < 0 || ar.dst >= n_vertices)
      throw ValidationError("arrow endpoint out of range");

  auto trace = [&](const std::vector<Index>& seq) -> std::optional<std::pair<Index, Index>> {
    if (seq.empty()) return std::nullopt;
    Index at = arrows[static_cast<size_t>(seq[0])].src;
    const Index start = at;
    for (Index ai : seq) {
      if (ai < 0 || ai >= static_cast<Index>(arrows.size()))
        throw ValidationError("relation uses an unknown arrow");
      if (arrows[static_cast<size_t>(ai)].src != at) return std::nullopt;
      at = arrows[static_cast<size_t>(ai)].dst;
    }
    return std::make_pair(start, at);
  };

  // relations: parallel terms, one common length >= 2
  for (const auto& r : relations) {
    if (r.terms.empty()) throw NotAdmissible("empty relation");
    const size_t len = r.terms[0].second.size();
    if (len < 2)
      throw NotAdmissible("relation terms must have length at least 2");
    auto ends = trace(r.terms[0].second);
    if (!ends) throw NotAdmissible("relation term is not a composable path");
    for (const auto& [c, seq] : r.terms) {
      if (seq.size() != len)
        throw NotAdmissible(
            "relation mixes path lengths; only one length per relation is supported");
      auto e = trace(seq);
      if (!e) throw NotAdmissible("relation term is not a composable path");
      if (*e != *ends) throw NotAdmissible("relation terms are not parallel");
    }
  }

  // enumerate paths level by level
  std::vector<std::vector<Path>> levels;
  std::vector<std::map<std::vector<Index>, Index>> index_at;  // arrows -> pos in level
  levels.emplace_back();
  index_at.emplace_back();
  for (Index v = 0; v < n_vertices; ++v)
    levels[0].push_back({v, v, {}});
  double total = static_cast<double>(n_vertices);

  std::vector<RrefResult> ideal_rref;  // per level
  {
    FpMatrix empty = FpMatrix::zero(p, 0, static_cast<Index>(levels[0].size()));
    ideal_rref.push_back(rref(empty));
  }

  Index kill_level = -1;  // first level with every path in the ideal
  Index last_level = 0;

  for (Index n = 1; n <= max_len + 1; ++n) {
    std::vector<Path> lev;
    std::map<std::vector<Index>, Index> idx;
    for (const auto& pr : levels[static_cast<size_t>(n - 1)])
      for (Index ai = 0; ai < static_cast<Index>(arrows.size()); ++ai)
        if (arrows[static_cast<size_t>(ai)].src == pr.dst) {
          Path np{pr.src, arrows[static_cast<size_t>(ai)].dst, pr.arrows};
          np.arrows.push_back(ai);
          idx[np.arrows] = static_cast<Index>(lev.size());
          lev.push_back(std::move(np));
        }
    total += static_cast<double>(lev.size());
    if (total > budget)
      throw BudgetExceeded("path enumeration", total, budget);
    if (lev.empty()) {
      last_level = n - 1;
      break;
    }
    if (n > max_len)
      throw NotAdmissible(
          "paths survive past the length cap; the quotient is not visibly finite dimensional");

    // ideal component at this level: u r v with len(u)+len(r)+len(v) = n
    const Index width = static_cast<Index>(lev.size());
    FpMatrix gens = FpMatrix::zero(p, 0, width);
    for (const auto& r : relations) {
      const Index lr = static_cast<Index>(r.terms[0].second.size());
      auto ends = trace(r.terms[0].second);
      for (Index a = 0; a + lr <= n; ++a) {
        const Index b = n - lr - a;
        for (const auto& u : levels[static_cast<size_t>(a)]) {
          if (u.dst != ends->first) continue;
          for (const auto& v : levels[static_cast<size_t>(b)]) {
            if (v.src != ends->second) continue;
            Mat row = Mat::Zero(1, width);
            for (const auto& [c, seq] : r.terms) {
              std::vector<Index> full = u.arrows;
              full.insert(full.end(), seq.begin(), seq.end());
              full.insert(full.end(), v.arrows.begin(), v.arrows.end());
              row(0, idx.at(full)) += c;
            }
            gens = vstack(gens, FpMatrix(p, row));
          }
        }
      }
    }
    auto rr = rref(gens);
    levels.push_back(std::move(lev));
    index_at.push_back(std::move(idx));
    ideal_rref.push_back(rr);
    last_level = n;
    if (rr.rank == width) {
      kill_level = n;
      break;
    }
  }

  const Index top = (kill_level >= 0) ? kill_level - 1 : last_level;

  // quotient basis: non-pivot paths per level
  struct BasisPath {
    Index level, pos;  // position within level
  };
  std::vector<BasisPath> basis;
  std::vector<std::vector<Index>> level_to_basis;  // per level: pos -> basis idx or -1
  for (Index n = 0; n <= top; ++n) {
    const auto& rr = ideal_rref[static_cast<size_t>(n)];
    std::vector<bool> pivot(levels[static_cast<size_t>(n)].size(), false);
    for (Index c : rr.pivots) pivot[static_cast<size_t>(c)] = true;
    std::vector<Index> row(levels[static_cast<size_t>(n)].size(), -1);
    for (Index c = 0; c < static_cast<Index>(pivot.size()); ++c)
      if (!pivot[static_cast<size_t>(c)]) {
        row[static_cast<size_t>(c)] = static_cast<Index>(basis.size());
        basis.push_back({n, c});
      }
    level_to_basis.push_back(std::move(row));
  }
  const Index dim = static_cast<Index>(basis.size());

  // reduce the standard vector of a path to quotient coordinates
  auto reduce_path = [&](Index level, Index pos, std::vector<std::pair<Index, Scalar>>& out) {
    const auto& rr = ideal_rref[static_cast<size_t>(level)];
    const Index width = static_cast<Index>(levels[static_cast<size_t>(level)].size());
    Mat x = Mat::Zero(1, width);
    x(0, pos) = 1;
    FpMatrix v(p, x);
    for (Index r = 0; r < rr.rank; ++r) {
      const Scalar c = v(0, rr.pivots[static_cast<size_t>(r)]);
      if (c != 0)
        v = v - scale(c, rr.mat.block(r, 0, 1, width));
    }
    for (Index c = 0; c < width; ++c)
      if (v(0, c) != 0)
        out.emplace_back(level_to_basis[static_cast<size_t>(level)][static_cast<size_t>(c)],
                         v(0, c));
  };

  std::vector<StructureEntry> st;
  for (Index i = 0; i < dim; ++i)
    for (Index j = 0; j < dim; ++j) {
      const auto& bp = basis[static_cast<size_t>(i)];
      const auto& bq = basis[static_cast<size_t>(j)];
      const Path& P = levels[static_cast<size_t>(bp.level)][static_cast<size_t>(bp.pos)];
      const Path& Q = levels[static_cast<size_t>(bq.level)][static_cast<size_t>(bq.pos)];
      if (P.dst != Q.src) continue;
      const Index n = bp.level + bq.level;
      if (kill_level >= 0 && n >= kill_level) continue;
      if (n > top) continue;  // acyclic case: no path that long exists
      std::vector<Index> full = P.arrows;
      full.insert(full.end(), Q.arrows.begin(), Q.arrows.end());
      Index pos;
      if (n == 0)
        pos = P.src;  // both trivial at the same vertex
      else {
        auto it = index_at[static_cast<size_t>(n)].find(full);
        if (it == index_at[static_cast<size_t>(n)].end()) continue;
        pos = it->second;
      }
      std::vector<std::pair<Index, Scalar>> coords;
      reduce_path(n, pos, coords);
      for (const auto& [k, c] : coords) st.push_back({i, j, k, c});
    }

  std::vector<Scalar> unit(static_cast<size_t>(dim), 0);
  std::vector<std::string> names;
  std::vector<GElem> deg;
  for (Index bi = 0; bi < dim; ++bi) {
    const auto& bp = basis[static_cast<size_t>(bi)];
    const Path& P = levels[static_cast<size_t>(bp.level)][static_cast<size_t>(bp.pos)];
    if (bp.level == 0) {
      unit[static_cast<size_t>(bi)] = 1;
      names.push_back("e" + std::to_string(P.src));
    } else {
      std::string nm;
      for (Index ai : P.arrows) nm += arrows[static_cast<size_t>(ai)].name;
      names.push_back(nm);
    }
    deg.push_back(bp.level);
  }
  auto alg = Algebra::make(p, dim, std::move(names), st, std::move(unit));
  return GradedAlgebra::make(alg, GradeGroup::integers(), std::move(deg));
}

AlgebraPtr enveloping_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  const Scalar p = a->p();
  if (b->p() != p) throw ModulusMismatch("tensor factors over different fields");
  const Index da = a->dim(), db = b->dim();
  std::vector<StructureEntry> st;
  for (Index i = 0; i < da; ++i)
    for (Index j = 0; j < db; ++j) {
      FpMatrix ej = FpMatrix::zero(p, db, 1);
      ej.set(j, 0, 1);
      FpMatrix l = kron(a->left_mult_basis(i), b->right_mult(ej));
      for (Index col = 0; col < da * db; ++col)
        for (Index row = 0; row < da * db; ++row)
          if (l(row, col) != 0)
            st.push_back({i * db + j, col, row, l(row, col)});
    }
  std::vector<Scalar> unit;
  for (Index i = 0; i < da; ++i)
    for (Index j = 0; j < db; ++j)
      unit.push_back(a->unit()(i, 0) * b->unit()(j, 0) % p);
  std::vector<std::string> names;
  for (Index i = 0; i < da; ++i)
    for (Index j = 0; j < db; ++j)
      names.push_back(a->basis_names()[static_cast<size_t>(i)] + "(x)" +
                      b->basis_names()[static_cast<size_t>(j)]);
  return Algebra::make(p, da * db, std::move(names), st, std::move(unit));
}

GradedAlgebraPtr graded_enveloping_algebra(const GradedAlgebraPtr& a,
                                           const GradedAlgebraPtr& b) {
  if (!(a->group == b->group))
    throw ValidationError("tensor factors graded by different groups");
  if (!a->group.is_abelian())
    throw ValidationError("graded tensor product needs an abelian grading group");
  auto alg = enveloping_algebra(a->alg, b->alg);
  std::vector<GElem> deg;
  for (Index i = 0; i < a->alg->dim(); ++i)
    for (Index j = 0; j < b->alg->dim(); ++j)
      deg.push_back(a->group.mul(a->deg[static_cast<size_t>(i)],
                                 b->deg[static_cast<size_t>(j)]));
  return GradedAlgebra::make(alg, a->group, std::move(deg));
}

AlgebraPtr matrix_algebra(const AlgebraPtr& a, Index n) {
  if (n < 1) throw ValidationError("matrix size must be >= 1");
  const Scalar p = a->p();
  const Index d = a->dim();
  auto pos = [&](Index r, Index c, Index i) { return (r * n + c) * d + i; };
  std::vector<StructureEntry> st;
  for (Index r = 0; r < n; ++r)
    for (Index c = 0; c < n; ++c)
      for (Index i = 0; i < d; ++i)
        for (Index c2 = 0; c2 < n; ++c2)
          for (Index j = 0; j < d; ++j) {
            const FpMatrix& li = a->left_mult_basis(i);
            for (Index k = 0; k < d; ++k)
              if (li(k, j) != 0)
                st.push_back({pos(r, c, i), pos(c, c2, j), pos(r, c2, k), li(k, j)});
          }
  std::vector<Scalar> unit(static_cast<size_t>(n * n * d), 0);
  for (Index r = 0; r < n; ++r)
    for (Index i = 0; i < d; ++i)
      unit[static_cast<size_t>(pos(r, r, i))] = a->unit()(i, 0);
  std::vector<std::string> names;
  for (Index r = 0; r < n; ++r)
    for (Index c = 0; c < n; ++c)
      for (Index i = 0; i < d; ++i)
        names.push_back("E" + std::to_string(r) + std::to_string(c) + ":" +
                        a->basis_names()[static_cast<size_t>(i)]);
  return Algebra::make(p, n * n * d, std::move(names), st, std::move(unit));
}

}  // namespace gradext
