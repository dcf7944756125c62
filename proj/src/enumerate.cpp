#include "gradext/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "gradext/errors.hpp"

namespace gradext {

namespace {

bool advance(std::vector<Scalar>& v, Scalar p) {
  for (auto& c : v) {
    if (++c < p) return true;
    c = 0;
  }
  return false;
}

std::vector<Scalar> span_key(const FpMatrix& cols) {
  std::vector<Scalar> key{cols.rows(), cols.cols()};
  auto body = cols.row_major();
  key.insert(key.end(), body.begin(), body.end());
  return key;
}

}  // namespace

Module dual_module(const Module& m) {
  std::vector<FpMatrix> rho;
  rho.reserve(m.rho.size());
  for (const auto& r : m.rho) rho.push_back(r.transpose());
  return Module::make(opposite_algebra(m.alg), std::move(rho));
}

SubmoduleList bounded_submodules(const Module& m, Index max_dim,
                                 double budget) {
  const Scalar p = m.alg->p();
  SubmoduleList out;
  out.subs.push_back(FpMatrix::zero(p, m.dim, 0));
  if (max_dim <= 0 || m.dim == 0) return out;
  if (std::pow(static_cast<double>(p), static_cast<double>(m.dim)) > budget) {
    out.complete = false;
    return out;
  }
  std::set<std::vector<Scalar>> seen;
  seen.insert(span_key(out.subs.front()));
  std::vector<FpMatrix> cyclic;
  std::vector<Scalar> v(static_cast<std::size_t>(m.dim), 0);
  while (advance(v, p)) {
    FpMatrix c = canonical_basis(submodule_closure(m, FpMatrix::column(p, v)));
    if (c.cols() > max_dim) continue;
    if (seen.insert(span_key(c)).second) cyclic.push_back(c);
  }
  std::vector<FpMatrix> work = cyclic;
  out.subs.insert(out.subs.end(), cyclic.begin(), cyclic.end());
  while (!work.empty()) {
    FpMatrix s = work.back();
    work.pop_back();
    for (const auto& c : cyclic) {
      FpMatrix join = space_sum(s, c);
      if (join.cols() > max_dim) continue;
      if (seen.insert(span_key(join)).second) {
        out.subs.push_back(join);
        work.push_back(join);
      }
    }
  }
  return out;
}

namespace {

void walk_tops(const std::vector<Module>& simples, Index max_dim,
               std::size_t at, Index used, std::vector<Index>& mult,
               std::vector<std::vector<Index>>& out) {
  if (at == simples.size()) {
    for (Index m : mult)
      if (m > 0) {
        out.push_back(mult);
        return;
      }
    return;
  }
  const Index sdim = simples[at].dim;
  for (Index m = 0; used + m * sdim <= max_dim; ++m) {
    mult[at] = m;
    walk_tops(simples, max_dim, at + 1, used + m * sdim, mult, out);
  }
  mult[at] = 0;
}

}  // namespace

namespace {

// Enumeration walks are deterministic, so a cache entry is just a replay;
// entries are keyed by algebra digest, bound and budget bits, and every
// loaded class is rebuilt through Module::make so a stale or corrupt file
// degrades to a recomputation, never to a wrong answer.
std::string cache_path(const AlgebraContext& ctx, Index max_dim,
                       double budget) {
  const char* dir = std::getenv("GRADEXT_CACHE_DIR");
  if (!dir || !*dir) return {};
  std::uint64_t bits = 0;
  std::memcpy(&bits, &budget, sizeof bits);
  std::ostringstream name;
  name << dir << "/enum-" << std::hex << ctx.alg->digest() << "-" << std::dec
       << max_dim << "-" << std::hex << bits << ".txt";
  return name.str();
}

std::optional<EnumerationResult> cache_load(const AlgebraContext& ctx,
                                            const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string magic;
  std::uint64_t digest = 0;
  Index max_dim = 0;
  int complete = 0;
  std::size_t nclasses = 0, nnotes = 0;
  in >> magic >> std::hex >> digest >> std::dec >> max_dim >> complete >>
      nclasses >> nnotes;
  if (!in || magic != "gradext-enum-v1" || digest != ctx.alg->digest())
    return std::nullopt;
  in.ignore();
  EnumerationResult out;
  out.complete = complete != 0;
  for (std::size_t t = 0; t < nnotes; ++t) {
    std::string line;
    if (!std::getline(in, line)) return std::nullopt;
    out.notes.push_back(line);
  }
  const Index ad = ctx.alg->dim();
  const Scalar p = ctx.alg->p();
  for (std::size_t t = 0; t < nclasses; ++t) {
    Index dim = 0;
    in >> dim;
    if (!in || dim < 0) return std::nullopt;
    std::vector<FpMatrix> rho;
    for (Index i = 0; i < ad; ++i) {
      Mat m(dim, dim);
      for (Index r = 0; r < dim; ++r)
        for (Index c = 0; c < dim; ++c) {
          Scalar v;
          in >> v;
          if (!in) return std::nullopt;
          m(r, c) = v;
        }
      rho.emplace_back(p, std::move(m));
    }
    try {
      out.classes.push_back(Module::make(ctx.alg, std::move(rho)));
    } catch (const Error&) {
      return std::nullopt;
    }
  }
  return out;
}

void cache_store(const AlgebraContext& ctx, const std::string& path,
                 Index max_dim, const EnumerationResult& en) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << "gradext-enum-v1\n"
        << std::hex << ctx.alg->digest() << std::dec << ' ' << max_dim << ' '
        << (en.complete ? 1 : 0) << ' ' << en.classes.size() << ' '
        << en.notes.size() << '\n';
    for (const auto& n : en.notes) out << n << '\n';
    for (const auto& m : en.classes) {
      out << m.dim;
      for (const auto& a : m.rho)
        for (const auto v : a.row_major()) out << ' ' << v;
      out << '\n';
    }
    if (!out) return;
  }
  std::rename(tmp.c_str(), path.c_str());
}

}  // namespace

EnumerationResult enumerate_modules(const AlgebraContext& ctx, Index max_dim,
                                    double budget) {
  const std::string cpath = cache_path(ctx, max_dim, budget);
  if (!cpath.empty())
    if (auto hit = cache_load(ctx, cpath)) return *hit;
  EnumerationResult out;
  const Scalar p = ctx.alg->p();
  std::vector<std::vector<Index>> tops;
  std::vector<Index> mult(ctx.simples.size(), 0);
  walk_tops(ctx.simples, max_dim, 0, 0, mult, tops);
  for (const auto& top : tops) {
    Module cover = zero_module(ctx.alg);
    Index top_dim = 0;
    for (std::size_t i = 0; i < top.size(); ++i) {
      top_dim += top[i] * ctx.simples[i].dim;
      for (Index c = 0; c < top[i]; ++c)
        cover = direct_sum(cover, ctx.pims[i]);
    }
    SubModule rad = submodule(cover, ctx.module_radical(cover));
    const Index cmax = max_dim - top_dim;
    // codim c submodules of rad P match dim c submodules of the dual
    SubmoduleList duals = bounded_submodules(dual_module(rad.mod), cmax,
                                             budget);
    if (!duals.complete) {
      out.complete = false;
      out.notes.push_back("submodule scan over one top was cut short");
    }
    std::vector<Module> bucket;
    for (const auto& w : duals.subs) {
      FpMatrix k_in_rad = w.cols() == 0
                              ? canonical_basis(FpMatrix::identity(p, rad.mod.dim))
                              : nullspace(w.transpose());
      FpMatrix k_cols = rad.incl * k_in_rad;
      Module q = quotient_module(cover, k_cols).mod;
      if (q.dim == 0 || q.dim > max_dim) continue;
      bool fresh = true;
      for (const auto& have : bucket) {
        auto r = are_isomorphic(q, have, budget);
        if (r.status == Tri::Yes) {
          fresh = false;
          break;
        }
        if (r.status == Tri::Unknown) {
          out.complete = false;
          out.notes.push_back("isomorphism test hit the budget; "
                              "classes may repeat");
        }
      }
      if (fresh) bucket.push_back(q);
    }
    for (auto& q : bucket) out.classes.push_back(std::move(q));
  }
  std::sort(out.classes.begin(), out.classes.end(),
            [](const Module& a, const Module& b) {
              if (a.dim != b.dim) return a.dim < b.dim;
              return a.digest() < b.digest();
            });
  if (!cpath.empty()) cache_store(ctx, cpath, max_dim, out);
  return out;
}

EnumerationResult enumerate_indecomposables(const AlgebraContext& ctx,
                                            Index max_dim, double budget) {
  auto en = enumerate_modules(ctx, max_dim, budget);
  EnumerationResult out;
  out.complete = en.complete;
  out.notes = std::move(en.notes);
  for (auto& m : en.classes) {
    auto dec = decompose(m, budget);
    if (!dec.all_certified) {
      out.complete = false;
      out.notes.push_back("an indecomposability certificate is missing at "
                          "this budget");
    }
    if (dec.parts.size() == 1) out.classes.push_back(std::move(m));
  }
  return out;
}

GradedEnumerationResult enumerate_graded_modules(const GradedContext& gctx,
                                                 Index max_dim,
                                                 double budget) {
  EnumerationResult flat = enumerate_modules(*gctx.sctx, max_dim, budget);
  GradedEnumerationResult out;
  out.complete = flat.complete;
  out.notes = std::move(flat.notes);
  for (const auto& m : flat.classes)
    out.classes.push_back(from_smashed(gctx.smash, m).mod);
  return out;
}

}  // namespace gradext
