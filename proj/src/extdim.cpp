#include "gradext/extdim.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

namespace gradext {

double subspace_count_estimate(Scalar p, Index dim) {
  // Galois number: sum over k of the Gaussian binomial [dim, k]_p
  double total = 0;
  for (Index k = 0; k <= dim; ++k) {
    double b = 1;
    for (Index i = 1; i <= k; ++i) {
      const double num = std::pow(static_cast<double>(p),
                                  static_cast<double>(dim - k + i)) - 1;
      const double den = std::pow(static_cast<double>(p),
                                  static_cast<double>(i)) - 1;
      b *= num / den;
    }
    total += b;
  }
  return total;
}

namespace {

bool sorted_contains(const std::vector<Index>& v, Index x) {
  return std::binary_search(v.begin(), v.end(), x);
}

std::vector<Index> support_of(const std::vector<Index>& classes) {
  std::vector<Index> s = classes;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool support_subset(const std::vector<Index>& a, const std::vector<Index>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

FpMatrix iso_witness(const Module& a, const Module& b, double budget) {
  auto r = are_isomorphic(a, b, budget);
  if (r.status != Tri::Yes || !r.witness)
    throw Error("expected isomorphic modules while assembling a witness");
  return *r.witness;
}

// indecomposable class of a single summand, if it lies in the catalog
std::optional<Index> classify_part(const UniverseTable& u, const Module& part) {
  if (part.dim == 0 || part.dim > u.max_dim) return std::nullopt;
  for (Index c : u.indecs) {
    if (u.universe[c].dim != part.dim) continue;
    auto r = are_isomorphic(part, u.universe[c], u.budget);
    if (r.status == Tri::Yes) return c;
  }
  return std::nullopt;
}

Module fold_sum(const std::vector<Module>& ms) {
  if (ms.empty()) throw Error("empty direct sum");
  Module out = ms[0];
  for (size_t i = 1; i < ms.size(); ++i) out = direct_sum(out, ms[i]);
  return out;
}

Module middle_of(const UniverseTable& u, Index x, Index pad) {
  return pad == kNoRef ? u.universe[x]
                       : direct_sum(u.universe[x], u.universe[pad]);
}

// a split target: a module together with summand data and classes
struct Target {
  Module mod;
  std::vector<Module> part_mods;
  std::vector<FpMatrix> part_emb;   // part -> mod
  std::vector<FpMatrix> part_proj;  // mod -> part
  std::vector<Index> part_cls;      // kNoRef when outside the catalog
};

Target generator_target(const ClassLedger& led) {
  Target t;
  t.mod = led.generator;
  for (size_t j = 0; j < led.gen_dec.parts.size(); ++j) {
    const auto& pr = led.gen_dec.parts[j];
    t.part_mods.push_back(pr.part);
    t.part_emb.push_back(pr.emb);
    t.part_proj.push_back(pr.proj);
    t.part_cls.push_back(led.gen_classes[j]);
  }
  return t;
}

Target middle_target(const UniverseTable& u, Index x, Index pad) {
  Target t;
  t.mod = middle_of(u, x, pad);
  const Scalar p = obj_p(t.mod);
  const Index dx = u.universe[x].dim;
  const Index dp = pad == kNoRef ? 0 : u.universe[pad].dim;
  for (size_t j = 0; j < u.decs[x].parts.size(); ++j) {
    const auto& pr = u.decs[x].parts[j];
    t.part_mods.push_back(pr.part);
    t.part_emb.push_back(dp == 0 ? pr.emb
                                 : vstack(pr.emb, FpMatrix::zero(p, dp,
                                                                 pr.part.dim)));
    t.part_proj.push_back(dp == 0 ? pr.proj
                                  : hstack(pr.proj,
                                           FpMatrix::zero(p, pr.part.dim, dp)));
    t.part_cls.push_back(u.part_class[x][j]);
  }
  if (pad != kNoRef) {
    for (size_t j = 0; j < u.decs[pad].parts.size(); ++j) {
      const auto& pr = u.decs[pad].parts[j];
      t.part_mods.push_back(pr.part);
      t.part_emb.push_back(vstack(FpMatrix::zero(p, dx, pr.part.dim), pr.emb));
      t.part_proj.push_back(
          hstack(FpMatrix::zero(p, pr.part.dim, dx), pr.proj));
      t.part_cls.push_back(u.part_class[pad][j]);
    }
  }
  return t;
}

// embed universe[w] into one copy of the target per summand, with a
// retraction; verified before returning
std::pair<FpMatrix, FpMatrix> split_witness(const UniverseTable& u, Index w,
                                            const Target& t) {
  const auto& dec = u.decs[w];
  const auto& cls = u.part_class[w];
  const Module& wm = u.universe[w];
  const Scalar p = obj_p(wm);
  std::optional<FpMatrix> emb, retr;
  std::vector<Module> copies;
  for (size_t i = 0; i < dec.parts.size(); ++i) {
    size_t j = t.part_cls.size();
    for (size_t cand = 0; cand < t.part_cls.size(); ++cand)
      if (t.part_cls[cand] == cls[i] && cls[i] != kNoRef) {
        j = cand;
        break;
      }
    if (j == t.part_cls.size())
      throw Error("split witness: no target summand of the required class");
    FpMatrix wi = iso_witness(dec.parts[i].part, t.part_mods[j], u.budget);
    auto winv = inverse(wi);
    if (!winv) throw Error("split witness: summand match not invertible");
    FpMatrix e = t.part_emb[j] * wi * dec.parts[i].proj;
    FpMatrix r = dec.parts[i].emb * (*winv) * t.part_proj[j];
    emb = emb ? vstack(*emb, e) : e;
    retr = retr ? hstack(*retr, r) : r;
    copies.push_back(t.mod);
  }
  if (!emb) throw Error("split witness: member has no summands");
  Module total = fold_sum(copies);
  if (!is_morphism(*emb, wm, total) || !is_morphism(*retr, total, wm) ||
      !((*retr) * (*emb) - FpMatrix::identity(p, wm.dim)).is_zero())
    throw Error("split witness failed verification");
  return {std::move(*emb), std::move(*retr)};
}

Certificate carry_cert(const UniverseTable& u, Index x) {
  const Scalar p = obj_p(u.universe[x]);
  const Index d = u.universe[x].dim;
  Certificate c;
  c.member = x;
  ExtWitness w;
  w.x = x;
  w.sub = x;
  w.incl = FpMatrix::identity(p, d);
  w.onto = FpMatrix::zero(p, 0, d);
  c.ext = std::move(w);
  return c;
}

Certificate base_cert(const UniverseTable& u, Index x) {
  const Scalar p = obj_p(u.universe[x]);
  const Index d = u.universe[x].dim;
  Certificate c;
  c.member = x;
  ExtWitness w;
  w.x = x;
  w.quot = x;
  w.incl = FpMatrix::zero(p, d, 0);
  w.onto = FpMatrix::identity(p, d);
  c.ext = std::move(w);
  return c;
}

void verify_ext_witness(const UniverseTable& u, const ExtWitness& e) {
  Module middle = middle_of(u, e.x, e.pad);
  Module sub = e.sub == kNoRef ? zero_module(u.alg) : u.universe[e.sub];
  Module quot = e.quot == kNoRef ? zero_module(u.alg) : u.universe[e.quot];
  if (!verify_extension(sub, middle, quot, e.incl, e.onto))
    throw Error("extension witness failed verification");
}

}  // namespace

std::optional<Index> UniverseTable::classify(const Module& m) const {
  if (m.dim == 0 || m.dim > max_dim) return std::nullopt;
  auto dec = decompose(m, budget);
  if (!dec.all_certified) return std::nullopt;
  std::vector<Index> cls;
  for (const auto& pr : dec.parts) {
    auto c = classify_part(*this, pr.part);
    if (!c) return std::nullopt;
    cls.push_back(*c);
  }
  std::sort(cls.begin(), cls.end());
  auto it = by_parts.find(cls);
  if (it == by_parts.end()) return std::nullopt;
  return it->second;
}

const std::vector<ProfileEntry>& UniverseTable::profile(Index x,
                                                        Index pad) const {
  std::lock_guard<std::mutex> guard(lock);
  const auto key = std::make_pair(x, pad);
  auto hit = cache.find(key);
  if (hit != cache.end()) return hit->second;

  Module middle = middle_of(*this, x, pad);
  const Scalar p = obj_p(middle);
  const double est = subspace_count_estimate(p, middle.dim);
  if (est > kSubspaceScanLimit)
    throw BudgetExceeded("invariant subspace scan of a middle of dimension " +
                             std::to_string(middle.dim) + " predicts " +
                             std::to_string(est) + " subspaces",
                         est, kSubspaceScanLimit);
  auto subs = bounded_submodules(middle, middle.dim, budget);
  if (!subs.complete)
    throw BudgetExceeded("cyclic generator scan over the middle exceeds the budget",
                         std::pow(static_cast<double>(p),
                                  static_cast<double>(middle.dim)),
                         budget);
  // canonical scan order, independent of discovery order
  std::sort(subs.subs.begin(), subs.subs.end(),
            [](const FpMatrix& a, const FpMatrix& b) {
              if (a.cols() != b.cols()) return a.cols() < b.cols();
              return a.row_major() < b.row_major();
            });

  // class of the whole middle, when it exists in the universe
  std::optional<Index> mid_cls;
  {
    std::vector<Index> mp = parts[x];
    if (pad != kNoRef)
      mp.insert(mp.end(), parts[pad].begin(), parts[pad].end());
    std::sort(mp.begin(), mp.end());
    auto it = by_parts.find(mp);
    if (it != by_parts.end()) mid_cls = it->second;
  }

  std::vector<ProfileEntry> out;
  std::set<std::pair<Index, Index>> seen;
  for (const auto& w : subs.subs) {
    ProfileEntry e;
    if (w.cols() == 0) {
      if (!mid_cls) continue;
      e.sub = kNoRef;
      e.quot = *mid_cls;
      if (!seen.insert({e.sub, e.quot}).second) continue;
      e.incl = FpMatrix::zero(p, middle.dim, 0);
      e.onto = iso_witness(middle, universe[e.quot], budget);
    } else if (w.cols() == middle.dim) {
      if (!mid_cls) continue;
      e.sub = *mid_cls;
      e.quot = kNoRef;
      if (!seen.insert({e.sub, e.quot}).second) continue;
      e.incl = iso_witness(universe[e.sub], middle, budget);
      e.onto = FpMatrix::zero(p, 0, middle.dim);
    } else {
      SubModule sm = submodule(middle, w);
      auto sc = classify(sm.mod);
      if (!sc) continue;
      QuotModule qm = quotient_module(middle, w);
      auto qc = classify(qm.mod);
      if (!qc) continue;
      e.sub = *sc;
      e.quot = *qc;
      if (!seen.insert({e.sub, e.quot}).second) continue;
      e.incl = sm.incl * iso_witness(universe[e.sub], sm.mod, budget);
      e.onto = iso_witness(qm.mod, universe[e.quot], budget) * qm.proj;
    }
    Module sub_mod = e.sub == kNoRef ? zero_module(alg) : universe[e.sub];
    Module quot_mod = e.quot == kNoRef ? zero_module(alg) : universe[e.quot];
    if (!verify_extension(sub_mod, middle, quot_mod, e.incl, e.onto))
      throw Error("extension profile entry failed verification");
    out.push_back(std::move(e));
  }
  return cache.emplace(key, std::move(out)).first->second;
}

UniversePtr build_universe(const AlgebraPtr& a, Index max_dim, double budget) {
  auto ctx = AlgebraContext::get(a);
  auto en = enumerate_modules(*ctx, max_dim, budget);
  auto u = std::make_shared<UniverseTable>();
  u->alg = a;
  u->max_dim = max_dim;
  u->budget = budget;
  u->universe = std::move(en.classes);
  u->complete = en.complete;
  u->notes = std::move(en.notes);
  for (const auto& m : u->universe) {
    auto dec = decompose(m, budget);
    if (!dec.all_certified)
      throw BudgetExceeded("universe class failed certified decomposition",
                           budget, budget);
    u->decs.push_back(std::move(dec));
  }
  for (Index i = 0; i < static_cast<Index>(u->universe.size()); ++i)
    if (u->decs[i].parts.size() == 1) u->indecs.push_back(i);
  for (Index i = 0; i < static_cast<Index>(u->universe.size()); ++i) {
    std::vector<Index> cls;
    if (u->decs[i].parts.size() == 1) {
      cls.push_back(i);
    } else {
      for (const auto& pr : u->decs[i].parts) {
        auto c = classify_part(*u, pr.part);
        if (!c)
          throw BudgetExceeded("universe summand fell outside the catalog",
                               budget, budget);
        cls.push_back(*c);
      }
    }
    u->part_class.push_back(cls);
    std::sort(cls.begin(), cls.end());
    if (!u->by_parts.emplace(cls, i).second)
      throw Error("two universe classes share a summand multiset");
    u->parts.push_back(std::move(cls));
  }
  return u;
}

ClassLedger make_ledger(const UniversePtr& u, const Module& gen,
                        const LedgerParams& prm) {
  if (gen.alg->digest() != u->alg->digest())
    throw AlgebraMismatch("generator and universe live over different algebras");
  ClassLedger led;
  led.table = u;
  led.generator = gen;
  led.slack = prm.slack;
  led.level_cap = prm.level_cap;
  led.gen_dec = decompose(gen, prm.budget);
  if (!led.gen_dec.all_certified)
    throw BudgetExceeded("generator failed certified decomposition",
                         prm.budget, prm.budget);
  for (const auto& pr : led.gen_dec.parts) {
    auto c = classify_part(*u, pr.part);
    led.gen_classes.push_back(c ? *c : kNoRef);
  }

  led.levels.push_back(LedgerLevel{});  // level 0: the zero module alone

  std::vector<Index> gsupp;
  for (Index c : led.gen_classes)
    if (c != kNoRef) gsupp.push_back(c);
  gsupp = support_of(gsupp);

  Target tgen = generator_target(led);
  LedgerLevel l1;
  const Index count = static_cast<Index>(u->universe.size());
  for (Index w = 0; w < count; ++w) {
    if (!support_subset(support_of(u->parts[w]), gsupp)) continue;
    auto [emb, retr] = split_witness(*u, w, tgen);
    Certificate c;
    c.member = w;
    AddWitness aw;
    aw.gen_copies = static_cast<Index>(u->decs[w].parts.size());
    aw.emb = std::move(emb);
    aw.retr = std::move(retr);
    c.add = std::move(aw);
    l1.members.push_back(w);
    l1.certs.push_back(std::move(c));
  }
  led.levels.push_back(std::move(l1));
  return led;
}

const LedgerLevel& bracket_level(ClassLedger& led, Index n) {
  if (n < 0) throw Error("negative closure level");
  const UniverseTable& u = *led.table;
  const Index count = static_cast<Index>(u.universe.size());
  while (static_cast<Index>(led.levels.size()) <= n) {
    const Index k = static_cast<Index>(led.levels.size());
    const auto& prevv = led.levels[k - 1].members;
    const auto& basev = led.levels[1].members;
    std::vector<std::optional<Certificate>> got(count);

    std::vector<Index> pads{kNoRef};
    for (Index i = 0; i < count; ++i)
      if (u.universe[i].dim <= led.slack) pads.push_back(i);

    for (Index x = 0; x < count; ++x) {
      if (sorted_contains(prevv, x)) {
        got[x] = carry_cert(u, x);
        continue;
      }
      if (sorted_contains(basev, x)) {
        got[x] = base_cert(u, x);
        continue;
      }
      bool done = false;
      for (Index pad : pads) {
        for (const auto& e : u.profile(x, pad)) {
          const bool sub_ok = e.sub == kNoRef || sorted_contains(prevv, e.sub);
          const bool quot_ok =
              e.quot == kNoRef || sorted_contains(basev, e.quot);
          if (!sub_ok || !quot_ok) continue;
          Certificate c;
          c.member = x;
          ExtWitness w;
          w.x = x;
          w.pad = pad;
          w.sub = e.sub;
          w.quot = e.quot;
          w.incl = e.incl;
          w.onto = e.onto;
          c.ext = std::move(w);
          got[x] = std::move(c);
          done = true;
          break;
        }
        if (done) break;
      }
    }

    // additive closure: summands of certified middles
    std::vector<Index> middles;
    std::map<Index, std::vector<Index>> msupp;
    for (Index x = 0; x < count; ++x) {
      if (!got[x] || !got[x]->ext) continue;
      middles.push_back(x);
      std::vector<Index> mp = u.parts[x];
      const Index pad = got[x]->ext->pad;
      if (pad != kNoRef)
        mp.insert(mp.end(), u.parts[pad].begin(), u.parts[pad].end());
      msupp[x] = support_of(mp);
    }
    for (Index w = 0; w < count; ++w) {
      if (got[w]) continue;
      const auto ws = support_of(u.parts[w]);
      for (Index x : middles) {
        if (!support_subset(ws, msupp[x])) continue;
        Target t = middle_target(u, x, got[x]->ext->pad);
        auto [emb, retr] = split_witness(u, w, t);
        Certificate c;
        c.member = w;
        AddWitness aw;
        aw.sources.assign(u.decs[w].parts.size(), x);
        aw.emb = std::move(emb);
        aw.retr = std::move(retr);
        c.add = std::move(aw);
        got[w] = std::move(c);
        break;
      }
    }

    LedgerLevel lvl;
    for (Index x = 0; x < count; ++x)
      if (got[x]) {
        lvl.members.push_back(x);
        lvl.certs.push_back(std::move(*got[x]));
      }
    led.levels.push_back(std::move(lvl));
  }
  return led.levels[n];
}

bool ledger_member(const ClassLedger& led, Index level, Index cls) {
  if (level < 0 || level >= static_cast<Index>(led.levels.size()))
    throw Error("closure level not computed");
  return sorted_contains(led.levels[level].members, cls);
}

std::optional<Index> member_level(const ClassLedger& led, Index cls) {
  for (Index n = 0; n < static_cast<Index>(led.levels.size()); ++n)
    if (sorted_contains(led.levels[n].members, cls)) return n;
  return std::nullopt;
}

bool replay_ledger(const ClassLedger& led, std::string* why) {
  const auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  const UniverseTable& u = *led.table;
  const Scalar p = obj_p(led.generator);
  for (Index n = 1; n < static_cast<Index>(led.levels.size()); ++n) {
    const auto& lvl = led.levels[n];
    const std::string at = "level " + std::to_string(n) + ": ";
    if (lvl.members.size() != lvl.certs.size())
      return fail(at + "member and certificate counts differ");
    if (!std::is_sorted(lvl.members.begin(), lvl.members.end()))
      return fail(at + "members not sorted");
    if (n >= 2)
      for (Index m : led.levels[n - 1].members)
        if (!sorted_contains(lvl.members, m))
          return fail(at + "level sets shrank");
    for (size_t i = 0; i < lvl.members.size(); ++i) {
      const Certificate& c = lvl.certs[i];
      const std::string who =
          at + "member " + std::to_string(lvl.members[i]) + ": ";
      if (c.member != lvl.members[i]) return fail(who + "mislabelled");
      if (c.ext && c.add) return fail(who + "ambiguous certificate");
      if (c.ext) {
        const ExtWitness& e = *c.ext;
        if (n == 1) return fail(who + "extension witness at level 1");
        if (e.x != c.member) return fail(who + "witness names another member");
        if (e.sub != kNoRef &&
            !sorted_contains(led.levels[n - 1].members, e.sub))
          return fail(who + "submodule class not certified one level below");
        if (e.quot != kNoRef && !sorted_contains(led.levels[1].members, e.quot))
          return fail(who + "quotient class not certified at level 1");
        Module middle = middle_of(u, e.x, e.pad);
        Module sub = e.sub == kNoRef ? zero_module(u.alg) : u.universe[e.sub];
        Module quot =
            e.quot == kNoRef ? zero_module(u.alg) : u.universe[e.quot];
        if (!verify_extension(sub, middle, quot, e.incl, e.onto))
          return fail(who + "short exact sequence failed verification");
      } else if (c.add) {
        const AddWitness& a = *c.add;
        std::vector<Module> targets;
        if (n == 1) {
          if (a.gen_copies <= 0 || !a.sources.empty())
            return fail(who + "level 1 certificate must target the generator");
          for (Index t = 0; t < a.gen_copies; ++t)
            targets.push_back(led.generator);
        } else {
          if (a.sources.empty())
            return fail(who + "split certificate without sources");
          for (Index s : a.sources) {
            auto pos = std::lower_bound(lvl.members.begin(), lvl.members.end(), s);
            if (pos == lvl.members.end() || *pos != s)
              return fail(who + "source not a member of this level");
            const Certificate& sc = lvl.certs[pos - lvl.members.begin()];
            if (!sc.ext)
              return fail(who + "source lacks an extension witness");
            targets.push_back(middle_of(u, sc.ext->x, sc.ext->pad));
          }
        }
        Module total = fold_sum(targets);
        const Module& wm = u.universe[c.member];
        if (!is_morphism(a.emb, wm, total))
          return fail(who + "embedding is not a morphism");
        if (!is_morphism(a.retr, total, wm))
          return fail(who + "retraction is not a morphism");
        if (!(a.retr * a.emb - FpMatrix::identity(p, wm.dim)).is_zero())
          return fail(who + "retraction does not split the embedding");
      } else {
        return fail(who + "certificate missing witness");
      }
    }
  }
  return true;
}

std::optional<Index> gen_time_bounded(ClassLedger& led) {
  const Index total = static_cast<Index>(led.table->universe.size());
  for (Index n = 1; n <= led.level_cap + 1; ++n) {
    const auto& lvl = bracket_level(led, n);
    if (static_cast<Index>(lvl.members.size()) == total) return n - 1;
    if (n >= 2 && lvl.members == led.levels[n - 1].members) return std::nullopt;
  }
  return std::nullopt;
}

ExtDimResult ext_dim_bounded(const UniversePtr& u, const LedgerParams& prm) {
  // candidates: direct sums of distinct indecomposable classes, total
  // dimension bounded, largest first so a finite-type witness is maximal
  std::vector<std::vector<Index>> cands;
  std::vector<Index> cur;
  constexpr size_t kCandidateCap = 65536;
  const auto walk = [&](auto&& self, size_t from, Index dim_left) -> void {
    if (!cur.empty()) {
      if (cands.size() >= kCandidateCap)
        throw BudgetExceeded("generator candidate enumeration",
                             static_cast<double>(cands.size()) + 1,
                             static_cast<double>(kCandidateCap));
      cands.push_back(cur);
    }
    for (size_t i = from; i < u->indecs.size(); ++i) {
      const Index d = u->universe[u->indecs[i]].dim;
      if (d > dim_left) continue;
      cur.push_back(u->indecs[i]);
      self(self, i + 1, dim_left - d);
      cur.pop_back();
    }
  };
  walk(walk, 0, prm.gen_dim_bound);
  const auto total_dim = [&](const std::vector<Index>& s) {
    Index d = 0;
    for (Index c : s) d += u->universe[c].dim;
    return d;
  };
  std::sort(cands.begin(), cands.end(),
            [&](const std::vector<Index>& a, const std::vector<Index>& b) {
              const Index da = total_dim(a), db = total_dim(b);
              if (da != db) return da > db;
              return a < b;
            });

  ExtDimResult res;
  res.params = prm;
  for (const auto& s : cands) {
    std::vector<Module> parts;
    for (Index c : s) parts.push_back(u->universe[c]);
    Module gen = fold_sum(parts);
    ClassLedger led = make_ledger(u, gen, prm);
    auto t = gen_time_bounded(led);
    ++res.candidates_tried;
    if (t && (!res.value || *t < *res.value)) {
      res.value = t;
      res.generator = std::move(gen);
      res.ledger = std::move(led);
    }
    if (res.value && *res.value == 0) break;
  }
  return res;
}

ExtDimResult ext_dim_bounded(const AlgebraPtr& a, const LedgerParams& prm) {
  return ext_dim_bounded(build_universe(a, prm.max_dim, prm.budget), prm);
}

LoewyCertificate loewy_generator_certificate(const AlgebraPtr& a,
                                             const LedgerParams& prm) {
  auto ctx = AlgebraContext::get(a);
  Module reg = regular_module(a);
  Module gen = reg;
  if (ctx->loewy >= 2) {
    gen = quotient_module(reg, ctx->rad_powers[0]).mod;
    for (Index i = 2; i < ctx->loewy; ++i)
      gen = direct_sum(gen, quotient_module(reg, ctx->rad_powers[i - 1]).mod);
    gen = direct_sum(gen, reg);
  }

  auto u = build_universe(a, prm.max_dim, prm.budget);
  ClassLedger led = make_ledger(u, gen, prm);

  const Index count = static_cast<Index>(u->universe.size());
  std::vector<Index> lls(count);
  Index lstar = 1;
  for (Index i = 0; i < count; ++i) {
    lls[i] =
        static_cast<Index>(ctx->module_radical_powers(u->universe[i]).size()) +
        1;
    lstar = std::max(lstar, lls[i]);
  }

  LoewyCertificate cert;
  cert.loewy = ctx->loewy;
  cert.bound = lstar - 1;

  if (lstar >= 2) {
    for (Index n = 2; n <= lstar; ++n) {
      const auto& prevv = led.levels[n - 1].members;
      LedgerLevel lvl;
      for (Index x = 0; x < count; ++x) {
        std::optional<Certificate> got;
        if (lls[x] <= n) {
          // one radical layer: 0 -> rad x -> x -> top x -> 0
          const Module& xm = u->universe[x];
          FpMatrix rad = ctx->module_radical(xm);
          Certificate c;
          c.member = x;
          ExtWitness w;
          w.x = x;
          if (rad.cols() == 0) {
            w.sub = kNoRef;
            w.incl = FpMatrix::zero(obj_p(xm), xm.dim, 0);
          } else {
            SubModule sm = submodule(xm, rad);
            auto sc = u->classify(sm.mod);
            if (!sc)
              throw Error("radical of a universe member fell outside the universe");
            w.sub = *sc;
            w.incl = sm.incl * iso_witness(u->universe[*sc], sm.mod, u->budget);
          }
          QuotModule qm = quotient_module(xm, rad);
          auto qc = u->classify(qm.mod);
          if (!qc)
            throw Error("top of a universe member fell outside the universe");
          w.quot = *qc;
          w.onto = iso_witness(qm.mod, u->universe[*qc], u->budget) * qm.proj;
          if (w.sub != kNoRef && !sorted_contains(prevv, w.sub))
            throw Error("radical layer not certified one level below");
          if (!sorted_contains(led.levels[1].members, w.quot))
            throw Error("semisimple top not in the additive closure of the generator");
          verify_ext_witness(*u, w);
          c.ext = std::move(w);
          got = std::move(c);
        } else if (sorted_contains(prevv, x)) {
          got = carry_cert(*u, x);
        }
        if (got) {
          lvl.members.push_back(x);
          lvl.certs.push_back(std::move(*got));
        }
      }
      led.levels.push_back(std::move(lvl));
    }
  }
  led.level_cap = std::max(led.level_cap, lstar);

  cert.covered =
      static_cast<Index>(led.levels.back().members.size()) == count;
  cert.generator = std::move(gen);
  cert.ledger = std::move(led);
  return cert;
}

GradedLedger make_graded_ledger(const GradedAlgebraPtr& g,
                                const GradedModule& gen,
                                const LedgerParams& prm) {
  SmashedAlgebra sm = smash_product(g);
  auto u = build_universe(sm.alg, prm.max_dim, prm.budget);
  ClassLedger led = make_ledger(u, to_smashed(sm, gen), prm);
  return GradedLedger{std::move(sm), std::move(led)};
}

std::optional<Index> classify_graded(const GradedLedger& led,
                                     const GradedModule& m) {
  return led.ledger.table->classify(to_smashed(led.smash, m));
}

ExtDimResult graded_ext_dim_bounded(const GradedAlgebraPtr& g,
                                    const LedgerParams& prm) {
  SmashedAlgebra sm = smash_product(g);
  return ext_dim_bounded(build_universe(sm.alg, prm.max_dim, prm.budget), prm);
}

ForgetfulComparison forgetful_compare(const GradedModule& m,
                                      const LedgerParams& prm) {
  GradedLedger gl = make_graded_ledger(m.galg, m, prm);
  auto gt = gen_time_bounded(gl.ledger);
  auto uu = build_universe(m.galg->alg, prm.max_dim, prm.budget);
  ClassLedger ul = make_ledger(uu, m.mod, prm);
  auto ut = gen_time_bounded(ul);
  ForgetfulComparison out;
  out.graded = gt;
  out.ungraded = ut;
  out.agree = (gt == ut);
  out.graded_ledger = std::move(gl);
  out.ungraded_ledger = std::move(ul);
  return out;
}

}  // namespace gradext
