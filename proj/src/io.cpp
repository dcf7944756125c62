#include "gradext/io.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

#include "gradext/errors.hpp"

namespace gradext {

using ojson = nlohmann::ordered_json;

namespace {

bool is_prime(Scalar n) {
  if (n < 2) return false;
  for (Scalar d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ValidationError((path.empty() ? "/" : path) + ": " + msg);
}

const ojson& field(const ojson& j, const std::string& path,
                   const std::string& key) {
  auto it = j.find(key);
  if (it == j.end()) fail(path, "missing field '" + key + "'");
  return *it;
}

const ojson* opt_field(const ojson& j, const std::string& key) {
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

void expect_object(const ojson& j, const std::string& path,
                   const std::set<std::string>& allowed) {
  if (!j.is_object()) fail(path, "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key())) fail(path + "/" + it.key(), "unexpected field");
}

std::int64_t get_int(const ojson& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::string get_str(const ojson& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

Scalar residue(const ojson& j, const std::string& path, Scalar p) {
  const auto v = get_int(j, path);
  if (v < 0 || v >= p)
    fail(path, "residue " + std::to_string(v) + " out of range for p = " +
                   std::to_string(p));
  return v;
}

const ojson& array_of(const ojson& j, const std::string& path, std::size_t len) {
  if (!j.is_array()) fail(path, "expected an array");
  if (j.size() != len)
    fail(path, "expected " + std::to_string(len) + " entries, found " +
                   std::to_string(j.size()));
  return j;
}

std::vector<Scalar> residue_array(const ojson& j, const std::string& path,
                                  Scalar p, std::size_t len) {
  array_of(j, path, len);
  std::vector<Scalar> out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i)
    out.push_back(residue(j[i], path + "/" + std::to_string(i), p));
  return out;
}

FpMatrix flat_matrix(const ojson& j, const std::string& path, Scalar p,
                     Index rows, Index cols) {
  const auto flat = residue_array(j, path, p,
                                  static_cast<std::size_t>(rows) *
                                      static_cast<std::size_t>(cols));
  Mat m(rows, cols);
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c)
      m(r, c) = flat[static_cast<std::size_t>(r * cols + c)];
  return FpMatrix(p, std::move(m));
}

ojson matrix_json(const FpMatrix& m) { return ojson(m.row_major()); }

GradeGroup parse_group(const ojson& j, const std::string& path) {
  if (j.is_string()) {
    if (j.get<std::string>() == "Z") return GradeGroup::integers();
    fail(path, "unknown group name '" + j.get<std::string>() + "' (only \"Z\")");
  }
  expect_object(j, path, {"table", "identity"});
  const auto& tj = field(j, path, "table");
  if (!tj.is_array() || tj.empty()) fail(path + "/table", "expected a nonempty array");
  const auto n = static_cast<Index>(tj.size());
  Mat table(n, n);
  for (Index r = 0; r < n; ++r) {
    const std::string rp = path + "/table/" + std::to_string(r);
    array_of(tj[static_cast<std::size_t>(r)], rp, static_cast<std::size_t>(n));
    for (Index c = 0; c < n; ++c) {
      const auto v = get_int(tj[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)],
                             rp + "/" + std::to_string(c));
      if (v < 0 || v >= n) fail(rp + "/" + std::to_string(c), "index out of range");
      table(r, c) = v;
    }
  }
  const auto id = get_int(field(j, path, "identity"), path + "/identity");
  if (id < 0 || id >= n) fail(path + "/identity", "index out of range");
  try {
    return GradeGroup::from_table(std::move(table), id);
  } catch (const Error& e) {
    fail(path + "/table", e.what());
  }
}

ojson group_json(const GradeGroup& g) {
  if (!g.is_finite()) return ojson("Z");
  ojson rows = ojson::array();
  const auto n = g.order();
  for (Index r = 0; r < n; ++r) {
    ojson row = ojson::array();
    for (Index c = 0; c < n; ++c) row.push_back(g.mul(r, c));
    rows.push_back(std::move(row));
  }
  ojson out;
  out["table"] = std::move(rows);
  out["identity"] = g.identity();
  return out;
}

std::vector<GElem> parse_degrees(const ojson& j, const std::string& path,
                                 const GradeGroup& grp, std::size_t len) {
  array_of(j, path, len);
  std::vector<GElem> out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    const std::string ip = path + "/" + std::to_string(i);
    const auto v = get_int(j[i], ip);
    if (!grp.contains(v))
      fail(ip, std::to_string(v) + " is not an element of the grading group");
    out.push_back(v);
  }
  return out;
}

AlgebraDoc parse_algebra_doc(const ojson& j, const std::string& path) {
  expect_object(j, path,
                {"p", "dim", "basis", "unit", "structure", "grading", "finite_type"});
  const auto p = get_int(field(j, path, "p"), path + "/p");
  if (p < 2 || p > 251 || !is_prime(p))
    fail(path + "/p", std::to_string(p) + " is not a prime in [2, 251]");
  const auto dim = get_int(field(j, path, "dim"), path + "/dim");
  if (dim < 1) fail(path + "/dim", "dimension must be positive");

  std::vector<std::string> names;
  if (const auto* bj = opt_field(j, "basis")) {
    array_of(*bj, path + "/basis", static_cast<std::size_t>(dim));
    for (std::size_t i = 0; i < bj->size(); ++i)
      names.push_back(get_str((*bj)[i], path + "/basis/" + std::to_string(i)));
  } else {
    for (Index i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i));
  }

  const auto unit = residue_array(field(j, path, "unit"), path + "/unit", p,
                                  static_cast<std::size_t>(dim));

  const auto& sj = field(j, path, "structure");
  if (!sj.is_array()) fail(path + "/structure", "expected an array");
  std::vector<StructureEntry> entries;
  for (std::size_t t = 0; t < sj.size(); ++t) {
    const std::string tp = path + "/structure/" + std::to_string(t);
    array_of(sj[t], tp, 4);
    StructureEntry e{};
    Index* idx[3] = {&e.i, &e.j, &e.k};
    for (int q = 0; q < 3; ++q) {
      const std::string qp = tp + "/" + std::to_string(q);
      const auto v = get_int(sj[t][static_cast<std::size_t>(q)], qp);
      if (v < 0 || v >= dim)
        fail(qp, "basis index " + std::to_string(v) +
                     " out of range for dimension " + std::to_string(dim));
      *idx[q] = v;
    }
    e.c = residue(sj[t][3], tp + "/3", p);
    if (e.c == 0) fail(tp + "/3", "zero structure constant is never written");
    entries.push_back(e);
  }

  AlgebraPtr alg;
  try {
    alg = Algebra::make(p, dim, std::move(names), entries, unit);
  } catch (const Error& e) {
    fail(path, e.what());
  }

  const auto& gj = field(j, path, "grading");
  expect_object(gj, path + "/grading", {"group", "degrees"});
  const auto grp = parse_group(field(gj, path + "/grading", "group"),
                               path + "/grading/group");
  const auto deg = parse_degrees(field(gj, path + "/grading", "degrees"),
                                 path + "/grading/degrees", grp,
                                 static_cast<std::size_t>(dim));
  AlgebraDoc doc;
  try {
    doc.alg = GradedAlgebra::make(alg, grp, deg);
  } catch (const Error& e) {
    fail(path + "/grading", e.what());
  }

  if (const auto* cj = opt_field(j, "finite_type")) {
    expect_object(*cj, path + "/finite_type", {"indecomposables", "max_dimension"});
    TypeCert cert;
    cert.count = get_int(field(*cj, path + "/finite_type", "indecomposables"),
                         path + "/finite_type/indecomposables");
    cert.max_dim = get_int(field(*cj, path + "/finite_type", "max_dimension"),
                           path + "/finite_type/max_dimension");
    if (cert.count < 1) fail(path + "/finite_type/indecomposables", "must be positive");
    if (cert.max_dim < 1) fail(path + "/finite_type/max_dimension", "must be positive");
    doc.cert = cert;
  }
  return doc;
}

ojson algebra_json(const AlgebraDoc& d) {
  const auto& ga = *d.alg;
  const auto& a = *ga.alg;
  ojson out;
  out["p"] = a.p();
  out["dim"] = a.dim();
  out["basis"] = a.basis_names();
  out["unit"] = a.unit().row_major();
  ojson st = ojson::array();
  for (const auto& e : a.structure()) st.push_back(ojson{e.i, e.j, e.k, e.c});
  out["structure"] = std::move(st);
  ojson grading;
  grading["group"] = group_json(ga.group);
  grading["degrees"] = ga.deg;
  out["grading"] = std::move(grading);
  if (d.cert) {
    ojson c;
    c["indecomposables"] = d.cert->count;
    c["max_dimension"] = d.cert->max_dim;
    out["finite_type"] = std::move(c);
  }
  return out;
}

// shared by bimodule legs and context bridges
struct BimodulePayload {
  Bimodule bim;
  std::vector<GElem> deg;
};

BimodulePayload parse_bimodule_payload(const ojson& j, const std::string& path,
                                       const GradedAlgebraPtr& left,
                                       const GradedAlgebraPtr& right) {
  expect_object(j, path, {"dim", "left_action", "right_action", "degrees"});
  const auto dim = get_int(field(j, path, "dim"), path + "/dim");
  if (dim < 0) fail(path + "/dim", "dimension must be nonnegative");
  const Scalar p = left->alg->p();

  auto actions = [&](const char* key, Index count) {
    const auto& aj = field(j, path, key);
    array_of(aj, path + "/" + key, static_cast<std::size_t>(count));
    std::vector<FpMatrix> out;
    for (Index i = 0; i < count; ++i)
      out.push_back(flat_matrix(aj[static_cast<std::size_t>(i)],
                                path + "/" + key + "/" + std::to_string(i), p,
                                dim, dim));
    return out;
  };
  auto lact = actions("left_action", left->alg->dim());
  auto ract = actions("right_action", right->alg->dim());

  BimodulePayload out;
  try {
    out.bim = Bimodule::make(left->alg, right->alg, std::move(lact), std::move(ract));
  } catch (const Error& e) {
    fail(path, e.what());
  }
  out.deg = parse_degrees(field(j, path, "degrees"), path + "/degrees",
                          left->group, static_cast<std::size_t>(dim));
  return out;
}

ojson bimodule_json(const Bimodule& b, const std::vector<GElem>& deg) {
  ojson out;
  out["dim"] = b.dim;
  ojson la = ojson::array();
  for (const auto& m : b.lact) la.push_back(matrix_json(m));
  out["left_action"] = std::move(la);
  ojson ra = ojson::array();
  for (const auto& m : b.ract) ra.push_back(matrix_json(m));
  out["right_action"] = std::move(ra);
  out["degrees"] = deg;
  return out;
}

}  // namespace

Instance parse_instance(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("JSON syntax error: ") + e.what());
  }
  expect_object(j, "",
                {"kind", "name", "provenance", "algebra", "second", "module",
                 "bimodule", "context"});
  Instance doc;
  doc.kind = get_str(field(j, "", "kind"), "/kind");
  doc.name = get_str(field(j, "", "name"), "/name");
  doc.provenance = get_str(field(j, "", "provenance"), "/provenance");
  doc.algebra = parse_algebra_doc(field(j, "", "algebra"), "/algebra");

  auto forbid = [&](const char* key) {
    if (opt_field(j, key))
      fail(std::string("/") + key,
           "not allowed for kind '" + doc.kind + "'");
  };

  if (doc.kind == "algebra") {
    forbid("second"), forbid("module"), forbid("bimodule"), forbid("context");
  } else if (doc.kind == "module") {
    forbid("second"), forbid("bimodule"), forbid("context");
    const auto& mj = field(j, "", "module");
    expect_object(mj, "/module", {"dim", "action", "degrees"});
    const auto dim = get_int(field(mj, "/module", "dim"), "/module/dim");
    if (dim < 0) fail("/module/dim", "dimension must be nonnegative");
    const auto& ga = doc.algebra.alg;
    const Scalar p = ga->alg->p();
    const auto& aj = field(mj, "/module", "action");
    array_of(aj, "/module/action", static_cast<std::size_t>(ga->alg->dim()));
    std::vector<FpMatrix> rho;
    for (Index i = 0; i < ga->alg->dim(); ++i)
      rho.push_back(flat_matrix(aj[static_cast<std::size_t>(i)],
                                "/module/action/" + std::to_string(i), p, dim,
                                dim));
    Module mod;
    try {
      mod = Module::make(ga->alg, std::move(rho));
    } catch (const Error& e) {
      fail("/module", e.what());
    }
    const auto deg = parse_degrees(field(mj, "/module", "degrees"),
                                   "/module/degrees", ga->group,
                                   static_cast<std::size_t>(dim));
    try {
      doc.module = GradedModule::make(ga, std::move(mod), deg);
    } catch (const Error& e) {
      fail("/module/degrees", e.what());
    }
  } else if (doc.kind == "bimodule") {
    forbid("module"), forbid("context");
    doc.second = parse_algebra_doc(field(j, "", "second"), "/second");
    auto pl = parse_bimodule_payload(field(j, "", "bimodule"), "/bimodule",
                                     doc.algebra.alg, doc.second->alg);
    try {
      doc.bimodule = GradedBimodule::make(doc.algebra.alg, doc.second->alg,
                                          std::move(pl.bim), pl.deg);
    } catch (const Error& e) {
      fail("/bimodule/degrees", e.what());
    }
  } else if (doc.kind == "context") {
    forbid("module"), forbid("bimodule");
    doc.second = parse_algebra_doc(field(j, "", "second"), "/second");
    const auto& r = doc.algebra.alg;
    const auto& s = doc.second->alg;
    if (!(r->group == s->group))
      fail("/second/grading/group", "context legs must share one grading group");
    const auto& cj = field(j, "", "context");
    expect_object(cj, "/context", {"m", "n", "phi", "psi"});
    auto m = parse_bimodule_payload(field(cj, "/context", "m"), "/context/m", r, s);
    auto n = parse_bimodule_payload(field(cj, "/context", "n"), "/context/n", s, r);
    const Scalar p = r->alg->p();
    MoritaContext ctx;
    ctx.m = std::move(m.bim);
    ctx.n = std::move(n.bim);
    ctx.phi = flat_matrix(field(cj, "/context", "phi"), "/context/phi", p,
                          r->alg->dim(), ctx.m.dim * ctx.n.dim);
    ctx.psi = flat_matrix(field(cj, "/context", "psi"), "/context/psi", p,
                          s->alg->dim(), ctx.n.dim * ctx.m.dim);
    doc.context = GradedMoritaContext{r, s, std::move(ctx), m.deg, n.deg};
  } else {
    fail("/kind", "unknown kind '" + doc.kind + "'");
  }
  return doc;
}

std::string serialize_instance(const Instance& doc) {
  ojson j;
  j["kind"] = doc.kind;
  j["name"] = doc.name;
  j["provenance"] = doc.provenance;
  j["algebra"] = algebra_json(doc.algebra);
  if (doc.kind == "module") {
    const auto& m = *doc.module;
    ojson mj;
    mj["dim"] = m.mod.dim;
    ojson act = ojson::array();
    for (const auto& a : m.mod.rho) act.push_back(matrix_json(a));
    mj["action"] = std::move(act);
    mj["degrees"] = m.deg;
    j["module"] = std::move(mj);
  } else if (doc.kind == "bimodule") {
    j["second"] = algebra_json(*doc.second);
    j["bimodule"] = bimodule_json(doc.bimodule->bim, doc.bimodule->deg);
  } else if (doc.kind == "context") {
    j["second"] = algebra_json(*doc.second);
    const auto& c = *doc.context;
    ojson cj;
    cj["m"] = bimodule_json(c.ctx.m, c.mdeg);
    cj["n"] = bimodule_json(c.ctx.n, c.ndeg);
    cj["phi"] = matrix_json(c.ctx.phi);
    cj["psi"] = matrix_json(c.ctx.psi);
    j["context"] = std::move(cj);
  }
  return j.dump(2) + "\n";
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void save_instance(const Instance& doc, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << serialize_instance(doc);
  if (!out) throw IoError("write to " + path + " failed");
}

}  // namespace gradext
