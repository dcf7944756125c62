#pragma once

#include <optional>
#include <string>

#include "gradext/equiv.hpp"

namespace gradext {

// Declared complete classification: the algebra has exactly `count`
// indecomposables up to isomorphism, all of dimension <= max_dim.  Carried
// as instance metadata and replayed by enumeration before anything trusts it.
struct TypeCert {
  Index count = 0;
  Index max_dim = 0;
};

struct AlgebraDoc {
  GradedAlgebraPtr alg;
  std::optional<TypeCert> cert;
};

// One self-contained lab object.  Everything travels with a grading (a
// trivial group when the object is really ungraded) plus naming metadata.
// kind selects which of the optional payloads is set:
//   "algebra"  - just `algebra`
//   "module"   - `algebra` and `module`
//   "bimodule" - `algebra` (left), `second` (right) and `bimodule`
//   "context"  - `algebra` (r), `second` (s) and `context`
struct Instance {
  std::string kind;
  std::string name;
  std::string provenance;
  AlgebraDoc algebra;
  std::optional<AlgebraDoc> second;
  std::optional<GradedModule> module;
  std::optional<GradedBimodule> bimodule;
  std::optional<GradedMoritaContext> context;
};

// UTF-8 JSON to Instance and back.  serialize_instance is canonical:
// parsing its output and serializing again reproduces the bytes.  Matrices
// are flat row-major residue arrays, finite grading groups full Cayley
// tables, the integers the string "Z".  Failures throw ParseError for
// malformed JSON and ValidationError otherwise, both carrying a
// JSON-pointer style path to the offending field.
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& doc);

// File round trips; load/save failures throw IoError.
Instance load_instance(const std::string& path);
void save_instance(const Instance& doc, const std::string& path);

}  // namespace gradext
