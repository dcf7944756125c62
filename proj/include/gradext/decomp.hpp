#pragma once

#include "gradext/fp_poly.hpp"
#include "gradext/module.hpp"

namespace gradext {

// Direct sum decomposition into indecomposables, with embeddings and
// projections back to the input object.  Splitting is driven by coprime
// factor splits of minimal polynomials of endomorphisms (always a genuine
// direct sum split), followed by an exhaustive idempotent scan of End to
// certify the leaves.  The scan runs only when p^(dim End) fits the budget;
// otherwise the leaf stays uncertified and the flag drops.
template <class Obj>
struct Summand {
  Obj part;
  FpMatrix emb;   // dim(input) x dim(part)
  FpMatrix proj;  // dim(part) x dim(input), proj * emb = id
};

template <class Obj>
struct Decomposition {
  std::vector<Summand<Obj>> parts;  // sorted by (dim, digest)
  bool all_certified = true;        // every leaf passed the idempotent scan
  std::vector<std::string> notes;
};

inline constexpr double kDefaultBudget = 1048576.0;  // 2^20

template <class Obj>
Decomposition<Obj> decompose(const Obj& m, double budget = kDefaultBudget);

// Isomorphism testing.  Yes always carries a verified invertible morphism.
// No is only reported when every leaf was certified and every cross scan
// was exhaustive; budget exhaustion yields Unknown.
enum class Tri { Yes, No, Unknown };

template <class Obj>
struct IsoResult {
  Tri status = Tri::Unknown;
  std::optional<FpMatrix> witness;
  std::string note;
};

template <class Obj>
IsoResult<Obj> are_isomorphic(const Obj& a, const Obj& b,
                              double budget = kDefaultBudget);

// The overload set the engine is templated over.
Index obj_dim(const Module& m);
Index obj_dim(const GradedModule& m);
Scalar obj_p(const Module& m);
Scalar obj_p(const GradedModule& m);
std::uint64_t obj_digest(const Module& m);
std::uint64_t obj_digest(const GradedModule& m);
std::vector<FpMatrix> obj_homs(const Module& a, const Module& b);
std::vector<FpMatrix> obj_homs(const GradedModule& a, const GradedModule& b);
bool obj_is_morphism(const FpMatrix& f, const Module& a, const Module& b);
bool obj_is_morphism(const FpMatrix& f, const GradedModule& a,
                     const GradedModule& b);
// invariant fingerprint preserved by isomorphisms (dimension, degree layout)
std::vector<Scalar> obj_invariants(const Module& m);
std::vector<Scalar> obj_invariants(const GradedModule& m);
struct ModuleSub {
  Module part;
  FpMatrix incl;
};
struct GradedModuleSub {
  GradedModule part;
  FpMatrix incl;
};
ModuleSub obj_sub(const Module& m, const FpMatrix& span_cols);
GradedModuleSub obj_sub(const GradedModule& m, const FpMatrix& span_cols);

}  // namespace gradext
