#pragma once

#include <memory>

#include "gradext/decomp.hpp"
#include "gradext/rad.hpp"

namespace gradext {

// Projective cover: a surjection from a projective module inducing an
// isomorphism on tops, plus its kernel (the syzygy) inside the cover.
struct Cover {
  Module proj_mod;
  FpMatrix onto;    // dim(M) x dim(P), verified surjective morphism
  SubModule syzygy; // kernel of onto
};

// Short exact sequence  N >--incl--> middle --onto--> M.
struct Extension {
  Module middle;
  FpMatrix incl;
  FpMatrix onto;
};

bool verify_extension(const Module& n, const Module& middle, const Module& m,
                      const FpMatrix& incl, const FpMatrix& onto);

// Homological bundle for one algebra: radical data, the simple modules, the
// projective indecomposables aligned with them, covers, syzygies and Ext
// groups through degree two.  Built once per algebra digest and shared.
struct AlgebraContext {
  AlgebraPtr alg;
  FpMatrix radical;                  // canonical columns
  std::vector<FpMatrix> rad_powers;  // J, J^2, ... last nonzero power
  Index loewy = 1;                   // smallest k with J^k = 0
  QuotientAlgebra semisimple;        // A / J
  std::vector<Module> simples;       // pairwise non-isomorphic
  std::vector<Module> pims;          // pims[i] covers simples[i]

  static std::shared_ptr<const AlgebraContext> get(const AlgebraPtr& a);

  FpMatrix module_radical(const Module& m) const;  // span of J.M
  std::vector<FpMatrix> module_radical_powers(const Module& m) const;
  FpMatrix module_socle(const Module& m) const;    // {v : J.v = 0}
  QuotModule top_of(const Module& m) const;

  // Multiplicity of each simple in the top of M, aligned with simples.
  std::vector<Index> top_multiplicities(const Module& m) const;

  Cover projective_cover(const Module& m) const;
  Module syzygy(const Module& m) const;

  Index ext1_dim(const Module& m, const Module& n) const;
  Index ext2_dim(const Module& m, const Module& n) const;

  // Morphisms syzygy(M) -> N representing a basis of Ext^1(M, N), i.e.
  // spanning a complement of the restrictions from the cover.
  std::vector<FpMatrix> ext1_classes(const Module& m, const Module& n) const;

  // Middle term of the extension of M by N attached to a class, as the
  // pushout of the syzygy inclusion along it.  The sequence is verified.
  Extension middle_term(const Module& m, const Module& n,
                        const FpMatrix& cls) const;
};

}  // namespace gradext
