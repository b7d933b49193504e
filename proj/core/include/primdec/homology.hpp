#ifndef PRIMDEC_HOMOLOGY_HPP
#define PRIMDEC_HOMOLOGY_HPP

#include <vector>

#include "primdec/groebner.hpp"

namespace primdec {

/// F_0 <- F_1 <- ... <- F_L. maps[i] is the matrix of F_{i+1} -> F_i, so
/// maps[0] generates the module being resolved and maps[i]*maps[i+1] = 0.
struct Resolution {
  std::vector<Submodule> maps;

  std::size_t length() const { return maps.size(); }
  /// Rank of F_i.
  std::size_t rank(std::size_t i) const;
};

/// Resolution of F/M by iterated syzygies. Each map is pruned of generators
/// lying in the span of the others. Throws InvalidArgument when length < 1.
Resolution free_resolution(const Submodule& m, int length);

/// Ext^c(F/M, S) = coker(presentation) on `generators` columns, where
/// `generators` spans the cocycles of the dual complex in F_c^*.
struct ExtPresentation {
  int codim_index = 0;
  Submodule generators;
  Submodule presentation;

  bool is_zero() const;
};

ExtPresentation ext_module(int c, const Submodule& m);
/// Ann Ext^c(F/M, S), computed from a presentation pruned of unit entries.
Ideal ext_annihilator(int c, const Submodule& m);

/// Drops a generator and a relation for every relation with a constant entry.
/// The cokernel is unchanged up to isomorphism.
Submodule prune_presentation(const Submodule& presentation);

struct CanonMapResult {
  int codim = 0;
  /// Preimage in F of the kernel of F/M -> Ext^c(Ext^c(F/M,S),S).
  Submodule kernel_preimage;
  Submodule kernel_presentation;
  Submodule cokernel_presentation;
};

/// Throws InvalidArgument when M is the whole free module.
CanonMapResult canon_map(const Submodule& m);
/// Intersection of the components of M of maximal dimension, canonicalized.
Submodule equidim_hull(const Submodule& m);

/// Intersection of the primary components of M of dimension >= `dim`.
Submodule rem_comp(const Submodule& m, int dim);
/// Ideal whose associated primes are the codimension-c associated primes of M,
/// or <1> when there are none.
Ideal ass_prim_codim(const Submodule& m, int c);
/// Intersection of the codimension-c associated primes of M, or <1>.
Ideal inter_ass_prim(const Submodule& m, int c);

}  // namespace primdec

#endif  // PRIMDEC_HOMOLOGY_HPP
