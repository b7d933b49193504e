#ifndef PRIMDEC_PRIMDEC_HPP
#define PRIMDEC_PRIMDEC_HPP

#include <vector>

#include "primdec/groebner.hpp"

namespace primdec {

/// A prime ideal in canonical (reduced Groebner basis) form.
struct PrimeIdeal {
  Ideal ideal;
  int codim;
};

/// Wraps an ideal already known to be prime.
PrimeIdeal make_prime(const Ideal& p);

/// One iteration of the component loop: the candidate hull(A + P^m F) and
/// whether it passed the containment test.
struct TraceStep {
  int m;
  Submodule candidate;
  bool passed;
};

struct Component {
  Submodule primary;
  PrimeIdeal prime;
  bool embedded;
  /// The module A the component loop ran on: the hull of M for the primes of
  /// maximal dimension, M itself otherwise.
  Submodule base;
  /// Exponent m with primary = hull(A + P^m F).
  int witness;
  std::vector<TraceStep> trace;
};

struct DecompositionResult {
  std::vector<Component> components;
};

struct PrimdecOptions {
  int component_bound = 50;
  /// Offset into the deterministic sequence of coordinate changes.
  unsigned seed = 0;
};

/// Minimal associated primes of a proper ideal, sorted by codimension and then
/// by canonical form. Throws InvalidArgument for the unit ideal.
std::vector<PrimeIdeal> min_ass(const Ideal& i, unsigned seed = 0);

/// Intersection of the minimal primes; exact for equidimensional input.
Ideal radical_equidim(const Ideal& i, unsigned seed = 0);

/// All associated primes of F/M, found through the Ext annihilators.
std::vector<PrimeIdeal> associated_primes(const Submodule& m, unsigned seed = 0);

/// Intersection of the primes of `primes` that have the dimension of H, contain
/// H, and satisfy dim(J + P) = dim(J); <1> if there are none.
Ideal localize_radical_ideal(const Ideal& h, const Ideal& j, const std::vector<PrimeIdeal>& primes);

/// A_[J] = (A : K^inf). `primes` must list the associated primes of F/A.
Submodule localize_module(const Submodule& a, const Ideal& j, const std::vector<PrimeIdeal>& primes);
/// Same, computing the associated primes first.
Submodule localize_module(const Submodule& a, const Ideal& j, unsigned seed = 0);

struct PrimaryComponentResult {
  Submodule component;
  int witness;
  std::vector<TraceStep> trace;
};

/// A P-primary component of A valid in some irredundant decomposition.
/// `primes` lists the associated primes of F/A. Throws IterationBound when no
/// exponent up to `bound` passes.
PrimaryComponentResult primary_component(const Submodule& a, const PrimeIdeal& p, const std::vector<PrimeIdeal>& primes,
                                         int bound = 50);

/// Primary decomposition of F/M. Components are sorted by codimension, then by
/// the canonical form of their primes. Throws InvalidArgument when M = F.
DecompositionResult primdec_ehv(const Submodule& m, const PrimdecOptions& options = {});

/// Canonical string of a prime, used for deterministic ordering.
std::string prime_key(const PrimeIdeal& p);

}  // namespace primdec

#endif  // PRIMDEC_PRIMDEC_HPP
