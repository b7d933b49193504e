#ifndef PRIMDEC_VERIFY_HPP
#define PRIMDEC_VERIFY_HPP

#include <string>
#include <vector>

#include "primdec/primdec.hpp"

namespace primdec {

/// Primary decomposition of a monomial ideal by repeated splitting
/// I = (I + <x^a>) + (I + <m/x^a>) on a generator x^a*m with gcd(x, m) = 1,
/// followed by grouping the irreducible pieces by radical. Independent of the
/// Groebner machinery apart from canonical forms. Throws InvalidArgument for
/// non-monomial input or the unit ideal.
DecompositionResult monomial_primdec_oracle(const Ideal& i);

struct PrimaryCheck {
  std::size_t index;
  bool ok;
  std::string reason;
};

struct ValidationReport {
  bool intersection_ok = false;
  std::vector<PrimaryCheck> primaries;
  bool irredundant_ok = false;
  bool primes_distinct_ok = false;

  bool primaries_ok() const;
  bool ok() const { return intersection_ok && primaries_ok() && irredundant_ok && primes_distinct_ok; }
};

/// Checks that the components intersect to M, that each Q_i is P_i-primary
/// (through min_ass of its annihilator and the Ext criterion), that the primes
/// are distinct, and that no component is redundant.
ValidationReport validate_decomposition(const Submodule& m, const DecompositionResult& d, unsigned seed = 0);

/// Decides v in span(A) by exact linear algebra over multipliers of total
/// degree <= degree_bound. "true" is always correct; "false" may only mean
/// the bound is too small.
bool membership_oracle(const FreeElement& v, const Submodule& a, int degree_bound);

}  // namespace primdec

#endif  // PRIMDEC_VERIFY_HPP
