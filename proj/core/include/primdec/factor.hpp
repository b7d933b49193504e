#ifndef PRIMDEC_FACTOR_HPP
#define PRIMDEC_FACTOR_HPP

#include <vector>

#include "primdec/polynomial.hpp"

namespace primdec {

struct Factor {
  Polynomial factor;
  int multiplicity;
};

/// Irreducible factorization over Q of a polynomial in at most one variable.
/// Factors are monic, nonconstant and sorted by degree then by terms; their
/// product with multiplicities equals f up to the leading coefficient.
/// Throws InvalidArgument for f = 0 or when more than one variable occurs.
std::vector<Factor> univariate_factor(const Polynomial& f);

/// Irreducible factorization over Q of a multivariate polynomial, built on
/// univariate_factor through Kronecker substitution. Same conventions.
std::vector<Factor> factor(const Polynomial& f);

/// Product of the distinct irreducible factors of f, monic.
Polynomial squarefree_part(const Polynomial& f);

}  // namespace primdec

#endif  // PRIMDEC_FACTOR_HPP
