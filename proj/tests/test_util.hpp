#ifndef PRIMDEC_TESTS_TEST_UTIL_HPP
#define PRIMDEC_TESTS_TEST_UTIL_HPP

#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "primdec/free_module.hpp"
#include "primdec/script.hpp"

namespace primdec {

// Readable gtest failure messages.
inline void PrintTo(const Submodule& m, std::ostream* os) { *os << m.to_string(); }
inline void PrintTo(const Polynomial& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const FreeElement& v, std::ostream* os) { *os << v.to_string(); }

}  // namespace primdec

namespace primdec::testing {

/// Q[vars] with degrevlex.
inline RingPtr ring_of(std::vector<std::string> vars) { return make_ring(std::move(vars)); }

inline Polynomial P(const RingPtr& r, const std::string& text) { return parse_polynomial(text, r); }

inline Ideal I(const RingPtr& r, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(P(r, g));
  return Submodule::ideal(r, ps);
}

inline FreeElement V(const RingPtr& r, const std::vector<std::string>& comps) {
  std::vector<Polynomial> ps;
  for (const auto& c : comps) ps.push_back(P(r, c));
  return FreeElement(r, ps);
}

inline Submodule M(const RingPtr& r, std::size_t rank, const std::vector<std::vector<std::string>>& gens) {
  Submodule m(r, rank);
  for (const auto& g : gens) m.add(V(r, g));
  return m;
}

/// Random monomial ideal: `gens` generators of degree 1..max_deg.
inline Ideal random_monomial_ideal(const RingPtr& r, std::mt19937& rng, int gens, int max_deg) {
  int n = r->nvars();
  std::uniform_int_distribution<int> var(0, n - 1);
  std::uniform_int_distribution<int> deg(1, max_deg);
  std::vector<Polynomial> ps;
  for (int g = 0; g < gens; ++g) {
    Monomial m;
    int d = deg(rng);
    for (int k = 0; k < d; ++k) m[var(rng)] += 1;
    ps.push_back(Polynomial::monomial(r, Rational(1), m));
  }
  return Submodule::ideal(r, ps);
}

/// Random polynomial with small integer coefficients.
inline Polynomial random_polynomial(const RingPtr& r, std::mt19937& rng, int terms, int max_deg) {
  int n = r->nvars();
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> var(0, n - 1);
  std::vector<Term> ts;
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    int d = deg(rng);
    for (int k = 0; k < d; ++k) m[var(rng)] += 1;
    int c = coeff(rng);
    if (c == 0) c = 1;
    ts.push_back({Rational(c), m});
  }
  return Polynomial(r, std::move(ts));
}

}  // namespace primdec::testing

#endif  // PRIMDEC_TESTS_TEST_UTIL_HPP
