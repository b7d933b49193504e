#ifndef PRIMDEC_POLYNOMIAL_HPP
#define PRIMDEC_POLYNOMIAL_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "primdec/rational.hpp"
#include "primdec/ring.hpp"

namespace primdec {

struct Term {
  Rational coeff;
  Monomial mono;
};

/// Sparse polynomial over Q. Terms are kept strictly descending in the ring
/// order with no zero coefficients, so equal polynomials have equal term lists.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  /// Sorts, merges duplicate monomials and drops zeros.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, int index);
  static Polynomial monomial(RingPtr ring, const Rational& c, const Monomial& m);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Rational& leading_coeff() const { return terms_.front().coeff; }

  int64_t total_degree() const;  // -1 for zero
  int32_t degree_in(int var) const;
  /// Bitmask of variables occurring in some term.
  uint32_t support() const;

  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
  Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }
  Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }

  Polynomial scaled(const Rational& c) const;
  Polynomial mul_term(const Rational& c, const Monomial& m) const;
  Polynomial pow(unsigned e) const;
  /// Leading coefficient 1; zero stays zero.
  Polynomial monic() const;

  /// *this -= c * m * g, in one merge pass.
  void sub_mul_term(const Rational& c, const Monomial& m, const Polynomial& g);
  /// Removes and returns the leading term.
  Term pop_leading();
  /// Appends a term smaller than every present term.
  void push_back_term(Term t) { terms_.push_back(std::move(t)); }

  friend bool operator==(const Polynomial& f, const Polynomial& g);

  std::string to_string() const;

 private:
  void check_ring(const Polynomial& g) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial poly_add(const Polynomial& f, const Polynomial& g);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);

/// Exact quotient f / g if g divides f, otherwise nullopt.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);

/// Re-expresses f over `target`, whose variable k is f's variable perm[k].
/// Variables of f missing from perm must not occur in f.
Polynomial map_variables(const Polynomial& f, const RingPtr& target, std::span<const int> perm);

/// Substitutes var := replacement.
Polynomial substitute(const Polynomial& f, int var, const Polynomial& replacement);

/// Multiplies by the lcm of denominators and divides by the content, making
/// the leading coefficient positive. Zero stays zero.
Polynomial primitive_integer_part(const Polynomial& f);

std::string monomial_to_string(const Monomial& m, const Ring& ring);

}  // namespace primdec

#endif  // PRIMDEC_POLYNOMIAL_HPP
