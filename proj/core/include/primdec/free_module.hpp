#ifndef PRIMDEC_FREE_MODULE_HPP
#define PRIMDEC_FREE_MODULE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "primdec/polynomial.hpp"

namespace primdec {

/// Leading term of a free-module element: e_component * coeff * mono.
struct LeadingTerm {
  int component;
  Rational coeff;
  Monomial mono;
};

/// Element of the free module R^s, stored componentwise.
class FreeElement {
 public:
  FreeElement(RingPtr ring, std::size_t rank);
  FreeElement(RingPtr ring, std::vector<Polynomial> components);
  /// Rank-one element wrapping a polynomial.
  explicit FreeElement(const Polynomial& p);

  static FreeElement unit(RingPtr ring, std::size_t rank, std::size_t index);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return comps_.size(); }
  const Polynomial& operator[](std::size_t i) const { return comps_[i]; }
  Polynomial& operator[](std::size_t i) { return comps_[i]; }
  const std::vector<Polynomial>& components() const { return comps_; }

  bool is_zero() const;
  /// Component index holding the leading term, or -1 for zero.
  int leading_component(ModuleExtension ext) const;

  FreeElement operator+(const FreeElement& v) const;
  FreeElement operator-(const FreeElement& v) const;
  FreeElement operator-() const;
  FreeElement scaled(const Polynomial& p) const;
  FreeElement scaled(const Rational& c) const;
  FreeElement mul_term(const Rational& c, const Monomial& m) const;
  void sub_mul_term(const Rational& c, const Monomial& m, const FreeElement& g);

  /// Direct sum (this, v) in rank() + v.rank().
  FreeElement concat(const FreeElement& v) const;
  /// Components [lo, hi).
  FreeElement slice(std::size_t lo, std::size_t hi) const;

  friend bool operator==(const FreeElement& a, const FreeElement& b);

  /// "p" for rank one, otherwise "[p1,...,ps]".
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> comps_;
};

/// Throws InvalidArgument on the zero element.
LeadingTerm leading_term(const FreeElement& v, ModuleExtension ext);

/// Finitely generated submodule of R^rank given by generators. Doubles as a
/// rank x gens().size() matrix whose columns are the generators.
class Submodule {
 public:
  Submodule(RingPtr ring, std::size_t rank) : ring_(std::move(ring)), rank_(rank) {}
  Submodule(RingPtr ring, std::size_t rank, std::vector<FreeElement> gens);

  static Submodule ideal(RingPtr ring, const std::vector<Polynomial>& gens);
  static Submodule free_module(RingPtr ring, std::size_t rank);
  static Submodule unit_ideal(RingPtr ring) { return free_module(std::move(ring), 1); }

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  std::size_t ncols() const { return gens_.size(); }
  const std::vector<FreeElement>& gens() const { return gens_; }
  const FreeElement& gen(std::size_t i) const { return gens_[i]; }
  const Polynomial& entry(std::size_t row, std::size_t col) const { return gens_[col][row]; }
  bool is_ideal() const { return rank_ == 1; }

  void add(FreeElement v);
  /// Generators as polynomials; requires rank 1.
  std::vector<Polynomial> ideal_generators() const;
  /// Copy without zero generators.
  Submodule without_zeros() const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::size_t rank_;
  std::vector<FreeElement> gens_;
};

using Ideal = Submodule;

Submodule transpose(const Submodule& a);
/// Matrix product (rank(a) x ncols(a)) * (rank(b) x ncols(b)); needs ncols(a) == rank(b).
Submodule multiply(const Submodule& a, const Submodule& b);
/// Generators of a followed by generators of b (module sum / column concatenation).
Submodule sum(const Submodule& a, const Submodule& b);
/// J * A, generated by products of generators.
Submodule product(const Ideal& j, const Submodule& a);

}  // namespace primdec

#endif  // PRIMDEC_FREE_MODULE_HPP
