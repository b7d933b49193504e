#ifndef PRIMDEC_GROEBNER_HPP
#define PRIMDEC_GROEBNER_HPP

#include <span>
#include <vector>

#include "primdec/free_module.hpp"

namespace primdec {

/// Reduced Groebner basis of a submodule of R^rank: monic elements, sorted
/// ascending by leading term, no term divisible by another element's lead.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, std::size_t rank, ModuleExtension ext, std::vector<FreeElement> elements,
                bool reduced = true)
      : ring_(std::move(ring)), rank_(rank), ext_(ext), elements_(std::move(elements)), reduced_(reduced) {}

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  ModuleExtension extension() const { return ext_; }
  const std::vector<FreeElement>& elements() const { return elements_; }
  bool reduced() const { return reduced_; }
  Submodule as_submodule() const { return Submodule(ring_, rank_, elements_); }
  /// True when the basis spans the whole free module.
  bool is_whole_module() const;

 private:
  RingPtr ring_;
  std::size_t rank_;
  ModuleExtension ext_;
  std::vector<FreeElement> elements_;
  bool reduced_;
};

/// Incremental Buchberger engine. Single use, not thread safe.
///
/// Pairs are only formed between elements with the same leading component and
/// are pruned with the Gebauer-Moeller criteria. The next pair is always the
/// one with the smallest lcm (normal strategy), ties broken by index.
class GroebnerEngine {
 public:
  GroebnerEngine(RingPtr ring, std::size_t rank, ModuleExtension ext);

  /// Reduces v and inserts the remainder when nonzero; returns whether it was inserted.
  bool add(const FreeElement& v);
  /// Processes pending pairs until the current elements form a Groebner basis.
  void complete();
  /// Full normal form with respect to the current elements.
  FreeElement reduce(const FreeElement& v) const;
  /// Interreduced, sorted basis. Call complete() first.
  GroebnerBasis reduced_basis() const;

  std::size_t pair_count() const { return pairs_.size(); }
  std::size_t reductions() const { return reductions_; }

 private:
  struct Element {
    FreeElement v;
    int comp;
    Monomial lead;
    bool active;
  };
  struct Pair {
    int i;
    int j;
    int comp;
    Monomial lcm;
  };

  FreeElement reduce_with(const FreeElement& v, int skip, bool active_only) const;
  void insert(FreeElement v);

  RingPtr ring_;
  std::size_t rank_;
  ModuleExtension ext_;
  std::vector<Element> elements_;
  std::vector<Pair> pairs_;
  mutable std::size_t reductions_ = 0;
};

FreeElement normal_form(const FreeElement& v, const GroebnerBasis& g);

GroebnerBasis buchberger(const Submodule& a);
GroebnerBasis buchberger(const Submodule& a, ModuleExtension ext);

/// Reduced Groebner basis as a submodule: equal submodules have equal canonical forms.
Submodule canonical(const Submodule& a);
bool same_submodule(const Submodule& a, const Submodule& b);
bool operator==(const Submodule& a, const Submodule& b);

Submodule syzygies(const Submodule& a);
/// Matrix T with b = a * T; throws NotMember naming the first bad column of b.
Submodule lift(const Submodule& a, const Submodule& b);
/// {x : a*x in column span of b}.
Submodule modulo_kernel(const Submodule& a, const Submodule& b);
Submodule intersect(const Submodule& a, const Submodule& b);
/// (a : b) = {r : r*b in a}.
Ideal quotient(const Submodule& a, const Submodule& b);
Ideal quotient(const Submodule& a, const FreeElement& b);
/// Ann(F/a).
Ideal annihilator(const Submodule& a);
/// {v : J*v in a}.
Submodule quotient_by_ideal(const Submodule& a, const Ideal& j);

struct SaturationResult {
  Submodule module;
  int exponent;
};
/// Iterates a := (a : J) until the canonical form stops changing.
SaturationResult saturate(const Submodule& a, const Ideal& j);

/// I intersected with the subring on the variables not in `vars`.
Ideal eliminate(const Ideal& i, std::span<const int> vars);

/// Krull dimension of F/span(G) from the leading-term module: n for the zero
/// module, -1 when G spans F.
int krull_dim(const GroebnerBasis& g);
int krull_dim(const Submodule& a);
/// nvars - krull_dim; nvars + 1 for the whole module.
int codim(const Submodule& a);
/// A maximal-size set of variables independent modulo the leading ideal
/// (rank-one bases only), as sorted variable indices.
std::vector<int> independent_set(const GroebnerBasis& g);

bool is_sub(const Submodule& a, const Submodule& b);

/// Drops generators lying in the span of the earlier kept ones, visiting them
/// in ascending leading-term order.
Submodule prune_generators(const Submodule& a);

}  // namespace primdec

#endif  // PRIMDEC_GROEBNER_HPP
