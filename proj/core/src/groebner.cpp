#include "primdec/groebner.hpp"

#include <algorithm>
#include <numeric>

#include "primdec/error.hpp"

namespace primdec {

namespace {

ModuleExtension default_ext(const RingPtr& ring) { return ring->order().module_extension; }

// Sorts elements ascending by leading term; zero elements go first.
void sort_by_lead(std::vector<FreeElement>& v, const Ring& ring, ModuleExtension ext) {
  std::stable_sort(v.begin(), v.end(), [&](const FreeElement& a, const FreeElement& b) {
    int ca = a.leading_component(ext), cb = b.leading_component(ext);
    if (ca < 0 || cb < 0) return ca < 0 && cb >= 0;
    return ring.compare(ca, a[static_cast<std::size_t>(ca)].leading_monomial(), cb,
                        b[static_cast<std::size_t>(cb)].leading_monomial(), ext) < 0;
  });
}

// Groebner basis (position over term, top block dominating) of the given
// generators of R^(top+bottom); returns the bottom parts of the basis
// elements whose top part vanishes. These generate the intersection of the
// span with the bottom summand.
Submodule kernel_part(const RingPtr& ring, std::size_t top, std::size_t bottom, const std::vector<FreeElement>& gens) {
  GroebnerEngine engine(ring, top + bottom, ModuleExtension::PositionOverTerm);
  std::vector<FreeElement> sorted = gens;
  sort_by_lead(sorted, *ring, ModuleExtension::PositionOverTerm);
  for (const auto& g : sorted) engine.add(g);
  engine.complete();
  GroebnerBasis gb = engine.reduced_basis();
  Submodule out(ring, bottom);
  for (const auto& e : gb.elements()) {
    int c = e.leading_component(ModuleExtension::PositionOverTerm);
    if (c >= static_cast<int>(top)) out.add(e.slice(top, top + bottom));
  }
  return out;
}

void check_rank(const Submodule& a, const Submodule& b) {
  if (a.rank() != b.rank()) throw RankMismatch(a.rank(), b.rank());
  if (!same_ring(a.ring(), b.ring())) throw RingMismatch();
}

}  // namespace

bool GroebnerBasis::is_whole_module() const {
  std::vector<bool> hit(rank_, false);
  for (const auto& e : elements_) {
    int c = e.leading_component(ext_);
    if (c >= 0 && e[static_cast<std::size_t>(c)].leading_monomial().is_one()) hit[static_cast<std::size_t>(c)] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

GroebnerEngine::GroebnerEngine(RingPtr ring, std::size_t rank, ModuleExtension ext)
    : ring_(std::move(ring)), rank_(rank), ext_(ext) {}

FreeElement GroebnerEngine::reduce_with(const FreeElement& v, int skip, bool active_only) const {
  if (v.rank() != rank_) throw RankMismatch(rank_, v.rank());
  FreeElement work = v;
  FreeElement result(ring_, rank_);
  for (;;) {
    int c = work.leading_component(ext_);
    if (c < 0) break;
    auto cu = static_cast<std::size_t>(c);
    const Term& lt = work[cu].leading_term();
    const Element* divisor = nullptr;
    for (std::size_t k = 0; k < elements_.size(); ++k) {
      const Element& e = elements_[k];
      if (static_cast<int>(k) == skip || (active_only && !e.active)) continue;
      if (e.comp == c && lt.mono.divisible_by(e.lead)) {
        divisor = &e;
        break;
      }
    }
    if (divisor) {
      Rational coeff = lt.coeff;
      Monomial m = lt.mono / divisor->lead;
      work.sub_mul_term(coeff, m, divisor->v);
      ++reductions_;
    } else {
      result[cu].push_back_term(work[cu].pop_leading());
    }
  }
  return result;
}

FreeElement GroebnerEngine::reduce(const FreeElement& v) const { return reduce_with(v, -1, false); }

void GroebnerEngine::insert(FreeElement v) {
  int comp = v.leading_component(ext_);
  auto cu = static_cast<std::size_t>(comp);
  if (v[cu].leading_coeff() != 1) v = v.scaled(1 / v[cu].leading_coeff());
  Monomial lead = v[cu].leading_monomial();
  int h = static_cast<int>(elements_.size());

  std::vector<Pair> candidates;
  for (int g = 0; g < h; ++g) {
    const Element& e = elements_[static_cast<std::size_t>(g)];
    if (e.active && e.comp == comp) candidates.push_back({g, h, comp, e.lead.lcm(lead)});
  }
  // The coprime-lead criterion only holds for polynomials, not module elements.
  auto coprime = [&](const Pair& p) { return rank_ == 1 && lead.coprime(elements_[static_cast<std::size_t>(p.i)].lead); };
  std::vector<Pair> kept;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    const Pair& p = candidates[k];
    if (coprime(p)) {
      kept.push_back(p);
      continue;
    }
    bool dominated = false;
    for (std::size_t l = k + 1; l < candidates.size() && !dominated; ++l)
      dominated = p.lcm.divisible_by(candidates[l].lcm);
    for (std::size_t l = 0; l < kept.size() && !dominated; ++l) dominated = p.lcm.divisible_by(kept[l].lcm);
    if (!dominated) kept.push_back(p);
  }

  std::vector<Pair> next;
  next.reserve(pairs_.size() + kept.size());
  for (auto& p : pairs_) {
    bool drop = p.comp == comp && p.lcm.divisible_by(lead) &&
                elements_[static_cast<std::size_t>(p.i)].lead.lcm(lead) != p.lcm &&
                elements_[static_cast<std::size_t>(p.j)].lead.lcm(lead) != p.lcm;
    if (!drop) next.push_back(std::move(p));
  }
  for (auto& p : kept)
    if (!coprime(p)) next.push_back(std::move(p));
  pairs_ = std::move(next);

  for (auto& e : elements_)
    if (e.active && e.comp == comp && e.lead.divisible_by(lead)) e.active = false;
  elements_.push_back({std::move(v), comp, lead, true});
}

bool GroebnerEngine::add(const FreeElement& v) {
  FreeElement r = reduce(v);
  if (r.is_zero()) return false;
  insert(std::move(r));
  return true;
}

void GroebnerEngine::complete() {
  while (!pairs_.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      int c = ring_->compare(a.comp, a.lcm, b.comp, b.lcm, ext_);
      if (c < 0 || (c == 0 && std::pair(a.j, a.i) < std::pair(b.j, b.i))) best = k;
    }
    Pair p = std::move(pairs_[best]);
    pairs_[best] = std::move(pairs_.back());
    pairs_.pop_back();

    const Element& ei = elements_[static_cast<std::size_t>(p.i)];
    const Element& ej = elements_[static_cast<std::size_t>(p.j)];
    FreeElement s = ei.v.mul_term(Rational(1), p.lcm / ei.lead);
    s.sub_mul_term(Rational(1), p.lcm / ej.lead, ej.v);
    FreeElement h = reduce(s);
    if (!h.is_zero()) insert(std::move(h));
  }
}

GroebnerBasis GroebnerEngine::reduced_basis() const {
  std::vector<FreeElement> out;
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    if (!elements_[k].active) continue;
    FreeElement r = reduce_with(elements_[k].v, static_cast<int>(k), true);
    auto c = static_cast<std::size_t>(r.leading_component(ext_));
    if (r[c].leading_coeff() != 1) r = r.scaled(1 / r[c].leading_coeff());
    out.push_back(std::move(r));
  }
  sort_by_lead(out, *ring_, ext_);
  return GroebnerBasis(ring_, rank_, ext_, std::move(out), true);
}

FreeElement normal_form(const FreeElement& v, const GroebnerBasis& g) {
  if (v.rank() != g.rank()) throw RankMismatch(v.rank(), g.rank());
  GroebnerEngine engine(g.ring(), g.rank(), g.extension());
  // The elements already form a basis, so inserting them creates no work.
  for (const auto& e : g.elements()) engine.add(e);
  return engine.reduce(v);
}

GroebnerBasis buchberger(const Submodule& a) { return buchberger(a, default_ext(a.ring())); }

GroebnerBasis buchberger(const Submodule& a, ModuleExtension ext) {
  GroebnerEngine engine(a.ring(), a.rank(), ext);
  std::vector<FreeElement> gens = a.gens();
  sort_by_lead(gens, *a.ring(), ext);
  for (const auto& g : gens) engine.add(g);
  engine.complete();
  return engine.reduced_basis();
}

Submodule canonical(const Submodule& a) { return buchberger(a).as_submodule(); }

bool same_submodule(const Submodule& a, const Submodule& b) {
  check_rank(a, b);
  return canonical(a).gens() == canonical(b).gens();
}

bool operator==(const Submodule& a, const Submodule& b) { return same_submodule(a, b); }

Submodule syzygies(const Submodule& a) {
  std::size_t s = a.rank(), k = a.ncols();
  std::vector<FreeElement> gens;
  gens.reserve(k);
  for (std::size_t i = 0; i < k; ++i) gens.push_back(a.gen(i).concat(FreeElement::unit(a.ring(), k, i)));
  return kernel_part(a.ring(), s, k, gens);
}

Submodule lift(const Submodule& a, const Submodule& b) {
  check_rank(a, b);
  std::size_t s = a.rank(), k = a.ncols();
  GroebnerEngine engine(a.ring(), s + k, ModuleExtension::PositionOverTerm);
  for (std::size_t i = 0; i < k; ++i) engine.add(a.gen(i).concat(FreeElement::unit(a.ring(), k, i)));
  engine.complete();
  Submodule out(a.ring(), k);
  for (std::size_t j = 0; j < b.ncols(); ++j) {
    FreeElement w = engine.reduce(b.gen(j).concat(FreeElement(a.ring(), k)));
    if (!w.slice(0, s).is_zero()) throw NotMember(j);
    out.add(-w.slice(s, s + k));
  }
  return out;
}

Submodule modulo_kernel(const Submodule& a, const Submodule& b) {
  check_rank(a, b);
  std::size_t r = a.rank(), p = a.ncols();
  std::vector<FreeElement> gens;
  for (std::size_t i = 0; i < p; ++i) gens.push_back(a.gen(i).concat(FreeElement::unit(a.ring(), p, i)));
  for (const auto& g : b.gens()) gens.push_back(g.concat(FreeElement(a.ring(), p)));
  return kernel_part(a.ring(), r, p, gens);
}

Submodule intersect(const Submodule& a, const Submodule& b) {
  check_rank(a, b);
  std::size_t s = a.rank();
  std::vector<FreeElement> gens;
  for (const auto& g : a.gens()) gens.push_back(g.concat(g));
  for (const auto& g : b.gens()) gens.push_back(g.concat(FreeElement(a.ring(), s)));
  return kernel_part(a.ring(), s, s, gens);
}

Ideal quotient(const Submodule& a, const FreeElement& b) {
  if (a.rank() != b.rank()) throw RankMismatch(a.rank(), b.rank());
  if (b.is_zero()) return Submodule::unit_ideal(a.ring());
  std::vector<FreeElement> gens;
  gens.push_back(b.concat(FreeElement::unit(a.ring(), 1, 0)));
  for (const auto& g : a.gens()) gens.push_back(g.concat(FreeElement(a.ring(), 1)));
  return kernel_part(a.ring(), a.rank(), 1, gens);
}

Ideal quotient(const Submodule& a, const Submodule& b) {
  check_rank(a, b);
  Ideal result = Submodule::unit_ideal(a.ring());
  bool first = true;
  for (const auto& g : b.gens()) {
    if (g.is_zero()) continue;
    Ideal q = quotient(a, g);
    result = first ? q : intersect(result, q);
    first = false;
  }
  return first ? result : canonical(result);
}

Ideal annihilator(const Submodule& a) { return quotient(a, Submodule::free_module(a.ring(), a.rank())); }

Submodule quotient_by_ideal(const Submodule& a, const Ideal& j) {
  if (!j.is_ideal()) throw RankMismatch(1, j.rank());
  std::size_t s = a.rank();
  Submodule result = Submodule::free_module(a.ring(), s);
  bool first = true;
  for (const auto& p : j.ideal_generators()) {
    if (p.is_zero()) continue;
    std::vector<FreeElement> gens;
    for (std::size_t i = 0; i < s; ++i) {
      FreeElement e = FreeElement::unit(a.ring(), s, i);
      gens.push_back(e.scaled(p).concat(e));
    }
    for (const auto& g : a.gens()) gens.push_back(g.concat(FreeElement(a.ring(), s)));
    Submodule q = kernel_part(a.ring(), s, s, gens);
    result = first ? q : intersect(result, q);
    first = false;
  }
  return canonical(result);
}

SaturationResult saturate(const Submodule& a, const Ideal& j) {
  Submodule current = canonical(a);
  int exponent = 0;
  for (;;) {
    Submodule next = quotient_by_ideal(current, j);
    if (next.gens() == current.gens()) return {current, exponent};
    current = std::move(next);
    ++exponent;
  }
}

Ideal eliminate(const Ideal& ideal, std::span<const int> vars) {
  const RingPtr& ring = ideal.ring();
  int n = ring->nvars();
  std::vector<bool> drop(static_cast<std::size_t>(n), false);
  for (int v : vars) {
    if (v < 0 || v >= n) throw InvalidArgument("eliminate: variable index out of range");
    drop[static_cast<std::size_t>(v)] = true;
  }
  int k = static_cast<int>(std::count(drop.begin(), drop.end(), true));
  if (k == 0 || k == n) throw InvalidArgument("eliminate: need a nonempty proper subset of variables");
  std::vector<int> perm;
  for (int i = 0; i < n; ++i)
    if (drop[static_cast<std::size_t>(i)]) perm.push_back(i);
  for (int i = 0; i < n; ++i)
    if (!drop[static_cast<std::size_t>(i)]) perm.push_back(i);
  std::vector<std::string> names;
  for (int p : perm) names.push_back(ring->variable_names()[static_cast<std::size_t>(p)]);
  RingPtr block = make_ring(names, MonomialOrder::block(k));
  std::vector<int> inverse(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) inverse[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;

  std::vector<Polynomial> mapped;
  for (const auto& p : ideal.ideal_generators()) mapped.push_back(map_variables(p, block, perm));
  GroebnerBasis gb = buchberger(Submodule::ideal(block, mapped));
  std::vector<Polynomial> kept;
  for (const auto& e : gb.elements()) {
    const Monomial& lead = e[0].leading_monomial();
    bool free_of_dropped = true;
    for (int i = 0; i < k; ++i) free_of_dropped = free_of_dropped && lead[i] == 0;
    if (free_of_dropped) kept.push_back(map_variables(e[0], ring, inverse));
  }
  return canonical(Submodule::ideal(ring, kept));
}

namespace {

// Largest variable set U with no support mask contained in U.
uint32_t max_independent_mask(const std::vector<uint32_t>& supports, int n, int* size) {
  uint32_t best = 0;
  int best_size = -1;
  uint32_t full = n >= 32 ? ~0u : ((1u << n) - 1);
  for (uint64_t mask = static_cast<uint64_t>(full) + 1; mask-- > 0;) {
    auto m = static_cast<uint32_t>(mask);
    int pc = __builtin_popcount(m);
    if (pc <= best_size) continue;
    bool ok = true;
    for (uint32_t s : supports)
      if ((s & ~m) == 0) {
        ok = false;
        break;
      }
    if (ok) {
      best = m;
      best_size = pc;
    }
  }
  *size = best_size;
  return best;
}

}  // namespace

int krull_dim(const GroebnerBasis& g) {
  int n = g.ring()->nvars();
  int dim = -1;
  for (std::size_t c = 0; c < g.rank(); ++c) {
    std::vector<uint32_t> supports;
    bool trivial = false;
    for (const auto& e : g.elements()) {
      if (e.leading_component(g.extension()) != static_cast<int>(c)) continue;
      const Monomial& lead = e[c].leading_monomial();
      if (lead.is_one()) trivial = true;
      supports.push_back(lead.support());
    }
    if (trivial) continue;
    int size = 0;
    max_independent_mask(supports, n, &size);
    dim = std::max(dim, size);
  }
  return dim;
}

int krull_dim(const Submodule& a) { return krull_dim(buchberger(a)); }

int codim(const Submodule& a) { return a.ring()->nvars() - krull_dim(a); }

std::vector<int> independent_set(const GroebnerBasis& g) {
  if (g.rank() != 1) throw InvalidArgument("independent_set needs an ideal");
  std::vector<uint32_t> supports;
  for (const auto& e : g.elements()) supports.push_back(e[0].leading_monomial().support());
  int size = 0;
  uint32_t mask = max_independent_mask(supports, g.ring()->nvars(), &size);
  if (size < 0) throw InvalidArgument("independent_set of the unit ideal");
  std::vector<int> out;
  for (int i = 0; i < g.ring()->nvars(); ++i)
    if (mask & (1u << i)) out.push_back(i);
  return out;
}

bool is_sub(const Submodule& a, const Submodule& b) {
  check_rank(a, b);
  GroebnerBasis gb = buchberger(b);
  GroebnerEngine engine(b.ring(), b.rank(), gb.extension());
  for (const auto& e : gb.elements()) engine.add(e);
  for (const auto& g : a.gens())
    if (!engine.reduce(g).is_zero()) return false;
  return true;
}

Submodule prune_generators(const Submodule& a) {
  ModuleExtension ext = default_ext(a.ring());
  std::vector<FreeElement> gens = a.without_zeros().gens();
  sort_by_lead(gens, *a.ring(), ext);
  GroebnerEngine engine(a.ring(), a.rank(), ext);
  Submodule out(a.ring(), a.rank());
  for (const auto& g : gens) {
    if (engine.reduce(g).is_zero()) continue;
    engine.add(g);
    engine.complete();
    out.add(g);
  }
  return out;
}

}  // namespace primdec
