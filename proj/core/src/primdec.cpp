#include "primdec/primdec.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "primdec/error.hpp"
#include "primdec/factor.hpp"
#include "primdec/homology.hpp"

namespace primdec {

namespace {

Ideal unit(const RingPtr& r) { return Submodule::unit_ideal(r); }

Ideal add_poly(const Ideal& i, const Polynomial& f) {
  Ideal out = i;
  out.add(FreeElement(f));
  return canonical(out);
}

bool is_unit(const Submodule& a) { return krull_dim(a) < 0; }

Submodule intersect_all(const std::vector<Submodule>& parts, const RingPtr& ring, std::size_t rank) {
  if (parts.empty()) return Submodule::free_module(ring, rank);
  Submodule acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = intersect(acc, parts[i]);
  return canonical(acc);
}

// Polynomials viewed in a permuted ring: the y variables first under lex, then
// the parameters u under degrevlex, so that a basis there is a basis over K(u).
struct BlockView {
  RingPtr original;
  RingPtr ring;
  std::vector<int> perm;     // view variable k is original variable perm[k]
  std::vector<int> inverse;  // original variable k is view variable inverse[k]
  int ny;

  BlockView(const RingPtr& r, const std::vector<int>& y, const std::vector<int>& u)
      : original(r), ny(static_cast<int>(y.size())) {
    perm = y;
    perm.insert(perm.end(), u.begin(), u.end());
    inverse.assign(perm.size(), 0);
    std::vector<std::string> names;
    for (std::size_t k = 0; k < perm.size(); ++k) {
      inverse[static_cast<std::size_t>(perm[k])] = static_cast<int>(k);
      names.push_back(r->variable_names()[static_cast<std::size_t>(perm[k])]);
    }
    MonomialOrder order = u.empty() ? MonomialOrder::lex() : MonomialOrder::block(ny, OrderKind::Lex, OrderKind::DegRevLex);
    ring = make_ring(names, order);
  }

  Polynomial to(const Polynomial& f) const { return map_variables(f, ring, perm); }
  Polynomial from(const Polynomial& f) const { return map_variables(f, original, inverse); }

  Monomial y_part(const Monomial& m) const {
    Monomial out;
    for (int i = 0; i < ny; ++i) out[i] = m[i];
    return out;
  }

  // Coefficient in K[u] of the leading y-monomial.
  Polynomial lead_coeff(const Polynomial& f) const {
    Monomial ly = y_part(f.leading_monomial());
    std::vector<Term> ts;
    for (const auto& t : f.terms())
      if (y_part(t.mono) == ly) ts.push_back({t.coeff, t.mono / ly});
    return Polynomial(ring, std::move(ts));
  }

  GroebnerBasis basis(const Ideal& i) const {
    std::vector<Polynomial> mapped;
    for (const auto& g : i.ideal_generators()) mapped.push_back(to(g));
    return buchberger(Submodule::ideal(ring, mapped));
  }
};

// Product of the distinct irreducible factors of the leading coefficients over K[u].
Polynomial lead_coeff_product(const BlockView& v, const GroebnerBasis& gb) {
  std::map<std::string, Polynomial> distinct;
  for (const auto& e : gb.elements()) {
    Polynomial c = v.lead_coeff(e[0]);
    if (c.is_constant()) continue;
    for (const auto& f : factor(c)) distinct.try_emplace(f.factor.to_string(), f.factor);
  }
  Polynomial h = Polynomial::constant(v.ring, Rational(1));
  for (const auto& [k, f] : distinct) h *= f;
  return v.from(h);
}

// Splitting data for an eliminant: the distinct factors involving `var`, and
// whether some factor is repeated.
struct Split {
  std::vector<Polynomial> factors;
  bool repeated = false;
};

Split split_in(const Polynomial& f, int var) {
  Split s;
  for (const auto& fac : factor(f)) {
    if (fac.factor.degree_in(var) == 0) continue;
    s.factors.push_back(fac.factor);
    if (fac.multiplicity > 1) s.repeated = true;
  }
  return s;
}

// Element of the view basis whose leading y-monomial is a pure power of the
// last y variable, with the lowest such power.
std::optional<Polynomial> eliminant(const BlockView& v, const GroebnerBasis& gb) {
  std::optional<Polynomial> best;
  int last = v.ny - 1;
  for (const auto& e : gb.elements()) {
    Monomial ly = v.y_part(e[0].leading_monomial());
    bool pure = true;
    for (int i = 0; i < last; ++i) pure = pure && ly[i] == 0;
    if (!pure || ly[last] == 0) continue;
    if (!best || ly[last] < v.y_part(best->leading_monomial())[last]) best = e[0];
  }
  return best;
}

class Gtz {
 public:
  Gtz(RingPtr ring, unsigned seed) : ring_(std::move(ring)), seed_(seed) {}

  void comps(const Ideal& input, std::vector<Ideal>& out) {
    Ideal i = canonical(input);
    if (is_unit(i)) return;
    std::vector<Polynomial> gens = i.ideal_generators();
    if (gens.empty()) {
      out.push_back(i);
      return;
    }
    if (std::all_of(gens.begin(), gens.end(), [](const Polynomial& g) { return g.is_monomial(); })) {
      monomial_primes(gens, out);
      return;
    }
    for (const auto& g : gens) {
      if (g.total_degree() < 2) continue;
      std::vector<Factor> fs;
      try {
        fs = factor(g);
      } catch (const InvalidArgument&) {
        continue;
      }
      if (fs.size() >= 2) {
        for (const auto& f : fs) comps(add_poly(i, f.factor), out);
        return;
      }
      if (fs.size() == 1 && fs[0].multiplicity > 1) {
        comps(add_poly(i, fs[0].factor), out);
        return;
      }
    }
    bool linear = std::all_of(gens.begin(), gens.end(), [](const Polynomial& g) { return g.total_degree() <= 1; });
    if (linear || gens.size() == 1) {
      out.push_back(i);
      return;
    }
    std::vector<int> u = independent_set(buchberger(i));
    std::vector<int> y;
    for (int k = 0; k < ring_->nvars(); ++k)
      if (!std::binary_search(u.begin(), u.end(), k)) y.push_back(k);
    BlockView view(ring_, y, u);
    GroebnerBasis gb = view.basis(i);
    Polynomial h = u.empty() ? Polynomial::constant(ring_, Rational(1)) : lead_coeff_product(view, gb);
    zero_dim(i, y, u, 0, out);
    if (!h.is_constant())
      for (const auto& f : factor(h)) comps(add_poly(i, f.factor), out);
  }

 private:
  // Minimal vertex covers of the generator supports.
  void monomial_primes(const std::vector<Polynomial>& gens, std::vector<Ideal>& out) {
    std::vector<uint32_t> supports;
    for (const auto& g : gens) supports.push_back(g.leading_monomial().support());
    std::set<uint32_t> covers;
    cover(supports, 0, 0, covers);
    for (uint32_t c : covers) {
      bool minimal = true;
      for (uint32_t d : covers)
        if (d != c && (d & c) == d) minimal = false;
      if (!minimal) continue;
      std::vector<Polynomial> vars;
      for (int k = 0; k < ring_->nvars(); ++k)
        if (c & (1u << k)) vars.push_back(Polynomial::variable(ring_, k));
      out.push_back(canonical(Submodule::ideal(ring_, vars)));
    }
  }

  void cover(const std::vector<uint32_t>& supports, std::size_t from, uint32_t chosen, std::set<uint32_t>& out) {
    std::size_t k = from;
    while (k < supports.size() && (supports[k] & chosen)) ++k;
    if (k == supports.size()) {
      out.insert(chosen);
      return;
    }
    for (int v = 0; v < ring_->nvars(); ++v)
      if (supports[k] & (1u << v)) cover(supports, k + 1, chosen | (1u << v), out);
  }

  // Primes of the contraction of I K(u)[y], where I K(u)[y] is zero-dimensional.
  void zero_dim(const Ideal& input, const std::vector<int>& y, const std::vector<int>& u, int attempt,
                std::vector<Ideal>& out) {
    BlockView view(ring_, y, u);
    GroebnerBasis gb = view.basis(input);
    for (const auto& e : gb.elements())
      if (view.y_part(e[0].leading_monomial()).is_one()) return;  // unit over K(u)
    Ideal j = canonical(input);
    if (!u.empty()) {
      Polynomial h = lead_coeff_product(view, gb);
      if (!h.is_constant()) j = saturate(j, Submodule::ideal(ring_, {h})).module;
      if (is_unit(j)) return;
    }
    int last = view.ny - 1;
    auto f = eliminant(view, gb);
    if (!f) throw Error("zero-dimensional ideal without an eliminant");
    Split s = split_in(*f, last);
    if (refine(j, s, view, y, u, attempt, out)) return;

    // Shape position: minimal y-leads are y_1, ..., y_{m-1} and a power of y_m.
    std::set<int> linear_leads;
    for (const auto& e : gb.elements()) {
      Monomial ly = view.y_part(e[0].leading_monomial());
      int total = 0, which = -1;
      for (int k = 0; k < view.ny; ++k) {
        total += ly[k];
        if (ly[k]) which = k;
      }
      if (total == 1 && which < last) linear_leads.insert(which);
    }
    if (static_cast<int>(linear_leads.size()) == last) {
      out.push_back(j);
      return;
    }

    // Split or radicalize on the other variables before changing coordinates.
    for (int k = 0; k < last; ++k) {
      std::vector<int> yk = y;
      std::swap(yk[static_cast<std::size_t>(k)], yk.back());
      BlockView vk(ring_, yk, u);
      auto fk = eliminant(vk, vk.basis(j));
      if (!fk) throw Error("zero-dimensional ideal without an eliminant");
      Split sk = split_in(*fk, last);
      if (refine(j, sk, vk, y, u, attempt, out)) return;
    }

    if (attempt > 64) throw Error("no coordinate change reached general position");
    unsigned k = static_cast<unsigned>(attempt) + seed_;
    auto others = static_cast<unsigned>(last);
    int target = y.back();
    int partner = y[k % others];
    int lambda = static_cast<int>((k / others) % 5) + 1;
    if ((k / (5 * others)) % 2 == 1) lambda = -lambda;
    Polynomial vt = Polynomial::variable(ring_, target), vp = Polynomial::variable(ring_, partner);
    auto change = [&](const Ideal& a, int sign) {
      std::vector<Polynomial> g;
      for (const auto& p : a.ideal_generators())
        g.push_back(substitute(p, target, vt + vp * Polynomial::constant(ring_, Rational(sign * lambda))));
      return canonical(Submodule::ideal(ring_, g));
    };
    std::vector<Ideal> moved;
    zero_dim(change(j, 1), y, u, attempt + 1, moved);
    for (const auto& p : moved) out.push_back(change(p, -1));
  }

  // Adds the squarefree part or splits along the factors; false when the
  // eliminant is irreducible and squarefree.
  bool refine(const Ideal& j, const Split& s, const BlockView& view, const std::vector<int>& y, const std::vector<int>& u,
              int attempt, std::vector<Ideal>& out) {
    if (s.repeated) {
      Polynomial sq = Polynomial::constant(view.ring, Rational(1));
      for (const auto& f : s.factors) sq *= f;
      zero_dim(add_poly(j, view.from(sq)), y, u, attempt, out);
      return true;
    }
    if (s.factors.size() >= 2) {
      for (const auto& f : s.factors) zero_dim(add_poly(j, view.from(f)), y, u, attempt, out);
      return true;
    }
    return false;
  }

  RingPtr ring_;
  unsigned seed_;
};

std::vector<PrimeIdeal> minimal_sorted(const std::vector<Ideal>& candidates) {
  std::map<std::string, Ideal> distinct;
  for (const auto& c : candidates) {
    Ideal p = canonical(c);
    distinct.try_emplace(p.to_string(), p);
  }
  std::vector<Ideal> list;
  for (auto& [k, p] : distinct) list.push_back(p);
  std::vector<PrimeIdeal> out;
  for (std::size_t a = 0; a < list.size(); ++a) {
    bool minimal = true;
    for (std::size_t b = 0; b < list.size() && minimal; ++b)
      if (a != b && is_sub(list[b], list[a])) minimal = false;
    if (minimal) out.push_back(make_prime(list[a]));
  }
  std::sort(out.begin(), out.end(), [](const PrimeIdeal& a, const PrimeIdeal& b) {
    if (a.codim != b.codim) return a.codim < b.codim;
    return prime_key(a) < prime_key(b);
  });
  return out;
}

bool contains_key(const std::vector<PrimeIdeal>& ps, const std::string& key) {
  return std::any_of(ps.begin(), ps.end(), [&](const PrimeIdeal& p) { return prime_key(p) == key; });
}

}  // namespace

PrimeIdeal make_prime(const Ideal& p) {
  Ideal c = canonical(p);
  return PrimeIdeal{c, codim(c)};
}

std::string prime_key(const PrimeIdeal& p) { return p.ideal.to_string(); }

std::vector<PrimeIdeal> min_ass(const Ideal& i, unsigned seed) {
  if (!i.is_ideal()) throw RankMismatch(1, i.rank());
  if (is_unit(i)) throw InvalidArgument("min_ass of the unit ideal");
  std::vector<Ideal> candidates;
  Gtz(i.ring(), seed).comps(i, candidates);
  return minimal_sorted(candidates);
}

Ideal radical_equidim(const Ideal& i, unsigned seed) {
  if (is_unit(i)) return unit(i.ring());
  std::vector<Submodule> primes;
  for (const auto& p : min_ass(i, seed)) primes.push_back(p.ideal);
  return intersect_all(primes, i.ring(), 1);
}

std::vector<PrimeIdeal> associated_primes(const Submodule& m, unsigned seed) {
  int n = m.ring()->nvars();
  int c0 = codim(m);
  std::vector<Ideal> found;
  for (int c = c0; c <= n; ++c) {
    Ideal ic = ext_annihilator(c, m);
    if (codim(ic) != c) continue;
    for (const auto& p : min_ass(ic, seed))
      if (p.codim == c) found.push_back(p.ideal);
  }
  // Every candidate is an associated prime; none is dropped for being non-minimal.
  std::vector<PrimeIdeal> out;
  std::set<std::string> seen;
  for (const auto& f : found) {
    PrimeIdeal p = make_prime(f);
    if (seen.insert(prime_key(p)).second) out.push_back(p);
  }
  std::sort(out.begin(), out.end(), [](const PrimeIdeal& a, const PrimeIdeal& b) {
    if (a.codim != b.codim) return a.codim < b.codim;
    return prime_key(a) < prime_key(b);
  });
  return out;
}

Ideal localize_radical_ideal(const Ideal& h, const Ideal& j, const std::vector<PrimeIdeal>& primes) {
  int dj = krull_dim(j);
  int dh = krull_dim(h);
  std::vector<Submodule> kept;
  for (const auto& p : primes) {
    if (krull_dim(p.ideal) != dh || !is_sub(h, p.ideal)) continue;
    if (krull_dim(sum(j, p.ideal)) == dj) kept.push_back(p.ideal);
  }
  return intersect_all(kept, h.ring(), 1);
}

Submodule localize_module(const Submodule& a, const Ideal& j, const std::vector<PrimeIdeal>& primes) {
  std::map<int, std::vector<Submodule>> batches;  // dimension -> primes
  for (const auto& p : primes) batches[krull_dim(p.ideal)].push_back(p.ideal);
  std::vector<Submodule> ks;
  for (auto it = batches.rbegin(); it != batches.rend(); ++it) {
    Ideal h = intersect_all(it->second, a.ring(), 1);
    Ideal g = localize_radical_ideal(h, j, primes);
    ks.push_back(quotient(h, g));
  }
  Ideal k = intersect_all(ks, a.ring(), 1);
  return canonical(saturate(a, k).module);
}

Submodule localize_module(const Submodule& a, const Ideal& j, unsigned seed) {
  return localize_module(a, j, associated_primes(a, seed));
}

PrimaryComponentResult primary_component(const Submodule& a, const PrimeIdeal& p, const std::vector<PrimeIdeal>& primes,
                                         int bound) {
  Submodule free = Submodule::free_module(a.ring(), a.rank());
  Submodule t = canonical(product(p.ideal, free));
  Submodule ap = localize_module(a, p.ideal, primes);
  Submodule ap2 = saturate(ap, p.ideal).module;
  PrimaryComponentResult result{Submodule(a.ring(), a.rank()), 0, {}};
  for (int m = 1; m <= bound; ++m) {
    Submodule q = equidim_hull(sum(a, t));
    bool passed = is_sub(intersect(ap2, q), ap);
    result.trace.push_back({m, q, passed});
    if (passed) {
      result.component = q;
      result.witness = m;
      return result;
    }
    t = canonical(product(p.ideal, t));
  }
  throw IterationBound("primary component for prime " + p.ideal.to_string() + " not found within " +
                       std::to_string(bound) + " iterations");
}

DecompositionResult primdec_ehv(const Submodule& input, const PrimdecOptions& options) {
  if (is_unit(input)) throw InvalidArgument("primdec of the whole free module");
  const RingPtr& ring = input.ring();
  Submodule m = canonical(input);
  Submodule hull = equidim_hull(m);
  std::vector<PrimeIdeal> top = min_ass(annihilator(hull), options.seed);

  std::vector<Component> comps;
  for (const auto& p : top) {
    PrimaryComponentResult r = primary_component(hull, p, top, options.component_bound);
    comps.push_back({r.component, p, false, hull, r.witness, std::move(r.trace)});
  }
  std::vector<Submodule> parts;
  for (const auto& c : comps) parts.push_back(c.primary);
  Submodule acc = intersect_all(parts, ring, m.rank());

  if (!is_sub(acc, m)) {
    std::vector<PrimeIdeal> ass = associated_primes(m, options.seed);
    // Lower-dimensional primes, visited from the highest codimension down.
    std::vector<PrimeIdeal> rest;
    for (const auto& p : ass)
      if (!contains_key(top, prime_key(p))) rest.push_back(p);
    std::stable_sort(rest.begin(), rest.end(), [](const PrimeIdeal& a, const PrimeIdeal& b) { return a.codim > b.codim; });
    for (const auto& p : rest) {
      PrimaryComponentResult r = primary_component(m, p, ass, options.component_bound);
      comps.push_back({r.component, p, false, m, r.witness, std::move(r.trace)});
    }
  }

  // Drop components containing the intersection of the others.
  for (std::size_t i = 0; i < comps.size() && comps.size() > 1;) {
    std::vector<Submodule> others;
    for (std::size_t j = 0; j < comps.size(); ++j)
      if (j != i) others.push_back(comps[j].primary);
    if (is_sub(intersect_all(others, ring, m.rank()), comps[i].primary)) {
      comps.erase(comps.begin() + static_cast<long>(i));
    } else {
      ++i;
    }
  }
  for (auto& c : comps) {
    c.primary = canonical(c.primary);
    c.embedded = std::any_of(comps.begin(), comps.end(), [&](const Component& o) {
      return o.prime.codim < c.prime.codim && is_sub(o.prime.ideal, c.prime.ideal);
    });
  }
  std::sort(comps.begin(), comps.end(), [](const Component& a, const Component& b) {
    if (a.prime.codim != b.prime.codim) return a.prime.codim < b.prime.codim;
    return prime_key(a.prime) < prime_key(b.prime);
  });
  return DecompositionResult{std::move(comps)};
}

}  // namespace primdec
