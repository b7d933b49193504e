#include "primdec/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "primdec/error.hpp"
#include "primdec/homology.hpp"

namespace primdec {

namespace {

using MonoList = std::vector<Monomial>;

// Drops monomials divisible by another one; result sorted by raw exponents.
MonoList minimalize(MonoList ms) {
  std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.raw() < b.raw();
  });
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  MonoList out;
  for (const auto& m : ms)
    if (std::none_of(out.begin(), out.end(), [&](const Monomial& k) { return m.divisible_by(k); })) out.push_back(m);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return a.raw() < b.raw(); });
  return out;
}

bool contains(const MonoList& ideal, const Monomial& m) {
  return std::any_of(ideal.begin(), ideal.end(), [&](const Monomial& g) { return m.divisible_by(g); });
}

bool monomial_sub(const MonoList& a, const MonoList& b) {
  return std::all_of(a.begin(), a.end(), [&](const Monomial& m) { return contains(b, m); });
}

void split(const MonoList& gens, std::vector<MonoList>& out) {
  for (const auto& g : gens) {
    uint32_t s = g.support();
    if (__builtin_popcount(s) < 2) continue;
    int v = __builtin_ctz(s);
    Monomial pure = Monomial::variable(v, g[v]);
    Monomial rest = g / pure;
    MonoList a = gens, b = gens;
    a.push_back(pure);
    b.push_back(rest);
    split(minimalize(a), out);
    split(minimalize(b), out);
    return;
  }
  out.push_back(gens);
}

MonoList intersect_monomial(const MonoList& a, const MonoList& b) {
  MonoList out;
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x.lcm(y));
  return minimalize(out);
}

Ideal to_ideal(const RingPtr& r, const MonoList& ms) {
  std::vector<Polynomial> ps;
  for (const auto& m : ms) ps.push_back(Polynomial::monomial(r, Rational(1), m));
  return canonical(Submodule::ideal(r, ps));
}

Submodule intersect_list(const std::vector<Submodule>& parts, const RingPtr& r, std::size_t rank) {
  if (parts.empty()) return Submodule::free_module(r, rank);
  Submodule acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = intersect(acc, parts[i]);
  return acc;
}

void monomials_up_to(int n, int degree, int var, Monomial& cur, MonoList& out) {
  if (var == n) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= degree; ++e) {
    cur[var] = e;
    monomials_up_to(n, degree - e, var + 1, cur, out);
  }
  cur[var] = 0;
}

using Key = std::pair<int, std::array<int32_t, kMaxVariables>>;

// Reduces v against an echelon basis keyed by leading term; linear steps only.
FreeElement linear_reduce(FreeElement v, const std::map<Key, FreeElement>& basis) {
  FreeElement rem(v.ring(), v.rank());
  while (!v.is_zero()) {
    LeadingTerm lt = leading_term(v, ModuleExtension::PositionOverTerm);
    auto it = basis.find({lt.component, lt.mono.raw()});
    if (it == basis.end()) {
      auto c = static_cast<std::size_t>(lt.component);
      rem[c].push_back_term(v[c].pop_leading());
      continue;
    }
    v.sub_mul_term(lt.coeff, Monomial(), it->second);
  }
  return rem;
}

}  // namespace

bool ValidationReport::primaries_ok() const {
  return std::all_of(primaries.begin(), primaries.end(), [](const PrimaryCheck& p) { return p.ok; });
}

DecompositionResult monomial_primdec_oracle(const Ideal& i) {
  if (!i.is_ideal()) throw RankMismatch(1, i.rank());
  const RingPtr& r = i.ring();
  MonoList gens;
  for (const auto& g : i.ideal_generators()) {
    if (g.is_zero()) continue;
    if (!g.is_monomial()) throw InvalidArgument("monomial oracle: generator " + g.to_string() + " is not a monomial");
    gens.push_back(g.leading_monomial());
  }
  gens = minimalize(gens);
  if (contains(gens, Monomial())) throw InvalidArgument("monomial oracle: unit ideal");

  std::vector<MonoList> pieces;
  split(gens, pieces);
  // Drop irreducible pieces containing another one.
  std::vector<MonoList> irreducible;
  for (std::size_t a = 0; a < pieces.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < pieces.size() && !redundant; ++b) {
      if (a == b || !monomial_sub(pieces[b], pieces[a])) continue;
      // Equal pieces: keep the first.
      redundant = !monomial_sub(pieces[a], pieces[b]) || b < a;
    }
    if (!redundant) irreducible.push_back(pieces[a]);
  }
  std::map<uint32_t, MonoList> by_radical;
  for (const auto& piece : irreducible) {
    uint32_t rad = 0;
    for (const auto& m : piece) rad |= m.support();
    auto it = by_radical.find(rad);
    if (it == by_radical.end()) by_radical.emplace(rad, piece);
    else it->second = intersect_monomial(it->second, piece);
  }
  DecompositionResult d;
  for (const auto& [rad, q] : by_radical) {
    std::vector<Polynomial> vars;
    for (int k = 0; k < r->nvars(); ++k)
      if (rad & (1u << k)) vars.push_back(Polynomial::variable(r, k));
    PrimeIdeal p = make_prime(Submodule::ideal(r, vars));
    d.components.push_back({to_ideal(r, q), p, false, canonical(i), 0, {}});
  }
  for (auto& c : d.components)
    c.embedded = std::any_of(d.components.begin(), d.components.end(), [&](const Component& o) {
      return o.prime.codim < c.prime.codim && is_sub(o.prime.ideal, c.prime.ideal);
    });
  std::sort(d.components.begin(), d.components.end(), [](const Component& a, const Component& b) {
    if (a.prime.codim != b.prime.codim) return a.prime.codim < b.prime.codim;
    return prime_key(a.prime) < prime_key(b.prime);
  });
  return d;
}

ValidationReport validate_decomposition(const Submodule& m, const DecompositionResult& d, unsigned seed) {
  ValidationReport report;
  const RingPtr& r = m.ring();
  int n = r->nvars();
  std::vector<Submodule> qs;
  for (const auto& c : d.components) {
    if (c.primary.rank() != m.rank()) throw RankMismatch(m.rank(), c.primary.rank());
    qs.push_back(c.primary);
  }
  report.intersection_ok = same_submodule(intersect_list(qs, r, m.rank()), m);

  for (std::size_t i = 0; i < d.components.size(); ++i) {
    const Component& c = d.components[i];
    PrimaryCheck check{i, false, ""};
    Ideal ann = annihilator(c.primary);
    if (krull_dim(ann) < 0) {
      check.reason = "component is the whole module";
    } else {
      std::vector<PrimeIdeal> mins = min_ass(ann, seed);
      if (mins.size() != 1) {
        check.reason = "annihilator has " + std::to_string(mins.size()) + " minimal primes";
      } else if (!same_submodule(mins[0].ideal, c.prime.ideal)) {
        check.reason = "radical of the annihilator is " + mins[0].ideal.to_string() + ", not " +
                       c.prime.ideal.to_string();
      } else {
        check.ok = true;
        for (int k = c.prime.codim + 1; k <= n && check.ok; ++k)
          if (krull_dim(ass_prim_codim(c.primary, k)) >= 0) {
            check.ok = false;
            check.reason = "associated prime of codimension " + std::to_string(k);
          }
      }
    }
    report.primaries.push_back(std::move(check));
  }

  std::set<std::string> keys;
  report.primes_distinct_ok = true;
  for (const auto& c : d.components)
    if (!keys.insert(canonical(c.prime.ideal).to_string()).second) report.primes_distinct_ok = false;

  report.irredundant_ok = true;
  for (std::size_t i = 0; i < qs.size() && report.irredundant_ok; ++i) {
    std::vector<Submodule> others;
    for (std::size_t j = 0; j < qs.size(); ++j)
      if (j != i) others.push_back(qs[j]);
    if (is_sub(intersect_list(others, r, m.rank()), qs[i])) report.irredundant_ok = false;
  }
  return report;
}

bool membership_oracle(const FreeElement& v, const Submodule& a, int degree_bound) {
  if (v.rank() != a.rank()) throw RankMismatch(a.rank(), v.rank());
  if (v.is_zero()) return true;
  const RingPtr& r = v.ring();
  std::map<Key, FreeElement> basis;
  for (const auto& g : a.gens()) {
    if (g.is_zero()) continue;
    int64_t gdeg = 0;
    for (std::size_t k = 0; k < g.rank(); ++k) gdeg = std::max(gdeg, g[k].total_degree());
    if (gdeg > degree_bound) continue;
    MonoList ms;
    Monomial cur;
    monomials_up_to(r->nvars(), degree_bound - static_cast<int>(gdeg), 0, cur, ms);
    for (const auto& mu : ms) {
      FreeElement w = linear_reduce(g.mul_term(Rational(1), mu), basis);
      if (w.is_zero()) continue;
      LeadingTerm lt = leading_term(w, ModuleExtension::PositionOverTerm);
      basis.emplace(Key{lt.component, lt.mono.raw()}, w.scaled(1 / lt.coeff));
    }
  }
  return linear_reduce(v, basis).is_zero();
}

}  // namespace primdec
