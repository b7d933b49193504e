#include "primdec/factor.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "primdec/error.hpp"

namespace primdec {

namespace {

// Dense coefficient vectors, lowest degree first, no trailing zeros.
using ZPoly = std::vector<Integer>;
using QPoly = std::vector<Rational>;
using MPoly = std::vector<uint64_t>;

template <class V>
void trim(V& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

template <class V>
int deg(const V& a) {
  return static_cast<int>(a.size()) - 1;
}

// ---------------------------------------------------------------- over Q

QPoly q_sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

QPoly q_derivative(const QPoly& a) {
  QPoly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * static_cast<long>(i));
  trim(r);
  return r;
}

std::pair<QPoly, QPoly> q_divmod(QPoly a, const QPoly& b) {
  if (b.empty()) throw InvalidArgument("polynomial division by zero");
  QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    Rational c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

QPoly q_monic(QPoly a) {
  if (a.empty()) return a;
  Rational lc = a.back();
  for (auto& c : a) c /= lc;
  return a;
}

QPoly q_gcd(QPoly a, QPoly b) {
  while (!b.empty()) {
    QPoly r = q_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return q_monic(a);
}

QPoly q_div(const QPoly& a, const QPoly& b) { return q_divmod(a, b).first; }

// Primitive integer multiple with positive leading coefficient.
ZPoly primitive(const QPoly& a) {
  Integer l = 1;
  for (const auto& c : a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z;
  Integer g = 0;
  for (const auto& c : a) {
    Integer v = c.get_num() * (l / c.get_den());
    z.push_back(v);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  if (g == 0) return {};
  if (z.back() < 0) g = -g;
  for (auto& c : z) c /= g;
  return z;
}

// Yun's algorithm: squarefree parts with their multiplicities.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& f) {
  std::vector<std::pair<QPoly, int>> out;
  QPoly fm = q_monic(f);
  QPoly d = q_derivative(fm);
  QPoly a = q_gcd(fm, d);
  QPoly b = q_div(fm, a);
  QPoly c = q_div(d, a);
  QPoly e = q_sub(c, q_derivative(b));
  for (int i = 1; deg(b) > 0; ++i) {
    QPoly ai = q_gcd(b, e);
    b = q_div(b, ai);
    c = q_div(e, ai);
    e = q_sub(c, q_derivative(b));
    if (deg(ai) > 0) out.emplace_back(ai, i);
  }
  return out;
}

// ---------------------------------------------------------------- over Z/p

struct Fp {
  uint64_t p;

  uint64_t add(uint64_t a, uint64_t b) const { return (a + b) % p; }
  uint64_t sub(uint64_t a, uint64_t b) const { return (a + p - b) % p; }
  uint64_t mul(uint64_t a, uint64_t b) const { return (a * b) % p; }
  uint64_t pow(uint64_t a, uint64_t e) const {
    uint64_t r = 1;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  uint64_t inv(uint64_t a) const { return pow(a, p - 2); }

  MPoly reduce(const ZPoly& a) const {
    MPoly r;
    for (const auto& c : a) {
      Integer m = c % static_cast<unsigned long>(p);
      if (m < 0) m += static_cast<unsigned long>(p);
      r.push_back(m.get_ui());
    }
    trim(r);
    return r;
  }

  MPoly mul(const MPoly& a, const MPoly& b) const {
    if (a.empty() || b.empty()) return {};
    MPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    trim(r);
    return r;
  }

  MPoly sub(const MPoly& a, const MPoly& b) const {
    MPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
    trim(r);
    return r;
  }

  std::pair<MPoly, MPoly> divmod(MPoly a, const MPoly& b) const {
    uint64_t inv_lc = inv(b.back());
    MPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    while (!a.empty() && a.size() >= b.size()) {
      std::size_t shift = a.size() - b.size();
      uint64_t c = mul(a.back(), inv_lc);
      q[shift] = c;
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = sub(a[shift + i], mul(c, b[i]));
      trim(a);
    }
    trim(q);
    return {q, a};
  }

  MPoly rem(const MPoly& a, const MPoly& b) const { return divmod(a, b).second; }

  MPoly monic(MPoly a) const {
    if (a.empty()) return a;
    uint64_t i = inv(a.back());
    for (auto& c : a) c = mul(c, i);
    return a;
  }

  MPoly gcd(MPoly a, MPoly b) const {
    while (!b.empty()) {
      MPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  // s*a + t*b = gcd(a,b) = 1 is assumed.
  std::pair<MPoly, MPoly> bezout(const MPoly& a, const MPoly& b) const {
    MPoly r0 = a, r1 = b, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      MPoly s2 = sub(s0, mul(q, s1)), t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    uint64_t i = inv(r0.back());
    for (auto& c : s0) c = mul(c, i);
    for (auto& c : t0) c = mul(c, i);
    return {s0, t0};
  }

  MPoly powmod(MPoly base, const Integer& e, const MPoly& m) const {
    MPoly r = {1};
    base = rem(base, m);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      r = rem(mul(r, r), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, base), m);
    }
    return r;
  }

  MPoly derivative(const MPoly& a) const {
    MPoly r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(mul(a[i], i % p));
    trim(r);
    return r;
  }
};

// Cantor-Zassenhaus split of g, a product of distinct monic factors of degree d.
void equal_degree(const Fp& F, const MPoly& g, int d, std::mt19937_64& rng, std::vector<MPoly>& out) {
  if (deg(g) == d) {
    out.push_back(g);
    return;
  }
  Integer e = 1;
  for (int i = 0; i < d; ++i) e *= static_cast<unsigned long>(F.p);
  e = (e - 1) / 2;
  std::uniform_int_distribution<uint64_t> coeff(0, F.p - 1);
  for (;;) {
    MPoly a(static_cast<std::size_t>(deg(g)));
    for (auto& c : a) c = coeff(rng);
    trim(a);
    if (deg(a) < 1) continue;
    MPoly b = F.sub(F.powmod(a, e, g), MPoly{1});
    MPoly h = F.gcd(g, b);
    if (deg(h) > 0 && deg(h) < deg(g)) {
      equal_degree(F, h, d, rng, out);
      equal_degree(F, F.divmod(g, h).first, d, rng, out);
      return;
    }
  }
}

// Monic irreducible factors of a monic squarefree polynomial over Z/p.
std::vector<MPoly> factor_mod_p(const Fp& F, MPoly f) {
  std::vector<MPoly> out;
  std::mt19937_64 rng(F.p);
  MPoly x = {0, 1};
  MPoly h = x;
  for (int i = 1; 2 * i <= deg(f); ++i) {
    h = F.powmod(h, Integer(static_cast<unsigned long>(F.p)), f);
    MPoly g = F.gcd(f, F.sub(h, x));
    if (deg(g) > 0) {
      equal_degree(F, g, i, rng, out);
      f = F.divmod(f, g).first;
      h = F.rem(h, f);
    }
  }
  if (deg(f) > 0) out.push_back(F.monic(f));
  return out;
}

// ---------------------------------------------------------------- over Z/m

struct Zm {
  Integer m;

  Integer red(const Integer& a) const {
    Integer r = a % m;
    if (r < 0) r += m;
    return r;
  }
  ZPoly red(const ZPoly& a) const {
    ZPoly r;
    for (const auto& c : a) r.push_back(red(c));
    trim(r);
    return r;
  }
  ZPoly add(const ZPoly& a, const ZPoly& b) const {
    ZPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return red(r);
  }
  ZPoly sub(const ZPoly& a, const ZPoly& b) const {
    ZPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return red(r);
  }
  ZPoly mul(const ZPoly& a, const ZPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return red(r);
  }
  // b monic.
  std::pair<ZPoly, ZPoly> divmod(ZPoly a, const ZPoly& b) const {
    a = red(a);
    ZPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    while (!a.empty() && a.size() >= b.size()) {
      std::size_t shift = a.size() - b.size();
      Integer c = a.back();
      q[shift] = c;
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = red(a[shift + i] - c * b[i]);
      trim(a);
    }
    trim(q);
    return {q, a};
  }
  ZPoly scale(const ZPoly& a, const Integer& c) const {
    ZPoly r;
    for (const auto& x : a) r.push_back(x * c);
    return red(r);
  }
  Integer inv(const Integer& a) const {
    Integer r;
    Integer ar = red(a);
    if (!mpz_invert(r.get_mpz_t(), ar.get_mpz_t(), m.get_mpz_t())) throw Error("no modular inverse");
    return r;
  }
};

ZPoly lift_mp(const MPoly& a) { return ZPoly(a.begin(), a.end()); }

// One quadratic Hensel step: f = g*h mod m, s*g + t*h = 1 mod m, h monic.
void hensel_step(const Zm& M2, const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t) {
  ZPoly e = M2.sub(f, M2.mul(g, h));
  auto [q, r] = M2.divmod(M2.mul(s, e), h);
  ZPoly g2 = M2.add(g, M2.add(M2.mul(t, e), M2.mul(q, g)));
  ZPoly h2 = M2.add(h, r);
  ZPoly b = M2.sub(M2.add(M2.mul(s, g2), M2.mul(t, h2)), ZPoly{1});
  auto [c, d] = M2.divmod(M2.mul(s, b), h2);
  s = M2.sub(s, d);
  t = M2.sub(t, M2.add(M2.mul(t, b), M2.mul(c, g2)));
  g = std::move(g2);
  h = std::move(h2);
}

// Lifts f = lc(f) * prod(facs) mod p to monic factors mod p^(2^steps).
std::vector<ZPoly> multifactor_lift(const ZPoly& f, const std::vector<MPoly>& facs, const Fp& F, int steps) {
  Integer target = static_cast<unsigned long>(F.p);
  for (int i = 0; i < steps; ++i) target *= target;
  Zm T{target};
  if (facs.size() == 1) return {T.scale(f, T.inv(f.back()))};
  std::size_t half = facs.size() / 2;
  MPoly a = {1}, b = {1};
  for (std::size_t i = 0; i < half; ++i) a = F.mul(a, facs[i]);
  for (std::size_t i = half; i < facs.size(); ++i) b = F.mul(b, facs[i]);
  uint64_t lc = F.reduce(ZPoly{f.back()})[0];
  MPoly g0 = F.mul(a, MPoly{lc});
  auto [s0, t0] = F.bezout(g0, b);
  ZPoly g = lift_mp(g0), h = lift_mp(b), s = lift_mp(s0), t = lift_mp(t0);
  Integer m = static_cast<unsigned long>(F.p);
  for (int i = 0; i < steps; ++i) {
    m *= m;
    Zm M2{m};
    hensel_step(M2, M2.red(f), g, h, s, t);
  }
  std::vector<MPoly> fa(facs.begin(), facs.begin() + static_cast<long>(half));
  std::vector<MPoly> fb(facs.begin() + static_cast<long>(half), facs.end());
  std::vector<ZPoly> out = multifactor_lift(g, fa, F, steps);
  std::vector<ZPoly> rest = multifactor_lift(h, fb, F, steps);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

ZPoly symmetric(const ZPoly& a, const Integer& m) {
  Integer half = m / 2;
  ZPoly r;
  for (const auto& c : a) r.push_back(c > half ? c - m : c);
  trim(r);
  return r;
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

ZPoly z_primitive(ZPoly a) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

// Exact division over Z, or nullopt.
std::optional<ZPoly> z_divide(ZPoly a, const ZPoly& b) {
  if (b.size() > a.size()) return std::nullopt;
  ZPoly q(a.size() - b.size() + 1, 0);
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    if (!mpz_divisible_p(a.back().get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    Integer c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  if (!a.empty()) return std::nullopt;
  trim(q);
  return q;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool is_probable_small_prime(uint64_t p) {
  if (p < 2) return false;
  for (uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Irreducible factors of a primitive squarefree f in Z[x] with positive lc.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  int n = deg(f);
  if (n <= 1) return {f};
  // Several good primes; keep the one with the fewest modular factors.
  std::vector<MPoly> best;
  Fp best_field{0};
  int tried = 0;
  for (uint64_t p = 3; tried < 5; p += 2) {
    if (!is_probable_small_prime(p)) continue;
    Fp F{p};
    if (F.reduce(ZPoly{f.back()}).empty()) continue;
    MPoly fp = F.reduce(f);
    if (deg(F.gcd(fp, F.derivative(fp))) > 0) continue;
    ++tried;
    std::vector<MPoly> facs = factor_mod_p(F, F.monic(fp));
    if (best.empty() || facs.size() < best.size()) {
      best = std::move(facs);
      best_field = F;
    }
    if (best.size() == 1) return {f};
  }
  std::sort(best.begin(), best.end());

  // Coefficient bound for factors, times the leading coefficient.
  Integer maxc = 0;
  for (const auto& c : f) maxc = std::max(maxc, Integer(abs(c)));
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  Integer bound = abs(f.back()) * (root + 1);
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  bound = 2 * bound + 1;
  int steps = 0;
  Integer m = static_cast<unsigned long>(best_field.p);
  while (m <= bound) {
    m *= m;
    ++steps;
  }
  std::vector<ZPoly> lifted = multifactor_lift(f, best, best_field, steps);

  std::vector<ZPoly> out;
  ZPoly rest = f;
  std::vector<std::size_t> alive(lifted.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
  Zm M{m};
  for (std::size_t s = 1; 2 * s <= alive.size();) {
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    bool found = false;
    do {
      ZPoly cand = ZPoly{rest.back()};
      for (std::size_t i : idx) cand = M.mul(cand, lifted[alive[i]]);
      cand = z_primitive(symmetric(cand, m));
      if (!mpz_divisible_p(rest.front().get_mpz_t(), cand.front().get_mpz_t())) continue;
      auto q = z_divide(rest, cand);
      if (!q) continue;
      out.push_back(cand);
      rest = *q;
      std::vector<std::size_t> keep;
      for (std::size_t i = 0, k = 0; i < alive.size(); ++i) {
        if (k < idx.size() && idx[k] == i) {
          ++k;
          continue;
        }
        keep.push_back(alive[i]);
      }
      alive = std::move(keep);
      found = true;
      break;
    } while (next_combination(idx, alive.size()));
    if (!found) ++s;
  }
  if (deg(rest) > 0) out.push_back(z_primitive(rest));
  return out;
}

// Irreducible factors with multiplicities of a nonzero dense polynomial over Q.
std::vector<std::pair<ZPoly, int>> factor_dense(const QPoly& f) {
  std::vector<std::pair<ZPoly, int>> out;
  for (auto& [part, mult] : squarefree_decomposition(f)) {
    ZPoly z = primitive(part);
    // x is split off first so modular factorizations see a nonzero constant term.
    if (z.front() == 0) {
      out.emplace_back(ZPoly{0, 1}, mult);
      z.erase(z.begin());
    }
    if (deg(z) <= 0) continue;
    for (auto& g : zassenhaus(z)) out.emplace_back(std::move(g), mult);
  }
  return out;
}

Polynomial to_poly(const RingPtr& ring, int var, const ZPoly& a) {
  std::vector<Term> ts;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) ts.push_back({Rational(a[i]), Monomial::variable(var, static_cast<int32_t>(i))});
  return Polynomial(ring, std::move(ts)).monic();
}

void sort_factors(std::vector<Factor>& fs) {
  std::sort(fs.begin(), fs.end(), [](const Factor& a, const Factor& b) {
    int64_t da = a.factor.total_degree(), db = b.factor.total_degree();
    if (da != db) return da < db;
    return a.factor.to_string() < b.factor.to_string();
  });
}

std::vector<Factor> group(const std::vector<Polynomial>& list) {
  std::map<std::string, Factor> by_text;
  for (const auto& p : list) {
    Polynomial m = p.monic();
    auto [it, fresh] = by_text.try_emplace(m.to_string(), Factor{m, 0});
    ++it->second.multiplicity;
  }
  std::vector<Factor> out;
  for (auto& [k, v] : by_text) out.push_back(std::move(v));
  sort_factors(out);
  return out;
}

Polynomial shift(const Polynomial& f, const std::vector<int>& c, int sign) {
  Polynomial g = f;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    Polynomial repl = Polynomial::variable(f.ring(), static_cast<int>(i)) +
                      Polynomial::constant(f.ring(), Rational(sign * c[i]));
    g = substitute(g, static_cast<int>(i), repl);
  }
  return g;
}

Rational evaluate(const Polynomial& f, const std::vector<int>& c) {
  Rational sum = 0;
  for (const auto& t : f.terms()) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < c.size(); ++i)
      for (int e = 0; e < t.mono[static_cast<int>(i)]; ++e) v *= c[i];
    sum += v;
  }
  return sum;
}

// Irreducible factors (with repetition) of f, which is not divisible by any variable.
void split_multivariate(const Polynomial& f, std::vector<Polynomial>& out) {
  const RingPtr& ring = f.ring();
  int n = ring->nvars();
  uint32_t support = f.support();
  if (f.is_constant()) return;
  if (__builtin_popcount(support) <= 1) {
    for (auto& fac : univariate_factor(f))
      for (int k = 0; k < fac.multiplicity; ++k) out.push_back(fac.factor);
    return;
  }
  // Shift so the constant term is nonzero: Kronecker images then have no power of t.
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  for (int k = 0; evaluate(f, c) == 0; ++k)
    for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = ((k + 1) * (i + 2) + i) % 7 - 3;
  Polynomial g = shift(f, c, 1);

  std::vector<int64_t> weight(static_cast<std::size_t>(n), 0), radix(static_cast<std::size_t>(n), 1);
  int64_t e = 1;
  for (int i = 0; i < n; ++i) {
    if (!(support & (1u << i))) continue;
    weight[static_cast<std::size_t>(i)] = e;
    radix[static_cast<std::size_t>(i)] = g.degree_in(i) + 1;
    e *= radix[static_cast<std::size_t>(i)];
    if (e > 4000) throw InvalidArgument("factor: polynomial too large for Kronecker substitution");
  }
  QPoly image(static_cast<std::size_t>(e), Rational(0));
  for (const auto& t : g.terms()) {
    int64_t k = 0;
    for (int i = 0; i < n; ++i) k += weight[static_cast<std::size_t>(i)] * t.mono[i];
    image[static_cast<std::size_t>(k)] += t.coeff;
  }
  trim(image);
  std::vector<ZPoly> pieces;
  for (auto& [z, mult] : factor_dense(image))
    for (int k = 0; k < mult; ++k) pieces.push_back(z);

  auto back = [&](const ZPoly& z) {
    std::vector<Term> ts;
    for (std::size_t k = 0; k < z.size(); ++k) {
      if (z[k] == 0) continue;
      Monomial m;
      for (int i = 0; i < n; ++i)
        if (support & (1u << i))
          m[i] = static_cast<int32_t>((static_cast<int64_t>(k) / weight[static_cast<std::size_t>(i)]) %
                                      radix[static_cast<std::size_t>(i)]);
      ts.push_back({Rational(z[k]), m});
    }
    return Polynomial(ring, std::move(ts));
  };

  for (std::size_t s = 1; 2 * s <= pieces.size(); ++s) {
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    do {
      ZPoly prod = {1};
      for (std::size_t i : idx) prod = z_mul(prod, pieces[i]);
      Polynomial cand = back(z_primitive(prod));
      if (cand.is_constant()) continue;
      auto q = divide_exact(g, cand);
      if (!q) continue;
      Polynomial h = shift(cand, c, -1);
      out.push_back(h);
      split_multivariate(shift(*q, c, -1), out);
      return;
    } while (next_combination(idx, pieces.size()));
  }
  out.push_back(f);
}

}  // namespace

std::vector<Factor> univariate_factor(const Polynomial& f) {
  if (f.is_zero()) throw InvalidArgument("univariate_factor: zero polynomial");
  uint32_t support = f.support();
  if (__builtin_popcount(support) > 1) throw InvalidArgument("univariate_factor: more than one variable");
  if (support == 0) return {};
  int var = __builtin_ctz(support);
  QPoly dense(static_cast<std::size_t>(f.degree_in(var)) + 1, Rational(0));
  for (const auto& t : f.terms()) dense[static_cast<std::size_t>(t.mono[var])] = t.coeff;
  std::vector<Factor> out;
  for (auto& [z, mult] : factor_dense(dense)) out.push_back({to_poly(f.ring(), var, z), mult});
  // Equal factors can arise from different squarefree layers only if the input was
  // not squarefree-decomposed correctly; group anyway to keep the output canonical.
  std::vector<Polynomial> flat;
  for (const auto& fac : out)
    for (int k = 0; k < fac.multiplicity; ++k) flat.push_back(fac.factor);
  return group(flat);
}

std::vector<Factor> factor(const Polynomial& f) {
  if (f.is_zero()) throw InvalidArgument("factor: zero polynomial");
  if (f.is_constant()) return {};
  const RingPtr& ring = f.ring();
  int n = ring->nvars();
  std::vector<Polynomial> flat;
  // Monomial content first.
  Monomial content = f.terms().front().mono;
  for (const auto& t : f.terms()) content = content.gcd(t.mono);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < content[i]; ++k) flat.push_back(Polynomial::variable(ring, i));
  Polynomial rest = f;
  if (!content.is_one()) {
    std::vector<Term> ts;
    for (const auto& t : f.terms()) ts.push_back({t.coeff, t.mono / content});
    rest = Polynomial(ring, std::move(ts));
  }
  split_multivariate(primitive_integer_part(rest), flat);
  return group(flat);
}

Polynomial squarefree_part(const Polynomial& f) {
  Polynomial out = Polynomial::constant(f.ring(), Rational(1));
  for (const auto& fac : factor(f)) out *= fac.factor;
  return out;
}

}  // namespace primdec
