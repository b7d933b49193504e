#include "primdec/polynomial.hpp"

#include <algorithm>

#include "primdec/error.hpp"

namespace primdec {

namespace {

// Sorts descending and merges equal monomials.
void normalize(const Ring& ring, std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ring.compare(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  terms = std::move(out);
}

}  // namespace

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  normalize(*ring_, terms_);
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({c, Monomial()});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, int index) {
  if (index < 0 || index >= ring->nvars()) throw InvalidArgument("variable index out of range");
  Polynomial p(std::move(ring));
  p.terms_.push_back({Rational(1), Monomial::variable(index)});
  return p;
}

Polynomial Polynomial::monomial(RingPtr ring, const Rational& c, const Monomial& m) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({c, m});
  return p;
}

int64_t Polynomial::total_degree() const {
  int64_t d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

int32_t Polynomial::degree_in(int var) const {
  int32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[var]);
  return d;
}

uint32_t Polynomial::support() const {
  uint32_t s = 0;
  for (const auto& t : terms_) s |= t.mono.support();
  return s;
}

void Polynomial::check_ring(const Polynomial& g) const {
  if (!same_ring(ring_, g.ring_)) throw RingMismatch();
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
  check_ring(g);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < g.terms_.size()) {
    int c = ring_->compare(terms_[i].mono, g.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(g.terms_[j++]);
    } else {
      Rational s = terms_[i].coeff + g.terms_[j].coeff;
      if (s != 0) r.terms_.push_back({std::move(s), terms_[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < g.terms_.size(); ++j) r.terms_.push_back(g.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
  check_ring(g);
  Polynomial r = *this;
  r.sub_mul_term(Rational(1), Monomial(), g);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
  check_ring(g);
  if (is_zero() || g.is_zero()) return Polynomial(ring_);
  if (g.terms_.size() == 1) return mul_term(g.terms_[0].coeff, g.terms_[0].mono);
  if (terms_.size() == 1) return g.mul_term(terms_[0].coeff, terms_[0].mono);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * g.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : g.terms_) prod.push_back({a.coeff * b.coeff, a.mono * b.mono});
  return Polynomial(ring_, std::move(prod));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::mul_term(const Rational& c, const Monomial& m) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.coeff * c, t.mono * m});
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, Rational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coeff() == 1) return *this;
  Rational inv = 1 / leading_coeff();
  return scaled(inv);
}

void Polynomial::sub_mul_term(const Rational& c, const Monomial& m, const Polynomial& g) {
  if (c == 0 || g.is_zero()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  const Ring& ring = *ring_;
  Monomial gm = g.terms_[0].mono * m;
  while (i < terms_.size() && j < g.terms_.size()) {
    int cmp = ring.compare(terms_[i].mono, gm);
    if (cmp > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (cmp < 0) {
      out.push_back({-(c * g.terms_[j].coeff), gm});
      if (++j < g.terms_.size()) gm = g.terms_[j].mono * m;
    } else {
      Rational s = terms_[i].coeff - c * g.terms_[j].coeff;
      if (s != 0) out.push_back({std::move(s), std::move(terms_[i].mono)});
      ++i;
      if (++j < g.terms_.size()) gm = g.terms_[j].mono * m;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(std::move(terms_[i]));
  while (j < g.terms_.size()) {
    out.push_back({-(c * g.terms_[j].coeff), g.terms_[j].mono * m});
    ++j;
  }
  terms_ = std::move(out);
}

Term Polynomial::pop_leading() {
  Term t = std::move(terms_.front());
  terms_.erase(terms_.begin());
  return t;
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  if (!same_ring(f.ring_, g.ring_)) return false;
  if (f.terms_.size() != g.terms_.size()) return false;
  for (std::size_t i = 0; i < f.terms_.size(); ++i)
    if (f.terms_[i].mono != g.terms_[i].mono || f.terms_[i].coeff != g.terms_[i].coeff) return false;
  return true;
}

std::string monomial_to_string(const Monomial& m, const Ring& ring) {
  std::string s;
  for (int i = 0; i < ring.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.variable_names()[i];
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const Term& t = terms_[k];
    Rational a = abs(t.coeff);
    bool negative = t.coeff < 0;
    if (k == 0) {
      if (negative) s += '-';
    } else {
      s += negative ? '-' : '+';
    }
    if (t.mono.is_one()) {
      s += primdec::to_string(a);
    } else {
      if (a != 1) s += primdec::to_string(a) + '*';
      s += monomial_to_string(t.mono, *ring_);
    }
  }
  return s;
}

Polynomial poly_add(const Polynomial& f, const Polynomial& g) { return f + g; }
Polynomial poly_mul(const Polynomial& f, const Polynomial& g) { return f * g; }

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw InvalidArgument("division by zero polynomial");
  if (!same_ring(f.ring(), g.ring())) throw RingMismatch();
  Polynomial rem = f;
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const Term& lt = rem.leading_term();
    if (!lt.mono.divisible_by(g.leading_monomial())) return std::nullopt;
    Rational c = lt.coeff / g.leading_coeff();
    Monomial m = lt.mono / g.leading_monomial();
    quotient.push_back({c, m});
    rem.sub_mul_term(c, m, g);
  }
  return Polynomial(f.ring(), std::move(quotient));
}

Polynomial map_variables(const Polynomial& f, const RingPtr& target, std::span<const int> perm) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m;
    int64_t moved = 0;
    for (std::size_t k = 0; k < perm.size(); ++k) {
      m[static_cast<int>(k)] = t.mono[perm[k]];
      moved += t.mono[perm[k]];
    }
    if (moved != t.mono.degree()) throw InvalidArgument("map_variables drops an occurring variable");
    terms.push_back({t.coeff, m});
  }
  return Polynomial(target, std::move(terms));
}

Polynomial substitute(const Polynomial& f, int var, const Polynomial& replacement) {
  if (!same_ring(f.ring(), replacement.ring())) throw RingMismatch();
  int32_t top = f.degree_in(var);
  std::vector<Polynomial> powers;
  powers.reserve(static_cast<std::size_t>(top) + 1);
  powers.push_back(Polynomial::constant(f.ring(), Rational(1)));
  for (int32_t e = 1; e <= top; ++e) powers.push_back(powers.back() * replacement);
  Polynomial result(f.ring());
  std::vector<Term> buffer;
  for (const auto& t : f.terms()) {
    Monomial rest = t.mono;
    int32_t e = rest[var];
    rest[var] = 0;
    for (const auto& pt : powers[static_cast<std::size_t>(e)].terms()) buffer.push_back({t.coeff * pt.coeff, pt.mono * rest});
  }
  return Polynomial(f.ring(), std::move(buffer));
}

Polynomial primitive_integer_part(const Polynomial& f) {
  if (f.is_zero()) return f;
  Integer den_lcm = 1;
  for (const auto& t : f.terms()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  Integer content = 0;
  for (const auto& t : f.terms()) {
    Integer num = t.coeff.get_num() * (den_lcm / t.coeff.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
  }
  Rational scale(den_lcm, content);
  scale.canonicalize();
  if (f.leading_coeff() < 0) scale = -scale;
  return f.scaled(scale);
}

}  // namespace primdec
