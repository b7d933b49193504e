#include "primdec/free_module.hpp"

#include "primdec/error.hpp"

namespace primdec {

FreeElement::FreeElement(RingPtr ring, std::size_t rank) : ring_(std::move(ring)) {
  comps_.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) comps_.emplace_back(ring_);
}

FreeElement::FreeElement(RingPtr ring, std::vector<Polynomial> components)
    : ring_(std::move(ring)), comps_(std::move(components)) {
  for (const auto& p : comps_)
    if (!same_ring(ring_, p.ring())) throw RingMismatch();
}

FreeElement::FreeElement(const Polynomial& p) : ring_(p.ring()), comps_{p} {}

FreeElement FreeElement::unit(RingPtr ring, std::size_t rank, std::size_t index) {
  FreeElement v(ring, rank);
  v.comps_[index] = Polynomial::constant(ring, Rational(1));
  return v;
}

bool FreeElement::is_zero() const {
  for (const auto& p : comps_)
    if (!p.is_zero()) return false;
  return true;
}

int FreeElement::leading_component(ModuleExtension ext) const {
  int best = -1;
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (comps_[i].is_zero()) continue;
    if (ext == ModuleExtension::PositionOverTerm) return static_cast<int>(i);
    if (best < 0 || ring_->compare(comps_[i].leading_monomial(), comps_[static_cast<std::size_t>(best)].leading_monomial()) > 0)
      best = static_cast<int>(i);
  }
  return best;
}

LeadingTerm leading_term(const FreeElement& v, ModuleExtension ext) {
  int c = v.leading_component(ext);
  if (c < 0) throw InvalidArgument("leading term of the zero element");
  const Term& t = v[static_cast<std::size_t>(c)].leading_term();
  return {c, t.coeff, t.mono};
}

FreeElement FreeElement::operator+(const FreeElement& v) const {
  if (rank() != v.rank()) throw RankMismatch(rank(), v.rank());
  FreeElement r = *this;
  for (std::size_t i = 0; i < comps_.size(); ++i) r.comps_[i] += v.comps_[i];
  return r;
}

FreeElement FreeElement::operator-(const FreeElement& v) const {
  if (rank() != v.rank()) throw RankMismatch(rank(), v.rank());
  FreeElement r = *this;
  for (std::size_t i = 0; i < comps_.size(); ++i) r.comps_[i] -= v.comps_[i];
  return r;
}

FreeElement FreeElement::operator-() const {
  FreeElement r = *this;
  for (auto& p : r.comps_) p = -p;
  return r;
}

FreeElement FreeElement::scaled(const Polynomial& p) const {
  FreeElement r = *this;
  for (auto& c : r.comps_) c = c * p;
  return r;
}

FreeElement FreeElement::scaled(const Rational& c) const {
  FreeElement r = *this;
  for (auto& p : r.comps_) p = p.scaled(c);
  return r;
}

FreeElement FreeElement::mul_term(const Rational& c, const Monomial& m) const {
  FreeElement r = *this;
  for (auto& p : r.comps_) p = p.mul_term(c, m);
  return r;
}

void FreeElement::sub_mul_term(const Rational& c, const Monomial& m, const FreeElement& g) {
  for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i].sub_mul_term(c, m, g.comps_[i]);
}

FreeElement FreeElement::concat(const FreeElement& v) const {
  FreeElement r = *this;
  r.comps_.insert(r.comps_.end(), v.comps_.begin(), v.comps_.end());
  return r;
}

FreeElement FreeElement::slice(std::size_t lo, std::size_t hi) const {
  return FreeElement(ring_, std::vector<Polynomial>(comps_.begin() + static_cast<std::ptrdiff_t>(lo),
                                                    comps_.begin() + static_cast<std::ptrdiff_t>(hi)));
}

bool operator==(const FreeElement& a, const FreeElement& b) { return a.comps_ == b.comps_; }

std::string FreeElement::to_string() const {
  if (comps_.size() == 1) return comps_[0].to_string();
  std::string s = "[";
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (i) s += ',';
    s += comps_[i].to_string();
  }
  return s + "]";
}

Submodule::Submodule(RingPtr ring, std::size_t rank, std::vector<FreeElement> gens)
    : ring_(std::move(ring)), rank_(rank), gens_(std::move(gens)) {
  for (const auto& g : gens_) {
    if (g.rank() != rank_) throw RankMismatch(rank_, g.rank());
    if (!same_ring(ring_, g.ring())) throw RingMismatch();
  }
}

Submodule Submodule::ideal(RingPtr ring, const std::vector<Polynomial>& gens) {
  Submodule m(ring, 1);
  for (const auto& p : gens) m.add(FreeElement(p));
  return m;
}

Submodule Submodule::free_module(RingPtr ring, std::size_t rank) {
  Submodule m(ring, rank);
  for (std::size_t i = 0; i < rank; ++i) m.gens_.push_back(FreeElement::unit(ring, rank, i));
  return m;
}

void Submodule::add(FreeElement v) {
  if (v.rank() != rank_) throw RankMismatch(rank_, v.rank());
  if (!same_ring(ring_, v.ring())) throw RingMismatch();
  gens_.push_back(std::move(v));
}

std::vector<Polynomial> Submodule::ideal_generators() const {
  if (rank_ != 1) throw InvalidArgument("not an ideal (rank != 1)");
  std::vector<Polynomial> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g[0]);
  return out;
}

Submodule Submodule::without_zeros() const {
  Submodule m(ring_, rank_);
  for (const auto& g : gens_)
    if (!g.is_zero()) m.gens_.push_back(g);
  return m;
}

std::string Submodule::to_string() const {
  std::string s = "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string();
  }
  return s + ">";
}

Submodule transpose(const Submodule& a) {
  Submodule t(a.ring(), a.ncols());
  for (std::size_t row = 0; row < a.rank(); ++row) {
    std::vector<Polynomial> col;
    col.reserve(a.ncols());
    for (std::size_t c = 0; c < a.ncols(); ++c) col.push_back(a.entry(row, c));
    t.add(FreeElement(a.ring(), std::move(col)));
  }
  return t;
}

Submodule multiply(const Submodule& a, const Submodule& b) {
  if (a.ncols() != b.rank()) throw RankMismatch(a.ncols(), b.rank());
  Submodule out(a.ring(), a.rank());
  for (const auto& bc : b.gens()) {
    FreeElement col(a.ring(), a.rank());
    for (std::size_t k = 0; k < a.ncols(); ++k) {
      if (bc[k].is_zero()) continue;
      col = col + a.gen(k).scaled(bc[k]);
    }
    out.add(std::move(col));
  }
  return out;
}

Submodule sum(const Submodule& a, const Submodule& b) {
  if (a.rank() != b.rank()) throw RankMismatch(a.rank(), b.rank());
  Submodule out = a;
  for (const auto& g : b.gens()) out.add(g);
  return out;
}

Submodule product(const Ideal& j, const Submodule& a) {
  Submodule out(a.ring(), a.rank());
  for (const auto& p : j.ideal_generators())
    for (const auto& g : a.gens()) out.add(g.scaled(p));
  return out;
}

}  // namespace primdec
