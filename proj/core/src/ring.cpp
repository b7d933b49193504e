#include "primdec/ring.hpp"

#include <algorithm>
#include <set>

#include "primdec/error.hpp"

namespace primdec {

Monomial::Monomial(std::span<const int32_t> exps) {
  if (exps.size() > static_cast<std::size_t>(kMaxVariables)) throw InvalidArgument("too many variables");
  exps_.fill(0);
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0) throw InvalidArgument("negative exponent");
    exps_[i] = exps[i];
  }
}

Monomial Monomial::variable(int index, int32_t power) {
  Monomial m;
  m.exps_[index] = power;
  return m;
}

int64_t Monomial::degree() const {
  int64_t d = 0;
  for (int32_t e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int32_t e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (int i = 0; i < kMaxVariables; ++i) {
    if (__builtin_add_overflow(exps_[i], other.exps_[i], &r.exps_[i])) throw ExponentOverflow();
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r;
  for (int i = 0; i < kMaxVariables; ++i) r.exps_[i] = exps_[i] - other.exps_[i];
  return r;
}

bool Monomial::divisible_by(const Monomial& other) const {
  for (int i = 0; i < kMaxVariables; ++i)
    if (exps_[i] < other.exps_[i]) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r;
  for (int i = 0; i < kMaxVariables; ++i) r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r;
  for (int i = 0; i < kMaxVariables; ++i) r.exps_[i] = std::min(exps_[i], other.exps_[i]);
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  for (int i = 0; i < kMaxVariables; ++i)
    if (exps_[i] > 0 && other.exps_[i] > 0) return false;
  return true;
}

uint32_t Monomial::support() const {
  uint32_t s = 0;
  for (int i = 0; i < kMaxVariables; ++i)
    if (exps_[i] > 0) s |= (1u << i);
  return s;
}

MonomialOrder MonomialOrder::weighted(std::vector<int64_t> w, bool revlex) {
  MonomialOrder o;
  o.kind = revlex ? OrderKind::WeightedRevLex : OrderKind::WeightedLex;
  o.weights = std::move(w);
  return o;
}

MonomialOrder MonomialOrder::block(int split, OrderKind first, OrderKind second) {
  MonomialOrder o;
  o.kind = OrderKind::Block;
  o.split_index = split;
  o.first_block = first;
  o.second_block = second;
  return o;
}

Ring::Ring(std::vector<std::string> variable_names, MonomialOrder order)
    : names_(std::move(variable_names)), n_(static_cast<int>(names_.size())), order_(std::move(order)) {
  if (n_ < 1) throw InvalidArgument("a ring needs at least one variable");
  if (n_ > kMaxVariables) throw InvalidArgument("at most " + std::to_string(kMaxVariables) + " variables supported");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (static_cast<int>(seen.size()) != n_) throw InvalidArgument("variable names must be distinct");
  switch (order_.kind) {
    case OrderKind::WeightedRevLex:
    case OrderKind::WeightedLex:
      if (static_cast<int>(order_.weights.size()) != n_) throw InvalidArgument("weight vector length must equal variable count");
      for (int64_t w : order_.weights)
        if (w <= 0) throw InvalidArgument("weights must be positive");
      break;
    case OrderKind::Block:
      if (order_.split_index < 1 || order_.split_index >= n_) throw InvalidArgument("block split index out of range");
      for (OrderKind k : {order_.first_block, order_.second_block})
        if (k != OrderKind::DegRevLex && k != OrderKind::Lex) throw InvalidArgument("block orders must be dp or lp");
      break;
    default:
      break;
  }
}

int Ring::compare_range(OrderKind kind, const Monomial& a, const Monomial& b, int lo, int hi) const {
  switch (kind) {
    case OrderKind::Lex:
      for (int i = lo; i < hi; ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return 0;
    case OrderKind::DegRevLex:
    case OrderKind::WeightedRevLex:
    case OrderKind::WeightedLex: {
      int64_t da = 0, db = 0;
      for (int i = lo; i < hi; ++i) {
        int64_t w = kind == OrderKind::DegRevLex ? 1 : order_.weights[i];
        da += w * a[i];
        db += w * b[i];
      }
      if (da != db) return da > db ? 1 : -1;
      if (kind == OrderKind::WeightedLex) {
        for (int i = lo; i < hi; ++i)
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
      }
      for (int i = hi - 1; i >= lo; --i)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      return 0;
    }
    case OrderKind::Block:
      break;
  }
  return 0;
}

int Ring::compare(const Monomial& a, const Monomial& b) const {
  if (order_.kind == OrderKind::Block) {
    int c = compare_range(order_.first_block, a, b, 0, order_.split_index);
    if (c != 0) return c;
    return compare_range(order_.second_block, a, b, order_.split_index, n_);
  }
  return compare_range(order_.kind, a, b, 0, n_);
}

int Ring::compare(int comp_a, const Monomial& a, int comp_b, const Monomial& b, ModuleExtension ext) const {
  if (ext == ModuleExtension::PositionOverTerm) {
    if (comp_a != comp_b) return comp_a < comp_b ? 1 : -1;
    return compare(a, b);
  }
  int c = compare(a, b);
  if (c != 0) return c;
  if (comp_a != comp_b) return comp_a < comp_b ? 1 : -1;
  return 0;
}

int Ring::variable_index(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

bool Ring::same_as(const Ring& other) const { return names_ == other.names_ && order_ == other.order_; }

RingPtr make_ring(std::vector<std::string> variable_names, MonomialOrder order) {
  return std::make_shared<const Ring>(std::move(variable_names), std::move(order));
}

}  // namespace primdec
