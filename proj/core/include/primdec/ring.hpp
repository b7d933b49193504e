#ifndef PRIMDEC_RING_HPP
#define PRIMDEC_RING_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace primdec {

/// Upper bound on the number of ring variables.
inline constexpr int kMaxVariables = 16;

/// Exponent vector. Entries past the ring's variable count are always zero,
/// so equality and divisibility never need the ring.
class Monomial {
 public:
  Monomial() { exps_.fill(0); }
  explicit Monomial(std::span<const int32_t> exps);

  static Monomial variable(int index, int32_t power = 1);

  int32_t operator[](int i) const { return exps_[i]; }
  int32_t& operator[](int i) { return exps_[i]; }

  int64_t degree() const;
  bool is_one() const;

  /// Product; throws ExponentOverflow instead of wrapping.
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; caller guarantees divides(other, *this).
  Monomial operator/(const Monomial& other) const;

  bool divisible_by(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  /// Bitmask of variables with positive exponent.
  uint32_t support() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

  const std::array<int32_t, kMaxVariables>& raw() const { return exps_; }

 private:
  std::array<int32_t, kMaxVariables> exps_;
};

enum class OrderKind { DegRevLex, Lex, WeightedRevLex, WeightedLex, Block };
enum class ModuleExtension { PositionOverTerm, TermOverPosition };

/// A global monomial order plus the rule extending it to free-module terms.
/// Position-over-term ranks the lower component index higher.
struct MonomialOrder {
  OrderKind kind = OrderKind::DegRevLex;
  ModuleExtension module_extension = ModuleExtension::PositionOverTerm;
  std::vector<int64_t> weights;  // WeightedRevLex / WeightedLex only
  int split_index = 0;           // Block only: variables [0, split) form the first block
  OrderKind first_block = OrderKind::DegRevLex;   // DegRevLex or Lex
  OrderKind second_block = OrderKind::DegRevLex;  // DegRevLex or Lex

  static MonomialOrder degrevlex() { return {}; }
  static MonomialOrder lex() {
    MonomialOrder o;
    o.kind = OrderKind::Lex;
    return o;
  }
  static MonomialOrder weighted(std::vector<int64_t> w, bool revlex = true);
  static MonomialOrder block(int split, OrderKind first = OrderKind::DegRevLex,
                             OrderKind second = OrderKind::DegRevLex);

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

/// Polynomial ring Q[x_1..x_n] with a fixed monomial order. Immutable and
/// shared by pointer between every polynomial built over it.
class Ring {
 public:
  Ring(std::vector<std::string> variable_names, MonomialOrder order);

  int nvars() const { return n_; }
  const std::vector<std::string>& variable_names() const { return names_; }
  const MonomialOrder& order() const { return order_; }

  /// -1, 0, 1 for a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  /// Compares module terms (component, monomial) under `ext`.
  int compare(int comp_a, const Monomial& a, int comp_b, const Monomial& b, ModuleExtension ext) const;

  int variable_index(const std::string& name) const;  // -1 if absent

  /// Structural equality: same variable names and order.
  bool same_as(const Ring& other) const;

 private:
  int compare_range(OrderKind kind, const Monomial& a, const Monomial& b, int lo, int hi) const;

  std::vector<std::string> names_;
  int n_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> variable_names, MonomialOrder order = MonomialOrder::degrevlex());

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && a->same_as(*b)); }

}  // namespace primdec

#endif  // PRIMDEC_RING_HPP
