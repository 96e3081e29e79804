#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "calab/errors.hpp"

namespace calab {

/// Exponent cap: products stay below this so every exponent fits a machine
/// word with room to detect overflow before it wraps.
inline constexpr uint32_t kExponentCap = 1u << 30;

/// Dense exponent vector. Immutable value type; all mutating operations
/// return fresh monomials and check the overflow budget.
class Monomial {
 public:
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<uint32_t> exps);

  std::size_t arity() const noexcept { return e_.size(); }
  uint32_t operator[](std::size_t i) const { return e_[i]; }
  uint64_t total_degree() const;
  bool is_one() const;

  Monomial times(const Monomial& o) const;
  /// Componentwise exponent scaling (q-th power); overflow-checked.
  Monomial power(uint64_t k) const;
  bool divides(const Monomial& o) const;
  Monomial divide(const Monomial& o) const;  // pre: o divides *this
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& o) const;

  /// Bit i set iff variable i appears. Arity must be <= 32.
  uint32_t support_mask() const;

  /// Structural (storage) order: plain lexicographic on the exponent vector.
  /// Not a monomial order; used only for canonical term layout.
  std::strong_ordering struct_cmp(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  const std::vector<uint32_t>& exponents() const noexcept { return e_; }

 private:
  void check_arity(const Monomial& o) const;
  std::vector<uint32_t> e_;
};

enum class OrderKind { Lex, Grevlex, Block };

/// Monomial order: lex, grevlex, or a two-block elimination order (each
/// block compared by grevlex; any monomial touching the first block beats
/// any that does not). An optional permutation maps comparison positions to
/// variable indices; identity when empty.
class MonomialOrder {
 public:
  MonomialOrder() : kind_(OrderKind::Grevlex), block_(0) {}

  static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex, 0, {}); }
  static MonomialOrder grevlex() {
    return MonomialOrder(OrderKind::Grevlex, 0, {});
  }
  /// Eliminination order for the variables listed first in `perm`;
  /// `block` is how many leading positions of `perm` form the first block.
  static MonomialOrder block(std::size_t block, std::vector<uint32_t> perm) {
    return MonomialOrder(OrderKind::Block, block, std::move(perm));
  }

  OrderKind kind() const noexcept { return kind_; }

  /// Greater-first comparison: returns `greater` when a comes before b.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }

  /// Stable identity for caches and JSON echo: "lex", "grevlex",
  /// "block(2;3,0,1,2)".
  std::string key() const;
  std::string name() const;

  bool operator==(const MonomialOrder& o) const {
    return kind_ == o.kind_ && block_ == o.block_ && perm_ == o.perm_;
  }

 private:
  MonomialOrder(OrderKind k, std::size_t block, std::vector<uint32_t> perm)
      : kind_(k), block_(block), perm_(std::move(perm)) {}

  std::size_t pos(std::size_t i) const {
    return perm_.empty() ? i : perm_[i];
  }
  std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b,
                                     std::size_t lo, std::size_t hi) const;

  OrderKind kind_;
  std::size_t block_;
  std::vector<uint32_t> perm_;
};

}  // namespace calab
