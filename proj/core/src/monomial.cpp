#include "calab/monomial.hpp"

namespace calab {

Monomial::Monomial(std::vector<uint32_t> exps) : e_(std::move(exps)) {
  for (uint32_t e : e_) {
    if (e >= kExponentCap) {
      throw DomainError("monomial exponent exceeds the overflow budget");
    }
  }
}

uint64_t Monomial::total_degree() const {
  uint64_t d = 0;
  for (uint32_t e : e_) d += e;
  return d;
}

bool Monomial::is_one() const {
  for (uint32_t e : e_) {
    if (e != 0) return false;
  }
  return true;
}

void Monomial::check_arity(const Monomial& o) const {
  if (e_.size() != o.e_.size()) {
    throw DomainError("monomial arity mismatch");
  }
}

Monomial Monomial::times(const Monomial& o) const {
  check_arity(o);
  std::vector<uint32_t> r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) {
    uint64_t s = static_cast<uint64_t>(e_[i]) + o.e_[i];
    if (s >= kExponentCap) {
      throw DomainError("monomial exponent overflow in product");
    }
    r[i] = static_cast<uint32_t>(s);
  }
  return Monomial(std::move(r));
}

Monomial Monomial::power(uint64_t k) const {
  std::vector<uint32_t> r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) {
    uint64_t s = static_cast<uint64_t>(e_[i]) * k;
    if (s >= kExponentCap) {
      throw DomainError("monomial exponent overflow in power");
    }
    r[i] = static_cast<uint32_t>(s);
  }
  return Monomial(std::move(r));
}

bool Monomial::divides(const Monomial& o) const {
  check_arity(o);
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] > o.e_[i]) return false;
  }
  return true;
}

Monomial Monomial::divide(const Monomial& o) const {
  check_arity(o);
  std::vector<uint32_t> r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (o.e_[i] > e_[i]) {
      throw DomainError("monomial division with negative exponent");
    }
    r[i] = e_[i] - o.e_[i];
  }
  return Monomial(std::move(r));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  a.check_arity(b);
  std::vector<uint32_t> r(a.e_.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
  }
  return Monomial(std::move(r));
}

bool Monomial::coprime(const Monomial& o) const {
  check_arity(o);
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] != 0 && o.e_[i] != 0) return false;
  }
  return true;
}

uint32_t Monomial::support_mask() const {
  if (e_.size() > 32) throw DomainError("support mask needs arity <= 32");
  uint32_t m = 0;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] != 0) m |= (1u << i);
  }
  return m;
}

std::strong_ordering Monomial::struct_cmp(const Monomial& o) const {
  check_arity(o);
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] != o.e_[i]) {
      return e_[i] > o.e_[i] ? std::strong_ordering::greater
                             : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::grevlex_range(const Monomial& a,
                                                  const Monomial& b,
                                                  std::size_t lo,
                                                  std::size_t hi) const {
  uint64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[pos(i)];
    db += b[pos(i)];
  }
  if (da != db) {
    return da > db ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  // Equal degree: the last position where they differ decides, smaller
  // exponent there wins (reverse lexicographic).
  for (std::size_t i = hi; i > lo; --i) {
    uint32_t ea = a[pos(i - 1)], eb = b[pos(i - 1)];
    if (ea != eb) {
      return ea < eb ? std::strong_ordering::greater
                     : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a,
                                            const Monomial& b) const {
  const std::size_t n = a.arity();
  if (b.arity() != n) throw DomainError("monomial arity mismatch in order");
  if (!perm_.empty() && perm_.size() != n) {
    throw DomainError("order permutation arity mismatch");
  }
  switch (kind_) {
    case OrderKind::Lex:
      for (std::size_t i = 0; i < n; ++i) {
        uint32_t ea = a[pos(i)], eb = b[pos(i)];
        if (ea != eb) {
          return ea > eb ? std::strong_ordering::greater
                         : std::strong_ordering::less;
        }
      }
      return std::strong_ordering::equal;
    case OrderKind::Grevlex:
      return grevlex_range(a, b, 0, n);
    case OrderKind::Block: {
      auto first = grevlex_range(a, b, 0, block_);
      if (first != std::strong_ordering::equal) return first;
      return grevlex_range(a, b, block_, n);
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::key() const {
  std::string k = name();
  if (!perm_.empty()) {
    k += "[";
    for (std::size_t i = 0; i < perm_.size(); ++i) {
      if (i) k += ",";
      k += std::to_string(perm_[i]);
    }
    k += "]";
  }
  return k;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case OrderKind::Lex:
      return "lex";
    case OrderKind::Grevlex:
      return "grevlex";
    case OrderKind::Block:
      return "block(" + std::to_string(block_) + ")";
  }
  return "?";
}

}  // namespace calab
