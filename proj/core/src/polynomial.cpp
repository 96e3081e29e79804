#include "calab/polynomial.hpp"

#include <algorithm>
#include <map>

#include <boost/multiprecision/cpp_int.hpp>

namespace calab {

namespace {

struct StructDesc {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return a.struct_cmp(b) == std::strong_ordering::greater;
  }
};

using TermMap = std::map<Monomial, Scalar, StructDesc>;

std::vector<Term> to_sorted_terms(TermMap m) {
  std::vector<Term> out;
  out.reserve(m.size());
  for (auto& [mono, c] : m) {
    if (!c.is_zero()) out.push_back(Term{mono, c});
  }
  return out;
}

}  // namespace

void check_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!a.ring()->same_ring(*b.ring())) {
    throw DomainError("polynomials live in different rings");
  }
}

Polynomial Polynomial::zero(RingPtr ring) {
  return Polynomial(std::move(ring), {});
}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  if (c.is_zero()) return zero(std::move(ring));
  Monomial one(ring->nvars());
  return Polynomial(std::move(ring), {Term{one, c}});
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t var) {
  if (var >= ring->nvars()) throw DomainError("variable index out of range");
  std::vector<uint32_t> e(ring->nvars(), 0);
  e[var] = 1;
  Scalar one = Scalar::one(ring->field());
  return Polynomial(std::move(ring), {Term{Monomial(std::move(e)), one}});
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, const Scalar& c) {
  if (m.arity() != ring->nvars()) throw DomainError("monomial arity mismatch");
  if (c.is_zero()) return zero(std::move(ring));
  return Polynomial(std::move(ring), {Term{std::move(m), c}});
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  TermMap acc;
  for (auto& t : terms) {
    if (t.mono.arity() != ring->nvars()) {
      throw DomainError("monomial arity mismatch");
    }
    auto [it, inserted] = acc.emplace(t.mono, t.coeff);
    if (!inserted) it->second = it->second + t.coeff;
  }
  return Polynomial(std::move(ring), to_sorted_terms(std::move(acc)));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

uint64_t Polynomial::total_degree() const {
  uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same_ring(*this, o);
  // Merge two descending-sorted term lists.
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    auto c = terms_[i].mono.struct_cmp(o.terms_[j].mono);
    if (c == std::strong_ordering::greater) {
      out.push_back(terms_[i++]);
    } else if (c == std::strong_ordering::less) {
      out.push_back(o.terms_[j++]);
    } else {
      Scalar s = terms_[i].coeff + o.terms_[j].coeff;
      if (!s.is_zero()) out.push_back(Term{terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(Term{t.mono, -t.coeff});
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::scale(const Scalar& c) const {
  if (c.is_zero()) return zero(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Scalar s = t.coeff * c;
    if (!s.is_zero()) out.push_back(Term{t.mono, s});
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::times_term(const Monomial& m, const Scalar& c) const {
  if (c.is_zero()) return zero(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  // Multiplying by a fixed monomial preserves the structural order.
  for (const auto& t : terms_) {
    Scalar s = t.coeff * c;
    if (!s.is_zero()) out.push_back(Term{t.mono.times(m), s});
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same_ring(*this, o);
  TermMap acc;
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      Monomial m = a.mono.times(b.mono);
      Scalar c = a.coeff * b.coeff;
      auto [it, inserted] = acc.emplace(std::move(m), c);
      if (!inserted) it->second = it->second + c;
    }
  }
  return Polynomial(ring_, to_sorted_terms(std::move(acc)));
}

Polynomial Polynomial::pow(uint64_t k) const {
  Polynomial acc = constant(ring_, Scalar::one(ring_->field()));
  Polynomial base = *this;
  while (k) {
    if (k & 1) acc = acc * base;
    if (k >>= 1) base = base * base;
  }
  return acc;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= ring_->nvars()) throw DomainError("variable index out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    uint32_t e = t.mono[var];
    if (e == 0) continue;
    Scalar c = t.coeff * ring_->scalar(static_cast<long long>(e));
    if (c.is_zero()) continue;  // exponent divisible by the characteristic
    std::vector<uint32_t> exps = t.mono.exponents();
    exps[var] = e - 1;
    out.push_back(Term{Monomial(std::move(exps)), c});
  }
  return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::truncate_degree(uint64_t n) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono.total_degree() <= n) out.push_back(t);
  }
  return Polynomial(ring_, std::move(out));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!ring_->same_ring(*o.ring_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].mono != o.terms_[i].mono) return false;
    if (terms_[i].coeff != o.terms_[i].coeff) return false;
  }
  return true;
}

namespace {

std::string monomial_str(const Ring& ring, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.var_name(i);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

}  // namespace

std::string Polynomial::str(const MonomialOrder& ord) const {
  if (terms_.empty()) return "0";
  std::vector<const Term*> sorted;
  sorted.reserve(terms_.size());
  for (const auto& t : terms_) sorted.push_back(&t);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [&](const Term* a, const Term* b) {
                     return ord.greater(a->mono, b->mono);
                   });
  std::string out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const Term& t = *sorted[i];
    Scalar c = t.coeff;
    std::string joiner;
    if (i == 0) {
      if (c.displays_negative()) {
        joiner = "-";
        c = -c;
      }
    } else {
      if (c.displays_negative()) {
        joiner = "-";
        c = -c;
      } else {
        joiner = "+";
      }
    }
    std::string mono = monomial_str(*ring_, t.mono);
    std::string body;
    if (mono.empty()) {
      body = c.str();
    } else if (c.is_one()) {
      body = mono;
    } else {
      body = c.str() + "*" + mono;
    }
    out += joiner + body;
  }
  return out;
}

const Term& leading_term(const Polynomial& f, const MonomialOrder& ord) {
  if (f.is_zero()) throw DomainError("leading term of the zero polynomial");
  const Term* best = &f.terms()[0];
  for (const auto& t : f.terms()) {
    if (ord.greater(t.mono, best->mono)) best = &t;
  }
  return *best;
}

Polynomial normalize_monic(const Polynomial& f, const MonomialOrder& ord) {
  if (f.is_zero()) throw DomainError("cannot normalize the zero polynomial");
  const Scalar& lc = leading_term(f, ord).coeff;
  if (lc.is_one()) return f;
  return f.scale(lc.inverse());
}

Polynomial strip_content(const Polynomial& f, const MonomialOrder& ord) {
  if (f.is_zero()) return f;
  if (f.ring()->characteristic() != 0) return normalize_monic(f, ord);
  // Clear denominators, divide by the gcd of numerators, fix the sign of the
  // leading coefficient.
  BigInt den_lcm = 1;
  for (const auto& t : f.terms()) {
    const BigInt& d = denominator(t.coeff.rational());
    den_lcm = boost::multiprecision::lcm(den_lcm, d);
  }
  BigInt num_gcd = 0;
  for (const auto& t : f.terms()) {
    BigInt n = numerator(t.coeff.rational() * Rational(den_lcm));
    num_gcd = boost::multiprecision::gcd(num_gcd, n);
  }
  Rational factor(den_lcm, num_gcd);
  Polynomial g = f.scale(Scalar::from_rational(factor));
  if (leading_term(g, ord).coeff.displays_negative()) g = -g;
  return g;
}

}  // namespace calab
