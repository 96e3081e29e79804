#include "calab/ideal_ops.hpp"

#include <algorithm>

namespace calab {

namespace {

// Elimination order putting the dropped variables in the leading block.
MonomialOrder elimination_order(std::size_t nvars,
                                const std::vector<std::size_t>& drop) {
  std::vector<bool> dropped(nvars, false);
  for (std::size_t d : drop) {
    if (d >= nvars) throw DomainError("eliminated variable out of range");
    dropped[d] = true;
  }
  std::vector<uint32_t> perm;
  perm.reserve(nvars);
  for (std::size_t i = 0; i < nvars; ++i) {
    if (dropped[i]) perm.push_back(static_cast<uint32_t>(i));
  }
  const std::size_t block = perm.size();
  for (std::size_t i = 0; i < nvars; ++i) {
    if (!dropped[i]) perm.push_back(static_cast<uint32_t>(i));
  }
  return MonomialOrder::block(block, std::move(perm));
}

bool mentions_any(const Polynomial& f, const std::vector<bool>& dropped) {
  for (const auto& t : f.terms()) {
    for (std::size_t i = 0; i < dropped.size(); ++i) {
      if (dropped[i] && t.mono[i] != 0) return true;
    }
  }
  return false;
}

}  // namespace

Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& drop) {
  if (drop.empty()) return I;
  const std::size_t n = I.ring()->nvars();
  MonomialOrder ord = elimination_order(n, drop);
  auto gb = I.groebner(ord);
  std::vector<bool> dropped(n, false);
  for (std::size_t d : drop) dropped[d] = true;
  std::vector<Polynomial> kept;
  for (const auto& g : gb->elements) {
    if (!mentions_any(g, dropped)) kept.push_back(g);
  }
  return Ideal(I.ring(), std::move(kept));
}

RingPtr extend_ring(const RingPtr& base,
                    const std::vector<std::string>& extra) {
  std::vector<std::string> vars = base->var_names();
  for (const auto& e : extra) vars.push_back(e);
  return Ring::create(base->characteristic(), std::move(vars));
}

Polynomial lift_to(const RingPtr& ext, const Polynomial& f) {
  const std::size_t n = f.ring()->nvars();
  std::vector<Term> terms;
  terms.reserve(f.term_count());
  for (const auto& t : f.terms()) {
    std::vector<uint32_t> e = t.mono.exponents();
    e.resize(ext->nvars(), 0);
    terms.push_back(Term{Monomial(std::move(e)), t.coeff});
  }
  (void)n;
  return Polynomial::from_terms(ext, std::move(terms));
}

Polynomial restrict_to(const RingPtr& base, const Polynomial& f) {
  const std::size_t n = base->nvars();
  std::vector<Term> terms;
  terms.reserve(f.term_count());
  for (const auto& t : f.terms()) {
    std::vector<uint32_t> e = t.mono.exponents();
    for (std::size_t i = n; i < e.size(); ++i) {
      if (e[i] != 0) {
        throw DomainError("cannot restrict: polynomial mentions a dropped variable");
      }
    }
    e.resize(n);
    terms.push_back(Term{Monomial(std::move(e)), t.coeff});
  }
  return Polynomial::from_terms(base, std::move(terms));
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  if (!I.ring()->same_ring(*J.ring())) {
    throw DomainError("intersection across different rings");
  }
  const RingPtr& base = I.ring();
  RingPtr ext = extend_ring(base, {"@t"});
  const std::size_t tpos = ext->nvars() - 1;
  Polynomial t = Polynomial::variable(ext, tpos);
  Polynomial one = Polynomial::constant(ext, Scalar::one(ext->field()));
  std::vector<Polynomial> gens;
  for (const auto& f : I.gens()) gens.push_back(t * lift_to(ext, f));
  for (const auto& g : J.gens()) gens.push_back((one - t) * lift_to(ext, g));
  Ideal K(ext, std::move(gens));
  Ideal E = eliminate(K, {tpos});
  std::vector<Polynomial> out;
  for (const auto& g : E.gens()) {
    if (!g.is_zero()) out.push_back(restrict_to(base, g));
  }
  return Ideal(base, std::move(out));
}

namespace {

// (I : g) for a single generator through (I cap (g)) / g.
Ideal quotient_single(const Ideal& I, const Polynomial& g) {
  if (g.is_zero()) {
    // (I : 0) is the whole ring.
    return Ideal(I.ring(),
                 {Polynomial::constant(I.ring(), Scalar::one(I.ring()->field()))});
  }
  Ideal meet = intersect(I, Ideal(I.ring(), {g}));
  MonomialOrder ord = MonomialOrder::grevlex();
  std::vector<Polynomial> out;
  for (const auto& w : meet.gens()) {
    if (w.is_zero()) continue;
    auto [q, r] = divide_single(w, g, ord);
    if (!r.is_zero()) {
      throw DomainError("internal: quotient division left a remainder");
    }
    out.push_back(std::move(q));
  }
  return Ideal(I.ring(), std::move(out));
}

}  // namespace

Ideal quotient(const Ideal& I, const Ideal& J) {
  if (!I.ring()->same_ring(*J.ring())) {
    throw DomainError("quotient across different rings");
  }
  bool first = true;
  Ideal acc(I.ring());
  for (const auto& g : J.gens()) {
    if (g.is_zero()) continue;
    Ideal qg = quotient_single(I, g);
    acc = first ? qg : intersect(acc, qg);
    first = false;
  }
  if (first) {
    // J = (0): the colon ideal is the whole ring.
    return quotient_single(I, Polynomial::zero(I.ring()));
  }
  return acc;
}

Ideal saturate(const Ideal& I, const Polynomial& f) {
  if (f.is_zero()) throw DomainError("saturation by the zero polynomial");
  const RingPtr& base = I.ring();
  RingPtr ext = extend_ring(base, {"@w"});
  const std::size_t wpos = ext->nvars() - 1;
  Polynomial w = Polynomial::variable(ext, wpos);
  Polynomial one = Polynomial::constant(ext, Scalar::one(ext->field()));
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens()) gens.push_back(lift_to(ext, g));
  gens.push_back(one - w * lift_to(ext, f));
  Ideal K(ext, std::move(gens));
  Ideal E = eliminate(K, {wpos});
  std::vector<Polynomial> out;
  for (const auto& g : E.gens()) {
    if (!g.is_zero()) out.push_back(restrict_to(base, g));
  }
  return Ideal(base, std::move(out));
}

bool radical_member(const Polynomial& f, const Ideal& I) {
  if (!f.ring()->same_ring(*I.ring())) {
    throw DomainError("radical membership across different rings");
  }
  if (ideal_member(f, I)) return true;
  const RingPtr& base = I.ring();
  RingPtr ext = extend_ring(base, {"@w"});
  Polynomial w = Polynomial::variable(ext, ext->nvars() - 1);
  Polynomial one = Polynomial::constant(ext, Scalar::one(ext->field()));
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens()) gens.push_back(lift_to(ext, g));
  gens.push_back(one - w * lift_to(ext, f));
  Ideal K(ext, std::move(gens));
  return K.groebner(MonomialOrder::grevlex())->is_unit();
}

Ideal ideal_power(const Ideal& I, std::size_t k) {
  if (k < 1) throw ArgError("ideal power needs k >= 1");
  const auto& gens = I.gens();
  std::vector<Polynomial> out;
  // Multisets of generator indices, enumerated in nondecreasing index order.
  std::vector<std::size_t> pick(k, 0);
  while (true) {
    Polynomial prod = gens[pick[0]];
    for (std::size_t i = 1; i < k; ++i) prod = prod * gens[pick[i]];
    out.push_back(std::move(prod));
    // Advance the multiset odometer.
    std::size_t pos = k;
    while (pos > 0 && pick[pos - 1] == gens.size() - 1) --pos;
    if (pos == 0) break;
    ++pick[pos - 1];
    for (std::size_t i = pos; i < k; ++i) pick[i] = pick[pos - 1];
  }
  return Ideal(I.ring(), std::move(out));
}

}  // namespace calab
