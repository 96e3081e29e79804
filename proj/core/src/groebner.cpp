#include "calab/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace calab {

namespace {

struct OrdDesc {
  const MonomialOrder* ord;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return ord->greater(a, b);
  }
};

// Working representation during reduction: terms keyed descending under the
// active order so the maximal term is begin().
using WorkPoly = std::map<Monomial, Scalar, OrdDesc>;

WorkPoly to_work(const Polynomial& f, const MonomialOrder& ord) {
  WorkPoly w(OrdDesc{&ord});
  for (const auto& t : f.terms()) w.emplace(t.mono, t.coeff);
  return w;
}

Polynomial from_work(const RingPtr& ring, const WorkPoly& w) {
  std::vector<Term> terms;
  terms.reserve(w.size());
  for (const auto& [m, c] : w) terms.push_back(Term{m, c});
  return Polynomial::from_terms(ring, std::move(terms));
}

// w -= s * shift * g
void sub_scaled(WorkPoly& w, const Polynomial& g, const Monomial& shift,
                const Scalar& s) {
  for (const auto& t : g.terms()) {
    Monomial m = t.mono.times(shift);
    Scalar delta = t.coeff * s;
    auto it = w.find(m);
    if (it == w.end()) {
      w.emplace(std::move(m), -delta);
    } else {
      it->second = it->second - delta;
      if (it->second.is_zero()) w.erase(it);
    }
  }
}

}  // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& ord) {
  check_same_ring(f, g);
  if (f.is_zero() || g.is_zero()) {
    throw DomainError("s-polynomial of a zero polynomial");
  }
  const Term& lf = leading_term(f, ord);
  const Term& lg = leading_term(g, ord);
  Monomial l = Monomial::lcm(lf.mono, lg.mono);
  Polynomial a = f.times_term(l.divide(lf.mono), lf.coeff.inverse());
  Polynomial b = g.times_term(l.divide(lg.mono), lg.coeff.inverse());
  return a - b;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const MonomialOrder& ord) {
  // Leading data for the nonzero basis elements, in basis order.
  std::vector<const Polynomial*> gs;
  std::vector<const Term*> lts;
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    check_same_ring(f, g);
    gs.push_back(&g);
    lts.push_back(&leading_term(g, ord));
  }
  WorkPoly work = to_work(f, ord);
  std::vector<Term> remainder;
  while (!work.empty()) {
    auto it = work.begin();
    const Monomial m = it->first;
    const Scalar c = it->second;
    bool reduced = false;
    for (std::size_t k = 0; k < gs.size(); ++k) {
      if (lts[k]->mono.divides(m)) {
        Monomial shift = m.divide(lts[k]->mono);
        Scalar s = c / lts[k]->coeff;
        sub_scaled(work, *gs[k], shift, s);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      remainder.push_back(Term{m, c});
      work.erase(it);
    }
  }
  return Polynomial::from_terms(f.ring(), std::move(remainder));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  return normal_form(f, gb.elements, gb.order);
}

std::pair<Polynomial, Polynomial> divide_single(const Polynomial& f,
                                                const Polynomial& g,
                                                const MonomialOrder& ord) {
  check_same_ring(f, g);
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  const Term& lg = leading_term(g, ord);
  WorkPoly work = to_work(f, ord);
  std::vector<Term> quot;
  std::vector<Term> rem;
  while (!work.empty()) {
    auto it = work.begin();
    const Monomial m = it->first;
    const Scalar c = it->second;
    if (lg.mono.divides(m)) {
      Monomial shift = m.divide(lg.mono);
      Scalar s = c / lg.coeff;
      sub_scaled(work, g, shift, s);
      quot.push_back(Term{std::move(shift), s});
    } else {
      rem.push_back(Term{m, c});
      work.erase(it);
    }
  }
  return {Polynomial::from_terms(f.ring(), std::move(quot)),
          Polynomial::from_terms(f.ring(), std::move(rem))};
}

namespace {

struct PairKey {
  uint64_t deg;
  Monomial lcm;
  std::size_t i, j;
};

struct PairLess {
  const MonomialOrder* ord;
  bool operator()(const PairKey& a, const PairKey& b) const {
    if (a.deg != b.deg) return a.deg < b.deg;
    auto c = ord->compare(a.lcm, b.lcm);
    if (c != std::strong_ordering::equal) {
      return c == std::strong_ordering::less;
    }
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

// Reduce each element against the others until stable, then sort and make
// monic. Input leading monomials must already be pairwise non-divisible.
std::vector<Polynomial> interreduce(std::vector<Polynomial> basis,
                                    const MonomialOrder& ord) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(basis.size() - 1);
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (j != i) others.push_back(basis[j]);
      }
      Polynomial r = normal_form(basis[i], others, ord);
      r = normalize_monic(r, ord);  // leading term survives by minimality
      if (r != basis[i]) {
        basis[i] = std::move(r);
        changed = true;
      }
    }
  }
  std::sort(basis.begin(), basis.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return ord.greater(leading_term(a, ord).mono,
                                 leading_term(b, ord).mono);
            });
  return basis;
}

}  // namespace

GroebnerBasis buchberger(std::span<const Polynomial> gens,
                         const MonomialOrder& ord) {
  std::vector<Polynomial> g;
  for (const auto& f : gens) {
    if (!f.is_zero()) g.push_back(strip_content(f, ord));
  }
  if (g.empty()) return GroebnerBasis{{}, ord};

  auto lm = [&](std::size_t k) { return leading_term(g[k], ord).mono; };

  std::set<PairKey, PairLess> queue{PairLess{&ord}};
  // treated(i,j): the pair left the queue (computed or skipped by a
  // criterion); required by the chain criterion.
  std::set<std::pair<std::size_t, std::size_t>> treated;
  auto push_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Monomial l = Monomial::lcm(lm(i), lm(j));
      queue.insert(PairKey{l.total_degree(), std::move(l), i, j});
    }
  };
  for (std::size_t j = 1; j < g.size(); ++j) push_pairs_for(j);

  while (!queue.empty()) {
    PairKey pk = *queue.begin();
    queue.erase(queue.begin());
    treated.insert({pk.i, pk.j});

    if (lm(pk.i).coprime(lm(pk.j))) continue;  // first Buchberger criterion

    // Chain criterion: lm(k) divides the lcm and both pairs with k already
    // left the queue.
    bool chained = false;
    for (std::size_t k = 0; k < g.size() && !chained; ++k) {
      if (k == pk.i || k == pk.j) continue;
      if (!lm(k).divides(pk.lcm)) continue;
      auto a = std::minmax(pk.i, k);
      auto b = std::minmax(pk.j, k);
      if (treated.count({a.first, a.second}) &&
          treated.count({b.first, b.second})) {
        chained = true;
      }
    }
    if (chained) continue;

    Polynomial s = s_polynomial(g[pk.i], g[pk.j], ord);
    Polynomial h = normal_form(s, g, ord);
    if (h.is_zero()) continue;
    g.push_back(strip_content(h, ord));
    push_pairs_for(g.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial is divisible by the
  // leading monomial of another survivor. Survivor choice is deterministic:
  // smaller leading monomials (and earlier indices on ties) win.
  std::vector<std::size_t> idx(g.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    auto c = ord.compare(lm(a), lm(b));
    if (c != std::strong_ordering::equal) {
      return c == std::strong_ordering::less;
    }
    return a < b;
  });
  std::vector<Polynomial> minimal;
  std::vector<Monomial> kept_lms;
  for (std::size_t k : idx) {
    Monomial m = lm(k);
    bool dominated = false;
    for (const auto& kl : kept_lms) {
      if (kl.divides(m)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) {
      kept_lms.push_back(std::move(m));
      minimal.push_back(normalize_monic(g[k], ord));
    }
  }

  return GroebnerBasis{interreduce(std::move(minimal), ord), ord};
}

std::shared_ptr<const GroebnerBasis> groebner_basis(const Ideal& I,
                                                    const MonomialOrder& ord) {
  return I.groebner(ord);
}

}  // namespace calab
