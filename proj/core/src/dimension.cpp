#include "calab/dimension.hpp"

#include <algorithm>
#include <bit>

#include "calab/groebner.hpp"
#include "calab/ideal_ops.hpp"

namespace calab {

namespace {

constexpr std::size_t kEnumerationCap = 20;  // 2^20 subsets is the desk limit

void check_enumerable(const Ring& ring) {
  if (ring.nvars() > kEnumerationCap) {
    throw DomainError("variable-subset enumeration capped at " +
                      std::to_string(kEnumerationCap) + " variables");
  }
}

// Supports of the minimal generators of the initial ideal.
std::vector<uint32_t> initial_supports(const Ideal& I) {
  auto gb = I.groebner(MonomialOrder::grevlex());
  if (gb->is_unit()) throw DomainError("unit ideal has no dimension data");
  std::vector<uint32_t> sup;
  for (const auto& g : gb->elements) {
    sup.push_back(leading_term(g, gb->order).mono.support_mask());
  }
  return sup;
}

std::size_t dim_of_quotient(const Ideal& I) {
  check_enumerable(*I.ring());
  const std::size_t n = I.ring()->nvars();
  std::vector<uint32_t> sup = initial_supports(I);
  if (sup.empty()) return n;  // zero ideal
  // S is independent iff no initial generator has support inside S.
  std::size_t best = 0;
  const uint32_t full = n == 32 ? 0xffffffffu : ((1u << n) - 1);
  for (uint32_t s = 0;; ++s) {
    bool independent = true;
    for (uint32_t m : sup) {
      if ((m & ~s) == 0) {
        independent = false;
        break;
      }
    }
    if (independent) {
      best = std::max(best, static_cast<std::size_t>(std::popcount(s)));
    }
    if (s == full) break;
  }
  return best;
}

}  // namespace

std::size_t krull_dim(const PresentedAlgebra& R) {
  return dim_of_quotient(R.defining);
}

std::size_t height(const Ideal& I) {
  if (I.is_zero_ideal()) return 0;
  return I.ring()->nvars() - dim_of_quotient(I);
}

ComponentData monomial_min_primes(const Ideal& I) {
  check_enumerable(*I.ring());
  const std::size_t n = I.ring()->nvars();
  std::vector<uint32_t> sup;
  for (const auto& g : I.gens()) {
    if (g.is_zero()) continue;
    if (g.term_count() != 1) {
      throw DomainError("minimal primes derived only for monomial ideals");
    }
    uint32_t m = g.terms()[0].mono.support_mask();
    if (m == 0) throw DomainError("unit ideal has no minimal primes");
    sup.push_back(m);
  }
  ComponentData out;
  out.provenance = ComponentData::Provenance::DerivedMonomial;
  out.primality_machine_checked = true;
  if (sup.empty()) {
    // Zero ideal: the single minimal prime is (0).
    out.minimal_primes.emplace_back(I.ring());
    out.heights.push_back(0);
    return out;
  }
  // Minimal covers, enumerated by ascending popcount so every kept cover is
  // inclusion-minimal (any proper subset was seen earlier).
  std::vector<uint32_t> covers;
  const uint32_t full = n == 32 ? 0xffffffffu : ((1u << n) - 1);
  std::vector<uint32_t> by_size[33];
  for (uint32_t s = 0;; ++s) {
    by_size[std::popcount(s)].push_back(s);
    if (s == full) break;
  }
  for (std::size_t size = 0; size <= n; ++size) {
    for (uint32_t s : by_size[size]) {
      bool cover = true;
      for (uint32_t m : sup) {
        if ((m & s) == 0) {
          cover = false;
          break;
        }
      }
      if (!cover) continue;
      bool minimal = true;
      for (uint32_t kept : covers) {
        if ((kept & ~s) == 0) {  // kept subset of s
          minimal = false;
          break;
        }
      }
      if (minimal) covers.push_back(s);
    }
  }
  std::sort(covers.begin(), covers.end(), [](uint32_t a, uint32_t b) {
    if (std::popcount(a) != std::popcount(b)) {
      return std::popcount(a) < std::popcount(b);
    }
    return a < b;
  });
  for (uint32_t c : covers) {
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < n; ++i) {
      if (c & (1u << i)) gens.push_back(Polynomial::variable(I.ring(), i));
    }
    out.minimal_primes.emplace_back(I.ring(), std::move(gens));
    out.heights.push_back(static_cast<std::size_t>(std::popcount(c)));
  }
  return out;
}

ComponentData verify_components(const Ideal& I,
                                const std::vector<Ideal>& claimed) {
  if (claimed.empty()) {
    throw VerifyError("component check failed: empty component list");
  }
  MonomialOrder ord = MonomialOrder::grevlex();
  // (a) I inside every claimed component.
  for (std::size_t k = 0; k < claimed.size(); ++k) {
    for (const auto& g : I.gens()) {
      if (!ideal_member(g, claimed[k])) {
        throw VerifyError(
            "component check (a) failed: defining generator " + g.str(ord) +
            " is not in claimed component #" + std::to_string(k + 1));
      }
    }
  }
  // (b) the intersection of the claims is inside the radical of I.
  Ideal meet = claimed[0];
  for (std::size_t k = 1; k < claimed.size(); ++k) {
    meet = intersect(meet, claimed[k]);
  }
  for (const auto& g : meet.gens()) {
    if (!radical_member(g, I)) {
      throw VerifyError(
          "component check (b) failed: intersection generator " + g.str(ord) +
          " is not in the radical of the ideal");
    }
  }
  // (c) minimality: no claim contains another.
  for (std::size_t i = 0; i < claimed.size(); ++i) {
    for (std::size_t j = 0; j < claimed.size(); ++j) {
      if (i == j) continue;
      if (ideal_contains(claimed[i], claimed[j])) {
        throw VerifyError("component check (c) failed: claimed component #" +
                          std::to_string(i + 1) + " contains component #" +
                          std::to_string(j + 1));
      }
    }
  }
  ComponentData out;
  out.provenance = ComponentData::Provenance::UserSupplied;
  out.minimal_primes = claimed;
  bool all_var_generated = true;
  for (const auto& P : claimed) {
    out.heights.push_back(height(P));
    for (const auto& g : P.gens()) {
      bool var_gen = g.term_count() == 1 &&
                     g.terms()[0].mono.total_degree() == 1;
      if (!var_gen && !g.is_zero()) all_var_generated = false;
    }
  }
  out.primality_machine_checked = all_var_generated;
  return out;
}

ComponentData components_for(const Ideal& I,
                             const std::vector<Ideal>* user_supplied) {
  // An explicit claim list is always verified, even when derivation could
  // have answered — the caller asked for their decomposition to be checked.
  if (user_supplied != nullptr && !user_supplied->empty()) {
    return verify_components(I, *user_supplied);
  }
  bool monomial = true;
  for (const auto& g : I.gens()) {
    if (!g.is_zero() && g.term_count() != 1) {
      monomial = false;
      break;
    }
  }
  if (monomial) return monomial_min_primes(I);
  throw DomainError("non-monomial ideal needs a user-supplied component list");
}

std::size_t big_height(const Ideal& I, const ComponentData& components) {
  (void)I;
  if (components.heights.empty()) {
    throw DomainError("no components available for big height");
  }
  return *std::max_element(components.heights.begin(),
                           components.heights.end());
}

bool is_equiheight(const PresentedAlgebra& R,
                   const ComponentData& components) {
  (void)R;
  if (components.heights.empty()) {
    throw DomainError("no components available for the equiheight check");
  }
  for (std::size_t h : components.heights) {
    if (h != components.heights[0]) return false;
  }
  return true;
}

}  // namespace calab
