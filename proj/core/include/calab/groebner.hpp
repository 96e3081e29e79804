#pragma once

#include <span>
#include <vector>

#include "calab/ideal.hpp"
#include "calab/polynomial.hpp"

namespace calab {

/// Reduced Groebner basis: monic, inter-reduced, no leading monomial divides
/// another, elements sorted descending by leading monomial. This form is
/// unique for a given ideal and order, which makes outputs bit-stable.
struct GroebnerBasis {
  std::vector<Polynomial> elements;
  MonomialOrder order;

  bool empty() const noexcept { return elements.empty(); }
  /// Basis of the whole ring, i.e. {1}.
  bool is_unit() const {
    return elements.size() == 1 && elements[0].is_constant() &&
           !elements[0].is_zero();
  }
};

/// S-polynomial: cancel the leading terms of f and g over lcm of their
/// leading monomials. Errors on zero input.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& ord);

/// Fully reduced normal form of f against `basis` (every term of the result
/// is divisible by no leading monomial of the basis). Deterministic: the
/// first divisor in basis order wins at each step.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const MonomialOrder& ord);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

/// Division by a single polynomial with quotient: f = q*g + r where no term
/// of r is divisible by lm(g).
std::pair<Polynomial, Polynomial> divide_single(const Polynomial& f,
                                                const Polynomial& g,
                                                const MonomialOrder& ord);

/// Buchberger with the normal selection strategy (minimal lcm degree first)
/// plus the coprimality and chain criteria; output is the reduced basis.
GroebnerBasis buchberger(std::span<const Polynomial> gens,
                         const MonomialOrder& ord);

/// Cached entry point used throughout the library.
std::shared_ptr<const GroebnerBasis> groebner_basis(const Ideal& I,
                                                    const MonomialOrder& ord);

}  // namespace calab
