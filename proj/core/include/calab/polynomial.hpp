#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "calab/monomial.hpp"
#include "calab/ring.hpp"

namespace calab {

struct Term {
  Monomial mono;
  Scalar coeff;
};

/// Multivariate polynomial with exact coefficients. Terms are stored with
/// nonzero coefficients only, sorted descending under the structural
/// monomial layout, so equal polynomials have identical representations
/// regardless of how they were computed. Monomial-order-dependent views
/// (leading term, display order) take the order as a parameter.
class Polynomial {
 public:
  static Polynomial zero(RingPtr ring);
  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial variable(RingPtr ring, std::size_t var);
  static Polynomial term(RingPtr ring, Monomial m, const Scalar& c);
  /// Collects like terms and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const noexcept { return terms_.size(); }
  /// Max total degree over terms; zero polynomial has degree 0 by convention.
  uint64_t total_degree() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scale(const Scalar& c) const;
  Polynomial times_term(const Monomial& m, const Scalar& c) const;
  Polynomial pow(uint64_t k) const;

  /// Formal partial derivative with respect to variable `var`.
  Polynomial derivative(std::size_t var) const;

  /// Sum of the terms of total degree <= n.
  Polynomial truncate_degree(uint64_t n) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Display under the given order, greatest term first: "x^2-2/3*y".
  std::string str(const MonomialOrder& ord) const;

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted)
      : ring_(std::move(ring)), terms_(std::move(sorted)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

void check_same_ring(const Polynomial& a, const Polynomial& b);

/// Greatest term under ord. Error on the zero polynomial.
const Term& leading_term(const Polynomial& f, const MonomialOrder& ord);

/// Scale so the leading coefficient under ord is 1. Error on zero.
Polynomial normalize_monic(const Polynomial& f, const MonomialOrder& ord);

/// Over Q: strip rational content (primitive integer coefficients, positive
/// leading coefficient under ord). Over F_p: make monic. Tames coefficient
/// blowup during basis computations.
Polynomial strip_content(const Polynomial& f, const MonomialOrder& ord);

}  // namespace calab
