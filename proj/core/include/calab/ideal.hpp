#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "calab/polynomial.hpp"

namespace calab {

struct GroebnerBasis;

/// Finitely generated ideal of the ambient ring. Generators are kept as
/// given; canonical data comes from the cached reduced Groebner bases.
/// The cache is insert-once under a mutex, so concurrent readers share one
/// basis per order.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> gens);
  /// The zero ideal.
  explicit Ideal(RingPtr ring);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& gens() const noexcept { return gens_; }

  /// Reduced Groebner basis under ord, computed once per order and shared.
  std::shared_ptr<const GroebnerBasis> groebner(const MonomialOrder& ord) const;

  bool is_zero_ideal() const;
  /// Whole ring, detected through the basis.
  bool is_unit() const;

  Ideal(const Ideal& o);
  Ideal& operator=(const Ideal& o);
  Ideal(Ideal&&) noexcept = default;
  Ideal& operator=(Ideal&&) = default;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  mutable std::unique_ptr<std::mutex> cache_mu_;
  mutable std::map<std::string, std::shared_ptr<const GroebnerBasis>> cache_;
};

/// Membership through normal-form reduction against a cached basis.
bool ideal_member(const Polynomial& f, const Ideal& I);

/// Mutual generator membership.
bool ideal_contains(const Ideal& outer, const Ideal& inner);
bool ideal_equal(const Ideal& a, const Ideal& b);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);

}  // namespace calab
