#pragma once

#include <optional>
#include <string>
#include <vector>

#include "calab/ideal.hpp"

namespace calab {

/// Quotient presentation R = T/I with user-asserted structural flags.
/// Flags are recorded assumptions, never silently assumed true elsewhere:
/// operations that rely on them echo that reliance in their output.
struct PresentedAlgebra {
  RingPtr ring;   // ambient polynomial ring T
  Ideal defining; // I
  bool assume_equidimensional = false;
  bool assume_reduced = false;

  uint32_t characteristic() const { return ring->characteristic(); }
};

/// Minimal primes with heights. Either derived mechanically (monomial case)
/// or supplied by the user and machine-verified up to primality.
struct ComponentData {
  enum class Provenance { DerivedMonomial, UserSupplied };

  std::vector<Ideal> minimal_primes;
  std::vector<std::size_t> heights;
  Provenance provenance = Provenance::DerivedMonomial;

  /// True when every claimed component is generated by single variables,
  /// so primality itself is machine-checked, not just the containments.
  bool primality_machine_checked = false;
};

/// Krull dimension of T/I via maximal independent variable sets of the
/// initial ideal. Errors when I is the unit ideal.
std::size_t krull_dim(const PresentedAlgebra& R);

/// Height of a proper ideal: nvars - dim(T/I); the zero ideal has height 0.
std::size_t height(const Ideal& I);

/// Minimal primes of a monomial ideal through minimal covers of the
/// generator supports. Errors on non-monomial generators or the unit ideal.
ComponentData monomial_min_primes(const Ideal& I);

/// Certify a user-supplied component list: (a) I is contained in every
/// claimed prime, (b) the intersection of the claims is contained in the
/// radical of I, (c) no claim contains another. Throws VerifyError naming
/// the failed check. Primality of non-variable claims stays user-asserted.
ComponentData verify_components(const Ideal& I,
                                const std::vector<Ideal>& claimed);

/// Component data for I: derived when monomial, otherwise verified from the
/// user-supplied list. Errors when neither path applies.
ComponentData components_for(const Ideal& I,
                             const std::vector<Ideal>* user_supplied);

/// Largest height among the minimal primes.
std::size_t big_height(const Ideal& I, const ComponentData& components);

/// All minimal primes have equal height.
bool is_equiheight(const PresentedAlgebra& R, const ComponentData& components);

}  // namespace calab
