#pragma once

#include <cstddef>
#include <vector>

#include "calab/groebner.hpp"
#include "calab/ideal.hpp"

namespace calab {

/// Generators of I intersected with the subring on the variables outside
/// `drop` (indices into the ring). Computed through a block elimination
/// order; the result lives in the same ambient ring but its generators do
/// not mention the dropped variables.
Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& drop);

/// I cap J through the t*I + (1-t)*J trick with a fresh variable "@t".
Ideal intersect(const Ideal& I, const Ideal& J);

/// Colon ideal (I : J). Per-generator quotients intersected.
Ideal quotient(const Ideal& I, const Ideal& J);

/// Saturation (I : f^infinity) with a fresh variable "@w".
Ideal saturate(const Ideal& I, const Polynomial& f);

/// Radical membership without computing the radical: 1 in I + (1 - w*f).
bool radical_member(const Polynomial& f, const Ideal& I);

/// Ideal generated by all k-fold products of the generators, k >= 1.
Ideal ideal_power(const Ideal& I, std::size_t k);

/// Internal helpers for the fresh-variable tricks; exposed for tests.
RingPtr extend_ring(const RingPtr& base, const std::vector<std::string>& extra);
Polynomial lift_to(const RingPtr& ext, const Polynomial& f);
Polynomial restrict_to(const RingPtr& base, const Polynomial& f);

}  // namespace calab
