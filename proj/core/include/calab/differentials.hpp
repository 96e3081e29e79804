#pragma once

#include <string>
#include <utility>
#include <vector>

#include "calab/dimension.hpp"

namespace calab {

/// Dense matrix of polynomials with row/column labels, row-major storage.
struct PolyMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Polynomial> entries;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;

  const Polynomial& at(std::size_t i, std::size_t j) const {
    return entries[i * cols + j];
  }
};

struct FittingResult {
  long long index = 0;  // which Fitting ideal
  Ideal ideal;
  std::pair<std::size_t, std::size_t> matrix_shape;  // rows, cols
  /// "unit", "zero", or "" when the minors were actually computed.
  std::string convention;
};

/// Prime used as a localization point. `verified` is machine-checked only
/// for variable-generated primes; anything else is a recorded user claim.
struct PrimeWitness {
  Ideal ideal;
  bool verified = false;
  std::string note;
};

PrimeWitness make_prime_witness(Ideal P);

/// Caveat attached to char-p regularity conclusions.
extern const char* const kPerfectBaseCaveat;

/// Jacobian matrix of the presentation: entry (i,j) is the formal partial
/// derivative of defining generator i by variable j.
PolyMatrix jacobian_matrix(const PresentedAlgebra& R);

/// Ideal of r x r minors. Zero ideal when r exceeds the shape; determinants
/// by cofactor expansion with memoization shared across row subsets.
Ideal minors(const PolyMatrix& M, std::size_t r);

/// i-th Fitting ideal of the cokernel presented by M (columns = targets):
/// minors of size cols - i, whole ring when cols - i <= 0, zero ideal when
/// cols - i exceeds min(rows, cols).
FittingResult fitting_ideal(const PolyMatrix& M, long long i);

/// First potentially non-vanishing Fitting ideal of the differentials
/// module: minors of size big_height(I).
Ideal jacobian_ideal(const PresentedAlgebra& R, const ComponentData& comps);

/// Largest r such that some r x r minor survives modulo q; 0 when every
/// entry lies in q.
std::size_t rank_at_prime(const PolyMatrix& M, const PrimeWitness& q);

struct RegularityResult {
  bool regular = false;
  std::size_t local_height = 0;
  std::vector<std::string> caveats;
};

/// Jacobian criterion at the prime q (which must contain the defining
/// ideal): regular iff the Fitting ideal at the local height escapes q.
RegularityResult regular_at(const PresentedAlgebra& R, const PrimeWitness& q,
                            const ComponentData& comps);

/// Singular locus as an ideal: equiheight case uses the Jacobian ideal
/// (plus the defining ideal); the general case intersects per-component
/// contributions, which is strictly smaller than V(jacobian_ideal) on
/// genuinely non-equiheight inputs.
Ideal singular_locus(const PresentedAlgebra& R, const ComponentData& comps);

}  // namespace calab
