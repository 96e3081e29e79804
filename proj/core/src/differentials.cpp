#include "calab/differentials.hpp"

#include <algorithm>
#include <map>

#include "calab/groebner.hpp"
#include "calab/ideal_ops.hpp"

namespace calab {

const char* const kPerfectBaseCaveat =
    "positive characteristic: regularity conclusions read as smoothness "
    "criterion (perfect base)";

PrimeWitness make_prime_witness(Ideal P) {
  PrimeWitness w{std::move(P), false, ""};
  bool var_generated = true;
  for (const auto& g : w.ideal.gens()) {
    if (g.is_zero()) continue;
    if (g.term_count() != 1 || g.terms()[0].mono.total_degree() != 1) {
      var_generated = false;
      break;
    }
  }
  if (var_generated) {
    w.verified = true;
  } else {
    w.note = "primality of the localization point is user-asserted";
  }
  return w;
}

PolyMatrix jacobian_matrix(const PresentedAlgebra& R) {
  PolyMatrix M;
  const auto& gens = R.defining.gens();
  M.rows = gens.size();
  M.cols = R.ring->nvars();
  M.entries.reserve(M.rows * M.cols);
  // Rows are labeled by the generator they differentiate; grevlex is only a
  // display choice here, the entries carry the actual polynomials.
  MonomialOrder label_ord = MonomialOrder::grevlex();
  for (std::size_t i = 0; i < M.rows; ++i) {
    M.row_labels.push_back(gens[i].str(label_ord));
    for (std::size_t j = 0; j < M.cols; ++j) {
      M.entries.push_back(gens[i].derivative(j));
    }
  }
  for (std::size_t j = 0; j < M.cols; ++j) {
    M.col_labels.push_back(R.ring->var_name(j));
  }
  return M;
}

namespace {

RingPtr matrix_ring(const PolyMatrix& M) {
  for (const auto& e : M.entries) {
    if (e.ring() != nullptr) return e.ring();
  }
  throw DomainError("matrix has no entries");
}

// Determinant of the submatrix selected by sorted row/column index lists,
// cofactor expansion along the first selected row. The memo is shared
// across calls so overlapping minors reuse their subdeterminants.
using DetMemo = std::map<std::pair<uint64_t, uint64_t>, Polynomial>;

uint64_t mask_of(const std::vector<std::size_t>& ix) {
  uint64_t m = 0;
  for (std::size_t i : ix) m |= (1ull << i);
  return m;
}

Polynomial det_rec(const PolyMatrix& M, std::vector<std::size_t> rows,
                   std::vector<std::size_t> cols, DetMemo& memo) {
  if (rows.size() == 1) return M.at(rows[0], cols[0]);
  auto key = std::make_pair(mask_of(rows), mask_of(cols));
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  RingPtr ring = matrix_ring(M);
  Polynomial acc = Polynomial::zero(ring);
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Polynomial& e = M.at(rows[0], cols[j]);
    if (e.is_zero()) continue;
    std::vector<std::size_t> sub_cols;
    sub_cols.reserve(cols.size() - 1);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (k != j) sub_cols.push_back(cols[k]);
    }
    Polynomial cof = e * det_rec(M, sub_rows, std::move(sub_cols), memo);
    acc = (j % 2 == 0) ? acc + cof : acc - cof;
  }
  memo.emplace(key, acc);
  return acc;
}

// All size-r index combinations in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n,
                                                   std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  if (r > n) return out;
  std::vector<std::size_t> c(r);
  for (std::size_t i = 0; i < r; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    std::size_t i = r;
    while (i > 0 && c[i - 1] == n - r + (i - 1)) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t k = i; k < r; ++k) c[k] = c[k - 1] + 1;
  }
  return out;
}

}  // namespace

Ideal minors(const PolyMatrix& M, std::size_t r) {
  RingPtr ring = matrix_ring(M);
  if (r < 1) throw ArgError("minor size must be positive");
  if (r > M.rows || r > M.cols) return Ideal(ring);  // zero ideal
  DetMemo memo;
  std::vector<Polynomial> gens;
  for (const auto& rows : combinations(M.rows, r)) {
    for (const auto& cols : combinations(M.cols, r)) {
      Polynomial d = det_rec(M, rows, cols, memo);
      if (!d.is_zero()) gens.push_back(std::move(d));
    }
  }
  return Ideal(ring, std::move(gens));
}

FittingResult fitting_ideal(const PolyMatrix& M, long long i) {
  RingPtr ring = matrix_ring(M);
  const long long size = static_cast<long long>(M.cols) - i;
  if (size <= 0) {
    Ideal unit(ring,
               {Polynomial::constant(ring, Scalar::one(ring->field()))});
    return FittingResult{i, std::move(unit), {M.rows, M.cols}, "unit"};
  }
  if (size > static_cast<long long>(std::min(M.rows, M.cols))) {
    return FittingResult{i, Ideal(ring), {M.rows, M.cols}, "zero"};
  }
  return FittingResult{i, minors(M, static_cast<std::size_t>(size)),
                       {M.rows, M.cols}, ""};
}

Ideal jacobian_ideal(const PresentedAlgebra& R, const ComponentData& comps) {
  PolyMatrix J = jacobian_matrix(R);
  const std::size_t bh = big_height(R.defining, comps);
  const long long index = static_cast<long long>(J.cols) -
                          static_cast<long long>(bh);
  return fitting_ideal(J, index).ideal;
}

std::size_t rank_at_prime(const PolyMatrix& M, const PrimeWitness& q) {
  if (q.ideal.is_unit()) {
    throw DomainError("rank at a prime needs a proper ideal");
  }
  const std::size_t cap = std::min(M.rows, M.cols);
  for (std::size_t r = cap; r >= 1; --r) {
    Ideal mr = minors(M, r);
    for (const auto& g : mr.gens()) {
      if (!ideal_member(g, q.ideal)) return r;
    }
  }
  return 0;
}

namespace {

// Smallest height among the components contained in q; that is the height
// of the defining ideal seen from the localization at q.
std::size_t local_height(const Ideal& I, const PrimeWitness& q,
                         const ComponentData& comps) {
  for (const auto& g : I.gens()) {
    if (!ideal_member(g, q.ideal)) {
      throw DomainError(
          "localization point does not contain the defining ideal");
    }
  }
  bool found = false;
  std::size_t best = 0;
  for (std::size_t k = 0; k < comps.minimal_primes.size(); ++k) {
    if (ideal_contains(q.ideal, comps.minimal_primes[k])) {
      if (!found || comps.heights[k] < best) best = comps.heights[k];
      found = true;
    }
  }
  if (!found) {
    throw DomainError(
        "no component is contained in the localization point; the component "
        "list cannot be complete");
  }
  return best;
}

}  // namespace

RegularityResult regular_at(const PresentedAlgebra& R, const PrimeWitness& q,
                            const ComponentData& comps) {
  if (q.ideal.is_unit()) {
    throw DomainError("regularity at the unit ideal is meaningless");
  }
  RegularityResult out;
  out.local_height = local_height(R.defining, q, comps);
  PolyMatrix J = jacobian_matrix(R);
  FittingResult fit = fitting_ideal(
      J, static_cast<long long>(J.cols) -
             static_cast<long long>(out.local_height));
  out.regular = false;
  for (const auto& g : fit.ideal.gens()) {
    if (!ideal_member(g, q.ideal)) {
      out.regular = true;
      break;
    }
  }
  if (R.characteristic() != 0) out.caveats.push_back(kPerfectBaseCaveat);
  if (!q.verified) {
    out.caveats.push_back("localization point primality is user-asserted");
  }
  if (comps.provenance == ComponentData::Provenance::UserSupplied &&
      !comps.primality_machine_checked) {
    out.caveats.push_back("component primality is user-asserted");
  }
  return out;
}

Ideal singular_locus(const PresentedAlgebra& R, const ComponentData& comps) {
  PolyMatrix J = jacobian_matrix(R);
  if (is_equiheight(R, comps)) {
    const std::size_t h = comps.heights[0];
    Ideal jac = fitting_ideal(
        J, static_cast<long long>(J.cols) - static_cast<long long>(h)).ideal;
    return ideal_sum(jac, R.defining);
  }
  // Non-equiheight: intersect the per-component loci. Using the plain
  // Jacobian ideal here would overshoot the singular locus.
  bool first = true;
  Ideal acc(R.ring);
  for (std::size_t k = 0; k < comps.minimal_primes.size(); ++k) {
    Ideal fit = fitting_ideal(
        J, static_cast<long long>(J.cols) -
               static_cast<long long>(comps.heights[k])).ideal;
    Ideal piece = ideal_sum(fit, comps.minimal_primes[k]);
    acc = first ? piece : intersect(acc, piece);
    first = false;
  }
  return acc;
}

}  // namespace calab
