#include "oracles.hpp"

#include <algorithm>
#include <map>

#include "calab/polynomial.hpp"

namespace oracles {

using calab::Monomial;
using calab::Polynomial;
using calab::RingPtr;
using calab::Scalar;

namespace {

struct StructLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return a.struct_cmp(b) == std::strong_ordering::less;
  }
};

void enum_monomials_rec(std::size_t nvars, uint32_t budget,
                        std::vector<uint32_t>& expo, std::size_t at,
                        std::vector<Monomial>& out) {
  if (at == nvars) {
    out.emplace_back(expo);
    return;
  }
  for (uint32_t e = 0; e <= budget; ++e) {
    expo[at] = e;
    enum_monomials_rec(nvars, budget - e, expo, at + 1, out);
  }
  expo[at] = 0;
}

std::vector<Monomial> monomials_up_to(std::size_t nvars, uint32_t degree) {
  std::vector<Monomial> out;
  std::vector<uint32_t> expo(nvars, 0);
  enum_monomials_rec(nvars, degree, expo, 0, out);
  return out;
}

/// Gaussian solvability of A x = b over F_p with dense word arithmetic.
bool solvable_fp(std::vector<std::vector<uint32_t>>& rows, uint32_t p) {
  // Each row is [a_0 .. a_{n-1} | b]; reduce to echelon form and look for
  // an inconsistent row 0 = nonzero.
  if (rows.empty()) return true;
  const std::size_t width = rows[0].size();
  const std::size_t cols = width - 1;
  auto mod_pow = [&](uint64_t base, uint64_t exp) {
    uint64_t acc = 1 % p;
    base %= p;
    while (exp) {
      if (exp & 1) acc = acc * base % p;
      base = base * base % p;
      exp >>= 1;
    }
    return static_cast<uint32_t>(acc);
  };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const uint32_t inv = mod_pow(rows[rank][col], p - 2);
    for (std::size_t j = col; j < width; ++j) {
      rows[rank][j] = static_cast<uint32_t>(
          static_cast<uint64_t>(rows[rank][j]) * inv % p);
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const uint64_t factor = rows[r][col];
      for (std::size_t j = col; j < width; ++j) {
        uint64_t v = rows[r][j] + static_cast<uint64_t>(p) * p -
                     factor * rows[rank][j] % p;
        rows[r][j] = static_cast<uint32_t>(v % p);
      }
    }
    ++rank;
  }
  for (const auto& row : rows) {
    bool all_zero = true;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (row[j] != 0) {
        all_zero = false;
        break;
      }
    }
    if (all_zero && row[width - 1] != 0) return false;
  }
  return true;
}

/// Gaussian solvability over the rationals (exact, small systems only).
bool solvable_q(std::vector<std::vector<calab::Rational>>& rows) {
  if (rows.empty()) return true;
  const std::size_t width = rows[0].size();
  const std::size_t cols = width - 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const calab::Rational inv = rows[rank][col];
    for (std::size_t j = col; j < width; ++j) rows[rank][j] /= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const calab::Rational factor = rows[r][col];
      for (std::size_t j = col; j < width; ++j) {
        rows[r][j] -= factor * rows[rank][j];
      }
    }
    ++rank;
  }
  for (const auto& row : rows) {
    bool all_zero = true;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (row[j] != 0) {
        all_zero = false;
        break;
      }
    }
    if (all_zero && row[width - 1] != 0) return false;
  }
  return true;
}

/// One Macaulay solve at cofactor degree exactly <= D.
bool member_at_degree(const Polynomial& f, const std::vector<Polynomial>& gens,
                      uint32_t D) {
  const RingPtr ring = f.ring();
  const std::size_t nvars = ring->nvars();
  const uint32_t p = ring->characteristic();
  const std::vector<Monomial> cof = monomials_up_to(nvars, D);

  // Column layout: (gen index, cofactor monomial). Row index: every product
  // monomial that can appear, plus the monomials of f.
  std::map<Monomial, std::size_t, StructLess> row_of;
  auto row_id = [&](const Monomial& m) {
    auto [it, fresh] = row_of.emplace(m, row_of.size());
    return it->second;
  };
  struct Entry {
    std::size_t row, col;
    Scalar value;
  };
  std::vector<Entry> entries;
  std::size_t col = 0;
  for (const auto& g : gens) {
    for (const auto& b : cof) {
      for (const auto& t : g.terms()) {
        entries.push_back(Entry{row_id(b.times(t.mono)), col, t.coeff});
      }
      ++col;
    }
  }
  for (const auto& t : f.terms()) row_id(t.mono);

  const std::size_t n_rows = row_of.size();
  const std::size_t n_cols = col;
  if (p > 0) {
    std::vector<std::vector<uint32_t>> rows(
        n_rows, std::vector<uint32_t>(n_cols + 1, 0));
    for (const auto& e : entries) {
      rows[e.row][e.col] =
          static_cast<uint32_t>((rows[e.row][e.col] + e.value.fp_value()) % p);
    }
    for (const auto& t : f.terms()) {
      rows[row_of.at(t.mono)][n_cols] = t.coeff.fp_value();
    }
    return solvable_fp(rows, p);
  }
  std::vector<std::vector<calab::Rational>> rows(
      n_rows, std::vector<calab::Rational>(n_cols + 1, calab::Rational(0)));
  for (const auto& e : entries) {
    rows[e.row][e.col] += e.value.rational();
  }
  for (const auto& t : f.terms()) {
    rows[row_of.at(t.mono)][n_cols] = t.coeff.rational();
  }
  return solvable_q(rows);
}

}  // namespace

bool member(const Polynomial& f, const std::vector<Polynomial>& gens,
            uint32_t degree_cap) {
  if (f.is_zero()) return true;
  std::vector<Polynomial> live;
  for (const auto& g : gens) {
    if (!g.is_zero()) live.push_back(g);
  }
  if (live.empty()) return false;
  for (uint32_t D = 0; D <= degree_cap; ++D) {
    if (member_at_degree(f, live, D)) return true;
  }
  return false;
}

bool radical_member(const Polynomial& f, const std::vector<Polynomial>& gens,
                    uint32_t power_cap, uint32_t degree_cap) {
  Polynomial acc = f;
  for (uint32_t k = 1; k <= power_cap; ++k) {
    if (member(acc, gens, degree_cap)) return true;
    acc = acc * f;
  }
  return false;
}

std::size_t dim_monomial(const std::vector<uint32_t>& supports,
                         std::size_t nvars) {
  std::size_t best = 0;
  for (uint32_t s = 0; s < (1u << nvars); ++s) {
    bool independent = true;
    for (uint32_t g : supports) {
      if ((g & s) == g) {  // support inside S
        independent = false;
        break;
      }
    }
    if (independent) {
      best = std::max(best, static_cast<std::size_t>(__builtin_popcount(s)));
    }
  }
  return best;
}

std::vector<uint32_t> minimal_covers(const std::vector<uint32_t>& supports,
                                     std::size_t nvars) {
  std::vector<uint32_t> covers;
  for (uint32_t s = 0; s < (1u << nvars); ++s) {
    bool cover = true;
    for (uint32_t g : supports) {
      if ((g & s) == 0) {
        cover = false;
        break;
      }
    }
    if (cover) covers.push_back(s);
  }
  std::vector<uint32_t> minimal;
  for (uint32_t c : covers) {
    bool is_min = true;
    for (uint32_t other : covers) {
      if (other != c && (other & c) == other) {  // proper subset also covers
        is_min = false;
        break;
      }
    }
    if (is_min) minimal.push_back(c);
  }
  std::sort(minimal.begin(), minimal.end(), [](uint32_t a, uint32_t b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return minimal;
}

calab::Monomial random_monomial(std::size_t nvars, std::mt19937& rng,
                                uint32_t degree) {
  std::vector<uint32_t> expo(nvars, 0);
  std::uniform_int_distribution<uint32_t> deg_pick(0, degree);
  uint32_t budget = deg_pick(rng);
  std::uniform_int_distribution<std::size_t> var_pick(0, nvars - 1);
  for (uint32_t i = 0; i < budget; ++i) ++expo[var_pick(rng)];
  return Monomial(expo);
}

Polynomial random_poly(const RingPtr& ring, std::mt19937& rng, int terms,
                       uint32_t degree) {
  const uint32_t p = ring->characteristic();
  std::vector<calab::Term> out;
  std::uniform_int_distribution<long long> coeff_pick(
      1, p > 0 ? static_cast<long long>(p - 1) : 9);
  for (int i = 0; i < terms; ++i) {
    out.push_back(calab::Term{random_monomial(ring->nvars(), rng, degree),
                              ring->scalar(coeff_pick(rng))});
  }
  return Polynomial::from_terms(ring, std::move(out));
}

}  // namespace oracles
