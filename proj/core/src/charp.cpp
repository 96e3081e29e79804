#include "calab/charp.hpp"

#include <algorithm>

#include "calab/groebner.hpp"
#include "calab/ideal_ops.hpp"

namespace calab {

CharPContext::CharPContext(uint32_t p_, int e_max_) : p(p_), e_max(e_max_) {
  if (e_max_ < 0) throw ArgError("e_max must be nonnegative");
  if (p_ == 0) {
    throw DomainError(
        "Frobenius context needs positive characteristic, got 0");
  }
  Field check(p_);  // rejects composites
  (void)check;
}

const char* tc_status_name(TcStatus s) {
  switch (s) {
    case TcStatus::CertifiedIn:
      return "CertifiedIn";
    case TcStatus::RefutedOut:
      return "RefutedOut";
    case TcStatus::Undetermined:
      return "Undetermined";
  }
  return "?";
}

namespace {

bool is_p_power(uint64_t q, uint32_t p) {
  if (q == 0) return false;
  while (q % p == 0) q /= p;
  return q == 1;
}

uint64_t checked_q(uint32_t p, int e) {
  uint64_t q = 1;
  for (int i = 0; i < e; ++i) {
    if (q > kExponentCap / p) return 0;  // would overflow the exponent budget
    q *= p;
  }
  return q;
}

// Membership in the presented algebra: f in J + I0.
bool member_mod(const PresentedAlgebra& R, const Polynomial& f,
                const Ideal& J) {
  Ideal total = ideal_sum(J, R.defining);
  auto gb = total.groebner(MonomialOrder::grevlex());
  return normal_form(f, *gb).is_zero();
}

void require_char(const PresentedAlgebra& R, const CharPContext& ctx) {
  if (R.characteristic() == 0) {
    throw DomainError("operation needs a positive-characteristic ring");
  }
  if (R.characteristic() != ctx.p) {
    throw DomainError("context characteristic differs from the ring");
  }
}

// Degree budget check for c * u^q against the exponent cap.
bool q_within_budget(uint64_t q, const Polynomial& u, const Polynomial& c,
                     const Ideal& I) {
  if (q == 0) return false;
  uint64_t du = u.total_degree();
  uint64_t dmax = du;
  for (const auto& g : I.gens()) dmax = std::max(dmax, g.total_degree());
  if (dmax == 0) dmax = 1;
  if (q > kExponentCap / dmax) return false;
  uint64_t top = q * dmax + c.total_degree();
  return top < kExponentCap;
}

// Canonical multiplier list: reduced grevlex basis of the Jacobian ideal.
std::vector<Polynomial> jacobian_multipliers(const PresentedAlgebra& R,
                                             const ComponentData& comps) {
  Ideal jac = jacobian_ideal(R, comps);
  auto gb = jac.groebner(MonomialOrder::grevlex());
  return gb->elements;
}

std::string poly_label(const Polynomial& f) {
  return f.str(MonomialOrder::grevlex());
}

}  // namespace

Polynomial frobenius_poly(const Polynomial& f, uint64_t q) {
  const uint32_t p = f.ring()->characteristic();
  if (p == 0) throw DomainError("Frobenius powers need characteristic p > 0");
  if (!is_p_power(q, p)) {
    throw DomainError("q = " + std::to_string(q) +
                      " is not a power of the characteristic");
  }
  // (sum of terms)^q = sum of term^q in char p, and residues are fixed by
  // the Frobenius on the prime field.
  std::vector<Term> terms;
  terms.reserve(f.term_count());
  for (const auto& t : f.terms()) {
    terms.push_back(Term{t.mono.power(q), t.coeff});
  }
  return Polynomial::from_terms(f.ring(), std::move(terms));
}

Polynomial poly_pow_mod(const Polynomial& f, uint64_t k,
                        const GroebnerBasis& gb) {
  Polynomial acc =
      Polynomial::constant(f.ring(), Scalar::one(f.ring()->field()));
  Polynomial base = normal_form(f, gb);
  while (k) {
    if (k & 1) acc = normal_form(acc * base, gb);
    if (k >>= 1) base = normal_form(base * base, gb);
  }
  return acc;
}

Ideal frobenius_power(const Ideal& I, uint64_t q) {
  if (I.ring()->characteristic() == 0) {
    throw DomainError("bracket powers need characteristic p > 0");
  }
  std::vector<Polynomial> gens;
  gens.reserve(I.gens().size());
  for (const auto& g : I.gens()) {
    gens.push_back(g.is_zero() ? g : frobenius_poly(g, q));
  }
  return Ideal(I.ring(), std::move(gens));
}

namespace {

// Nonzerodivisor gate for the certifying multiplier c. Monomial defining
// ideals get the real check (c outside every minimal component); otherwise
// only c != 0 in R is checked and the reduced flag is echoed as a caveat.
void check_multiplier(const PresentedAlgebra& R, const Polynomial& c,
                      std::vector<std::string>& caveats) {
  if (c.is_zero() || member_mod(R, c, Ideal(R.ring))) {
    throw DomainError("multiplier c vanishes in the presented algebra");
  }
  bool monomial = true;
  for (const auto& g : R.defining.gens()) {
    if (!g.is_zero() && g.term_count() != 1) {
      monomial = false;
      break;
    }
  }
  if (monomial) {
    ComponentData comps = monomial_min_primes(R.defining);
    for (std::size_t k = 0; k < comps.minimal_primes.size(); ++k) {
      if (ideal_member(c, comps.minimal_primes[k])) {
        throw DomainError(
            "multiplier c lies in a minimal component and is a zerodivisor");
      }
    }
    caveats.push_back("multiplier verified outside every minimal component");
  } else if (R.assume_reduced) {
    caveats.push_back(
        "multiplier nonzerodivisor status relies on the user reduced flag");
  } else {
    caveats.push_back(
        "multiplier checked against the defining ideal only; reduced flag "
        "not set");
  }
}

}  // namespace

TcVerdict tc_certify_in(const PresentedAlgebra& R, const Polynomial& u,
                        const Ideal& I, const Polynomial& c,
                        const CharPContext& ctx) {
  require_char(R, ctx);
  TcVerdict v;
  check_multiplier(R, c, v.caveats);
  bool all_pass = true;
  for (int e = 0; e <= ctx.e_max; ++e) {
    uint64_t q = checked_q(ctx.p, e);
    if (q == 0 || !q_within_budget(q, u, c, I)) {
      v.caveats.push_back("exponent budget exceeded at e = " +
                          std::to_string(e) + "; remaining checks skipped");
      all_pass = false;
      break;
    }
    v.bound_e = e;
    Polynomial cu = c * frobenius_poly(u, q);
    bool ok = member_mod(R, cu, frobenius_power(I, q));
    if (ok) {
      v.evidence.push_back(
          {e, "c*u^q reduced to 0 modulo I^[q] + I0 at q = " +
                  std::to_string(q)});
    } else {
      v.evidence.push_back(
          {e, "c*u^q has nonzero normal form modulo I^[q] + I0 at q = " +
                  std::to_string(q)});
      v.caveats.push_back(
          "a single failing multiplier is not a refutation; try tc-refute");
      all_pass = false;
      break;
    }
  }
  if (all_pass) {
    v.status = TcStatus::CertifiedIn;
    v.caveats.push_back("certificate is bounded evidence up to e_max = " +
                        std::to_string(ctx.e_max) +
                        "; not a proof for all q");
  } else {
    v.status = TcStatus::Undetermined;
  }
  return v;
}

namespace {

// Shared hypothesis gate for the Jacobian-multiplier arguments.
bool refute_hypotheses(const PresentedAlgebra& R, const ComponentData& comps,
                       std::string& reason, std::vector<std::string>& caveats) {
  if (!is_equiheight(R, comps)) {
    reason = "components are not equiheight";
    return false;
  }
  if (!R.assume_reduced) {
    reason = "reduced flag not asserted";
    return false;
  }
  if (R.characteristic() == 0) {
    reason = "positive characteristic required";
    return false;
  }
  caveats.push_back("reducedness is user-asserted");
  if (comps.provenance == ComponentData::Provenance::UserSupplied &&
      !comps.primality_machine_checked) {
    caveats.push_back("component primality is user-asserted");
  }
  return true;
}

}  // namespace

TcVerdict tc_refute_in(const PresentedAlgebra& R, const Polynomial& u,
                       const Ideal& I, const ComponentData& comps) {
  TcVerdict v;
  std::string reason;
  if (!refute_hypotheses(R, comps, reason, v.caveats)) {
    v.status = TcStatus::Undetermined;
    v.caveats.push_back("hypotheses not established: " + reason);
    return v;
  }
  std::vector<Polynomial> deltas = jacobian_multipliers(R, comps);
  if (deltas.empty()) {
    v.status = TcStatus::Undetermined;
    v.caveats.push_back("jacobian ideal is zero; no multipliers available");
    return v;
  }
  for (const auto& d : deltas) {
    if (!member_mod(R, d * u, I)) {
      v.status = TcStatus::RefutedOut;
      // Witness is the bare multiplier; delta*u lies outside I + I0.
      v.evidence.push_back({0, poly_label(d)});
      return v;
    }
  }
  v.status = TcStatus::Undetermined;
  v.caveats.push_back(
      "every Jacobian multiplier maps u back into I; consistent with "
      "membership, not a proof");
  return v;
}

TcVerdict frobenius_closure_member(const PresentedAlgebra& R,
                                   const Polynomial& u, const Ideal& I,
                                   const CharPContext& ctx) {
  require_char(R, ctx);
  TcVerdict v;
  for (int e = 0; e <= ctx.e_max; ++e) {
    uint64_t q = checked_q(ctx.p, e);
    if (q == 0 ||
        !q_within_budget(q, u, Polynomial::zero(R.ring), I)) {
      v.caveats.push_back("exponent budget exceeded at e = " +
                          std::to_string(e) + "; remaining checks skipped");
      break;
    }
    v.bound_e = e;
    if (member_mod(R, frobenius_poly(u, q), frobenius_power(I, q))) {
      v.status = TcStatus::CertifiedIn;
      v.evidence.push_back(
          {e, "u^q lies in I^[q] + I0 at q = " + std::to_string(q)});
      return v;
    }
  }
  v.status = TcStatus::Undetermined;
  v.caveats.push_back("no Frobenius power up to e_max landed in the bracket "
                      "power; membership in the Frobenius closure is open");
  return v;
}

HarnessReport test_multiplier_harness(const PresentedAlgebra& R,
                                      const Ideal& I,
                                      const std::vector<Polynomial>& candidates,
                                      int e_max, const ComponentData& comps) {
  HarnessReport report;
  std::string reason;
  if (!refute_hypotheses(R, comps, reason, report.caveats)) {
    report.refused = true;
    report.refusal_reason = reason;
    return report;
  }
  CharPContext ctx(R.characteristic(), e_max);
  std::vector<Polynomial> deltas = jacobian_multipliers(R, comps);
  // Multipliers eligible to certify: nonzerodivisors among the deltas.
  std::vector<Polynomial> certifiers;
  for (const auto& d : deltas) {
    try {
      std::vector<std::string> scratch;
      check_multiplier(R, d, scratch);
      certifiers.push_back(d);
    } catch (const DomainError&) {
      // zerodivisor or zero in R; not usable as a certifying multiplier
    }
  }
  for (const auto& u : candidates) {
    HarnessCandidate row;
    row.u = poly_label(u);
    if (member_mod(R, u, I)) {
      row.trivial_member = true;
      row.certified = true;
      row.certifier = "1";
    } else {
      for (const auto& c : certifiers) {
        TcVerdict v = tc_certify_in(R, u, I, c, ctx);
        if (v.status == TcStatus::CertifiedIn) {
          row.certified = true;
          row.certifier = poly_label(c);
          break;
        }
      }
    }
    if (row.certified) {
      ++report.certified_count;
      for (const auto& d : deltas) {
        HarnessCheck chk;
        chk.delta = poly_label(d);
        chk.in_ideal = member_mod(R, d * u, I);
        if (!chk.in_ideal) row.violation = true;
        row.checks.push_back(std::move(chk));
      }
      if (row.violation) report.any_violation = true;
    } else {
      row.note = "not certified within the exponent bound; checks skipped";
    }
    report.candidates.push_back(std::move(row));
  }
  if (deltas.empty()) {
    report.caveats.push_back("jacobian ideal is zero; only trivial members "
                             "can certify");
  }
  report.caveats.push_back("certification bounded at e_max = " +
                           std::to_string(ctx.e_max));
  return report;
}

TruncationReport krull_truncation_check(const PresentedAlgebra& R,
                                        const Polynomial& delta,
                                        const Polynomial& u, const Ideal& I,
                                        const Ideal& m, int n_max) {
  if (n_max < 1) throw ArgError("n_max must be at least 1");
  TruncationReport report;
  report.held_through = true;
  Polynomial du = delta * u;
  for (int n = 1; n <= n_max; ++n) {
    Ideal level = ideal_sum(I, ideal_power(m, static_cast<std::size_t>(n)));
    bool member = member_mod(R, du, level);
    report.rows.push_back({n, member});
    if (!member && report.first_failure < 0) {
      report.first_failure = n;
      report.held_through = false;
    }
  }
  return report;
}

PresentedAlgebra truncate_presentation(const PresentedAlgebra& R, int N,
                                       const Ideal& m) {
  if (N < 0) throw ArgError("truncation degree must be nonnegative");
  // The grading filtration must come from the variables themselves.
  std::vector<bool> seen(R.ring->nvars(), false);
  for (const auto& g : m.gens()) {
    if (g.is_zero()) continue;
    if (g.term_count() != 1 || g.terms()[0].mono.total_degree() != 1) {
      throw ArgError("truncation needs m generated by the variables");
    }
    uint32_t mask = g.terms()[0].mono.support_mask();
    for (std::size_t i = 0; i < seen.size(); ++i) {
      if (mask & (1u << i)) seen[i] = true;
    }
  }
  for (bool s : seen) {
    if (!s) throw ArgError("truncation needs m generated by all variables");
  }
  Ideal residual_home = ideal_power(m, static_cast<std::size_t>(N) + 1);
  std::vector<Polynomial> gens;
  for (const auto& f : R.defining.gens()) {
    Polynomial t = f.truncate_degree(static_cast<uint64_t>(N));
    Polynomial residual = f - t;
    if (!residual.is_zero() && !ideal_member(residual, residual_home)) {
      throw VerifyError("truncation residual escaped m^{N+1}");
    }
    gens.push_back(std::move(t));
  }
  PresentedAlgebra out = R;
  out.defining = Ideal(R.ring, std::move(gens));
  return out;
}

}  // namespace calab
