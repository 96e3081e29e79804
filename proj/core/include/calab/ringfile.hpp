#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "calab/dimension.hpp"

namespace calab {

/// Parsed instance file. The on-disk grammar is semicolon-terminated
/// statements with '#' line comments:
///
///   char 7;                       # 0 or a prime < 2^31, exactly once
///   vars x, y, z;                 # exactly once
///   order grevlex;                # optional: lex | grevlex
///   ideal x*z, y*z;               # defining ideal of the quotient
///   ideal J = x, y;               # named auxiliary ideal
///   let u = z^2;                  # named element
///   components (z), (x, y);      # claimed minimal primes
///   flags reduced;                # reduced, equidimensional
///   candidates z^2, z^3;          # harness candidates
///   query tc-certify u J c;       # stored verbatim for sweeps
///   emax 2;                       # per-instance exponent bound
///
/// Polynomial syntax: + - * ^ ( ), integer coefficients, and a/b rational
/// literals in characteristic 0 only. Names starting with '@' are reserved
/// for internal use and rejected everywhere in user input.
struct RingFile {
  std::string source_name;
  uint32_t characteristic = 0;
  std::vector<std::string> vars;
  std::string order_name = "grevlex";
  RingPtr ring;

  std::vector<Polynomial> defining;
  std::map<std::string, Polynomial> lets;
  std::map<std::string, std::vector<Polynomial>> named_ideals;
  std::vector<std::vector<Polynomial>> components;
  bool flag_equidimensional = false;
  bool flag_reduced = false;
  std::vector<Polynomial> candidates;
  std::vector<std::vector<std::string>> queries;
  int emax = -1;  // unset

  MonomialOrder order() const;
  Ideal defining_ideal() const { return Ideal(ring, defining); }
  PresentedAlgebra algebra() const;

  /// Claimed components as ideals; empty when none were declared.
  std::vector<Ideal> component_ideals() const;

  const Polynomial& let_ref(const std::string& name) const;  // ArgError if absent
  const std::vector<Polynomial>& ideal_ref(const std::string& name) const;
};

/// Parse from text. `char_override` re-instantiates the same file at a
/// different characteristic (used by parameter sweeps); coefficient
/// literals are reduced into the overriding prime field.
RingFile parse_ring_text(const std::string& text, const std::string& source_name,
                         std::optional<uint32_t> char_override = {});

/// Read and parse a file; ArgError when unreadable.
RingFile load_ring_file(const std::string& path,
                        std::optional<uint32_t> char_override = {});

/// Parse one polynomial over an existing ring (CLI arguments, tests).
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

/// Comma-separated polynomial list over an existing ring.
std::vector<Polynomial> parse_poly_list(const RingPtr& ring,
                                        const std::string& text);

/// Canonical text form; parse(render(parse(s))) == parse(s).
std::string render_ring_file(const RingFile& rf);

}  // namespace calab
