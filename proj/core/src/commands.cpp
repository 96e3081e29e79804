#include "calab/commands.hpp"

#include <chrono>
#include <fstream>
#include <future>
#include <limits>
#include <sstream>

#include "calab/charp.hpp"
#include "calab/differentials.hpp"
#include "calab/groebner.hpp"
#include "calab/ideal_ops.hpp"
#include "json.hpp"

namespace calab {

namespace {

using Json = nlohmann::ordered_json;

int exit_for(const std::string& code) {
  if (code == "E_DOMAIN") return 2;
  if (code == "E_VERIFY") return 3;
  return 1;  // E_ARG, E_PARSE, anything unexpected
}

// --- argument helpers ----------------------------------------------------

const std::string* find_arg(const JobSpec& job, const std::string& key) {
  auto it = job.args.find(key);
  return it == job.args.end() ? nullptr : &it->second;
}

std::string require_arg(const JobSpec& job, const std::string& key) {
  const std::string* v = find_arg(job, key);
  if (!v || v->empty()) {
    throw ArgError("'" + job.command + "' needs --" + key);
  }
  return *v;
}

long long int_arg(const JobSpec& job, const std::string& key,
                  long long fallback) {
  const std::string* v = find_arg(job, key);
  if (!v) return fallback;
  try {
    std::size_t used = 0;
    long long out = std::stoll(*v, &used);
    if (used != v->size()) throw std::invalid_argument(*v);
    return out;
  } catch (const std::exception&) {
    throw ArgError("--" + key + " expects an integer, got '" + *v + "'");
  }
}

bool flag_arg(const JobSpec& job, const std::string& key) {
  const std::string* v = find_arg(job, key);
  return v && *v != "0" && *v != "false";
}

// --- resolution against the ring file ------------------------------------

Polynomial resolve_poly(const RingFile& rf, const std::string& spec) {
  auto it = rf.lets.find(spec);
  if (it != rf.lets.end()) return it->second;
  return parse_polynomial(rf.ring, spec);
}

Ideal resolve_ideal(const RingFile& rf, const std::string& spec) {
  auto it = rf.named_ideals.find(spec);
  if (it != rf.named_ideals.end()) return Ideal(rf.ring, it->second);
  return Ideal(rf.ring, parse_poly_list(rf.ring, spec));
}

Ideal ideal_arg_or_defining(const RingFile& rf, const JobSpec& job) {
  const std::string* spec = find_arg(job, "ideal");
  if (spec && !spec->empty()) return resolve_ideal(rf, *spec);
  return rf.defining_ideal();
}

Ideal required_ideal_arg(const RingFile& rf, const JobSpec& job) {
  const std::string* spec = find_arg(job, "ideal");
  if (spec && !spec->empty()) return resolve_ideal(rf, *spec);
  // A self-contained instance file that names exactly one ideal has named
  // the target; anything else is ambiguous and the caller must choose.
  if (rf.named_ideals.size() == 1) {
    return Ideal(rf.ring, rf.named_ideals.begin()->second);
  }
  throw ArgError("'" + job.command + "' needs --ideal");
}

/// One component group may be wrapped in parentheses, "(x, y)"; the wrap is
/// stripped only when the opening paren really matches the closing one.
std::string strip_component_parens(const std::string& raw) {
  std::size_t a = raw.find_first_not_of(" \t\r");
  std::size_t b = raw.find_last_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::string s = raw.substr(a, b - a + 1);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') return s;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth == 0 && i + 1 != s.size()) return s;
  }
  return s.substr(1, s.size() - 2);
}

/// Components: the --components override wins over the ring file's
/// components statement. The value is either a path to a file holding one
/// component per line (comma-separated generators, '#' comments) or an
/// inline list with groups split on ';' ("(z); (x, y)").
std::vector<Ideal> user_components(const RingFile& rf, const JobSpec& job) {
  const std::string* spec = find_arg(job, "components");
  if (!spec || spec->empty()) return rf.component_ideals();
  std::vector<Ideal> out;
  std::ifstream file(*spec);
  if (file) {
    std::string line;
    while (std::getline(file, line)) {
      std::size_t hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::string group = strip_component_parens(line);
      if (group.empty()) continue;
      out.emplace_back(rf.ring, parse_poly_list(rf.ring, group));
    }
  } else {
    std::stringstream ss(*spec);
    std::string group;
    while (std::getline(ss, group, ';')) {
      group = strip_component_parens(group);
      if (group.empty()) continue;
      out.emplace_back(rf.ring, parse_poly_list(rf.ring, group));
    }
  }
  if (out.empty()) throw ArgError("--components was given but holds no ideals");
  return out;
}

ComponentData components_of(const RingFile& rf, const JobSpec& job,
                            const Ideal& I) {
  std::vector<Ideal> user = user_components(rf, job);
  return components_for(I, user.empty() ? nullptr : &user);
}

int e_max_of(const RingFile& rf, const JobSpec& job) {
  long long v = int_arg(job, "e-max", rf.emax >= 0 ? rf.emax : 3);
  if (v < 0 || v > 1000) throw ArgError("--e-max out of range");
  return static_cast<int>(v);
}

MonomialOrder order_of(const RingFile& rf, const JobSpec& job,
                       std::string& name_out) {
  const std::string* v = find_arg(job, "order");
  name_out = (v && !v->empty()) ? *v : rf.order_name;
  if (name_out == "lex") return MonomialOrder::lex();
  if (name_out == "grevlex") return MonomialOrder::grevlex();
  throw ArgError("unknown order '" + name_out + "' (expected lex or grevlex)");
}

Ideal variable_ideal(const RingPtr& ring) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    gens.push_back(Polynomial::variable(ring, i));
  }
  return Ideal(ring, std::move(gens));
}

// --- JSON rendering -------------------------------------------------------

/// Every generator list in the JSON output is sorted ascending by rendered
/// string so reruns and golden files diff cleanly.
Json json_strings(const std::vector<Polynomial>& fs, const MonomialOrder& ord) {
  std::vector<std::string> strs;
  strs.reserve(fs.size());
  for (const auto& f : fs) strs.push_back(f.str(ord));
  std::sort(strs.begin(), strs.end());
  Json arr = Json::array();
  for (auto& s : strs) arr.push_back(std::move(s));
  return arr;
}

/// Canonical ideal rendering: the reduced basis under the declared order,
/// listed in ascending byte order of the rendered strings so diffs are
/// stable. The zero ideal renders as [].
Json json_ideal(const Ideal& I, const MonomialOrder& ord) {
  return json_strings(I.groebner(ord)->elements, ord);
}

Json json_verdict(const TcVerdict& v) {
  Json result;
  result["status"] = tc_status_name(v.status);
  result["bound_e"] = v.bound_e;
  Json ev = Json::array();
  for (const auto& e : v.evidence) {
    ev.push_back(Json{{"e", e.e}, {"witness", e.witness}});
  }
  result["evidence"] = std::move(ev);
  return result;
}

Json json_components(const ComponentData& comps, const MonomialOrder& ord) {
  Json arr = Json::array();
  for (std::size_t k = 0; k < comps.minimal_primes.size(); ++k) {
    Json row;
    row["generators"] = json_ideal(comps.minimal_primes[k], ord);
    row["height"] = comps.heights[k];
    arr.push_back(std::move(row));
  }
  return arr;
}

const char* provenance_name(const ComponentData& comps) {
  return comps.provenance == ComponentData::Provenance::DerivedMonomial
             ? "derived-monomial"
             : "user-supplied";
}

struct HandlerOutput {
  Json result;
  std::vector<std::string> caveats;
  int exit_code = 0;
};

// --- per-command handlers -------------------------------------------------

HandlerOutput cmd_gb(const RingFile& rf, const JobSpec& job,
                     const MonomialOrder& ord) {
  Ideal I = ideal_arg_or_defining(rf, job);
  auto gb = I.groebner(ord);
  HandlerOutput out;
  out.result["basis"] = json_strings(gb->elements, ord);
  out.result["is_unit"] = gb->is_unit();
  return out;
}

HandlerOutput cmd_dim(const RingFile& rf, const JobSpec& job,
                      const MonomialOrder&) {
  PresentedAlgebra R = rf.algebra();
  R.defining = ideal_arg_or_defining(rf, job);
  HandlerOutput out;
  out.result["dim"] = krull_dim(R);
  return out;
}

HandlerOutput cmd_height(const RingFile& rf, const JobSpec& job,
                         const MonomialOrder&) {
  HandlerOutput out;
  out.result["height"] = height(ideal_arg_or_defining(rf, job));
  return out;
}

HandlerOutput cmd_min_primes(const RingFile& rf, const JobSpec& job,
                             const MonomialOrder& ord) {
  Ideal I = ideal_arg_or_defining(rf, job);
  ComponentData comps = components_of(rf, job, I);
  HandlerOutput out;
  out.result["provenance"] = provenance_name(comps);
  out.result["primality_machine_checked"] = comps.primality_machine_checked;
  out.result["components"] = json_components(comps, ord);
  if (!comps.primality_machine_checked) {
    out.caveats.push_back("component primality is user-asserted");
  }
  return out;
}

HandlerOutput cmd_equiheight(const RingFile& rf, const JobSpec& job,
                             const MonomialOrder&) {
  PresentedAlgebra R = rf.algebra();
  ComponentData comps = components_of(rf, job, R.defining);
  HandlerOutput out;
  out.result["equiheight"] = is_equiheight(R, comps);
  out.result["heights"] = comps.heights;
  return out;
}

HandlerOutput cmd_jacobian(const RingFile& rf, const JobSpec&,
                           const MonomialOrder& ord) {
  PolyMatrix M = jacobian_matrix(rf.algebra());
  HandlerOutput out;
  out.result["rows"] = M.rows;
  out.result["cols"] = M.cols;
  out.result["row_labels"] = M.row_labels;
  out.result["col_labels"] = M.col_labels;
  Json entries = Json::array();
  for (std::size_t i = 0; i < M.rows; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < M.cols; ++j) row.push_back(M.at(i, j).str(ord));
    entries.push_back(std::move(row));
  }
  out.result["entries"] = std::move(entries);
  return out;
}

HandlerOutput cmd_fitting(const RingFile& rf, const JobSpec& job,
                          const MonomialOrder& ord) {
  long long i = int_arg(job, "i", std::numeric_limits<long long>::min());
  if (i == std::numeric_limits<long long>::min()) {
    throw ArgError("'fitting' needs --i (which Fitting ideal)");
  }
  PolyMatrix M = jacobian_matrix(rf.algebra());
  FittingResult fr = fitting_ideal(M, i);
  HandlerOutput out;
  out.result["index"] = fr.index;
  out.result["matrix_shape"] = Json::array({fr.matrix_shape.first,
                                            fr.matrix_shape.second});
  out.result["convention"] = fr.convention.empty() ? "computed" : fr.convention;
  out.result["generators"] = json_ideal(fr.ideal, ord);
  return out;
}

HandlerOutput cmd_jacobian_ideal(const RingFile& rf, const JobSpec& job,
                                 const MonomialOrder& ord) {
  PresentedAlgebra R = rf.algebra();
  ComponentData comps = components_of(rf, job, R.defining);
  HandlerOutput out;
  out.result["big_height"] = big_height(R.defining, comps);
  out.result["generators"] = json_ideal(jacobian_ideal(R, comps), ord);
  if (!comps.primality_machine_checked) {
    out.caveats.push_back("component primality is user-asserted");
  }
  return out;
}

HandlerOutput cmd_rank_at(const RingFile& rf, const JobSpec& job,
                          const MonomialOrder& ord) {
  PrimeWitness w = make_prime_witness(resolve_ideal(rf, require_arg(job, "prime")));
  PolyMatrix M = jacobian_matrix(rf.algebra());
  HandlerOutput out;
  out.result["rank"] = rank_at_prime(M, w);
  out.result["prime"] = json_ideal(w.ideal, ord);
  out.result["prime_verified"] = w.verified;
  if (!w.note.empty()) out.caveats.push_back(w.note);
  return out;
}

HandlerOutput cmd_regular_at(const RingFile& rf, const JobSpec& job,
                             const MonomialOrder& ord) {
  PresentedAlgebra R = rf.algebra();
  PrimeWitness w = make_prime_witness(resolve_ideal(rf, require_arg(job, "prime")));
  ComponentData comps = components_of(rf, job, R.defining);
  RegularityResult rr = regular_at(R, w, comps);
  HandlerOutput out;
  out.result["regular"] = rr.regular;
  out.result["local_height"] = rr.local_height;
  out.result["prime"] = json_ideal(w.ideal, ord);
  out.caveats = rr.caveats;
  return out;
}

HandlerOutput cmd_sing_locus(const RingFile& rf, const JobSpec& job,
                             const MonomialOrder& ord) {
  PresentedAlgebra R = rf.algebra();
  ComponentData comps = components_of(rf, job, R.defining);
  HandlerOutput out;
  out.result["equiheight"] = is_equiheight(R, comps);
  out.result["generators"] = json_ideal(singular_locus(R, comps), ord);
  if (R.characteristic() > 0) out.caveats.push_back(kPerfectBaseCaveat);
  if (!comps.primality_machine_checked) {
    out.caveats.push_back("component primality is user-asserted");
  }
  return out;
}

HandlerOutput cmd_frob_power(const RingFile& rf, const JobSpec& job,
                             const MonomialOrder& ord) {
  long long q = int_arg(job, "q", -1);
  if (q <= 0) throw ArgError("'frob-power' needs --q (a power of p)");
  HandlerOutput out;
  out.result["q"] = q;
  const std::string* u = find_arg(job, "u");
  if (u && !u->empty()) {
    out.result["power"] =
        frobenius_poly(resolve_poly(rf, *u), static_cast<uint64_t>(q)).str(ord);
  } else {
    Ideal I = ideal_arg_or_defining(rf, job);
    out.result["generators"] =
        json_ideal(frobenius_power(I, static_cast<uint64_t>(q)), ord);
  }
  return out;
}

HandlerOutput cmd_tc_certify(const RingFile& rf, const JobSpec& job,
                             const MonomialOrder&) {
  PresentedAlgebra R = rf.algebra();
  Polynomial u = resolve_poly(rf, require_arg(job, "u"));
  Polynomial c = resolve_poly(rf, require_arg(job, "c"));
  Ideal I = required_ideal_arg(rf, job);
  CharPContext ctx(R.characteristic(), e_max_of(rf, job));
  TcVerdict v = tc_certify_in(R, u, I, c, ctx);
  HandlerOutput out;
  out.result = json_verdict(v);
  out.caveats = v.caveats;
  return out;
}

HandlerOutput cmd_tc_refute(const RingFile& rf, const JobSpec& job,
                            const MonomialOrder&) {
  PresentedAlgebra R = rf.algebra();
  Polynomial u = resolve_poly(rf, require_arg(job, "u"));
  Ideal I = required_ideal_arg(rf, job);
  ComponentData comps = components_of(rf, job, R.defining);
  TcVerdict v = tc_refute_in(R, u, I, comps);
  HandlerOutput out;
  out.result["status"] = tc_status_name(v.status);
  out.result["witness"] =
      v.status == TcStatus::RefutedOut ? Json(v.evidence.at(0).witness)
                                       : Json(nullptr);
  out.caveats = v.caveats;
  return out;
}

HandlerOutput cmd_frob_closure(const RingFile& rf, const JobSpec& job,
                               const MonomialOrder&) {
  PresentedAlgebra R = rf.algebra();
  Polynomial u = resolve_poly(rf, require_arg(job, "u"));
  Ideal I = required_ideal_arg(rf, job);
  CharPContext ctx(R.characteristic(), e_max_of(rf, job));
  TcVerdict v = frobenius_closure_member(R, u, I, ctx);
  HandlerOutput out;
  out.result = json_verdict(v);
  out.caveats = v.caveats;
  return out;
}

HandlerOutput cmd_harness(const RingFile& rf, const JobSpec& job,
                          const MonomialOrder&) {
  PresentedAlgebra R = rf.algebra();
  Ideal I = required_ideal_arg(rf, job);
  if (rf.candidates.empty()) {
    throw ArgError("'harness' needs a candidates statement in the ring file");
  }
  ComponentData comps = components_of(rf, job, R.defining);
  HarnessReport rep =
      test_multiplier_harness(R, I, rf.candidates, e_max_of(rf, job), comps);
  HandlerOutput out;
  out.result["refused"] = rep.refused;
  if (rep.refused) out.result["refusal_reason"] = rep.refusal_reason;
  out.result["certified_count"] = rep.certified_count;
  out.result["any_violation"] = rep.any_violation;
  Json rows = Json::array();
  for (const auto& cand : rep.candidates) {
    Json row;
    row["u"] = cand.u;
    row["certified"] = cand.certified;
    row["trivial_member"] = cand.trivial_member;
    if (cand.certified) row["certifier"] = cand.certifier;
    if (!cand.note.empty()) row["note"] = cand.note;
    row["violation"] = cand.violation;
    Json checks = Json::array();
    for (const auto& chk : cand.checks) {
      checks.push_back(Json{{"delta", chk.delta}, {"in_ideal", chk.in_ideal}});
    }
    row["checks"] = std::move(checks);
    rows.push_back(std::move(row));
  }
  out.result["candidates"] = std::move(rows);
  out.caveats = rep.caveats;
  if (rep.any_violation) out.exit_code = 3;  // failed verification gate
  return out;
}

HandlerOutput cmd_krull_check(const RingFile& rf, const JobSpec& job,
                              const MonomialOrder&) {
  PresentedAlgebra R = rf.algebra();
  Polynomial delta = resolve_poly(rf, require_arg(job, "delta"));
  Polynomial u = resolve_poly(rf, require_arg(job, "u"));
  Ideal I = required_ideal_arg(rf, job);
  const std::string* mspec = find_arg(job, "m");
  Ideal m = (mspec && !mspec->empty()) ? resolve_ideal(rf, *mspec)
                                       : variable_ideal(rf.ring);
  long long n_max = int_arg(job, "n-max", 6);
  TruncationReport rep =
      krull_truncation_check(R, delta, u, I, m, static_cast<int>(n_max));
  HandlerOutput out;
  Json rows = Json::array();
  for (const auto& r : rep.rows) {
    rows.push_back(Json{{"n", r.n}, {"member", r.member}});
  }
  out.result["rows"] = std::move(rows);
  out.result["held_through"] = rep.held_through;
  out.result["first_failure"] =
      rep.first_failure < 0 ? Json(nullptr) : Json(rep.first_failure);
  return out;
}

HandlerOutput cmd_truncate(const RingFile& rf, const JobSpec& job,
                           const MonomialOrder& ord) {
  PresentedAlgebra R = rf.algebra();
  long long n = int_arg(job, "n", -1);
  if (n < 0) throw ArgError("'truncate' needs --n (a nonnegative degree)");
  const std::string* mspec = find_arg(job, "m");
  Ideal m = (mspec && !mspec->empty()) ? resolve_ideal(rf, *mspec)
                                       : variable_ideal(rf.ring);
  PresentedAlgebra T = truncate_presentation(R, static_cast<int>(n), m);
  HandlerOutput out;
  out.result["n"] = n;
  out.result["generators"] = json_strings(T.defining.gens(), ord);
  return out;
}

// --- sweep ----------------------------------------------------------------

std::string csv_safe(std::string s) {
  for (char& c : s) {
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  }
  return s;
}

std::string instance_stem(const std::string& path) {
  std::size_t slash = path.find_last_of("/\\");
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  std::size_t dot = base.find_last_of('.');
  return dot == std::string::npos ? base : base.substr(0, dot);
}

struct SweepRow {
  std::string status;
  int bound_e = 0;
  std::string witness;
  long long wall_ms = 0;
  std::string error;
};

/// Run one stored query against a re-instantiated copy of the file.
SweepRow sweep_cell(const std::string& text, const std::string& name,
                    uint32_t p, const std::vector<std::string>& query) {
  SweepRow row;
  auto started = std::chrono::steady_clock::now();
  try {
    RingFile rf = parse_ring_text(text, name, p);
    PresentedAlgebra R = rf.algebra();
    const std::string& kind = query.at(0);
    auto poly_at = [&](std::size_t i) {
      return resolve_poly(rf, query.at(i));
    };
    auto ideal_at = [&](std::size_t i) {
      return resolve_ideal(rf, query.at(i));
    };
    TcVerdict v;
    if (kind == "tc-certify" && query.size() == 4) {
      CharPContext ctx(p, rf.emax >= 0 ? rf.emax : 3);
      v = tc_certify_in(R, poly_at(1), ideal_at(2), poly_at(3), ctx);
    } else if (kind == "tc-refute" && query.size() == 3) {
      std::vector<Ideal> user = rf.component_ideals();
      ComponentData comps =
          components_for(R.defining, user.empty() ? nullptr : &user);
      v = tc_refute_in(R, poly_at(1), ideal_at(2), comps);
    } else if (kind == "frob-closure" && query.size() == 3) {
      CharPContext ctx(p, rf.emax >= 0 ? rf.emax : 3);
      v = frobenius_closure_member(R, poly_at(1), ideal_at(2), ctx);
    } else {
      throw ArgError("unsupported query '" + kind + "' (want tc-certify u J c"
                     ", tc-refute u J, or frob-closure u J)");
    }
    row.status = tc_status_name(v.status);
    row.bound_e = v.bound_e;
    if (v.status == TcStatus::RefutedOut && !v.evidence.empty()) {
      row.witness = v.evidence.front().witness;
    }
  } catch (const std::exception& e) {
    row.error = csv_safe(e.what());
  }
  auto ended = std::chrono::steady_clock::now();
  row.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    ended - started)
                    .count();
  return row;
}

std::string run_sweep(const RingFile& probe, const std::string& text,
                      const JobSpec& job) {
  if (probe.queries.empty()) {
    throw ArgError("'sweep' needs query statements in the ring file");
  }
  std::vector<uint32_t> primes;
  const std::string* plist = find_arg(job, "p");
  if (plist) {
    std::stringstream ss(*plist);
    std::string part;
    while (std::getline(ss, part, ',')) {
      std::size_t first = part.find_first_not_of(" \t");
      if (first == std::string::npos) continue;
      std::size_t last = part.find_last_not_of(" \t");
      std::string tok = part.substr(first, last - first + 1);
      unsigned long v = 0;
      try {
        std::size_t used = 0;
        v = std::stoul(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ArgError("--p expects a comma-separated prime list, got '" +
                       tok + "'");
      }
      if (v == 0 || v > 0x7fffffffUL || !is_prime_u32(static_cast<uint32_t>(v))) {
        throw ArgError("--p entries must be primes < 2^31, got '" + tok + "'");
      }
      primes.push_back(static_cast<uint32_t>(v));
    }
  }
  const bool deterministic = flag_arg(job, "deterministic");
  const std::string name = probe.source_name;
  const std::string stem = instance_stem(name);

  std::vector<std::future<SweepRow>> cells;
  cells.reserve(primes.size() * probe.queries.size());
  for (uint32_t p : primes) {
    for (const auto& q : probe.queries) {
      cells.push_back(std::async(std::launch::async, sweep_cell, text, name, p,
                                 q));
    }
  }
  std::ostringstream csv;
  csv << "instance,p,query,status,bound_e,witness,wall_ms,error\n";
  std::size_t idx = 0;
  for (uint32_t p : primes) {
    for (const auto& q : probe.queries) {
      SweepRow row = cells[idx++].get();
      std::string query_text;
      for (std::size_t i = 0; i < q.size(); ++i) {
        if (i) query_text += ' ';
        query_text += q[i];
      }
      csv << stem << ',' << p << ',' << csv_safe(query_text) << ','
          << row.status << ',' << row.bound_e << ',' << csv_safe(row.witness)
          << ',' << (deterministic ? 0 : row.wall_ms) << ',' << row.error
          << '\n';
    }
  }
  return csv.str();
}

using Handler = HandlerOutput (*)(const RingFile&, const JobSpec&,
                                  const MonomialOrder&);

const std::vector<std::pair<std::string, Handler>>& handler_table() {
  static const std::vector<std::pair<std::string, Handler>> table = {
      {"gb", cmd_gb},
      {"dim", cmd_dim},
      {"height", cmd_height},
      {"min-primes", cmd_min_primes},
      {"equiheight", cmd_equiheight},
      {"jacobian", cmd_jacobian},
      {"fitting", cmd_fitting},
      {"jacobian-ideal", cmd_jacobian_ideal},
      {"rank-at", cmd_rank_at},
      {"regular-at", cmd_regular_at},
      {"sing-locus", cmd_sing_locus},
      {"frob-power", cmd_frob_power},
      {"tc-certify", cmd_tc_certify},
      {"tc-refute", cmd_tc_refute},
      {"frob-closure", cmd_frob_closure},
      {"harness", cmd_harness},
      {"krull-check", cmd_krull_check},
      {"truncate", cmd_truncate},
  };
  return table;
}

std::string read_file_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgError("cannot read ring file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : handler_table()) out.push_back(name);
    out.push_back("sweep");
    return out;
  }();
  return names;
}

CommandOutcome run_command(const JobSpec& job) {
  CommandOutcome outcome;
  try {
    if (job.file.empty()) throw ArgError("no ring file given (--ring)");
    const std::string text = read_file_text(job.file);
    RingFile rf = parse_ring_text(text, job.file);

    if (job.command == "sweep") {
      outcome.text = run_sweep(rf, text, job);
      return outcome;
    }

    std::string order_name;
    MonomialOrder ord = order_of(rf, job, order_name);
    Handler handler = nullptr;
    for (const auto& [name, fn] : handler_table()) {
      if (name == job.command) {
        handler = fn;
        break;
      }
    }
    if (!handler) throw ArgError("unknown command '" + job.command + "'");

    HandlerOutput res = handler(rf, job, ord);
    Json doc;
    doc["schema"] = 1;
    doc["command"] = job.command;
    doc["ring"] = Json{{"characteristic", rf.characteristic},
                       {"vars", rf.vars},
                       {"order", order_name}};
    doc["result"] = std::move(res.result);
    doc["caveats"] = res.caveats;
    outcome.text = doc.dump(2) + "\n";
    outcome.exit_code = res.exit_code;
    return outcome;
  } catch (const Error& e) {
    Json doc;
    doc["schema"] = 1;
    doc["command"] = job.command;
    doc["error"] = Json{{"code", e.code()}, {"message", e.what()}};
    outcome.text = doc.dump(2) + "\n";
    outcome.exit_code = exit_for(e.code());
    return outcome;
  } catch (const std::exception& e) {
    Json doc;
    doc["schema"] = 1;
    doc["command"] = job.command;
    doc["error"] = Json{{"code", "E_INTERNAL"}, {"message", e.what()}};
    outcome.text = doc.dump(2) + "\n";
    outcome.exit_code = 1;
    return outcome;
  }
}

}  // namespace calab
