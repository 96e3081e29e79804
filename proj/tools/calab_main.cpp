#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "calab/commands.hpp"

namespace {

struct Cli {
  CLI::App app{"Groebner-based invariants of quotient rings: dimensions, "
               "Fitting ideals, singular loci, and characteristic-p "
               "tight-closure certificates",
               "calab"};
  std::map<std::string, std::string> vals;
  bool deterministic = false;

  bool json = false;

  CLI::App* sub(const std::string& name, const std::string& help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("--ring", vals["__ring"], "instance (ring file)");
    s->add_option("--order", vals["order"], "monomial order: lex or grevlex");
    s->add_option("--out", vals["__out"], "write the output to this file");
    s->add_flag("--json", json, "machine-readable output (the default)");
    return s;
  }

  void opt(CLI::App* s, const std::string& flag, const std::string& key,
           const std::string& help) {
    s->add_option(flag, vals[key], help);
  }
};

}  // namespace

int main(int argc, char** argv) {
  Cli cli;
  cli.app.require_subcommand(1);

  CLI::App* s = cli.sub("gb", "reduced Groebner basis of an ideal");
  cli.opt(s, "--ideal", "ideal", "named ideal or generator list (default: defining ideal)");

  s = cli.sub("dim", "Krull dimension of the quotient");
  cli.opt(s, "--ideal", "ideal", "ideal to present by (default: defining ideal)");

  s = cli.sub("height", "height of an ideal in the ambient ring");
  cli.opt(s, "--ideal", "ideal", "named ideal or generator list (default: defining ideal)");

  s = cli.sub("min-primes", "minimal primes with heights");
  cli.opt(s, "--ideal", "ideal", "ideal to decompose (default: defining ideal)");
  cli.opt(s, "--components", "components", "claimed components, groups split on ';'");

  s = cli.sub("equiheight", "do all minimal primes share one height");
  cli.opt(s, "--components", "components", "claimed components, groups split on ';'");

  cli.sub("jacobian", "Jacobian matrix of the presentation");

  s = cli.sub("fitting", "Fitting ideal of the differentials module");
  cli.opt(s, "--i", "i", "which Fitting ideal");

  s = cli.sub("jacobian-ideal", "Fitting ideal at the big height");
  cli.opt(s, "--components", "components", "claimed components, groups split on ';'");

  s = cli.sub("rank-at", "rank of the Jacobian matrix modulo a prime");
  cli.opt(s, "--prime", "prime", "localization prime (named ideal or generators)");

  s = cli.sub("regular-at", "Jacobian regularity test at a prime");
  cli.opt(s, "--prime", "prime", "localization prime (named ideal or generators)");
  cli.opt(s, "--components", "components", "claimed components, groups split on ';'");

  s = cli.sub("sing-locus", "ideal cutting out the singular locus");
  cli.opt(s, "--components", "components", "claimed components, groups split on ';'");

  s = cli.sub("frob-power", "Frobenius power of an ideal or element");
  cli.opt(s, "--q", "q", "the power (must be a power of the characteristic)");
  cli.opt(s, "--u", "u", "element to raise instead of an ideal");
  cli.opt(s, "--ideal", "ideal", "ideal to bracket (default: defining ideal)");

  s = cli.sub("tc-certify", "bounded tight-closure membership certificate");
  cli.opt(s, "--u", "u", "candidate element");
  cli.opt(s, "--ideal", "ideal", "the ideal being closed");
  cli.opt(s, "--c", "c", "certifying multiplier");
  cli.opt(s, "--e-max", "e-max", "largest Frobenius exponent to check");

  s = cli.sub("tc-refute", "tight-closure exclusion via Jacobian multipliers");
  cli.opt(s, "--u", "u", "candidate element");
  cli.opt(s, "--ideal", "ideal", "the ideal being closed");
  cli.opt(s, "--components", "components", "claimed components, groups split on ';'");

  s = cli.sub("frob-closure", "Frobenius closure membership probe");
  cli.opt(s, "--u", "u", "candidate element");
  cli.opt(s, "--ideal", "ideal", "the ideal being closed");
  cli.opt(s, "--e-max", "e-max", "largest Frobenius exponent to check");

  s = cli.sub("harness", "certify candidates, then check every Jacobian multiplier");
  cli.opt(s, "--ideal", "ideal", "the ideal being closed");
  cli.opt(s, "--e-max", "e-max", "largest Frobenius exponent to check");
  cli.opt(s, "--components", "components", "claimed components, groups split on ';'");

  s = cli.sub("krull-check", "delta*u against I + m^n for n = 1..n_max");
  cli.opt(s, "--delta", "delta", "multiplier");
  cli.opt(s, "--u", "u", "candidate element");
  cli.opt(s, "--ideal", "ideal", "base ideal I");
  cli.opt(s, "--m", "m", "filtration ideal (default: all variables)");
  cli.opt(s, "--n-max", "n-max", "largest power to check (default 6)");

  s = cli.sub("truncate", "drop defining-generator terms above degree n");
  cli.opt(s, "--n", "n", "truncation degree");
  cli.opt(s, "--m", "m", "grading ideal (default: all variables)");

  s = cli.sub("sweep", "run the file's stored queries across primes (CSV)");
  cli.opt(s, "--p", "p", "comma-separated primes to instantiate");
  s->add_flag("--deterministic", cli.deterministic,
              "zero the wall_ms column for byte-stable output");

  try {
    cli.app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = cli.app.exit(e);
    return code == 0 ? 0 : 1;
  }

  calab::JobSpec job;
  job.command = cli.app.get_subcommands().front()->get_name();
  job.file = cli.vals["__ring"];
  for (const auto& [key, value] : cli.vals) {
    if (key.rfind("__", 0) == 0 || value.empty()) continue;
    job.args[key] = value;
  }
  if (cli.deterministic) job.args["deterministic"] = "1";

  calab::CommandOutcome outcome = calab::run_command(job);
  const std::string& out_path = cli.vals["__out"];
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return 1;
    }
    out << outcome.text;
  } else {
    std::cout << outcome.text;
  }
  return outcome.exit_code;
}
