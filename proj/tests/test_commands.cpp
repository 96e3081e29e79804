#include <cstdio>
#include <fstream>
#include <sstream>

#include "calab/commands.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace calab;
using nlohmann::json;

namespace {

// Writes `text` to a unique temp file; removed on destruction.
struct TempFile {
  std::string path;
  explicit TempFile(const std::string& text, const char* tag) {
    static int counter = 0;
    path = std::string("cmdtest_") + tag + "_" + std::to_string(counter++) +
           ".ring";
    std::ofstream out(path, std::ios::binary);
    out << text;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

const char* kPlaneLine = R"(char 0;
vars x, y, z;
ideal x*z, y*z;
)";

const char* kFermat = R"(char 7;
vars x, y, z;
ideal x^3 + y^3 + z^3;
ideal J = x, y;
let u = z^2;
let c = x^2;
let one = 1;
components (x^3 + y^3 + z^3);
flags equidimensional, reduced;
candidates z^2, z^3, x*y;
query tc-certify u J c;
query tc-refute one J;
emax 2;
)";

json run_json(const JobSpec& job, int want_exit = 0) {
  CommandOutcome out = run_command(job);
  INFO("output: ", out.text);
  REQUIRE(out.exit_code == want_exit);
  return json::parse(out.text);
}

}  // namespace

TEST_SUITE("commands") {

TEST_CASE("the envelope carries schema, command, ring, result") {
  TempFile f(kPlaneLine, "env");
  json j = run_json({"dim", f.path, {}});
  CHECK(j["schema"] == 1);
  CHECK(j["command"] == "dim");
  CHECK(j["ring"]["characteristic"] == 0);
  CHECK(j["ring"]["vars"] == json::array({"x", "y", "z"}));
  CHECK(j["ring"]["order"] == "grevlex");
  CHECK(j["result"]["dim"] == 2);
  CHECK(j.contains("caveats"));
}

TEST_CASE("groebner bases render reduced, sorted, and flagged") {
  TempFile f(kFermat, "gb");
  json j = run_json({"gb", f.path, {{"ideal", "x, y, x^3 + y^3 + z^3"}}});
  // the cubic reduces to z^3 against (x, y); ascending string order
  CHECK(j["result"]["basis"] == json::array({"x", "y", "z^3"}));
  CHECK(j["result"]["is_unit"] == false);
  // with no --ideal the defining ideal itself is the subject
  json d = run_json({"gb", f.path, {}});
  CHECK(d["result"]["basis"] == json::array({"x^3+y^3+z^3"}));
}

TEST_CASE("singular locus of the plane-line union is pinned") {
  TempFile f(kPlaneLine, "sing");
  json j = run_json({"sing-locus", f.path, {}});
  CHECK(j["result"]["generators"] == json::array({"x", "y", "z^2"}));
  CHECK(j["result"]["equiheight"] == false);
}

TEST_CASE("jacobian ideal of the plane-line union is pinned") {
  TempFile f(kPlaneLine, "jac");
  json j = run_json({"jacobian-ideal", f.path, {}});
  CHECK(j["result"]["generators"] == json::array({"x*z", "y*z", "z^2"}));
  CHECK(j["result"]["big_height"] == 2);
}

TEST_CASE("jacobian matrix rows follow the defining generators") {
  TempFile f(kPlaneLine, "jmat");
  json j = run_json({"jacobian", f.path, {}});
  CHECK(j["result"]["rows"] == 2);
  CHECK(j["result"]["cols"] == 3);
  CHECK(j["result"]["entries"] ==
        json::array({json::array({"z", "0", "x"}),
                     json::array({"0", "z", "y"})}));
}

TEST_CASE("min-primes reports provenance and machine-checked primality") {
  TempFile f(kPlaneLine, "minp");
  json j = run_json({"min-primes", f.path, {}});
  CHECK(j["result"]["provenance"] == "derived-monomial");
  CHECK(j["result"]["primality_machine_checked"] == true);
  REQUIRE(j["result"]["components"].size() == 2);
  // heights 1 and 2 in some order
  int h0 = j["result"]["components"][0]["height"].get<int>();
  int h1 = j["result"]["components"][1]["height"].get<int>();
  CHECK(h0 + h1 == 3);
}

TEST_CASE("fitting indices follow the unit and zero conventions") {
  TempFile f(kPlaneLine, "fit");
  json j3 = run_json({"fitting", f.path, {{"i", "3"}}});
  CHECK(j3["result"]["convention"] == "unit");
  CHECK(j3["result"]["generators"] == json::array({"1"}));
  json j0 = run_json({"fitting", f.path, {{"i", "0"}}});
  CHECK(j0["result"]["convention"] == "zero");
  CHECK(j0["result"]["generators"] == json::array());
  json j2 = run_json({"fitting", f.path, {{"i", "2"}}});
  CHECK(j2["result"]["convention"] == "computed");
  CHECK(j2["result"]["generators"] == json::array({"x", "y", "z"}));
}

TEST_CASE("tight-closure commands resolve let and ideal names") {
  TempFile f(kFermat, "tc");
  json cert = run_json({"tc-certify", f.path,
                        {{"u", "u"}, {"ideal", "J"}, {"c", "c"},
                         {"e-max", "2"}}});
  CHECK(cert["result"]["status"] == "CertifiedIn");
  CHECK(cert["result"]["bound_e"] == 2);
  json ref = run_json({"tc-refute", f.path,
                       {{"u", "one"}, {"ideal", "J"}}});
  CHECK(ref["result"]["status"] == "RefutedOut");
  CHECK(ref["result"]["witness"] == "z^2");
  // literal polynomials work in the same slots
  json lit = run_json({"tc-refute", f.path,
                       {{"u", "1"}, {"ideal", "x, y"}}});
  CHECK(lit["result"]["status"] == "RefutedOut");
}

TEST_CASE("the harness summarizes candidates and violations") {
  TempFile f(kFermat, "harness");
  json j = run_json({"harness", f.path, {}});
  CHECK(j["result"]["refused"] == false);
  CHECK(j["result"]["any_violation"] == false);
  CHECK(j["result"]["certified_count"].get<int>() >= 1);
  REQUIRE(j["result"]["candidates"].size() == 3);
  CHECK(j["result"]["candidates"][0]["u"] == "z^2");
  CHECK(j["result"]["candidates"][0]["certified"] == true);
}

TEST_CASE("user-supplied components come from a file or inline text") {
  TempFile f(kPlaneLine, "comp");
  // inline: semicolon-separated ideals
  json inl = run_json({"min-primes", f.path,
                       {{"components", "(z); (x, y)"}}});
  CHECK(inl["result"]["provenance"] == "user-supplied");
  // file: one component per line
  TempFile comp("# claimed components\n(z)\n(x, y)\n", "complist");
  json fil = run_json({"min-primes", f.path,
                       {{"components", comp.path}}});
  CHECK(fil["result"]["provenance"] == "user-supplied");
  CHECK(fil["result"]["components"] == inl["result"]["components"]);
}

TEST_CASE("the order option switches the reported basis order") {
  TempFile f(kPlaneLine, "order");
  json lex = run_json({"gb", f.path,
                       {{"ideal", "y^2 - x"}, {"order", "lex"}}});
  CHECK(lex["ring"]["order"] == "lex");
  // under lex, x > y^2, so the monic form solves for x
  CHECK(lex["result"]["basis"] == json::array({"x-y^2"}));
  json grev = run_json({"gb", f.path, {{"ideal", "y^2 - x"}}});
  // under grevlex, y^2 leads
  CHECK(grev["result"]["basis"] == json::array({"y^2-x"}));
}

TEST_CASE("error envelopes carry codes and nonzero exits") {
  SUBCASE("unreadable file is an argument error") {
    CommandOutcome out = run_command({"dim", "no_such_file.ring", {}});
    CHECK(out.exit_code == 1);
    json j = json::parse(out.text);
    CHECK(j["error"]["code"] == "E_ARG");
  }
  SUBCASE("parse failures name the location") {
    TempFile bad("char 6;\nvars x;\n", "badchar");
    CommandOutcome out = run_command({"dim", bad.path, {}});
    CHECK(out.exit_code == 1);
    json j = json::parse(out.text);
    CHECK(j["error"]["code"] == "E_PARSE");
  }
  SUBCASE("domain violations exit with 2") {
    TempFile f(kPlaneLine, "dom");
    // rank-at with a non-proper prime
    CommandOutcome out =
        run_command({"rank-at", f.path, {{"prime", "1"}}});
    CHECK(out.exit_code == 2);
    json j = json::parse(out.text);
    CHECK(j["error"]["code"] == "E_DOMAIN");
  }
  SUBCASE("failed component verification exits with 3") {
    TempFile f(kPlaneLine, "ver");
    CommandOutcome out = run_command({"min-primes", f.path,
                                      {{"components", "(z)"}}});
    CHECK(out.exit_code == 3);
    json j = json::parse(out.text);
    CHECK(j["error"]["code"] == "E_VERIFY");
  }
  SUBCASE("unknown command is an argument error") {
    TempFile f(kPlaneLine, "cmd");
    CommandOutcome out = run_command({"frobnicate", f.path, {}});
    CHECK(out.exit_code == 1);
  }
  SUBCASE("missing required option is an argument error") {
    TempFile f(kPlaneLine, "miss");
    CommandOutcome out = run_command({"fitting", f.path, {}});
    CHECK(out.exit_code == 1);
  }
}

TEST_CASE("identical jobs produce byte-identical output") {
  TempFile f(kFermat, "det");
  for (const char* cmd : {"gb", "dim", "min-primes", "jacobian",
                          "jacobian-ideal", "sing-locus", "harness"}) {
    JobSpec job{cmd, f.path, {}};
    if (std::string(cmd) == "gb") job.args["ideal"] = "J";
    CommandOutcome a = run_command(job);
    CommandOutcome b = run_command(job);
    CHECK(a.text == b.text);
    CHECK(a.exit_code == b.exit_code);
  }
}

TEST_CASE("sweeps emit deterministic CSV over the prime list") {
  TempFile f(kFermat, "sweep");
  JobSpec job{"sweep", f.path,
              {{"p", "5,7"}, {"deterministic", "1"}}};
  CommandOutcome out = run_command(job);
  REQUIRE(out.exit_code == 0);
  std::istringstream lines(out.text);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "instance,p,query,status,bound_e,witness,wall_ms,error");
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  REQUIRE(rows.size() == 4);  // 2 primes x 2 queries
  // primes in input order, queries inner
  CHECK(rows[0].find(",5,") != std::string::npos);
  CHECK(rows[1].find(",5,") != std::string::npos);
  CHECK(rows[2].find(",7,") != std::string::npos);
  // deterministic wall times are zeroed
  for (const auto& r : rows) {
    CHECK(r.find(",0,") != std::string::npos);
  }
  // byte-identical on a second run
  CommandOutcome again = run_command(job);
  CHECK(again.text == out.text);
}

TEST_CASE("sweeping over no primes yields a header-only table") {
  TempFile f(kFermat, "sweepempty");
  CommandOutcome out = run_command({"sweep", f.path, {{"deterministic", "1"}}});
  CHECK(out.exit_code == 0);
  CHECK(out.text == "instance,p,query,status,bound_e,witness,wall_ms,error\n");
}

TEST_CASE("every advertised command name dispatches") {
  for (const auto& name : command_names()) {
    // run with an unreadable file: must fail cleanly as E_ARG, proving the
    // name is wired to a handler rather than the unknown-command branch
    CommandOutcome out = run_command({name, "no_such_file.ring", {}});
    CHECK(out.exit_code == 1);
    json j = json::parse(out.text);
    CHECK(j["error"]["code"] == "E_ARG");
  }
}

}  // TEST_SUITE
