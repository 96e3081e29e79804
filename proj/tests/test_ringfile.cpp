#include "calab/errors.hpp"
#include "calab/ringfile.hpp"
#include "doctest.h"

using namespace calab;

namespace {

const char* kFullInstance = R"(# cubic over F_7 with everything declared
char 7;
vars x, y, z;
order grevlex;
ideal x^3 + y^3 + z^3;
ideal J = x, y;
let u = z^2;
let c = x^2;
components (x^3 + y^3 + z^3);
flags equidimensional, reduced;
candidates z^2, z^3, x*y;
query tc-certify u J c;
query tc-refute one J;
emax 2;
let one = 1;
)";

}  // namespace

TEST_SUITE("ringfile") {

TEST_CASE("a fully populated instance parses field by field") {
  RingFile rf = parse_ring_text(kFullInstance, "inline");
  CHECK(rf.characteristic == 7);
  CHECK(rf.vars == std::vector<std::string>{"x", "y", "z"});
  CHECK(rf.order_name == "grevlex");
  REQUIRE(rf.defining.size() == 1);
  CHECK(rf.defining[0].str(MonomialOrder::grevlex()) == "x^3+y^3+z^3");
  REQUIRE(rf.named_ideals.count("J") == 1);
  CHECK(rf.ideal_ref("J").size() == 2);
  CHECK(rf.let_ref("u").str(MonomialOrder::grevlex()) == "z^2");
  CHECK(rf.let_ref("one").str(MonomialOrder::grevlex()) == "1");
  REQUIRE(rf.components.size() == 1);
  CHECK(rf.flag_equidimensional);
  CHECK(rf.flag_reduced);
  CHECK(rf.candidates.size() == 3);
  REQUIRE(rf.queries.size() == 2);
  CHECK(rf.queries[0] ==
        std::vector<std::string>{"tc-certify", "u", "J", "c"});
  CHECK(rf.queries[1] == std::vector<std::string>{"tc-refute", "one", "J"});
  CHECK(rf.emax == 2);

  PresentedAlgebra A = rf.algebra();
  CHECK(A.assume_equidimensional);
  CHECK(A.assume_reduced);
  CHECK(A.ring->characteristic() == 7);
  CHECK(rf.component_ideals().size() == 1);
}

TEST_CASE("rendering and reparsing is the identity on the parse") {
  RingFile rf = parse_ring_text(kFullInstance, "inline");
  std::string text = render_ring_file(rf);
  RingFile back = parse_ring_text(text, "rendered");
  CHECK(back.characteristic == rf.characteristic);
  CHECK(back.vars == rf.vars);
  CHECK(back.order_name == rf.order_name);
  CHECK(back.defining == rf.defining);
  CHECK(back.lets == rf.lets);
  CHECK(back.named_ideals == rf.named_ideals);
  CHECK(back.components == rf.components);
  CHECK(back.flag_equidimensional == rf.flag_equidimensional);
  CHECK(back.flag_reduced == rf.flag_reduced);
  CHECK(back.candidates == rf.candidates);
  CHECK(back.queries == rf.queries);
  CHECK(back.emax == rf.emax);
  // and rendering is a fixed point
  CHECK(render_ring_file(back) == text);
}

TEST_CASE("query words survive lexing with their hyphens intact") {
  RingFile rf = parse_ring_text(
      "char 5; vars x; query tc-certify x x x;", "inline");
  REQUIRE(rf.queries.size() == 1);
  CHECK(rf.queries[0][0] == "tc-certify");
}

TEST_CASE("characteristic override re-reduces coefficient literals") {
  // 8*x over F_7 is x; over F_3 it is 2*x.
  RingFile base = parse_ring_text("char 7; vars x; ideal 8*x;", "inline");
  CHECK(base.defining[0].str(MonomialOrder::grevlex()) == "x");
  RingFile moved = parse_ring_text("char 7; vars x; ideal 8*x;", "inline", 3);
  CHECK(moved.characteristic == 3);
  CHECK(moved.defining[0].str(MonomialOrder::grevlex()) == "2*x");
}

TEST_CASE("rational literals parse in characteristic zero only") {
  RingFile rf = parse_ring_text("char 0; vars x; ideal 1/2*x;", "inline");
  CHECK(rf.defining[0].str(MonomialOrder::grevlex()) == "1/2*x");
  CHECK_THROWS_AS(
      parse_ring_text("char 5; vars x; ideal 1/2*x;", "inline"), ParseError);
}

TEST_CASE("parse errors carry line and column information") {
  SUBCASE("reserved name") {
    try {
      parse_ring_text("char 5;\nvars x, @t;", "inline");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      std::string msg = e.what();
      CHECK(msg.find("@") != std::string::npos);
      CHECK(msg.find("2") != std::string::npos);  // line 2
    }
  }
  SUBCASE("unknown variable in a polynomial") {
    CHECK_THROWS_AS(
        parse_ring_text("char 5; vars x; ideal x*w;", "inline"), ParseError);
  }
  SUBCASE("duplicate characteristic") {
    CHECK_THROWS_AS(
        parse_ring_text("char 5; char 7; vars x;", "inline"), ParseError);
  }
  SUBCASE("duplicate vars") {
    CHECK_THROWS_AS(
        parse_ring_text("char 5; vars x; vars y;", "inline"), ParseError);
  }
  SUBCASE("missing characteristic") {
    CHECK_THROWS_AS(parse_ring_text("vars x; ideal x;", "inline"),
                    ParseError);
  }
  SUBCASE("composite characteristic") {
    CHECK_THROWS_AS(parse_ring_text("char 6; vars x;", "inline"), ParseError);
  }
  SUBCASE("polynomial statement before the ring is declared") {
    CHECK_THROWS_AS(parse_ring_text("char 5; ideal x; vars x;", "inline"),
                    ParseError);
  }
  SUBCASE("missing semicolon") {
    CHECK_THROWS_AS(parse_ring_text("char 5\nvars x;", "inline"), ParseError);
  }
  SUBCASE("unknown statement") {
    CHECK_THROWS_AS(parse_ring_text("char 5; vars x; blorp x;", "inline"),
                    ParseError);
  }
}

TEST_CASE("single polynomials parse with precedence and unary minus") {
  RingPtr R = Ring::create(7, {"x", "y", "z"});
  MonomialOrder g = MonomialOrder::grevlex();
  CHECK(parse_polynomial(R, "x + y * z").str(g) == "y*z+x");
  CHECK(parse_polynomial(R, "(x + y) * z").str(g) == "x*z+y*z");
  // -(x^2), not (-x)^2: the minus stays outside the power, and -1 is 6 in F_7
  CHECK(parse_polynomial(R, "-x^2").str(g) == "6*x^2");
  CHECK(parse_polynomial(R, "x - - y").str(g) == "x+y");
  CHECK(parse_polynomial(R, "2^3").str(g) == "1");  // 8 mod 7
  CHECK(parse_polynomial(R, "2 * -x").str(g) == "5*x");  // -2 is 5 in F_7
  CHECK_THROWS_AS(parse_polynomial(R, "x^2^3"), ParseError);  // no towers
  CHECK(parse_polynomial(R, "(x + y)^2").str(g) == "x^2+2*x*y+y^2");
  CHECK(parse_polynomial(R, "0").is_zero());
  CHECK_THROWS_AS(parse_polynomial(R, "x +"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(R, "q"), ParseError);
  CHECK_THROWS_AS(parse_polynomial(R, "x^(-1)"), ParseError);
}

TEST_CASE("poly lists split on top-level commas only") {
  RingPtr R = Ring::create(7, {"x", "y"});
  std::vector<Polynomial> ps = parse_poly_list(R, "x, y^2, x*y + 3");
  REQUIRE(ps.size() == 3);
  CHECK(ps[1].str(MonomialOrder::grevlex()) == "y^2");
}

TEST_CASE("huge coefficient literals reduce correctly into small fields") {
  RingPtr R = Ring::create(7, {"x"});
  // 10^30 mod 7: 10 = 3 mod 7, 3^30 = (3^6)^5 = 1 mod 7
  Polynomial f = parse_polynomial(R, "1000000000000000000000000000000*x");
  CHECK(f.str(MonomialOrder::grevlex()) == "x");
}

TEST_CASE("load_ring_file reports unreadable paths as argument errors") {
  CHECK_THROWS_AS(load_ring_file("/nonexistent/nothing.ring"), ArgError);
}

}  // TEST_SUITE
