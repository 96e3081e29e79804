#include "calab/ringfile.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace calab {

namespace {

enum class Tok { Ident, Int, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) {}

  std::vector<Token> all() {
    std::vector<Token> out;
    for (;;) {
      Token t = next();
      bool end = t.kind == Tok::End;
      out.push_back(std::move(t));
      if (end) return out;
    }
  }

 private:
  Token next() {
    skip_space();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= src_.size()) return t;
    char c = src_[pos_];
    if (c == '@') throw ParseError("'@' is reserved for internal names", line_, col_);
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Tok::Ident;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_')) {
        t.text.push_back(src_[pos_]);
        advance();
      }
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Tok::Int;
      while (pos_ < src_.size() &&
             std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        t.text.push_back(src_[pos_]);
        advance();
      }
      return t;
    }
    static const std::string punct = ";,=()+-*^/";
    if (punct.find(c) != std::string::npos) {
      t.kind = Tok::Punct;
      t.text.assign(1, c);
      advance();
      return t;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_,
                     col_);
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        return;
      }
    }
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

/// Recursive-descent parser over the token stream. Polynomial expressions
/// need a ring, so 'char' and 'vars' must precede any polynomial statement.
class Parser {
 public:
  Parser(std::vector<Token> toks, std::string source,
         std::optional<uint32_t> char_override)
      : toks_(std::move(toks)),
        source_(std::move(source)),
        override_(char_override) {}

  RingFile run() {
    rf_.source_name = source_;
    while (!at_end()) statement();
    if (!seen_char_) throw ParseError("missing 'char' statement", cur().line, cur().col);
    if (!seen_vars_) throw ParseError("missing 'vars' statement", cur().line, cur().col);
    ensure_ring();
    return std::move(rf_);
  }

  // Expression entry points reused by parse_polynomial / parse_poly_list.
  static Polynomial expression(const RingPtr& ring, std::vector<Token> toks) {
    Parser p(std::move(toks), "<arg>", {});
    p.rf_.ring = ring;
    p.seen_char_ = p.seen_vars_ = true;
    Polynomial f = p.parse_expr();
    p.expect_end();
    return f;
  }

  static std::vector<Polynomial> expression_list(const RingPtr& ring,
                                                 std::vector<Token> toks) {
    Parser p(std::move(toks), "<arg>", {});
    p.rf_.ring = ring;
    p.seen_char_ = p.seen_vars_ = true;
    std::vector<Polynomial> out = p.parse_poly_list();
    p.expect_end();
    return out;
  }

 private:
  const Token& cur() const { return toks_[i_]; }
  const Token& peek(std::size_t k) const {
    std::size_t j = i_ + k;
    return j < toks_.size() ? toks_[j] : toks_.back();
  }
  bool at_end() const { return cur().kind == Tok::End; }
  Token take() { return toks_[i_++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, cur().line, cur().col);
  }

  void expect_punct(char c) {
    if (cur().kind != Tok::Punct || cur().text[0] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++i_;
  }

  void expect_end() {
    if (!at_end()) fail("trailing input after expression");
  }

  bool is_punct(char c) const {
    return cur().kind == Tok::Punct && cur().text[0] == c;
  }

  std::string expect_ident(const char* what) {
    if (cur().kind != Tok::Ident) fail(std::string("expected ") + what);
    return take().text;
  }

  uint64_t expect_small_int(const char* what) {
    if (cur().kind != Tok::Int) fail(std::string("expected ") + what);
    const Token t = take();
    if (t.text.size() > 18) {
      throw ParseError(std::string(what) + " out of range", t.line, t.col);
    }
    return std::stoull(t.text);
  }

  void statement() {
    std::string kw = expect_ident("statement keyword");
    if (kw == "char") {
      if (seen_char_) fail("duplicate 'char' statement");
      char_line_ = cur().line;
      uint64_t v = expect_small_int("characteristic");
      if (v > 0x7fffffffULL) {
        throw ParseError("characteristic out of range", char_line_, 1);
      }
      rf_.characteristic = static_cast<uint32_t>(v);
      seen_char_ = true;
      expect_punct(';');
    } else if (kw == "vars") {
      if (seen_vars_) fail("duplicate 'vars' statement");
      do {
        rf_.vars.push_back(expect_ident("variable name"));
      } while (eat_comma());
      seen_vars_ = true;
      expect_punct(';');
    } else if (kw == "order") {
      if (seen_order_) fail("duplicate 'order' statement");
      std::string name = expect_ident("order name");
      if (name != "lex" && name != "grevlex") {
        fail("unknown order '" + name + "' (expected lex or grevlex)");
      }
      rf_.order_name = name;
      seen_order_ = true;
      expect_punct(';');
    } else if (kw == "ideal") {
      ensure_ring();
      if (cur().kind == Tok::Ident && peek(1).kind == Tok::Punct &&
          peek(1).text[0] == '=') {
        std::string name = take().text;
        ++i_;  // '='
        if (rf_.named_ideals.count(name)) {
          fail("ideal '" + name + "' declared twice");
        }
        rf_.named_ideals[name] = parse_poly_list();
      } else {
        if (!rf_.defining.empty()) fail("defining ideal declared twice");
        rf_.defining = parse_poly_list();
      }
      expect_punct(';');
    } else if (kw == "let") {
      ensure_ring();
      std::string name = expect_ident("binding name");
      expect_punct('=');
      if (rf_.lets.count(name)) fail("let '" + name + "' declared twice");
      rf_.lets.emplace(name, parse_expr());
      expect_punct(';');
    } else if (kw == "components") {
      ensure_ring();
      if (!rf_.components.empty()) fail("components declared twice");
      do {
        expect_punct('(');
        rf_.components.push_back(parse_poly_list());
        expect_punct(')');
      } while (eat_comma());
      expect_punct(';');
    } else if (kw == "flags") {
      do {
        std::string f = expect_ident("flag name");
        if (f == "reduced") {
          rf_.flag_reduced = true;
        } else if (f == "equidimensional") {
          rf_.flag_equidimensional = true;
        } else {
          fail("unknown flag '" + f + "'");
        }
      } while (eat_comma());
      expect_punct(';');
    } else if (kw == "candidates") {
      ensure_ring();
      if (!rf_.candidates.empty()) fail("candidates declared twice");
      rf_.candidates = parse_poly_list();
      expect_punct(';');
    } else if (kw == "query") {
      rf_.queries.push_back(query_words());
      expect_punct(';');
    } else if (kw == "emax") {
      if (rf_.emax >= 0) fail("duplicate 'emax' statement");
      uint64_t v = expect_small_int("exponent bound");
      if (v > 1000) fail("exponent bound out of range");
      rf_.emax = static_cast<int>(v);
      expect_punct(';');
    } else {
      fail("unknown statement '" + kw + "'");
    }
  }

  bool eat_comma() {
    if (is_punct(',')) {
      ++i_;
      return true;
    }
    return false;
  }

  /// Reassemble whitespace-separated words from tokens (query statements
  /// carry subcommand names like tc-certify, which lex as several tokens).
  std::vector<std::string> query_words() {
    std::vector<std::string> words;
    std::string word;
    int prev_line = -1, prev_end = -1;
    while (!at_end() && !is_punct(';')) {
      Token t = take();
      bool adjacent = t.line == prev_line && t.col == prev_end;
      if (!adjacent && !word.empty()) {
        words.push_back(std::move(word));
        word.clear();
      }
      word += t.text;
      prev_line = t.line;
      prev_end = t.col + static_cast<int>(t.text.size());
    }
    if (!word.empty()) words.push_back(std::move(word));
    if (words.empty()) fail("empty query");
    return words;
  }

  void ensure_ring() {
    if (rf_.ring) return;
    if (!seen_char_ || !seen_vars_) {
      fail("'char' and 'vars' must precede polynomial statements");
    }
    if (override_) rf_.characteristic = *override_;
    try {
      rf_.ring = Ring::create(rf_.characteristic, rf_.vars);
    } catch (const Error& e) {
      throw ParseError(e.what(), char_line_, 1);
    }
  }

  // --- polynomial expressions -------------------------------------------

  std::vector<Polynomial> parse_poly_list() {
    std::vector<Polynomial> out;
    do {
      out.push_back(parse_expr());
    } while (eat_comma());
    return out;
  }

  Polynomial parse_expr() {
    Polynomial acc = parse_term();
    while (is_punct('+') || is_punct('-')) {
      char op = take().text[0];
      Polynomial rhs = parse_term();
      acc = (op == '+') ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  Polynomial parse_term() {
    Polynomial acc = parse_factor();
    while (is_punct('*')) {
      ++i_;
      acc = acc * parse_factor();
    }
    return acc;
  }

  Polynomial parse_factor() {
    // signs live at the factor level so "x - -y" and "2 * -x" parse;
    // unary minus binds looser than '^', as usual.
    bool neg = false;
    while (is_punct('+') || is_punct('-')) {
      if (take().text[0] == '-') neg = !neg;
    }
    Polynomial base = parse_atom();
    if (is_punct('^')) {
      ++i_;
      uint64_t k = expect_small_int("exponent");
      if (k >= kExponentCap) fail("exponent out of range");
      base = base.pow(k);
    }
    return neg ? -base : base;
  }

  Polynomial parse_atom() {
    const RingPtr& ring = rf_.ring;
    if (cur().kind == Tok::Int) {
      Token t = take();
      BigInt num(t.text);
      if (is_punct('/')) {
        ++i_;
        if (cur().kind != Tok::Int) fail("expected integer denominator");
        Token d = take();
        if (ring->characteristic() != 0) {
          throw ParseError("rational literals need characteristic 0", t.line,
                           t.col);
        }
        BigInt den(d.text);
        if (den == 0) throw ParseError("zero denominator", d.line, d.col);
        return Polynomial::constant(
            ring, Scalar::from_rational(Rational(num, den)));
      }
      if (ring->characteristic() != 0) {
        BigInt r = num % BigInt(ring->characteristic());
        return Polynomial::constant(ring,
                                    ring->scalar(r.convert_to<long long>()));
      }
      return Polynomial::constant(ring,
                                  Scalar::from_rational(Rational(num)));
    }
    if (cur().kind == Tok::Ident) {
      Token t = take();
      auto idx = ring->var_index(t.text);
      if (!idx) {
        throw ParseError("unknown variable '" + t.text + "'", t.line, t.col);
      }
      return Polynomial::variable(ring, *idx);
    }
    if (is_punct('(')) {
      ++i_;
      Polynomial inner = parse_expr();
      expect_punct(')');
      return inner;
    }
    fail("expected a polynomial atom");
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  RingFile rf_;
  std::string source_;
  std::optional<uint32_t> override_;
  bool seen_char_ = false;
  bool seen_vars_ = false;
  bool seen_order_ = false;
  int char_line_ = 1;
};

}  // namespace

MonomialOrder RingFile::order() const {
  if (order_name == "lex") return MonomialOrder::lex();
  if (order_name == "grevlex") return MonomialOrder::grevlex();
  throw ArgError("unknown order '" + order_name + "'");
}

PresentedAlgebra RingFile::algebra() const {
  return PresentedAlgebra{ring, defining_ideal(), flag_equidimensional,
                          flag_reduced};
}

std::vector<Ideal> RingFile::component_ideals() const {
  std::vector<Ideal> out;
  out.reserve(components.size());
  for (const auto& gens : components) out.emplace_back(ring, gens);
  return out;
}

const Polynomial& RingFile::let_ref(const std::string& name) const {
  auto it = lets.find(name);
  if (it == lets.end()) {
    throw ArgError("no let binding named '" + name + "' in " + source_name);
  }
  return it->second;
}

const std::vector<Polynomial>& RingFile::ideal_ref(
    const std::string& name) const {
  auto it = named_ideals.find(name);
  if (it == named_ideals.end()) {
    throw ArgError("no ideal named '" + name + "' in " + source_name);
  }
  return it->second;
}

RingFile parse_ring_text(const std::string& text,
                         const std::string& source_name,
                         std::optional<uint32_t> char_override) {
  Lexer lex(text);
  Parser parser(lex.all(), source_name, char_override);
  return parser.run();
}

RingFile load_ring_file(const std::string& path,
                        std::optional<uint32_t> char_override) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgError("cannot read ring file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ring_text(buf.str(), path, char_override);
}

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
  Lexer lex(text);
  return Parser::expression(ring, lex.all());
}

std::vector<Polynomial> parse_poly_list(const RingPtr& ring,
                                        const std::string& text) {
  Lexer lex(text);
  return Parser::expression_list(ring, lex.all());
}

namespace {

std::string join_polys(const std::vector<Polynomial>& fs,
                       const MonomialOrder& ord) {
  std::string out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) out += ", ";
    out += fs[i].str(ord);
  }
  return out;
}

}  // namespace

std::string render_ring_file(const RingFile& rf) {
  const MonomialOrder ord = rf.order();
  std::ostringstream out;
  out << "char " << rf.characteristic << ";\n";
  out << "vars ";
  for (std::size_t i = 0; i < rf.vars.size(); ++i) {
    if (i) out << ", ";
    out << rf.vars[i];
  }
  out << ";\n";
  out << "order " << rf.order_name << ";\n";
  if (!rf.defining.empty()) {
    out << "ideal " << join_polys(rf.defining, ord) << ";\n";
  }
  for (const auto& [name, gens] : rf.named_ideals) {
    out << "ideal " << name << " = " << join_polys(gens, ord) << ";\n";
  }
  for (const auto& [name, f] : rf.lets) {
    out << "let " << name << " = " << f.str(ord) << ";\n";
  }
  if (!rf.components.empty()) {
    out << "components ";
    for (std::size_t i = 0; i < rf.components.size(); ++i) {
      if (i) out << ", ";
      out << "(" << join_polys(rf.components[i], ord) << ")";
    }
    out << ";\n";
  }
  if (rf.flag_equidimensional || rf.flag_reduced) {
    out << "flags ";
    bool first = true;
    if (rf.flag_equidimensional) {
      out << "equidimensional";
      first = false;
    }
    if (rf.flag_reduced) {
      if (!first) out << ", ";
      out << "reduced";
    }
    out << ";\n";
  }
  if (!rf.candidates.empty()) {
    out << "candidates " << join_polys(rf.candidates, ord) << ";\n";
  }
  if (rf.emax >= 0) out << "emax " << rf.emax << ";\n";
  for (const auto& q : rf.queries) {
    out << "query";
    for (const auto& w : q) out << " " << w;
    out << ";\n";
  }
  return out.str();
}

}  // namespace calab
