#include <cctype>
#include <map>

#include "primdec/script.hpp"

namespace primdec {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view src) : src_(src) {}

  void skip_space() {
    for (;;) {
      while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
      if (pos_ + 1 < src_.size() && src_[pos_] == '/' && src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
        continue;
      }
      break;
    }
  }

  bool at_end() {
    skip_space();
    return pos_ >= src_.size();
  }

  char peek() {
    skip_space();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'" + found());
  }

  bool peek_identifier() {
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string identifier() {
    if (!peek_identifier()) fail("expected identifier" + found());
    std::string out;
    while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      out += src_[pos_];
      advance();
    }
    return out;
  }

  bool peek_number() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  std::string number() {
    if (!peek_number()) fail("expected number" + found());
    std::string out;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      out += src_[pos_];
      advance();
    }
    return out;
  }

  /// Quoted string or raw text up to the next ';'.
  std::string path() {
    if (accept('"')) {
      std::string out;
      while (pos_ < src_.size() && src_[pos_] != '"') {
        out += src_[pos_];
        advance();
      }
      expect('"');
      return out;
    }
    skip_space();
    std::string out;
    while (pos_ < src_.size() && src_[pos_] != ';') {
      out += src_[pos_];
      advance();
    }
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
    if (out.empty()) fail("expected file name");
    return out;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(line_, column_, message); }

  std::string found() {
    if (at_end()) return ", found end of input";
    return std::string(", found '") + src_[pos_] + "'";
  }

  int line() {
    skip_space();
    return line_;
  }
  int column() {
    skip_space();
    return column_;
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class PolyParser {
 public:
  PolyParser(Cursor& cur, const RingPtr& ring) : cur_(cur), ring_(ring) {}

  Polynomial expression() {
    Polynomial acc(ring_);
    bool negate = false;
    if (cur_.accept('-')) negate = true;
    else cur_.accept('+');
    Polynomial t = term();
    acc = negate ? -t : t;
    for (;;) {
      if (cur_.accept('+')) acc += term();
      else if (cur_.accept('-')) acc -= term();
      else return acc;
    }
  }

 private:
  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      if (cur_.accept('*')) {
        acc *= factor();
      } else if (cur_.peek() == '/') {
        cur_.accept('/');
        Integer d(cur_.number());
        if (d == 0) cur_.fail("division by zero");
        acc = acc.scaled(Rational(Integer(1), d));
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (cur_.accept('^')) {
      std::string e = cur_.number();
      if (e.size() > 9) cur_.fail("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(e)));
    }
    return base;
  }

  Polynomial primary() {
    if (cur_.accept('(')) {
      Polynomial p = expression();
      cur_.expect(')');
      return p;
    }
    if (cur_.accept('-')) return -primary();
    if (cur_.peek_number()) return Polynomial::constant(ring_, Rational(Integer(cur_.number())));
    if (cur_.peek_identifier()) {
      int line = cur_.line(), col = cur_.column();
      std::string name = cur_.identifier();
      int idx = ring_->variable_index(name);
      if (idx < 0) throw ParseError(line, col, "unknown identifier '" + name + "'");
      return Polynomial::variable(ring_, idx);
    }
    cur_.fail("expected polynomial" + cur_.found());
  }

  Cursor& cur_;
  const RingPtr& ring_;
};

MonomialOrder parse_order(Cursor& cur, int nvars) {
  int line = cur.line(), col = cur.column();
  std::string name = cur.identifier();
  if (name == "dp") return MonomialOrder::degrevlex();
  if (name == "lp") return MonomialOrder::lex();
  if (name == "wp" || name == "Wp") {
    std::vector<int64_t> w;
    cur.expect('(');
    do {
      std::string digits = cur.number();
      if (digits.size() > 12) cur.fail("weight too large");
      w.push_back(std::stoll(digits));
    } while (cur.accept(','));
    cur.expect(')');
    if (static_cast<int>(w.size()) != nvars) throw ParseError(line, col, "weight vector length must equal the number of variables");
    for (int64_t x : w)
      if (x <= 0) throw ParseError(line, col, "weights must be positive");
    return MonomialOrder::weighted(std::move(w), name == "wp");
  }
  throw ParseError(line, col, "unknown ordering '" + name + "' (expected dp, lp, wp or Wp)");
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  Cursor cur(text);
  PolyParser parser(cur, ring);
  Polynomial p = parser.expression();
  if (!cur.at_end()) cur.fail("unexpected trailing input" + cur.found());
  return p;
}

Script parse_script(std::string_view source) {
  Cursor cur(source);
  Script script;
  RingPtr ring;
  std::map<std::string, bool> bound;  // name -> is_module

  auto require_ring = [&](int line, int col) {
    if (!ring) throw ParseError(line, col, "no active ring; declare one with 'ring NAME = 0, (vars), dp;'");
  };
  auto bound_name = [&](int line, int col, const std::string& name) {
    if (!bound.count(name)) throw ParseError(line, col, "unknown identifier '" + name + "'");
  };

  while (!cur.at_end()) {
    int line = cur.line(), col = cur.column();
    std::string kw = cur.identifier();
    if (kw == "ring") {
      std::string name = cur.identifier();
      cur.expect('=');
      int cl = cur.line(), cc = cur.column();
      std::string characteristic = cur.number();
      if (characteristic.find_first_not_of('0') != std::string::npos)
        throw ParseError(cl, cc, "only characteristic 0 supported");
      cur.expect(',');
      cur.expect('(');
      std::vector<std::string> vars;
      do {
        vars.push_back(cur.identifier());
      } while (cur.accept(','));
      cur.expect(')');
      cur.expect(',');
      MonomialOrder order = parse_order(cur, static_cast<int>(vars.size()));
      cur.expect(';');
      try {
        ring = make_ring(vars, order);
      } catch (const Error& e) {
        throw ParseError(line, col, e.what());
      }
      bound.clear();
      script.statements.emplace_back(RingStatement{name, ring});
    } else if (kw == "ideal") {
      require_ring(line, col);
      std::string name = cur.identifier();
      cur.expect('=');
      std::vector<Polynomial> gens;
      PolyParser pp(cur, ring);
      do {
        gens.push_back(pp.expression());
      } while (cur.accept(','));
      cur.expect(';');
      bound[name] = false;
      script.statements.emplace_back(BindStatement{name, false, Submodule::ideal(ring, gens)});
    } else if (kw == "module") {
      require_ring(line, col);
      std::string name = cur.identifier();
      cur.expect('=');
      std::vector<FreeElement> gens;
      PolyParser pp(cur, ring);
      std::size_t rank = 0;
      do {
        int gl = cur.line(), gc = cur.column();
        cur.expect('[');
        std::vector<Polynomial> comps;
        do {
          comps.push_back(pp.expression());
        } while (cur.accept(','));
        cur.expect(']');
        if (gens.empty()) rank = comps.size();
        else if (comps.size() != rank) throw ParseError(gl, gc, "module generators must all have the same length");
        gens.emplace_back(ring, std::move(comps));
      } while (cur.accept(','));
      cur.expect(';');
      bound[name] = true;
      script.statements.emplace_back(BindStatement{name, true, Submodule(ring, rank, std::move(gens))});
    } else if (kw == "primdec" || kw == "hull" || kw == "minass") {
      require_ring(line, col);
      int nl = cur.line(), nc = cur.column();
      std::string name = cur.identifier();
      bound_name(nl, nc, name);
      if (kw == "minass" && bound[name]) throw ParseError(nl, nc, "minass expects an ideal");
      cur.expect(';');
      script.statements.emplace_back(CommandStatement{kw, {name}, line, col});
    } else if (kw == "localize") {
      require_ring(line, col);
      int nl = cur.line(), nc = cur.column();
      std::string name = cur.identifier();
      bound_name(nl, nc, name);
      cur.expect(',');
      int jl = cur.line(), jc = cur.column();
      std::string at = cur.identifier();
      bound_name(jl, jc, at);
      if (bound[at]) throw ParseError(jl, jc, "localize expects an ideal as second argument");
      cur.expect(';');
      script.statements.emplace_back(CommandStatement{kw, {name, at}, line, col});
    } else if (kw == "validate") {
      require_ring(line, col);
      int nl = cur.line(), nc = cur.column();
      std::string name = cur.identifier();
      bound_name(nl, nc, name);
      cur.expect(',');
      std::string file = cur.path();
      cur.expect(';');
      script.statements.emplace_back(CommandStatement{kw, {name, file}, line, col});
    } else {
      throw ParseError(line, col, "unknown statement '" + kw + "'");
    }
  }
  return script;
}

}  // namespace primdec
