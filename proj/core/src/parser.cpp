#include "rwb/parser.hpp"

#include <cctype>

namespace rwb {

namespace {

enum class Tok {
  Ident,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Colon,
  Semicolon,
  Dot,
  Amp,
  Turnstile,
  Equals,
  Pipe,  // lone '|'; always a regularity error when it reaches the parser
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) {}

  Token next() {
    skip_ws();
    int line = line_, col = col_;
    if (pos_ >= src_.size()) return {Tok::End, "", line, col};
    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_' ||
              src_[pos_] == '\'')) {
        id += src_[pos_];
        advance();
      }
      return {Tok::Ident, id, line, col};
    }
    switch (c) {
      case '(': advance(); return {Tok::LParen, "(", line, col};
      case ')': advance(); return {Tok::RParen, ")", line, col};
      case '[': advance(); return {Tok::LBracket, "[", line, col};
      case ']': advance(); return {Tok::RBracket, "]", line, col};
      case ',': advance(); return {Tok::Comma, ",", line, col};
      case ':': advance(); return {Tok::Colon, ":", line, col};
      case ';': advance(); return {Tok::Semicolon, ";", line, col};
      case '.': advance(); return {Tok::Dot, ".", line, col};
      case '&': advance(); return {Tok::Amp, "&", line, col};
      case '=': advance(); return {Tok::Equals, "=", line, col};
      case '|':
        advance();
        if (pos_ < src_.size() && src_[pos_] == '-') {
          advance();
          return {Tok::Turnstile, "|-", line, col};
        }
        return {Tok::Pipe, "|", line, col};
      case '!':
      case '~':
        throw RegularityError("negation is not a regular connective (at " +
                              std::to_string(line) + ":" + std::to_string(col) + ")");
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "'", line, col);
    }
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip_ws() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  const std::string& src_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

bool is_regularity_keyword(const std::string& id) {
  return id == "forall" || id == "all" || id == "false" || id == "or" || id == "not";
}

bool is_reserved(const std::string& id) {
  return id == "true" || id == "exists" || id == "sort" || id == "rel" || id == "fun" ||
         id == "const" || id == "axiom" || is_regularity_keyword(id);
}

class Parser {
 public:
  explicit Parser(const std::string& src) : lex_(src) { shift(); }

  Theory theory() {
    Theory t;
    while (cur_.kind != Tok::End) item(t);
    validate(t);
    return t;
  }

  FormulaInContext formula_in_context(const Signature& sig) {
    FormulaInContext f;
    expect(Tok::LBracket, "'['");
    f.context = context_bindings();
    f.body = formula(sig);
    expect_end();
    validate(f, sig);
    return f;
  }

  Sequent sequent(const Signature& sig) {
    Sequent s;
    expect(Tok::LBracket, "'['");
    s.context = context_bindings();
    s.lhs = formula(sig);
    expect(Tok::Turnstile, "'|-'");
    s.rhs = formula(sig);
    expect_end();
    validate(s, sig);
    return s;
  }

 private:
  void shift() { cur_ = lex_.next(); }

  [[noreturn]] void fail(const std::string& expected) {
    throw SyntaxError("expected " + expected + ", found '" + (cur_.kind == Tok::End ? "<end>" : cur_.text) + "'",
                      cur_.line, cur_.col);
  }

  Token expect(Tok k, const std::string& what) {
    if (cur_.kind != k) fail(what);
    Token t = cur_;
    shift();
    return t;
  }

  void expect_end() {
    if (cur_.kind != Tok::End) fail("end of input");
  }

  std::string ident(const std::string& what) {
    if (cur_.kind != Tok::Ident) fail(what);
    std::string s = cur_.text;
    shift();
    return s;
  }

  std::string name_ident(const std::string& what) {
    Token t = cur_;
    std::string s = ident(what);
    if (is_reserved(s))
      throw SyntaxError("reserved word '" + s + "' used as " + what, t.line, t.col);
    return s;
  }

  void item(Theory& t) {
    Token kw = cur_;
    std::string k = ident("declaration keyword");
    if (k == "sort") {
      t.signature.sorts.push_back(name_ident("sort name"));
      while (cur_.kind == Tok::Comma) {
        shift();
        t.signature.sorts.push_back(name_ident("sort name"));
      }
      expect(Tok::Semicolon, "';'");
    } else if (k == "rel") {
      Signature::Relation r;
      r.name = name_ident("relation name");
      expect(Tok::LParen, "'('");
      if (cur_.kind != Tok::RParen) {
        r.arity.push_back(sort_ref(t.signature));
        while (cur_.kind == Tok::Comma) {
          shift();
          r.arity.push_back(sort_ref(t.signature));
        }
      }
      expect(Tok::RParen, "')'");
      expect(Tok::Semicolon, "';'");
      t.signature.relations.push_back(std::move(r));
    } else if (k == "fun") {
      Signature::Function f;
      f.name = name_ident("function name");
      expect(Tok::LParen, "'('");
      f.args.push_back(sort_ref(t.signature));
      while (cur_.kind == Tok::Comma) {
        shift();
        f.args.push_back(sort_ref(t.signature));
      }
      expect(Tok::RParen, "')'");
      expect(Tok::Colon, "':'");
      f.result = sort_ref(t.signature);
      expect(Tok::Semicolon, "';'");
      t.signature.functions.push_back(std::move(f));
    } else if (k == "const") {
      Signature::Function f;
      f.name = name_ident("constant name");
      expect(Tok::Colon, "':'");
      f.result = sort_ref(t.signature);
      expect(Tok::Semicolon, "';'");
      t.signature.functions.push_back(std::move(f));
    } else if (k == "axiom") {
      Sequent s;
      expect(Tok::LBracket, "'['");
      s.context = context_bindings();
      s.lhs = formula(t.signature);
      expect(Tok::Turnstile, "'|-'");
      s.rhs = formula(t.signature);
      expect(Tok::Semicolon, "';'");
      t.axioms.push_back(std::move(s));
    } else {
      throw SyntaxError("unknown declaration '" + k + "'", kw.line, kw.col);
    }
  }

  uint32_t sort_ref(const Signature& sig) {
    Token t = cur_;
    std::string name = ident("sort name");
    auto idx = sig.sort_index(name);
    if (!idx) throw SortError("undeclared sort '" + name + "' at " + std::to_string(t.line) + ":" + std::to_string(t.col));
    return *idx;
  }

  Context context_bindings() {
    Context ctx;
    if (cur_.kind != Tok::RBracket) {
      ctx.push_back(binding());
      while (cur_.kind == Tok::Comma) {
        shift();
        ctx.push_back(binding());
      }
    }
    expect(Tok::RBracket, "']'");
    return ctx;
  }

  Binding binding() {
    std::string v = name_ident("variable name");
    expect(Tok::Colon, "':'");
    std::string s = ident("sort name");
    return {v, s};
  }

  Formula formula(const Signature& sig) {
    Formula f = unit(sig);
    while (cur_.kind == Tok::Amp) {
      shift();
      f = Formula::conj(std::move(f), unit(sig));
    }
    if (cur_.kind == Tok::Pipe)
      throw RegularityError("disjunction is not a regular connective (at " +
                            std::to_string(cur_.line) + ":" + std::to_string(cur_.col) + ")");
    return f;
  }

  Formula unit(const Signature& sig) {
    if (cur_.kind == Tok::Ident && cur_.text == "exists") {
      shift();
      std::vector<Binding> bs;
      bs.push_back(binding());
      while (cur_.kind == Tok::Comma) {
        shift();
        bs.push_back(binding());
      }
      expect(Tok::Dot, "'.'");
      Formula body = formula(sig);
      for (auto it = bs.rbegin(); it != bs.rend(); ++it)
        body = Formula::exists(it->first, it->second, std::move(body));
      return body;
    }
    return primary(sig);
  }

  Formula primary(const Signature& sig) {
    if (cur_.kind == Tok::LParen) {
      shift();
      Formula f = formula(sig);
      expect(Tok::RParen, "')'");
      return f;
    }
    Token start = cur_;
    if (cur_.kind != Tok::Ident) fail("a formula");
    if (is_regularity_keyword(cur_.text))
      throw RegularityError("'" + cur_.text + "' is not available in regular formulas (at " +
                            std::to_string(start.line) + ":" + std::to_string(start.col) + ")");
    if (cur_.text == "true") {
      shift();
      return Formula::top();
    }
    // Relation atom, or the left-hand term of an equality.
    std::string name = cur_.text;
    shift();
    if (sig.find_relation(name)) {
      std::vector<Term> ts;
      if (cur_.kind == Tok::LParen) {
        shift();
        if (cur_.kind != Tok::RParen) {
          ts.push_back(term(sig));
          while (cur_.kind == Tok::Comma) {
            shift();
            ts.push_back(term(sig));
          }
        }
        expect(Tok::RParen, "')'");
      }
      return Formula::rel(name, std::move(ts));
    }
    Term lhs = term_tail(sig, name);
    expect(Tok::Equals, "'=' (or a declared relation symbol)");
    Term rhs = term(sig);
    return Formula::eq(std::move(lhs), std::move(rhs));
  }

  Term term(const Signature& sig) {
    std::string name = ident("a term");
    return term_tail(sig, name);
  }

  // Completes a term whose head identifier has been consumed.
  Term term_tail(const Signature& sig, const std::string& name) {
    if (cur_.kind == Tok::LParen) {
      shift();
      std::vector<Term> args;
      if (cur_.kind != Tok::RParen) {
        args.push_back(term(sig));
        while (cur_.kind == Tok::Comma) {
          shift();
          args.push_back(term(sig));
        }
      }
      expect(Tok::RParen, "')'");
      return Term::app(name, std::move(args));
    }
    // A bare identifier is a constant if declared, otherwise a variable.
    if (sig.find_function(name)) return Term::app(name, {});
    return Term::var(name);
  }

  Lexer lex_;
  Token cur_{Tok::End, "", 0, 0};
};

}  // namespace

Theory parse_theory(const std::string& text) { return Parser(text).theory(); }

FormulaInContext parse_formula(const std::string& text, const Signature& sig) {
  return Parser(text).formula_in_context(sig);
}

Sequent parse_sequent(const std::string& text, const Signature& sig) {
  return Parser(text).sequent(sig);
}

}  // namespace rwb
