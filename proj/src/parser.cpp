#include "ihoml/parser.hpp"

#include <vector>

namespace ihoml {

namespace {

enum class Tok {
  Ident, LParen, RParen, LBracket, RBracket, Dot, Colon, Comma, Arrow, Gt,
  Not, And, Or, Imp, Iff, Bang, Question, End
};

struct Token {
  Tok tok;
  std::string text;
  SourceSpan span;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }

  const Token& peek() const { return cur_; }
  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  const std::string& src_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token cur_;

  [[noreturn]] void fail(const std::string& msg, SourceSpan s) { throw ParseError(msg, s); }

  SourceSpan here(size_t len) const {
    return SourceSpan{pos_, pos_ + len, line_, col_};
  }

  void bump(size_t n) {
    for (size_t i = 0; i < n; ++i) {
      if (src_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }

  static bool ident_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  }
  static bool ident_char(char c) {
    return ident_start(c) || (c >= '0' && c <= '9') || c == '\'';
  }

  void advance() {
    while (pos_ < src_.size() &&
           (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' ||
            src_[pos_] == '\r'))
      bump(1);
    if (pos_ >= src_.size()) {
      cur_ = {Tok::End, "", here(0)};
      return;
    }
    const char c = src_[pos_];
    auto single = [&](Tok t) {
      cur_ = {t, std::string(1, c), here(1)};
      bump(1);
    };
    switch (c) {
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case '[': return single(Tok::LBracket);
      case ']': return single(Tok::RBracket);
      case '.': return single(Tok::Dot);
      case ':': return single(Tok::Colon);
      case ',': return single(Tok::Comma);
      case '>': return single(Tok::Gt);
      case '~': return single(Tok::Not);
      case '&': return single(Tok::And);
      case '|': return single(Tok::Or);
      case '!': return single(Tok::Bang);
      case '?': return single(Tok::Question);
      case '-':
        if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
          cur_ = {Tok::Arrow, "->", here(2)};
          bump(2);
          return;
        }
        fail("stray '-'", here(1));
      case '<':
        if (pos_ + 2 < src_.size() && src_[pos_ + 1] == '-' && src_[pos_ + 2] == '>') {
          cur_ = {Tok::Iff, "<->", here(3)};
          bump(3);
          return;
        }
        fail("stray '<'", here(1));
      default: break;
    }
    if (!ident_start(c)) fail(std::string("unexpected character '") + c + "'", here(1));
    size_t start = pos_;
    SourceSpan sp = here(0);
    while (pos_ < src_.size() && ident_char(src_[pos_])) bump(1);
    sp.end = pos_;
    cur_ = {Tok::Ident, src_.substr(start, pos_ - start), sp};
  }
};

class Parser {
 public:
  explicit Parser(const std::string& src) : lex_(src) {}

  TermPtr parse() {
    TermPtr t = term();
    expect_end();
    return t;
  }

  Type parse_ty() {
    Type t = type();
    expect_end();
    return t;
  }

 private:
  Lexer lex_;
  std::vector<std::string> scope_;

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg + " at '" + lex_.peek().text + "'", lex_.peek().span);
  }

  void expect_end() {
    if (lex_.peek().tok != Tok::End) fail("trailing input");
  }

  bool at_ident(const char* kw) {
    return lex_.peek().tok == Tok::Ident && lex_.peek().text == kw;
  }

  void expect(Tok t, const char* what) {
    if (lex_.peek().tok != t) fail(std::string("expected ") + what);
    lex_.take();
  }

  std::string ident(const char* what) {
    if (lex_.peek().tok != Tok::Ident) fail(std::string("expected ") + what);
    return lex_.take().text;
  }

  static bool is_keyword(const std::string& s) {
    static const char* kws[] = {"mfalse", "mtrue", "mnot", "mand", "mor", "mimp",
                                "mequ", "box", "dia", "forall", "exists", "forallE",
                                "existsE", "lam", "rigid", "down", "downb", "down1",
                                "negd", "negg", "valid", "true", "false"};
    for (const char* k : kws)
      if (s == k) return true;
    return false;
  }

  Type type() {
    Type lhs = type_atom();
    if (lex_.peek().tok == Tok::Gt) {
      lex_.take();
      return Type::fun(lhs, type());  // right associative
    }
    return lhs;
  }

  Type type_atom() {
    if (lex_.peek().tok == Tok::LParen) {
      lex_.take();
      Type t = type();
      expect(Tok::RParen, "')'");
      return t;
    }
    std::string n = ident("type name");
    if (n == "e") return Type::ent();
    if (n == "w") return Type::wld();
    if (n == "t") return Type::tru();
    if (n == "d") return Type::delta();
    if (n == "s") return Type::sigma();
    if (n == "g") return Type::gamma();
    fail("unknown type '" + n + "'");
  }

  TermPtr term() { return iff_expr(); }

  TermPtr iff_expr() {
    TermPtr lhs = imp_expr();
    for (;;) {
      if (at_ident("mequ")) {
        lex_.take();
        lhs = mk::mequ(lhs, imp_expr());
      } else if (lex_.peek().tok == Tok::Iff) {
        lex_.take();
        lhs = mk::iff(lhs, imp_expr());
      } else {
        return lhs;
      }
    }
  }

  TermPtr imp_expr() {
    TermPtr lhs = or_expr();
    if (at_ident("mimp")) {
      lex_.take();
      return mk::mimp(lhs, imp_expr());  // right associative
    }
    if (lex_.peek().tok == Tok::Arrow) {
      lex_.take();
      return mk::imp(lhs, imp_expr());
    }
    return lhs;
  }

  TermPtr or_expr() {
    TermPtr lhs = and_expr();
    for (;;) {
      if (at_ident("mor")) {
        lex_.take();
        lhs = mk::mor(lhs, and_expr());
      } else if (lex_.peek().tok == Tok::Or) {
        lex_.take();
        lhs = mk::or_(lhs, and_expr());
      } else {
        return lhs;
      }
    }
  }

  TermPtr and_expr() {
    TermPtr lhs = prefix();
    for (;;) {
      if (at_ident("mand")) {
        lex_.take();
        lhs = mk::mand(lhs, prefix());
      } else if (lex_.peek().tok == Tok::And) {
        lex_.take();
        lhs = mk::and_(lhs, prefix());
      } else {
        return lhs;
      }
    }
  }

  TermPtr binder(Kind kind) {
    lex_.take();  // binder keyword
    std::string x = ident("binder variable");
    if (is_keyword(x)) fail("keyword '" + x + "' cannot be a variable");
    Type ty = Type::ent();
    if (kind == Kind::ForallE || kind == Kind::ExistsE) {
      if (lex_.peek().tok == Tok::Colon) {
        lex_.take();
        Type t = type();
        if (!(t == Type::ent())) fail("actualist quantifiers bind entities only");
      }
    } else {
      expect(Tok::Colon, "':' with type annotation");
      ty = type();
    }
    expect(Tok::Dot, "'.'");
    scope_.push_back(x);
    TermPtr body = term();
    scope_.pop_back();
    switch (kind) {
      case Kind::Lam: return mk::lam(x, ty, body);
      case Kind::Forall: return mk::forall(x, ty, body);
      case Kind::Exists: return mk::exists(x, ty, body);
      case Kind::ForallP: return mk::forallP(x, ty, body);
      case Kind::ExistsP: return mk::existsP(x, ty, body);
      case Kind::ForallE: return mk::forallE(x, body);
      default: return mk::existsE(x, body);
    }
  }

  TermPtr prefix() {
    if (at_ident("mnot")) {
      lex_.take();
      return mk::mnot(prefix());
    }
    if (lex_.peek().tok == Tok::Not) {
      lex_.take();
      return mk::not_(prefix());
    }
    if (at_ident("box")) {
      lex_.take();
      return mk::box(prefix());
    }
    if (at_ident("dia")) {
      lex_.take();
      return mk::dia(prefix());
    }
    if (at_ident("forall")) return binder(Kind::ForallP);
    if (at_ident("exists")) return binder(Kind::ExistsP);
    if (at_ident("forallE")) return binder(Kind::ForallE);
    if (at_ident("existsE")) return binder(Kind::ExistsE);
    if (at_ident("lam")) return binder(Kind::Lam);
    if (lex_.peek().tok == Tok::Bang) return binder(Kind::Forall);
    if (lex_.peek().tok == Tok::Question) return binder(Kind::Exists);
    return app_chain();
  }

  TermPtr app_chain() {
    TermPtr t = atom();
    while (starts_atom()) t = mk::app(t, atom());
    return t;
  }

  bool starts_atom() {
    const Token& t = lex_.peek();
    if (t.tok == Tok::LParen) return true;
    if (t.tok != Tok::Ident) return false;
    // identifiers that head infix or binder syntax do not start an argument
    static const char* nonatoms[] = {"mand", "mor", "mimp", "mequ", "mnot",
                                     "box", "dia", "forall", "exists",
                                     "forallE", "existsE", "lam"};
    for (const char* k : nonatoms)
      if (t.text == k) return false;
    return true;
  }

  TermPtr paren_args(Kind kind) {
    lex_.take();
    expect(Tok::LParen, "'('");
    TermPtr a = term();
    expect(Tok::Comma, "','");
    TermPtr b = term();
    expect(Tok::RParen, "')'");
    switch (kind) {
      case Kind::Down: return mk::down(a, b);
      case Kind::DownBold: return mk::downb(a, b);
      default: return mk::down1(a, b);
    }
  }

  TermPtr atom() {
    const Token& t = lex_.peek();
    if (t.tok == Tok::LParen) {
      lex_.take();
      TermPtr inner = term();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (t.tok != Tok::Ident) fail("expected a term");
    const std::string& n = t.text;
    if (n == "mfalse") {
      lex_.take();
      return mk::mfalse();
    }
    if (n == "mtrue") {
      lex_.take();
      return mk::mtrue();
    }
    if (n == "true" || n == "false") {
      bool b = n == "true";
      lex_.take();
      return mk::tru(b);
    }
    if (n == "rigid" || n == "negd" || n == "negg") {
      std::string head = n;
      lex_.take();
      expect(Tok::LParen, "'('");
      TermPtr a = term();
      expect(Tok::RParen, "')'");
      if (head == "rigid") return mk::rigid(a);
      if (head == "negd") return mk::negd(a);
      return mk::negg(a);
    }
    if (n == "down") return paren_args(Kind::Down);
    if (n == "downb") return paren_args(Kind::DownBold);
    if (n == "down1") return paren_args(Kind::Down1);
    if (n == "valid") {
      lex_.take();
      expect(Tok::LBracket, "'['");
      TermPtr a = term();
      expect(Tok::RBracket, "']'");
      return mk::valid(a);
    }
    if (is_keyword(n)) fail("unexpected keyword '" + n + "'");
    SourceSpan sp = t.span;
    std::string name = lex_.take().text;
    bool bound = false;
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      if (*it == name) {
        bound = true;
        break;
      }
    auto node = bound ? mk::var(name) : mk::sym(name);
    const_cast<Term*>(node.get())->span = sp;
    return node;
  }
};

}  // namespace

TermPtr parse_term(const std::string& text) { return Parser(text).parse(); }

Type parse_type(const std::string& text) { return Parser(text).parse_ty(); }

}  // namespace ihoml
