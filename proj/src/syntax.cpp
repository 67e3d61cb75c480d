#include "lcr/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lcr {

namespace {

const std::set<std::string>& keywords() {
  static const std::set<std::string> k = {
      "def", "lin", "Pi",  "Sig",  "Lpi",   "Lsig", "Unit", "U",   "ElC",  "ElL",
      "M",   "L",   "mu",  "Eq",   "eqIn",  "eqOut", "refl", "let", "in",   "fst",
      "snd", "fun", "ell", "Id",   "tt",    "I",    "Type", "Linear", "Lolli", "lower"};
  return k;
}

std::string where(int line, int column) {
  return std::to_string(line) + ":" + std::to_string(column);
}

}  // namespace

std::string_view tok_kind_name(TokKind k) {
  switch (k) {
    case TokKind::Ident: return "identifier";
    case TokKind::Keyword: return "keyword";
    case TokKind::Lolli: return "-o";
    case TokKind::TensorOp: return "(x)";
    case TokKind::Star: return "*";
    case TokKind::Arrow: return "->";
    case TokKind::FatArrow: return "=>";
    case TokKind::Colon: return ":";
    case TokKind::Define: return ":=";
    case TokKind::Semi: return ";";
    case TokKind::Comma: return ",";
    case TokKind::LParen: return "(";
    case TokKind::RParen: return ")";
    case TokKind::Bang: return "!";
    case TokKind::Hat: return "^";
    case TokKind::Equals: return "=";
    case TokKind::End: return "end of input";
  }
  return "?";
}

LexError::LexError(const std::string& msg, int l, int c)
    : std::runtime_error(where(l, c) + ": " + msg), line(l), column(c) {}

ParseError::ParseError(const std::string& msg, int l, int c, std::set<std::string> exp)
    : std::runtime_error(where(l, c) + ": " + msg), line(l), column(c), expected(std::move(exp)) {}

bool is_keyword(const std::string& s) { return keywords().count(s) > 0; }

// ---------------------------------------------------------------------------
// Lexer

std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto push = [&](TokKind k, std::size_t n) {
    out.push_back({k, src.substr(i, n), line, col});
    advance(n);
  };
  while (i < src.size()) {
    char ch = src[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
      continue;
    }
    if (src.compare(i, 2, "--") == 0) {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) ||
                                src[j] == '_' || src[j] == '\''))
        ++j;
      std::string word = src.substr(i, j - i);
      push(is_keyword(word) ? TokKind::Keyword : TokKind::Ident, j - i);
      continue;
    }
    if (src.compare(i, 3, "(x)") == 0) { push(TokKind::TensorOp, 3); continue; }
    if (src.compare(i, 2, "-o") == 0) { push(TokKind::Lolli, 2); continue; }
    if (src.compare(i, 2, "->") == 0) { push(TokKind::Arrow, 2); continue; }
    if (src.compare(i, 2, "=>") == 0) { push(TokKind::FatArrow, 2); continue; }
    if (src.compare(i, 2, ":=") == 0) { push(TokKind::Define, 2); continue; }
    switch (ch) {
      case '*': push(TokKind::Star, 1); continue;
      case ':': push(TokKind::Colon, 1); continue;
      case ';': push(TokKind::Semi, 1); continue;
      case ',': push(TokKind::Comma, 1); continue;
      case '(': push(TokKind::LParen, 1); continue;
      case ')': push(TokKind::RParen, 1); continue;
      case '!': push(TokKind::Bang, 1); continue;
      case '^': push(TokKind::Hat, 1); continue;
      case '=': push(TokKind::Equals, 1); continue;
      default: break;
    }
    std::string shown;
    auto c = static_cast<unsigned char>(ch);
    if (c >= 0x80) {
      std::size_t n = c >= 0xF0 ? 4 : c >= 0xE0 ? 3 : 2;
      shown = src.substr(i, n);
    } else {
      shown = std::string(1, ch);
    }
    throw LexError("illegal character '" + shown + "'", line, col);
  }
  out.push_back({TokKind::End, "", line, col});
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
public:
  explicit Parser(const std::vector<Token>& toks) : toks_(toks) {}

  std::vector<Decl> file() {
    std::vector<Decl> out;
    while (!at(TokKind::End)) out.push_back(decl());
    return out;
  }

  Expr single() {
    Expr e = expr();
    expect(TokKind::End);
    return e;
  }

private:
  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;
  std::vector<std::string> scope_;

  const Token& peek(std::size_t k = 0) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  bool at(TokKind k) const { return peek().kind == k; }
  bool at_kw(const char* w) const { return at(TokKind::Keyword) && peek().text == w; }
  Loc loc() const { return {peek().line, peek().column}; }

  [[noreturn]] void fail(std::set<std::string> expected) const {
    const Token& t = peek();
    std::string found = t.kind == TokKind::End ? "end of input" : "'" + t.text + "'";
    std::string list;
    for (const auto& e : expected) list += (list.empty() ? "" : ", ") + e;
    throw ParseError("expected " + list + ", found " + found, t.line, t.column,
                     std::move(expected));
  }

  Token expect(TokKind k) {
    if (!at(k)) fail({std::string(tok_kind_name(k))});
    return toks_[pos_++];
  }
  void expect_kw(const char* w) {
    if (!at_kw(w)) fail({w});
    ++pos_;
  }
  std::string ident() {
    if (!at(TokKind::Ident)) fail({"identifier"});
    return toks_[pos_++].text;
  }

  Expr var(const std::string& name) const {
    for (std::size_t k = scope_.size(); k-- > 0;)
      if (scope_[k] == name) return Expr::bvar(static_cast<std::uint32_t>(scope_.size() - 1 - k));
    return Expr::global(name);
  }

  Decl decl() {
    Decl d;
    d.loc = loc();
    if (at_kw("def")) {
      d.kind = DeclKind::Def;
    } else if (at_kw("lin")) {
      d.kind = DeclKind::Lin;
    } else {
      fail({"def", "lin"});
    }
    ++pos_;
    d.name = ident();
    while (at(TokKind::LParen)) {
      for (auto& [n, t] : group()) {
        d.params.push_back({n, t});
        scope_.push_back(n);
      }
    }
    expect(TokKind::Colon);
    if (at_kw("Type") || at_kw("Linear")) {
      d.sort = peek().text == "Type" ? DeclSort::Type : DeclSort::Linear;
      ++pos_;
    } else {
      if (!d.params.empty()) fail({"Type", "Linear"});
      d.type = expr();
    }
    expect(TokKind::Define);
    d.body = expr();
    expect(TokKind::Semi);
    scope_.resize(scope_.size() - d.params.size());
    return d;
  }

  // `(x y : A)`: returns binders with domains already lifted past earlier
  // names of the group; callers push names onto the scope as they bind.
  std::vector<std::pair<std::string, Expr>> group() {
    expect(TokKind::LParen);
    std::vector<std::string> names;
    do {
      names.push_back(ident());
    } while (at(TokKind::Ident));
    expect(TokKind::Colon);
    Expr dom = expr();
    expect(TokKind::RParen);
    std::vector<std::pair<std::string, Expr>> out;
    for (std::size_t k = 0; k < names.size(); ++k)
      out.emplace_back(names[k], lift_loose(dom, static_cast<std::uint32_t>(k)));
    return out;
  }

  Expr expr() {
    Loc l = loc();
    if (at_kw("fun")) return lambda().with_loc(l);
    if (at_kw("Pi") || at_kw("Sig") || at_kw("Lpi") || at_kw("Lsig")) {
      std::string q = toks_[pos_++].text;
      Tag t = q == "Pi" ? Tag::Pi : q == "Sig" ? Tag::Sig : q == "Lpi" ? Tag::Lpi : Tag::Lsig;
      return quantifier(t).with_loc(l);
    }
    if (at(TokKind::Hat) && peek(1).kind == TokKind::Keyword &&
        (peek(1).text == "Pi" || peek(1).text == "Lpi")) {
      Tag t = peek(1).text == "Pi" ? Tag::CodePi : Tag::CodeLpi;
      pos_ += 2;
      return quantifier(t).with_loc(l);
    }
    if (at_kw("let")) return let().with_loc(l);
    return arrow();
  }

  Expr lambda() {
    expect_kw("fun");
    std::vector<std::pair<std::string, Expr>> bs;
    do {
      if (at(TokKind::Ident)) {
        bs.emplace_back(ident(), Expr{});
        scope_.push_back(bs.back().first);
      } else if (at(TokKind::LParen)) {
        for (auto& b : group()) {
          bs.push_back(b);
          scope_.push_back(b.first);
        }
      } else {
        fail({"identifier", "("});
      }
    } while (!at(TokKind::FatArrow));
    expect(TokKind::FatArrow);
    Expr body = expr();
    return close_binders(Tag::Lam, bs, body);
  }

  Expr quantifier(Tag t) {
    std::vector<std::pair<std::string, Expr>> bs;
    do {
      for (auto& b : group()) {
        bs.push_back(b);
        scope_.push_back(b.first);
      }
    } while (at(TokKind::LParen));
    expect(TokKind::Comma);
    Expr body = expr();
    return close_binders(t, bs, body);
  }

  Expr close_binders(Tag t, const std::vector<std::pair<std::string, Expr>>& bs, Expr body) {
    for (std::size_t k = bs.size(); k-- > 0;) {
      scope_.pop_back();
      if (t == Tag::Lam)
        body = Expr::lam(FunKind::Unknown, bs[k].first, bs[k].second, body);
      else
        body = Expr::binder(t, bs[k].first, bs[k].second, body);
    }
    return body;
  }

  Expr let() {
    expect_kw("let");
    if (at(TokKind::LParen)) {
      ++pos_;
      std::string x = ident();
      expect(TokKind::Comma);
      std::string y = ident();
      expect(TokKind::RParen);
      expect(TokKind::Equals);
      Expr s = expr();
      expect_kw("in");
      scope_.push_back(x);
      scope_.push_back(y);
      Expr body = expr();
      scope_.resize(scope_.size() - 2);
      return Expr::let2(PairKind::Unknown, x, y, s, body);
    }
    if (at(TokKind::Star)) {
      ++pos_;
      expect(TokKind::Equals);
      Expr s = expr();
      expect_kw("in");
      return Expr::let_unit(s, expr());
    }
    if (at_kw("ell")) {
      ++pos_;
      std::string x = ident();
      expect(TokKind::Equals);
      Expr s = expr();
      expect_kw("in");
      scope_.push_back(x);
      Expr body = expr();
      scope_.pop_back();
      return Expr::let_ell(x, s, body);
    }
    fail({"(", "*", "ell"});
  }

  Expr arrow() {
    Loc l = loc();
    Expr lhs = tensor();
    if (at(TokKind::Lolli)) {
      ++pos_;
      return Expr::binary(Tag::Lolli, lhs, expr()).with_loc(l);
    }
    if (at(TokKind::Arrow)) {
      ++pos_;
      scope_.push_back("_");
      Expr rhs = expr();
      scope_.pop_back();
      return Expr::binder(Tag::Pi, "_", lhs, rhs).with_loc(l);
    }
    return lhs;
  }

  Expr tensor() {
    Expr lhs = application();
    while (at(TokKind::TensorOp)) {
      Loc l = loc();
      ++pos_;
      lhs = Expr::binary(Tag::Tensor, lhs, application()).with_loc(l);
    }
    return lhs;
  }

  bool starts_atom() const {
    switch (peek().kind) {
      case TokKind::Ident: case TokKind::Star: case TokKind::LParen: case TokKind::Bang:
        return true;
      case TokKind::Hat:
        return peek(1).kind == TokKind::Keyword && peek(1).text == "I";
      case TokKind::Keyword: {
        const auto& w = peek().text;
        return w == "U" || w == "Unit" || w == "tt" || w == "I" || w == "refl";
      }
      default:
        return false;
    }
  }

  Expr application() {
    Loc l = loc();
    Expr head = prefix_form();
    if (!head) head = atom();
    while (starts_atom()) head = Expr::app(FunKind::Unknown, head, atom()).with_loc(l);
    return head;
  }

  Expr prefix_form() {
    Loc l = loc();
    if (at(TokKind::Hat) && peek(1).kind == TokKind::Keyword) {
      const std::string w = peek(1).text;
      if (w == "Lolli" || w == "Eq") {
        pos_ += 2;
        Expr a = atom();
        Expr b = atom();
        return Expr::binary(w == "Lolli" ? Tag::CodeLolli : Tag::CodeEq, a, b).with_loc(l);
      }
    }
    if (!at(TokKind::Keyword)) return {};
    const std::string w = peek().text;
    static const std::pair<const char*, Tag> unary[] = {
        {"M", Tag::M},     {"L", Tag::L},     {"mu", Tag::Mu},   {"ell", Tag::Ell},
        {"ElC", Tag::ElC}, {"ElL", Tag::ElL}, {"fst", Tag::Fst}, {"snd", Tag::Snd},
        {"lower", Tag::Lower}};
    for (const auto& [kw, t] : unary) {
      if (w == kw) {
        ++pos_;
        return Expr::unary(t, atom()).with_loc(l);
      }
    }
    if (w == "Eq" || w == "eqOut") {
      ++pos_;
      Expr a = atom();
      Expr b = atom();
      return Expr::binary(w == "Eq" ? Tag::Eq : Tag::EqOut, a, b).with_loc(l);
    }
    if (w == "Id" || w == "eqIn") {
      ++pos_;
      Expr a = atom();
      Expr b = atom();
      Expr c = atom();
      return Expr::ternary(w == "Id" ? Tag::Id : Tag::EqIn, a, b, c).with_loc(l);
    }
    return {};
  }

  Expr atom() {
    Loc l = loc();
    const Token& t = peek();
    switch (t.kind) {
      case TokKind::Ident: {
        ++pos_;
        if (t.text == "_") fail({"identifier"});
        return var(t.text).with_loc(l);
      }
      case TokKind::Star:
        ++pos_;
        return Expr::leaf(Tag::Star).with_loc(l);
      case TokKind::Bang:
        ++pos_;
        return Expr::unary(Tag::Bang, atom()).with_loc(l);
      case TokKind::Hat:
        if (peek(1).kind == TokKind::Keyword && peek(1).text == "I") {
          pos_ += 2;
          return Expr::leaf(Tag::CodeTUnit).with_loc(l);
        }
        break;
      case TokKind::Keyword: {
        static const std::pair<const char*, Tag> leaves[] = {
            {"U", Tag::U}, {"Unit", Tag::Unit}, {"tt", Tag::Tt}, {"I", Tag::TUnit},
            {"refl", Tag::Refl}};
        for (const auto& [kw, tag] : leaves) {
          if (t.text == kw) {
            ++pos_;
            return Expr::leaf(tag).with_loc(l);
          }
        }
        break;
      }
      case TokKind::LParen: {
        ++pos_;
        Expr e = expr();
        if (at(TokKind::Comma)) {
          ++pos_;
          Expr b = expr();
          expect(TokKind::RParen);
          return Expr::pair(PairKind::Unknown, e, b).with_loc(l);
        }
        if (at(TokKind::Colon)) {
          ++pos_;
          Expr ty = expr();
          expect(TokKind::RParen);
          return Expr::binary(Tag::Ann, e, ty).with_loc(l);
        }
        if (!at(TokKind::RParen)) fail({")", ",", ":"});
        ++pos_;
        return e;
      }
      default:
        break;
    }
    fail({"identifier", "(", "*", "!", "U", "Unit", "tt", "I", "refl", "^I"});
  }
};

}  // namespace

std::vector<Decl> parse_file(const std::vector<Token>& tokens) { return Parser(tokens).file(); }

std::vector<Decl> parse_source(const std::string& source) { return parse_file(tokenize(source)); }

Expr parse_expr(const std::string& source) {
  auto toks = tokenize(source);
  return Parser(toks).single();
}

// ---------------------------------------------------------------------------
// Printer

namespace {

enum Prec { kExpr = 0, kArrowLhs = 1, kApp = 2, kAtom = 3 };

class Printer {
public:
  std::string print(const Expr& e, int prec) {
    std::string s = render(e, prec);
    return s;
  }

  std::vector<std::string> names;

  std::string bind(const std::string& n) {
    std::string r = n.empty() ? "x" : n;
    if (r != "_")
      while (std::find(names.begin(), names.end(), r) != names.end()) r += "'";
    names.push_back(r);
    return r;
  }
  void unbind(std::size_t k = 1) { names.resize(names.size() - k); }

private:
  static std::string paren(const std::string& s, bool p) { return p ? "(" + s + ")" : s; }

  std::string render(const Expr& e, int prec) {
    if (!e) return "<?>";
    switch (e.tag()) {
      case Tag::BVar: {
        std::uint32_t i = e.index();
        if (i < names.size()) return names[names.size() - 1 - i];
        return "#" + std::to_string(i - names.size());
      }
      case Tag::FVar: return e.name();
      case Tag::Meta: return "?" + e.name();
      case Tag::Global: return e.name();
      case Tag::U: return "U";
      case Tag::Unit: return "Unit";
      case Tag::Tt: return "tt";
      case Tag::TUnit: return "I";
      case Tag::Star: return "*";
      case Tag::Refl: return "refl";
      case Tag::CodeTUnit: return "^I";
      case Tag::Bang:
      case Tag::CodeBang: return "!" + render(e.a(), kAtom);
      case Tag::Pi:
        if (e.name() == "_") {
          std::string lhs = render(e.a(), kArrowLhs);
          bind("_");
          std::string rhs = render(e.b(), kExpr);
          unbind();
          return paren(lhs + " -> " + rhs, prec > kExpr);
        }
        [[fallthrough]];
      case Tag::Sig: case Tag::Lpi: case Tag::Lsig: case Tag::CodePi: case Tag::CodeLpi:
        return paren(quantifier(e), prec > kExpr);
      case Tag::Lam: return paren(lambda(e), prec > kExpr);
      case Tag::Lolli:
        return paren(render(e.a(), kArrowLhs) + " -o " + render(e.b(), kExpr), prec > kExpr);
      case Tag::Tensor:
        return paren(render(e.a(), kArrowLhs) + " (x) " + render(e.b(), kApp), prec > kArrowLhs);
      case Tag::App:
        return paren(render(e.a(), kApp) + " " + render(e.b(), kAtom), prec > kApp);
      case Tag::Pair:
        return "(" + render(e.a(), kExpr) + " , " + render(e.b(), kExpr) + ")";
      case Tag::Ann:
        return "(" + render(e.a(), kExpr) + " : " + render(e.b(), kExpr) + ")";
      case Tag::Let2: {
        std::string s = render(e.a(), kExpr);
        std::string x = bind(e.name());
        std::string y = bind(e.name2());
        std::string body = render(e.b(), kExpr);
        unbind(2);
        return paren("let (" + x + " , " + y + ") = " + s + " in " + body, prec > kExpr);
      }
      case Tag::LetUnit:
        return paren("let * = " + render(e.a(), kExpr) + " in " + render(e.b(), kExpr),
                     prec > kExpr);
      case Tag::LetL: {
        std::string s = render(e.a(), kExpr);
        std::string x = bind(e.name());
        std::string body = render(e.b(), kExpr);
        unbind();
        return paren("let ell " + x + " = " + s + " in " + body, prec > kExpr);
      }
      case Tag::Fst: return prefix("fst", e, prec);
      case Tag::Snd: return prefix("snd", e, prec);
      case Tag::ElC: return prefix("ElC", e, prec);
      case Tag::ElL: return prefix("ElL", e, prec);
      case Tag::L: return prefix("L", e, prec);
      case Tag::M: return prefix("M", e, prec);
      case Tag::Mu: return prefix("mu", e, prec);
      case Tag::Ell: return prefix("ell", e, prec);
      case Tag::Lower: return prefix("lower", e, prec);
      case Tag::Eq: return prefix("Eq", e, prec);
      case Tag::EqOut: return prefix("eqOut", e, prec);
      case Tag::CodeLolli: return prefix("^Lolli", e, prec);
      case Tag::CodeEq: return prefix("^Eq", e, prec);
      case Tag::Id: return prefix("Id", e, prec);
      case Tag::EqIn: return prefix("eqIn", e, prec);
    }
    return "<?>";
  }

  std::string prefix(const char* kw, const Expr& e, int prec) {
    std::string s = kw;
    for (const Expr* k : {&e.a(), &e.b(), &e.c()})
      if (*k) s += " " + render(*k, kAtom);
    return paren(s, prec > kApp);
  }

  static const char* quantifier_kw(Tag t) {
    switch (t) {
      case Tag::Pi: return "Pi";
      case Tag::Sig: return "Sig";
      case Tag::Lpi: return "Lpi";
      case Tag::Lsig: return "Lsig";
      case Tag::CodePi: return "^Pi";
      default: return "^Lpi";
    }
  }

  // Consecutive binders with the same domain (up to the shift) print as one
  // group `(x y : A)`, matching how the parser expands groups.
  std::string groups(std::vector<std::pair<std::string, Expr>>& bs, bool typed_only) {
    std::string s;
    std::size_t pushed = 0;
    std::size_t k = 0;
    while (k < bs.size()) {
      if (!bs[k].second) {
        s += " " + bind(bs[k].first);
        ++pushed;
        ++k;
        continue;
      }
      std::string dom = render(bs[k].second, kExpr);
      std::string group = bind(bs[k].first);
      ++pushed;
      std::size_t j = k + 1;
      while (j < bs.size() && bs[j].second &&
             alpha_eq(bs[j].second, lift_loose(bs[k].second, static_cast<std::uint32_t>(j - k)))) {
        group += " " + bind(bs[j].first);
        ++pushed;
        ++j;
      }
      s += " (" + group + " : " + dom + ")";
      k = j;
    }
    (void)typed_only;
    return s;
  }

  std::string quantifier(const Expr& e) {
    std::vector<std::pair<std::string, Expr>> bs;
    Expr cur = e;
    while (cur.tag() == e.tag() && !(cur.is(Tag::Pi) && cur.name() == "_")) {
      bs.emplace_back(cur.name(), cur.a());
      cur = cur.b();
    }
    std::string s = quantifier_kw(e.tag());
    s += groups(bs, true);
    s += ", " + render(cur, kExpr);
    unbind(bs.size());
    return s;
  }

  std::string lambda(const Expr& e) {
    std::vector<std::pair<std::string, Expr>> bs;
    Expr cur = e;
    while (cur.is(Tag::Lam)) {
      bs.emplace_back(cur.name(), cur.a());
      cur = cur.b();
    }
    std::string s = "fun" + groups(bs, false);
    s += " => " + render(cur, kExpr);
    unbind(bs.size());
    return s;
  }
};

}  // namespace

std::string print_expr(const Expr& e) { return Printer().print(e, kExpr); }

std::string print_decl(const Decl& d) {
  Printer p;
  std::string s = d.kind == DeclKind::Def ? "def " : "lin ";
  s += d.name;
  std::size_t k = 0;
  while (k < d.params.size()) {
    std::string dom = p.print(d.params[k].type, kExpr);
    std::string group = p.bind(d.params[k].name);
    std::size_t j = k + 1;
    while (j < d.params.size() &&
           alpha_eq(d.params[j].type,
                    lift_loose(d.params[k].type, static_cast<std::uint32_t>(j - k)))) {
      group += " " + p.bind(d.params[j].name);
      ++j;
    }
    s += " (" + group + " : " + dom + ")";
    k = j;
  }
  s += " : ";
  switch (d.sort) {
    case DeclSort::Type: s += "Type"; break;
    case DeclSort::Linear: s += "Linear"; break;
    case DeclSort::Term: s += p.print(d.type, kExpr); break;
  }
  s += " := " + p.print(d.body, kExpr) + " ;";
  return s;
}

std::string print_file(const std::vector<Decl>& decls) {
  std::string out;
  for (const auto& d : decls) out += print_decl(d) + "\n";
  return out;
}

bool decl_equal(const Decl& x, const Decl& y) {
  if (x.kind != y.kind || x.sort != y.sort || x.name != y.name) return false;
  if (x.params.size() != y.params.size()) return false;
  for (std::size_t k = 0; k < x.params.size(); ++k)
    if (!alpha_eq(x.params[k].type, y.params[k].type)) return false;
  return alpha_eq(x.type, y.type) && alpha_eq(x.body, y.body);
}

}  // namespace lcr
