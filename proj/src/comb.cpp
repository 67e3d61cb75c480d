#include "lcr/comb.hpp"

#include <cctype>

namespace lcr {

std::string_view combinator_name(Combinator c) {
  switch (c) {
    case Combinator::B: return "B";
    case Combinator::I: return "I";
    case Combinator::C: return "C";
    case Combinator::W: return "W";
    case Combinator::K: return "K";
    case Combinator::D: return "D";
    case Combinator::Delta: return "d";
    case Combinator::F: return "F";
  }
  return "?";
}

Comb Comb::comb(Combinator c) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Combinator;
  n->comb = c;
  return Comb(std::move(n));
}

Comb Comb::constant(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->name = std::move(name);
  return Comb(std::move(n));
}

Comb Comb::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->name = std::move(name);
  n->closed = false;
  return Comb(std::move(n));
}

Comb Comb::app(Comb fn, Comb arg) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::App;
  n->size = 1 + fn.size() + arg.size();
  n->closed = fn.closed() && arg.closed();
  n->left = std::move(fn);
  n->right = std::move(arg);
  return Comb(std::move(n));
}

Comb Comb::bang(Comb body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Bang;
  n->size = 1 + body.size();
  n->closed = body.closed();
  n->left = std::move(body);
  return Comb(std::move(n));
}

Comb Comb::apps(Comb head, std::initializer_list<Comb> args) {
  for (const auto& a : args) head = app(std::move(head), a);
  return head;
}

bool operator==(const Comb& a, const Comb& b) {
  const Comb::Node* x = a.raw();
  const Comb::Node* y = b.raw();
  while (true) {
    if (x == y) return true;
    if (!x || !y) return false;
    if (x->kind != y->kind || x->size != y->size) return false;
    switch (x->kind) {
      case Comb::Kind::Combinator:
        return x->comb == y->comb;
      case Comb::Kind::Const:
      case Comb::Kind::Var:
        return x->name == y->name;
      case Comb::Kind::Bang:
        x = x->left.raw();
        y = y->left.raw();
        continue;
      case Comb::Kind::App:
        if (!(x->left == y->left)) return false;
        x = x->right.raw();
        y = y->right.raw();
        continue;
    }
  }
}

namespace {

void print(const Comb& t, bool atom, std::string& out) {
  switch (t.kind()) {
    case Comb::Kind::Combinator:
      out += combinator_name(t.combinator());
      return;
    case Comb::Kind::Const:
      out += t.name();
      return;
    case Comb::Kind::Var:
      out += '?';
      out += t.name();
      return;
    case Comb::Kind::Bang:
      out += '!';
      print(t.body(), true, out);
      return;
    case Comb::Kind::App:
      if (atom) out += '(';
      print(t.fn(), false, out);
      out += ' ';
      print(t.arg(), true, out);
      if (atom) out += ')';
      return;
  }
}

class CombParser {
public:
  explicit CombParser(std::string_view s) : src_(s) {}

  Comb parse_all() {
    Comb t = parse_app();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected trailing input");
    return t;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw CombParseError(msg + " at offset " + std::to_string(pos_) +
                         " in `" + std::string(src_) + "`");
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
      ++pos_;
  }

  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  bool at_atom_start() {
    skip_ws();
    if (pos_ >= src_.size()) return false;
    char c = src_[pos_];
    return c == '(' || c == '!' || c == '?' || ident_char(c);
  }

  Comb parse_app() {
    if (!at_atom_start()) fail("expected a term");
    Comb t = parse_atom();
    while (at_atom_start()) t = Comb::app(std::move(t), parse_atom());
    return t;
  }

  std::string ident() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && ident_char(src_[pos_])) ++pos_;
    if (start == pos_) fail("expected identifier");
    return std::string(src_.substr(start, pos_ - start));
  }

  Comb parse_atom() {
    skip_ws();
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Comb t = parse_app();
      skip_ws();
      if (pos_ >= src_.size() || src_[pos_] != ')') fail("expected `)`");
      ++pos_;
      return t;
    }
    if (c == '!') {
      ++pos_;
      if (!at_atom_start()) fail("expected a term after `!`");
      return Comb::bang(parse_atom());
    }
    if (c == '?') {
      ++pos_;
      return Comb::var(ident());
    }
    std::string id = ident();
    if (id.size() == 1) {
      switch (id[0]) {
        case 'B': return Comb::comb(Combinator::B);
        case 'I': return Comb::comb(Combinator::I);
        case 'C': return Comb::comb(Combinator::C);
        case 'W': return Comb::comb(Combinator::W);
        case 'K': return Comb::comb(Combinator::K);
        case 'D': return Comb::comb(Combinator::D);
        case 'd': return Comb::comb(Combinator::Delta);
        case 'F': return Comb::comb(Combinator::F);
        default: break;
      }
    }
    return Comb::constant(std::move(id));
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string Comb::str() const {
  std::string out;
  print(*this, false, out);
  return out;
}

Comb parse_comb(std::string_view text) { return CombParser(text).parse_all(); }

}  // namespace lcr
