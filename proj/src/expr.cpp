#include "lcr/expr.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <stdexcept>
#include <unordered_set>

namespace lcr {

struct Expr::Node {
  Tag tag = Tag::U;
  std::uint8_t kind = 0;
  bool linear = false;
  std::string name;
  std::string name2;
  std::int64_t num = 0;
  Expr a, b, c;
  std::uint32_t lbr = 0;
  bool fv = false;
  bool mv = false;
  std::size_t size = 1;
  Loc loc;
};

namespace {
const std::string kEmpty;

std::uint32_t child_range(const Expr& e, int binders) {
  if (!e) return 0;
  std::uint32_t r = e.loose_range();
  return r > static_cast<std::uint32_t>(binders) ? r - binders : 0;
}
}  // namespace

Expr Expr::make(Node n) {
  n.lbr = 0;
  n.size = 1;
  n.fv = n.tag == Tag::FVar;
  n.mv = n.tag == Tag::Meta;
  if (n.tag == Tag::BVar) n.lbr = static_cast<std::uint32_t>(n.num) + 1;
  const Expr* kids[3] = {&n.a, &n.b, &n.c};
  for (int i = 0; i < 3; ++i) {
    const Expr& k = *kids[i];
    if (!k) continue;
    n.lbr = std::max(n.lbr, child_range(k, binders_of(n.tag, i)));
    n.fv = n.fv || k.has_fvar();
    n.mv = n.mv || k.has_meta();
    // lambda domains are annotations and do not count towards size
    if (!(n.tag == Tag::Lam && i == 0)) n.size += k.size();
  }
  return Expr(std::make_shared<const Node>(std::move(n)));
}

Expr Expr::bvar(std::uint32_t index) {
  Node n;
  n.tag = Tag::BVar;
  n.num = index;
  return make(std::move(n));
}

Expr Expr::fvar(std::int64_t id, std::string name, bool linear) {
  Node n;
  n.tag = Tag::FVar;
  n.num = id;
  n.name = std::move(name);
  n.linear = linear;
  return make(std::move(n));
}

Expr Expr::meta(std::int64_t id, std::string name) {
  Node n;
  n.tag = Tag::Meta;
  n.num = id;
  n.name = std::move(name);
  return make(std::move(n));
}

Expr Expr::global(std::string name) {
  Node n;
  n.tag = Tag::Global;
  n.name = std::move(name);
  return make(std::move(n));
}

Expr Expr::leaf(Tag t) {
  Node n;
  n.tag = t;
  return make(std::move(n));
}

Expr Expr::binder(Tag t, std::string name, Expr dom, Expr body) {
  Node n;
  n.tag = t;
  n.name = std::move(name);
  n.a = std::move(dom);
  n.b = std::move(body);
  return make(std::move(n));
}

Expr Expr::lam(FunKind k, std::string name, Expr dom, Expr body) {
  Node n;
  n.tag = Tag::Lam;
  n.kind = static_cast<std::uint8_t>(k);
  n.name = std::move(name);
  n.a = std::move(dom);
  n.b = std::move(body);
  return make(std::move(n));
}

Expr Expr::let_ell(std::string name, Expr scrut, Expr body) {
  Node n;
  n.tag = Tag::LetL;
  n.name = std::move(name);
  n.a = std::move(scrut);
  n.b = std::move(body);
  return make(std::move(n));
}

Expr Expr::let2(PairKind k, std::string name, std::string name2, Expr scrut, Expr body) {
  Node n;
  n.tag = Tag::Let2;
  n.kind = static_cast<std::uint8_t>(k);
  n.name = std::move(name);
  n.name2 = std::move(name2);
  n.a = std::move(scrut);
  n.b = std::move(body);
  return make(std::move(n));
}

Expr Expr::app(FunKind k, Expr fn, Expr arg) {
  Node n;
  n.tag = Tag::App;
  n.kind = static_cast<std::uint8_t>(k);
  n.a = std::move(fn);
  n.b = std::move(arg);
  return make(std::move(n));
}

Expr Expr::pair(PairKind k, Expr a, Expr b) {
  Node n;
  n.tag = Tag::Pair;
  n.kind = static_cast<std::uint8_t>(k);
  n.a = std::move(a);
  n.b = std::move(b);
  return make(std::move(n));
}

Expr Expr::let_unit(Expr scrut, Expr body) { return binary(Tag::LetUnit, std::move(scrut), std::move(body)); }

Expr Expr::unary(Tag t, Expr a) {
  Node n;
  n.tag = t;
  n.a = std::move(a);
  return make(std::move(n));
}

Expr Expr::binary(Tag t, Expr a, Expr b) {
  Node n;
  n.tag = t;
  n.a = std::move(a);
  n.b = std::move(b);
  return make(std::move(n));
}

Expr Expr::ternary(Tag t, Expr a, Expr b, Expr c) {
  Node n;
  n.tag = t;
  n.a = std::move(a);
  n.b = std::move(b);
  n.c = std::move(c);
  return make(std::move(n));
}

Tag Expr::tag() const { return node_->tag; }
FunKind Expr::fun_kind() const { return static_cast<FunKind>(node_->kind); }
PairKind Expr::pair_kind() const { return static_cast<PairKind>(node_->kind); }
const std::string& Expr::name() const { return node_ ? node_->name : kEmpty; }
const std::string& Expr::name2() const { return node_ ? node_->name2 : kEmpty; }
std::uint32_t Expr::index() const { return static_cast<std::uint32_t>(node_->num); }
std::int64_t Expr::id() const { return node_->num; }
bool Expr::linear() const { return node_->linear; }
const Expr& Expr::a() const { return node_->a; }
const Expr& Expr::b() const { return node_->b; }
const Expr& Expr::c() const { return node_->c; }
std::uint32_t Expr::loose_range() const { return node_ ? node_->lbr : 0; }
bool Expr::has_fvar() const { return node_ && node_->fv; }
bool Expr::has_meta() const { return node_ && node_->mv; }
std::size_t Expr::size() const { return node_ ? node_->size : 0; }
Loc Expr::loc() const { return node_ ? node_->loc : Loc{}; }

Expr Expr::with_loc(Loc l) const {
  Node n = *node_;
  n.loc = l;
  return make(std::move(n));
}

Expr Expr::rebuild(Expr a, Expr b, Expr c) const {
  if (a.same_node(node_->a) && b.same_node(node_->b) && c.same_node(node_->c)) return *this;
  Node n = *node_;
  n.a = std::move(a);
  n.b = std::move(b);
  n.c = std::move(c);
  return make(std::move(n));
}

Expr Expr::with_fun_kind(FunKind k) const {
  Node n = *node_;
  n.kind = static_cast<std::uint8_t>(k);
  return make(std::move(n));
}

Expr Expr::with_pair_kind(PairKind k) const {
  Node n = *node_;
  n.kind = static_cast<std::uint8_t>(k);
  return make(std::move(n));
}

Expr Expr::with_domain(Expr dom) const {
  assert(tag() == Tag::Lam);
  Node n = *node_;
  n.a = std::move(dom);
  return make(std::move(n));
}

int binders_of(Tag t, int child) {
  if (child != 1) return 0;
  switch (t) {
    case Tag::Pi: case Tag::Sig: case Tag::Lpi: case Tag::Lsig: case Tag::CodePi:
    case Tag::CodeLpi: case Tag::Lam: case Tag::LetL:
      return 1;
    case Tag::Let2:
      return 2;
    default:
      return 0;
  }
}

std::string_view tag_name(Tag t) {
  switch (t) {
    case Tag::BVar: return "BVar";
    case Tag::FVar: return "FVar";
    case Tag::Meta: return "Meta";
    case Tag::Global: return "Global";
    case Tag::U: return "U";
    case Tag::Pi: return "Pi";
    case Tag::Sig: return "Sig";
    case Tag::Unit: return "Unit";
    case Tag::Tt: return "tt";
    case Tag::Id: return "Id";
    case Tag::Refl: return "refl";
    case Tag::ElC: return "ElC";
    case Tag::Fst: return "fst";
    case Tag::Snd: return "snd";
    case Tag::Lpi: return "Lpi";
    case Tag::Lsig: return "Lsig";
    case Tag::Lolli: return "Lolli";
    case Tag::Tensor: return "Tensor";
    case Tag::TUnit: return "I";
    case Tag::L: return "L";
    case Tag::Eq: return "Eq";
    case Tag::ElL: return "ElL";
    case Tag::Star: return "*";
    case Tag::LetUnit: return "LetUnit";
    case Tag::LetL: return "LetL";
    case Tag::Ell: return "ell";
    case Tag::Lower: return "Lower";
    case Tag::Lam: return "Lam";
    case Tag::App: return "App";
    case Tag::Pair: return "Pair";
    case Tag::Let2: return "Let2";
    case Tag::M: return "M";
    case Tag::Mu: return "mu";
    case Tag::EqIn: return "eqIn";
    case Tag::EqOut: return "eqOut";
    case Tag::CodePi: return "^Pi";
    case Tag::CodeLpi: return "^Lpi";
    case Tag::CodeLolli: return "^Lolli";
    case Tag::CodeBang: return "^Bang";
    case Tag::CodeEq: return "^Eq";
    case Tag::CodeTUnit: return "^I";
    case Tag::Ann: return "Ann";
    case Tag::Bang: return "!";
  }
  return "?";
}

bool alpha_eq(const Expr& x, const Expr& y) {
  if (x.same_node(y)) return true;
  if (!x || !y) return !x && !y;
  if (x.tag() != y.tag()) return false;
  if (x.size() != y.size()) return false;
  switch (x.tag()) {
    case Tag::BVar: return x.index() == y.index();
    case Tag::FVar:
    case Tag::Meta: return x.id() == y.id();
    case Tag::Global: return x.name() == y.name();
    case Tag::Lam: return alpha_eq(x.b(), y.b());
    default:
      return alpha_eq(x.a(), y.a()) && alpha_eq(x.b(), y.b()) && alpha_eq(x.c(), y.c());
  }
}

namespace {

// Generic structural map with binder depth; `f` returns empty to recurse.
template <class F>
Expr map_expr(const Expr& e, std::uint32_t depth, F& f) {
  if (!e) return e;
  Expr r = f(e, depth);
  if (r) return r;
  Expr a = map_expr(e.a(), depth + binders_of(e.tag(), 0), f);
  Expr b = map_expr(e.b(), depth + binders_of(e.tag(), 1), f);
  Expr c = map_expr(e.c(), depth + binders_of(e.tag(), 2), f);
  return e.rebuild(a, b, c);
}

template <class P>
bool any_expr(const Expr& e, P& p) {
  if (!e) return false;
  if (p(e)) return true;
  return any_expr(e.a(), p) || any_expr(e.b(), p) || any_expr(e.c(), p);
}

}  // namespace

Expr instantiate(const Expr& body, const std::vector<Expr>& values) {
  const auto n = static_cast<std::uint32_t>(values.size());
  if (n == 0) return body;
  auto f = [&](const Expr& e, std::uint32_t depth) -> Expr {
    if (e.loose_range() <= depth) return e;
    if (e.is(Tag::BVar)) {
      std::uint32_t i = e.index();
      if (i < depth) return e;
      if (i < depth + n) return values[n - 1 - (i - depth)];
      return Expr::bvar(i - n);
    }
    return {};
  };
  return map_expr(body, 0, f);
}

Expr instantiate1(const Expr& body, const Expr& value) { return instantiate(body, {value}); }

Expr lift_loose(const Expr& e, std::uint32_t n, std::uint32_t from) {
  if (n == 0) return e;
  auto f = [&](const Expr& x, std::uint32_t depth) -> Expr {
    if (x.loose_range() <= depth + from) return x;
    if (x.is(Tag::BVar)) return Expr::bvar(x.index() + n);
    return {};
  };
  return map_expr(e, 0, f);
}

Expr abstract_fvars(const Expr& e, const std::vector<std::int64_t>& ids) {
  if (ids.empty()) return e;
  const auto n = static_cast<std::uint32_t>(ids.size());
  auto f = [&](const Expr& x, std::uint32_t depth) -> Expr {
    if (!x.has_fvar()) return x;
    if (x.is(Tag::FVar)) {
      for (std::uint32_t k = 0; k < n; ++k)
        if (ids[k] == x.id()) return Expr::bvar(depth + (n - 1 - k));
      return x;
    }
    return {};
  };
  return map_expr(e, 0, f);
}

Expr abstract_fvar(const Expr& e, std::int64_t id) { return abstract_fvars(e, {id}); }

Expr instantiate_metas(const Expr& e, const std::vector<Expr>& assignment) {
  auto f = [&](const Expr& x, std::uint32_t) -> Expr {
    if (!x.has_meta()) return x;
    if (x.is(Tag::Meta)) {
      auto i = static_cast<std::size_t>(x.id());
      if (i < assignment.size() && assignment[i]) return assignment[i];
      return x;
    }
    return {};
  };
  return map_expr(e, 0, f);
}

Expr replace_globals(const Expr& e, const std::function<Expr(const std::string&)>& g) {
  auto f = [&](const Expr& x, std::uint32_t) -> Expr {
    if (x.is(Tag::Global)) {
      Expr r = g(x.name());
      return r ? r : x;
    }
    return {};
  };
  return map_expr(e, 0, f);
}

bool occurs_fvar(const Expr& e, std::int64_t id) {
  auto p = [&](const Expr& x) { return x.is(Tag::FVar) && x.id() == id; };
  return e.has_fvar() && any_expr(e, p);
}

void collect_fvars(const Expr& e, std::vector<Expr>& out) {
  if (!e || !e.has_fvar()) return;
  if (e.is(Tag::FVar)) {
    for (const auto& o : out)
      if (o.id() == e.id()) return;
    out.push_back(e);
    return;
  }
  collect_fvars(e.a(), out);
  collect_fvars(e.b(), out);
  collect_fvars(e.c(), out);
}

bool mentions_linear_fvar(const Expr& e) {
  auto p = [](const Expr& x) { return x.is(Tag::FVar) && x.linear(); };
  return e.has_fvar() && any_expr(e, p);
}

bool mentions_global(const Expr& e, const std::string& name) {
  auto p = [&](const Expr& x) { return x.is(Tag::Global) && x.name() == name; };
  return any_expr(e, p);
}

Expr spine(const Expr& e, std::vector<Expr>& args) {
  args.clear();
  Expr h = e;
  while (h.is(Tag::App)) {
    args.push_back(h.b());
    h = h.a();
  }
  std::reverse(args.begin(), args.end());
  return h;
}

Expr apps(Expr head, const std::vector<Expr>& args, FunKind k) {
  for (const auto& a : args) head = Expr::app(k, head, a);
  return head;
}

bool has_loose_bvar(const Expr& e, std::uint32_t k) {
  if (!e || e.loose_range() <= k) return false;
  if (e.is(Tag::BVar)) return e.index() == k;
  return has_loose_bvar(e.a(), k + binders_of(e.tag(), 0)) ||
         has_loose_bvar(e.b(), k + binders_of(e.tag(), 1)) ||
         has_loose_bvar(e.c(), k + binders_of(e.tag(), 2));
}

std::int64_t fresh_id() {
  static std::atomic<std::int64_t> counter{1};
  return counter.fetch_add(1);
}

}  // namespace lcr
