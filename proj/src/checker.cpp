#include <algorithm>

#include "lcr/kernel.hpp"
#include "normalizer.hpp"

namespace lcr {

std::string_view error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Mismatch: return "Mismatch";
    case ErrorKind::LinearUsage: return "LinearUsage";
    case ErrorKind::NotAType: return "NotAType";
    case ErrorKind::UnknownEquality: return "UnknownEquality";
    case ErrorKind::ScopeError: return "ScopeError";
  }
  return "?";
}

std::string_view equality_name(Equality e) {
  switch (e) {
    case Equality::Equal: return "Equal";
    case Equality::NotEqual: return "NotEqual";
    case Equality::Unknown: return "Unknown";
  }
  return "?";
}

namespace {
std::string error_text(ErrorKind kind, const std::string& msg, Loc loc) {
  std::string s;
  if (loc.known()) s = std::to_string(loc.line) + ":" + std::to_string(loc.column) + ": ";
  return s + std::string(error_kind_name(kind)) + ": " + msg;
}
}  // namespace

TypeError::TypeError(ErrorKind k, const std::string& msg, Loc l, std::string exp, std::string act)
    : std::runtime_error(error_text(k, msg, l)),
      kind(k),
      message(msg),
      loc(l),
      expected(std::move(exp)),
      actual(std::move(act)) {}

const GlobalDef* Env::find(const std::string& name) const {
  auto it = defs_.find(name);
  return it == defs_.end() ? nullptr : &it->second;
}

void Env::add(GlobalDef def) {
  order_.push_back(def.name);
  defs_[def.name] = std::move(def);
}

Expr Ctx::push(const std::string& name, const Expr& type, bool linear) {
  Expr v = Expr::fvar(fresh_id(), name, linear);
  entries_.push_back({v, type});
  return v;
}

void Ctx::pop() { entries_.pop_back(); }

const CtxEntry* Ctx::lookup(std::int64_t id) const {
  for (const auto& e : entries_)
    if (e.var.id() == id) return &e;
  return nullptr;
}

const CtxEntry* Ctx::lookup(const std::string& name) const {
  for (std::size_t k = entries_.size(); k-- > 0;)
    if (entries_[k].var.name() == name) return &entries_[k];
  return nullptr;
}

Expr Ctx::resolve(const Expr& e) const {
  return replace_globals(e, [&](const std::string& n) {
    const CtxEntry* c = lookup(n);
    return c ? c->var : Expr{};
  });
}

namespace {

using Usage = std::vector<std::int64_t>;

class Elab {
public:
  Elab(const Kernel& k, Ctx& ctx) : k_(k), env_(k.env()), ctx_(ctx) {}

  std::pair<Expr, Sort> type(const Expr& t);
  Typed infer(const Expr& e);
  Typed check(const Expr& e, const Expr& t);

  Loc loc_;

private:
  const Kernel& k_;
  const Env& env_;
  Ctx& ctx_;

  struct LocGuard {
    LocGuard(Loc& ref, const Expr& e) : ref_(ref), saved_(ref) {
      if (e && e.loc().known()) ref = e.loc();
    }
    ~LocGuard() { ref_ = saved_; }
    Loc& ref_;
    Loc saved_;
  };

  [[noreturn]] void fail(ErrorKind kind, const std::string& msg, const std::string& expected = {},
                         const std::string& actual = {}) const {
    throw TypeError(kind, msg, loc_, expected, actual);
  }

  Expr whnf(const Expr& e) const { return k_.whnf(e); }
  Sort sort_of(const Expr& t) const { return k_.sort_of(t); }
  static std::string show(const Expr& e) { return print_expr(e); }

  std::string var_name(std::int64_t id) const {
    const CtxEntry* c = ctx_.lookup(id);
    return c ? c->var.name() : "?";
  }

  Usage join(const Usage& a, const Usage& b) const {
    Usage out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    if (out.size() != a.size() + b.size()) {
      Usage both;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
      fail(ErrorKind::LinearUsage,
           "linear variable '" + var_name(both.front()) + "' is used more than once");
    }
    return out;
  }

  void require_empty(const Usage& u, const std::string& why) const {
    if (!u.empty())
      fail(ErrorKind::LinearUsage, "linear variable '" + var_name(u.front()) + "' " + why);
  }

  Usage discharge(Usage u, const Expr& x) const {
    auto it = std::find(u.begin(), u.end(), x.id());
    if (it == u.end())
      fail(ErrorKind::LinearUsage, "linear variable '" + x.name() + "' is never used");
    u.erase(it);
    return u;
  }

  void expect_equal(const Expr& want, const Expr& got) {
    Equality eq = k_.def_eq(ctx_, got, want);
    if (eq == Equality::NotEqual) fail(ErrorKind::Mismatch, "type mismatch", show(want), show(got));
    if (eq == Equality::Unknown)
      fail(ErrorKind::UnknownEquality, "type equality undecided within the step bound", show(want),
           show(got));
  }

  struct EqMaps {
    Expr f, g, dom, cod;
  };
  EqMaps eq_maps(const Expr& f, const Expr& g);

  Typed infer_app(const Expr& e);
  Typed eq_intro(const Expr& e, const Expr& source);
  Typed let2(const Expr& e, const Expr& want);
  Typed let_unit(const Expr& e, const Expr& want);
  Typed let_ell(const Expr& e, const Expr& want);
  Typed code(const Expr& e);
};

std::pair<Expr, Sort> Elab::type(const Expr& t) {
  LocGuard g(loc_, t);
  switch (t.tag()) {
    case Tag::U:
    case Tag::Unit: return {t, Sort::Cart};
    case Tag::TUnit: return {t, Sort::Lin};
    case Tag::Pi: case Tag::Sig: case Tag::Lpi: case Tag::Lsig: {
      auto [a, sa] = type(t.a());
      if (sa != Sort::Cart)
        fail(ErrorKind::Mismatch, "the bound variable of " + std::string(tag_name(t.tag())) +
                                      " must have a cartesian type",
             "cartesian type", show(a));
      Expr x = ctx_.push(t.name(), a, false);
      auto [b, sb] = type(instantiate1(t.b(), x));
      ctx_.pop();
      Sort want = t.is(Tag::Pi) || t.is(Tag::Sig) ? Sort::Cart : Sort::Lin;
      if (sb != want)
        fail(ErrorKind::Mismatch,
             "the body of " + std::string(tag_name(t.tag())) + " must be a " +
                 (want == Sort::Cart ? "cartesian" : "linear") + " type",
             want == Sort::Cart ? "cartesian type" : "linear type", show(b));
      return {t.rebuild(a, abstract_fvar(b, x.id())), want};
    }
    case Tag::Lolli:
    case Tag::Tensor: {
      auto [a, sa] = type(t.a());
      auto [b, sb] = type(t.b());
      if (sa != Sort::Lin || sb != Sort::Lin)
        fail(ErrorKind::Mismatch, std::string(tag_name(t.tag())) + " needs linear types",
             "linear type", show(sa != Sort::Lin ? a : b));
      return {t.rebuild(a, b), Sort::Lin};
    }
    case Tag::Id: {
      auto [a, sa] = type(t.a());
      if (sa != Sort::Cart) fail(ErrorKind::Mismatch, "Id needs a cartesian type", "cartesian type", show(a));
      Typed l = check(t.b(), a);
      Typed r = check(t.c(), a);
      require_empty(join(l.usage, r.usage), "occurs in a type");
      return {t.rebuild(a, l.term, r.term), Sort::Cart};
    }
    case Tag::ElC:
    case Tag::ElL: {
      Typed c = check(t.a(), Expr::leaf(Tag::U));
      require_empty(c.usage, "occurs in a type");
      return {t.rebuild(c.term), t.is(Tag::ElC) ? Sort::Cart : Sort::Lin};
    }
    case Tag::M: {
      auto [a, sa] = type(t.a());
      if (sa != Sort::Lin) fail(ErrorKind::Mismatch, "M needs a linear type", "linear type", show(a));
      return {t.rebuild(a), Sort::Cart};
    }
    case Tag::L: {
      auto [a, sa] = type(t.a());
      if (sa != Sort::Cart) fail(ErrorKind::Mismatch, "L needs a cartesian type", "cartesian type", show(a));
      return {t.rebuild(a), Sort::Lin};
    }
    case Tag::Bang: {
      auto [a, sa] = type(t.a());
      if (sa != Sort::Lin) fail(ErrorKind::Mismatch, "! needs a linear type", "linear type", show(a));
      return {Expr::unary(Tag::L, Expr::unary(Tag::M, a)), Sort::Lin};
    }
    case Tag::Eq: {
      EqMaps m = eq_maps(t.a(), t.b());
      return {Expr::binary(Tag::Eq, m.f, m.g), Sort::Lin};
    }
    case Tag::Global: {
      const GlobalDef* d = env_.find(t.name());
      if (!d) fail(ErrorKind::ScopeError, "unknown name '" + t.name() + "'");
      if (!d->is_type()) fail(ErrorKind::NotAType, "'" + t.name() + "' is a term, not a type");
      if (!d->params.empty())
        fail(ErrorKind::Mismatch,
             "type family '" + t.name() + "' expects " + std::to_string(d->params.size()) +
                 " arguments");
      return {t, d->type_sort()};
    }
    case Tag::App: {
      std::vector<Expr> args;
      Expr head = spine(t, args);
      const GlobalDef* d = head.is(Tag::Global) ? env_.find(head.name()) : nullptr;
      if (head.is(Tag::Global) && !d && !ctx_.lookup(head.name()))
        fail(ErrorKind::ScopeError, "unknown name '" + head.name() + "'");
      if (!d || !d->is_type()) fail(ErrorKind::NotAType, "expected a type, found " + show(t));
      if (args.size() != d->params.size())
        fail(ErrorKind::Mismatch,
             "type family '" + head.name() + "' expects " + std::to_string(d->params.size()) +
                 " arguments",
             std::to_string(d->params.size()), std::to_string(args.size()));
      std::vector<Expr> done;
      for (std::size_t i = 0; i < args.size(); ++i) {
        Typed a = check(args[i], instantiate(d->params[i].type, done));
        require_empty(a.usage, "occurs in a type");
        done.push_back(a.term);
      }
      return {apps(head, done, FunKind::Cart), d->type_sort()};
    }
    default:
      fail(ErrorKind::NotAType, "expected a type, found " + show(t));
  }
}

Elab::EqMaps Elab::eq_maps(const Expr& f, const Expr& g) {
  Typed tf = infer(f);
  Typed tg = infer(g);
  require_empty(join(tf.usage, tg.usage), "occurs in an equalizer map, which must be closed");
  Expr wf = whnf(tf.type);
  Expr wg = whnf(tg.type);
  if (!wf.is(Tag::Lolli))
    fail(ErrorKind::Mismatch, "equalizer maps must be linear functions", "A -o B", show(tf.type));
  if (!wg.is(Tag::Lolli))
    fail(ErrorKind::Mismatch, "equalizer maps must be linear functions", "A -o B", show(tg.type));
  expect_equal(wf, wg);
  return {tf.term, tg.term, wf.a(), wf.b()};
}

Typed Elab::code(const Expr& e) {
  Expr u = Expr::leaf(Tag::U);
  switch (e.tag()) {
    case Tag::CodePi:
    case Tag::CodeLpi: {
      auto [a, sa] = type(e.a());
      if (sa != Sort::Cart)
        fail(ErrorKind::Mismatch, "the bound variable of a code must have a cartesian type",
             "cartesian type", show(a));
      Expr x = ctx_.push(e.name(), a, false);
      Typed b = check(instantiate1(e.b(), x), u);
      ctx_.pop();
      require_empty(b.usage, "occurs in a code");
      return {e.rebuild(a, abstract_fvar(b.term, x.id())), u, {}};
    }
    case Tag::CodeLolli: {
      Typed a = check(e.a(), u);
      Typed b = check(e.b(), u);
      require_empty(join(a.usage, b.usage), "occurs in a code");
      return {e.rebuild(a.term, b.term), u, {}};
    }
    case Tag::Bang:
    case Tag::CodeBang: {
      Typed a = check(e.a(), u);
      require_empty(a.usage, "occurs in a code");
      return {Expr::unary(Tag::CodeBang, a.term), u, {}};
    }
    case Tag::CodeEq: {
      EqMaps m = eq_maps(e.a(), e.b());
      return {Expr::binary(Tag::CodeEq, m.f, m.g), u, {}};
    }
    default:
      return {e, u, {}};
  }
}

Typed Elab::infer(const Expr& e) {
  LocGuard g(loc_, e);
  switch (e.tag()) {
    case Tag::FVar: {
      const CtxEntry* c = ctx_.lookup(e.id());
      if (!c) fail(ErrorKind::ScopeError, "variable '" + e.name() + "' is not in scope");
      return {e, c->type, e.linear() ? Usage{e.id()} : Usage{}};
    }
    case Tag::BVar:
      fail(ErrorKind::ScopeError, "unbound variable index " + std::to_string(e.index()));
    case Tag::Meta:
      fail(ErrorKind::ScopeError, "pattern variable '" + e.name() + "' outside an equation");
    case Tag::Global: {
      const GlobalDef* d = env_.find(e.name());
      if (!d) fail(ErrorKind::ScopeError, "unknown name '" + e.name() + "'");
      if (d->is_type())
        fail(ErrorKind::Mismatch, "type '" + e.name() + "' used as a term", "term", e.name());
      return {e, d->type, {}};
    }
    case Tag::Ann: {
      auto [t, s] = type(e.b());
      (void)s;
      return check(e.a(), t);
    }
    case Tag::Lam: {
      if (!e.a())
        fail(ErrorKind::Mismatch,
             "cannot infer the type of an unannotated function; annotate its binder");
      auto [a, sa] = type(e.a());
      if (sa == Sort::Lin) {
        Expr x = ctx_.push(e.name(), a, true);
        Typed b = infer(instantiate1(e.b(), x));
        Usage u = discharge(b.usage, x);
        ctx_.pop();
        return {Expr::lam(FunKind::Lin, e.name(), a, abstract_fvar(b.term, x.id())),
                Expr::binary(Tag::Lolli, a, b.type), u};
      }
      Expr x = ctx_.push(e.name(), a, false);
      Typed b = infer(instantiate1(e.b(), x));
      Sort sb = sort_of(b.type);
      ctx_.pop();
      Expr body = abstract_fvar(b.term, x.id());
      Expr bt = abstract_fvar(b.type, x.id());
      if (sb == Sort::Lin)
        return {Expr::lam(FunKind::Cart, e.name(), a, body), Expr::binder(Tag::Lpi, e.name(), a, bt),
                b.usage};
      require_empty(b.usage, "is used inside a cartesian function");
      return {Expr::lam(FunKind::Cart, e.name(), a, body), Expr::binder(Tag::Pi, e.name(), a, bt),
              {}};
    }
    case Tag::App: return infer_app(e);
    case Tag::Pair: {
      Typed a = infer(e.a());
      Typed b = infer(e.b());
      Sort sa = sort_of(a.type), sb = sort_of(b.type);
      if (sa == Sort::Cart && sb == Sort::Cart) {
        require_empty(join(a.usage, b.usage), "is used inside a cartesian pair");
        return {Expr::pair(PairKind::Sigma, a.term, b.term),
                Expr::binder(Tag::Sig, "_", a.type, lift_loose(b.type, 1)), {}};
      }
      if (sa == Sort::Lin && sb == Sort::Lin)
        return {Expr::pair(PairKind::Tensor, a.term, b.term),
                Expr::binary(Tag::Tensor, a.type, b.type), join(a.usage, b.usage)};
      if (sa == Sort::Cart) {
        require_empty(a.usage, "is used in the cartesian component of a pair");
        return {Expr::pair(PairKind::Lsig, a.term, b.term),
                Expr::binder(Tag::Lsig, "_", a.type, lift_loose(b.type, 1)), b.usage};
      }
      fail(ErrorKind::Mismatch, "a pair with a linear first component needs a linear second",
           "linear type", show(b.type));
    }
    case Tag::Fst:
    case Tag::Snd: {
      Typed p = infer(e.a());
      Expr w = whnf(p.type);
      if (!w.is(Tag::Sig)) fail(ErrorKind::Mismatch, "projection from a non-pair", "Sig", show(w));
      Expr term = e.rebuild(p.term);
      if (e.is(Tag::Fst)) return {term, w.a(), p.usage};
      return {term, instantiate1(w.b(), Expr::unary(Tag::Fst, p.term)), p.usage};
    }
    case Tag::Let2: return let2(e, {});
    case Tag::LetUnit: return let_unit(e, {});
    case Tag::LetL: return let_ell(e, {});
    case Tag::Star: return {e, Expr::leaf(Tag::TUnit), {}};
    case Tag::Tt: return {e, Expr::leaf(Tag::Unit), {}};
    case Tag::Refl:
      fail(ErrorKind::Mismatch, "cannot infer the type of refl; annotate it");
    case Tag::Ell: {
      Typed a = infer(e.a());
      if (sort_of(a.type) != Sort::Cart)
        fail(ErrorKind::Mismatch, "ell expects a cartesian term", "cartesian type", show(a.type));
      require_empty(a.usage, "is used under ell");
      return {e.rebuild(a.term), Expr::unary(Tag::L, a.type), {}};
    }
    case Tag::Lower: {
      Typed t = infer(e.a());
      Expr w = whnf(t.type);
      if (!w.is(Tag::L)) fail(ErrorKind::Mismatch, "lower expects L A", "L A", show(w));
      require_empty(t.usage, "is used under lower");
      return {e.rebuild(t.term), w.a(), {}};
    }
    case Tag::M: {
      Typed a = infer(e.a());
      if (sort_of(a.type) != Sort::Lin)
        fail(ErrorKind::Mismatch, "M expects a linear term", "linear type", show(a.type));
      require_empty(a.usage, "is used under M, which needs an empty linear context");
      return {e.rebuild(a.term), Expr::unary(Tag::M, a.type), {}};
    }
    case Tag::Mu: {
      Typed a = infer(e.a());
      Expr w = whnf(a.type);
      if (!w.is(Tag::M)) fail(ErrorKind::Mismatch, "mu expects M A", "M A", show(w));
      require_empty(a.usage, "is used under mu");
      return {e.rebuild(a.term), w.a(), {}};
    }
    case Tag::EqIn: return eq_intro(e, {});
    case Tag::EqOut: {
      EqMaps m = eq_maps(e.a(), e.b());
      return {Expr::binary(Tag::EqOut, m.f, m.g),
              Expr::binary(Tag::Lolli, Expr::binary(Tag::Eq, m.f, m.g), m.dom), {}};
    }
    case Tag::CodePi: case Tag::CodeLpi: case Tag::CodeLolli: case Tag::CodeBang:
    case Tag::CodeEq: case Tag::CodeTUnit: case Tag::Bang:
      return code(e);
    default:
      fail(ErrorKind::Mismatch, "expected a term, found the type " + show(e), "term", show(e));
  }
}

Typed Elab::infer_app(const Expr& e) {
  Typed f = infer(e.a());
  Expr w = whnf(f.type);
  if (w.is(Tag::M)) {
    // morphisms in M are applied through an implicit mu
    Expr inner = whnf(w.a());
    if (inner.is(Tag::Lolli) || inner.is(Tag::Lpi)) {
      f.term = Expr::unary(Tag::Mu, f.term);
      w = inner;
    }
  }
  if (w.is(Tag::Pi) || w.is(Tag::Lpi)) {
    Typed a = check(e.b(), w.a());
    require_empty(a.usage, "is used as a cartesian argument");
    return {Expr::app(FunKind::Cart, f.term, a.term), instantiate1(w.b(), a.term), f.usage};
  }
  if (w.is(Tag::Lolli)) {
    Typed a = check(e.b(), w.a());
    return {Expr::app(FunKind::Lin, f.term, a.term), w.b(), join(f.usage, a.usage)};
  }
  fail(ErrorKind::Mismatch, "applying a non-function", "function type", show(f.type));
}

Typed Elab::eq_intro(const Expr& e, const Expr& source) {
  EqMaps m = eq_maps(e.a(), e.b());
  Typed h = source ? check(e.c(), Expr::binary(Tag::Lolli, source, m.dom)) : infer(e.c());
  Expr wh = whnf(h.type);
  if (!wh.is(Tag::Lolli))
    fail(ErrorKind::Mismatch, "eqIn expects a linear map into the domain", "C -o A", show(h.type));
  expect_equal(m.dom, wh.b());
  std::size_t mark = ctx_.size();
  Expr z = ctx_.push("z", wh.a(), true);
  Expr hz = Expr::app(FunKind::Lin, h.term, z);
  Expr lhs = Expr::app(FunKind::Lin, m.f, hz);
  Expr rhs = Expr::app(FunKind::Lin, m.g, hz);
  Equality eq = k_.def_eq(ctx_, lhs, rhs, m.cod);
  ctx_.truncate(mark);
  if (eq != Equality::Equal)
    fail(ErrorKind::UnknownEquality,
         eq == Equality::Unknown ? "eqIn premise undecided within the step bound"
                                 : "cannot show that both maps agree after the given map",
         show(lhs), show(rhs));
  return {Expr::ternary(Tag::EqIn, m.f, m.g, h.term),
          Expr::binary(Tag::Lolli, wh.a(), Expr::binary(Tag::Eq, m.f, m.g)), h.usage};
}

Typed Elab::let2(const Expr& e, const Expr& want) {
  Typed p = infer(e.a());
  Expr w = whnf(p.type);
  std::size_t mark = ctx_.size();
  if (w.is(Tag::Tensor) || w.is(Tag::Lsig)) {
    bool tensor = w.is(Tag::Tensor);
    Expr x = ctx_.push(e.name(), w.a(), tensor);
    Expr y = ctx_.push(e.name2(), tensor ? w.b() : instantiate1(w.b(), x), true);
    Expr body = instantiate(e.b(), {x, y});
    Typed b = want ? check(body, want) : infer(body);
    Usage u = discharge(b.usage, y);
    if (tensor) u = discharge(u, x);
    ctx_.truncate(mark);
    if (!want && occurs_fvar(b.type, x.id()))
      fail(ErrorKind::Mismatch, "the type of the body mentions '" + x.name() + "'; annotate it");
    return {Expr::let2(tensor ? PairKind::Tensor : PairKind::Lsig, e.name(), e.name2(), p.term,
                       abstract_fvars(b.term, {x.id(), y.id()})),
            want ? want : b.type, join(p.usage, u)};
  }
  fail(ErrorKind::Mismatch, "let-pair expects a tensor or Lsig", "A (x) B", show(w));
}

Typed Elab::let_unit(const Expr& e, const Expr& want) {
  Typed u = check(e.a(), Expr::leaf(Tag::TUnit));
  Typed b = want ? check(e.b(), want) : infer(e.b());
  return {Expr::let_unit(u.term, b.term), want ? want : b.type, join(u.usage, b.usage)};
}

Typed Elab::let_ell(const Expr& e, const Expr& want) {
  Typed t = infer(e.a());
  Expr w = whnf(t.type);
  if (!w.is(Tag::L)) fail(ErrorKind::Mismatch, "let ell expects L A", "L A", show(w));
  Expr x = ctx_.push(e.name(), w.a(), false);
  Expr body = instantiate1(e.b(), x);
  Typed b = want ? check(body, want) : infer(body);
  ctx_.pop();
  if (!want && occurs_fvar(b.type, x.id()))
    fail(ErrorKind::Mismatch, "the type of the body mentions '" + x.name() + "'; annotate it");
  return {Expr::let_ell(e.name(), t.term, abstract_fvar(b.term, x.id())), want ? want : b.type,
          join(t.usage, b.usage)};
}

Typed Elab::check(const Expr& e, const Expr& t) {
  LocGuard g(loc_, e);
  switch (e.tag()) {
    case Tag::Lam: {
      Expr w = whnf(t);
      if (w.is(Tag::Pi) || w.is(Tag::Lpi) || w.is(Tag::Lolli)) {
        bool lin = w.is(Tag::Lolli);
        Expr a = w.a();
        if (e.a()) {
          auto [d, s] = type(e.a());
          (void)s;
          Equality eq = k_.def_eq(ctx_, d, a);
          if (eq != Equality::Equal)
            fail(ErrorKind::Mismatch, "binder type does not match", show(a), show(d));
        }
        Expr x = ctx_.push(e.name(), a, lin);
        Expr cod = lin ? w.b() : instantiate1(w.b(), x);
        Typed b = check(instantiate1(e.b(), x), cod);
        Usage u = lin ? discharge(b.usage, x) : b.usage;
        ctx_.pop();
        if (w.is(Tag::Pi)) require_empty(u, "is used inside a cartesian function");
        return {Expr::lam(lin ? FunKind::Lin : FunKind::Cart, e.name(), a,
                          abstract_fvar(b.term, x.id())),
                t, u};
      }
      if (!e.a())
        fail(ErrorKind::Mismatch, "a function cannot have this type", "function type", show(w));
      break;
    }
    case Tag::Pair: {
      Expr w = whnf(t);
      if (w.is(Tag::Sig)) {
        Typed a = check(e.a(), w.a());
        Typed b = check(e.b(), instantiate1(w.b(), a.term));
        require_empty(join(a.usage, b.usage), "is used inside a cartesian pair");
        return {Expr::pair(PairKind::Sigma, a.term, b.term), t, {}};
      }
      if (w.is(Tag::Tensor)) {
        Typed a = check(e.a(), w.a());
        Typed b = check(e.b(), w.b());
        return {Expr::pair(PairKind::Tensor, a.term, b.term), t, join(a.usage, b.usage)};
      }
      if (w.is(Tag::Lsig)) {
        Typed a = check(e.a(), w.a());
        require_empty(a.usage, "is used in the cartesian component of a pair");
        Typed b = check(e.b(), instantiate1(w.b(), a.term));
        return {Expr::pair(PairKind::Lsig, a.term, b.term), t, b.usage};
      }
      fail(ErrorKind::Mismatch, "a pair cannot have this type", "product type", show(w));
    }
    case Tag::Let2: return let2(e, t);
    case Tag::EqIn: {
      Expr w = whnf(t);
      if (!w.is(Tag::Lolli)) break;
      Typed r = eq_intro(e, w.a());
      expect_equal(t, r.type);
      return {r.term, t, r.usage};
    }
    case Tag::LetUnit: return let_unit(e, t);
    case Tag::LetL: return let_ell(e, t);
    case Tag::Refl: {
      Expr w = whnf(t);
      if (!w.is(Tag::Id)) fail(ErrorKind::Mismatch, "refl proves identity types", "Id A a b", show(w));
      Equality eq = k_.def_eq(ctx_, w.b(), w.c(), w.a());
      if (eq != Equality::Equal)
        fail(ErrorKind::UnknownEquality,
             eq == Equality::Unknown ? "equation undecided within the step bound"
                                     : "cannot derive the equation",
             show(w.b()), show(w.c()));
      return {e, t, {}};
    }
    case Tag::M: {
      Expr w = whnf(t);
      if (!w.is(Tag::M)) break;
      Typed a = check(e.a(), w.a());
      require_empty(a.usage, "is used under M, which needs an empty linear context");
      return {e.rebuild(a.term), t, {}};
    }
    case Tag::Ell: {
      Expr w = whnf(t);
      if (!w.is(Tag::L)) break;
      Typed a = check(e.a(), w.a());
      require_empty(a.usage, "is used under ell");
      return {e.rebuild(a.term), t, {}};
    }
    default:
      break;
  }
  Typed r = infer(e);
  LocGuard g2(loc_, e);
  expect_equal(t, r.type);
  return {r.term, t, r.usage};
}

}  // namespace

// ---------------------------------------------------------------------------

std::pair<Expr, Sort> Kernel::check_type(Ctx& ctx, const Expr& type) const {
  Elab e(*this, ctx);
  return e.type(type);
}

Typed Kernel::infer(Ctx& ctx, const Expr& term) const {
  Elab e(*this, ctx);
  return e.infer(term);
}

Typed Kernel::check(Ctx& ctx, const Expr& term, const Expr& type) const {
  Elab e(*this, ctx);
  return e.check(term, type);
}

Expr Kernel::whnf(const Expr& e) const {
  detail::Normalizer n(env_, opts_.fuel);
  try {
    return n.whnf(e);
  } catch (const detail::OutOfFuel&) {
    return e;
  }
}

Sort Kernel::sort_of(const Expr& type) const {
  Expr w = whnf(type);
  switch (w.tag()) {
    case Tag::Lpi: case Tag::Lsig: case Tag::Lolli: case Tag::Tensor: case Tag::TUnit:
    case Tag::L: case Tag::Eq: case Tag::ElL:
      return Sort::Lin;
    case Tag::Global: {
      const GlobalDef* d = env_.find(w.name());
      return d && d->is_type() ? d->type_sort() : Sort::Cart;
    }
    case Tag::App: {
      std::vector<Expr> args;
      Expr h = spine(w, args);
      const GlobalDef* d = h.is(Tag::Global) ? env_.find(h.name()) : nullptr;
      return d && d->is_type() ? d->type_sort() : Sort::Cart;
    }
    default:
      return Sort::Cart;
  }
}

EqualityInfo Kernel::def_eq_info(const Ctx& ctx, const Expr& a, const Expr& b,
                                 const Expr& type) const {
  EqualityInfo info;
  detail::Normalizer n(env_, opts_.fuel);
  try {
    n.add_context(ctx);
    info.result = n.equal(a, b, type) ? Equality::Equal : Equality::NotEqual;
  } catch (const detail::OutOfFuel&) {
    info.result = Equality::Unknown;
  }
  info.used_hypotheses = n.used_hypotheses();
  info.steps = n.steps();
  return info;
}

std::optional<Expr> Kernel::normalize(const Ctx& ctx, const Expr& e, bool unfold_globals) const {
  detail::Normalizer n(env_, opts_.fuel, unfold_globals);
  try {
    n.add_context(ctx);
    return n.nf(e);
  } catch (const detail::OutOfFuel&) {
    return std::nullopt;
  }
}

UniverseFacts Kernel::check_universe(Ctx& ctx, const Expr& code) const {
  Typed c = check(ctx, code, Expr::leaf(Tag::U));
  if (!c.usage.empty())
    throw TypeError(ErrorKind::LinearUsage, "a code cannot use linear variables", code.loc());
  UniverseFacts f;
  f.code = c.term;
  auto elc = normalize(ctx, Expr::unary(Tag::ElC, c.term));
  auto ell = normalize(ctx, Expr::unary(Tag::ElL, c.term));
  f.el_cartesian = elc ? *elc : Expr::unary(Tag::ElC, c.term);
  f.el_linear = ell ? *ell : Expr::unary(Tag::ElL, c.term);
  return f;
}

Typed Kernel::derive_funext(Ctx& ctx, const Expr& f, const Expr& g) const {
  Typed tf = infer(ctx, f);
  Typed tg = infer(ctx, g);
  if (!tf.usage.empty() || !tg.usage.empty())
    throw TypeError(ErrorKind::LinearUsage, "function extensionality needs closed functions",
                    f.loc());
  Expr w = whnf(tf.type);
  if (!(w.is(Tag::Lpi) || w.is(Tag::Lolli)))
    throw TypeError(ErrorKind::Mismatch, "function extensionality needs linear functions",
                    f.loc(), "Lpi (x : A), B", print_expr(tf.type));
  Equality eq = def_eq(ctx, tf.type, tg.type);
  if (eq != Equality::Equal)
    throw TypeError(ErrorKind::Mismatch, "functions of different types", f.loc(),
                    print_expr(tf.type), print_expr(tg.type));
  Expr goal = Expr::ternary(Tag::Id, Expr::unary(Tag::M, tf.type), Expr::unary(Tag::M, tf.term),
                            Expr::unary(Tag::M, tg.term));
  return check(ctx, Expr::leaf(Tag::Refl), goal);
}

Expr Kernel::open_telescope(Ctx& ctx, const Expr& type, std::size_t max) const {
  Expr t = type;
  for (std::size_t i = 0; i < max; ++i) {
    Expr w = whnf(t);
    if (w.is(Tag::Pi) || w.is(Tag::Lpi)) {
      Expr x = ctx.push(w.name(), w.a(), false);
      t = instantiate1(w.b(), x);
    } else if (w.is(Tag::Lolli)) {
      ctx.push("x" + std::to_string(ctx.size()), w.a(), true);
      t = w.b();
    } else {
      break;
    }
  }
  return t;
}

// ---------------------------------------------------------------------------

namespace {

GlobalDef check_decl(const Kernel& k, const Decl& d) {
  if (k.env().find(d.name))
    throw TypeError(ErrorKind::ScopeError, "duplicate declaration '" + d.name + "'", d.loc);
  Ctx ctx;
  GlobalDef g;
  g.name = d.name;
  g.kind = d.kind;
  g.sort = d.sort;
  g.loc = d.loc;
  if (d.sort != DeclSort::Term) {
    std::vector<Expr> xs;
    std::vector<std::int64_t> ids;
    for (const auto& p : d.params) {
      auto [t, s] = k.check_type(ctx, instantiate(p.type, xs));
      if (s != Sort::Cart)
        throw TypeError(ErrorKind::Mismatch, "parameter '" + p.name + "' needs a cartesian type",
                        p.type.loc(), "cartesian type", print_expr(t));
      g.params.push_back({p.name, abstract_fvars(t, ids)});
      Expr x = ctx.push(p.name, t, false);
      xs.push_back(x);
      ids.push_back(x.id());
    }
    auto [body, s] = k.check_type(ctx, instantiate(d.body, xs));
    Sort want = d.sort == DeclSort::Type ? Sort::Cart : Sort::Lin;
    if (s != want)
      throw TypeError(ErrorKind::Mismatch,
                      std::string("declared ") + (want == Sort::Cart ? "Type" : "Linear") +
                          " but the body is a " + (s == Sort::Cart ? "cartesian" : "linear") +
                          " type",
                      d.body.loc());
    g.body = abstract_fvars(body, ids);
    return g;
  }
  auto [t, s] = k.check_type(ctx, d.type);
  Sort want = d.kind == DeclKind::Def ? Sort::Cart : Sort::Lin;
  if (s != want)
    throw TypeError(ErrorKind::Mismatch,
                    d.kind == DeclKind::Def
                        ? "def needs a cartesian type; linear terms are declared with lin"
                        : "lin needs a linear type; cartesian terms are declared with def",
                    d.type.loc(), want == Sort::Cart ? "cartesian type" : "linear type",
                    print_expr(t));
  Typed b = k.check(ctx, d.body, t);
  g.type = t;
  g.body = b.term;
  auto nt = k.normalize(ctx, t, false);
  g.normalized_type = nt ? *nt : t;
  return g;
}

}  // namespace

ProgramReport extend_program(const Env& base, const std::vector<Decl>& decls,
                             KernelOptions options) {
  ProgramReport rep;
  rep.env = base;
  for (const auto& d : decls) {
    Kernel k(rep.env, options);
    try {
      GlobalDef g = check_decl(k, d);
      DeclReport r;
      r.name = d.name;
      r.accepted = true;
      r.normalized_type = g.is_type() ? (g.sort == DeclSort::Type ? "Type" : "Linear")
                                      : print_expr(g.normalized_type);
      rep.env.add(std::move(g));
      rep.decls.push_back(std::move(r));
    } catch (TypeError& e) {
      e.decl = d.name;
      DeclReport r;
      r.name = d.name;
      r.error = e;
      rep.decls.push_back(r);
      rep.error = e;
      break;
    }
  }
  return rep;
}

ProgramReport check_program_report(const std::vector<Decl>& decls, KernelOptions options) {
  return extend_program(Env{}, decls, options);
}

Env check_program(const std::vector<Decl>& decls, KernelOptions options) {
  ProgramReport rep = check_program_report(decls, options);
  if (rep.error) throw *rep.error;
  return rep.env;
}

}  // namespace lcr
