#include <algorithm>
#include <set>

#include "normalizer.hpp"

namespace lcr::detail {

namespace {

bool is_eq_value(const Expr& e) { return e.is(Tag::App) && e.a().is(Tag::EqIn); }

void meta_ids(const Expr& e, std::set<std::int64_t>& out) {
  if (!e || !e.has_meta()) return;
  if (e.is(Tag::Meta)) {
    out.insert(e.id());
    return;
  }
  meta_ids(e.a(), out);
  meta_ids(e.b(), out);
  meta_ids(e.c(), out);
}

bool subset(const std::set<std::int64_t>& a, const std::set<std::int64_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Expr to_linear(const Expr& e) { return e.is(Tag::M) ? e.a() : Expr::unary(Tag::Mu, e); }

}  // namespace

bool match(const Expr& p, const Expr& t, std::vector<Expr>& s) {
  if (!p || !t) return !p && !t;
  if (p.is(Tag::Meta)) {
    if (t.loose_range() > 0) return false;
    Expr& slot = s.at(static_cast<std::size_t>(p.id()));
    if (!slot) {
      slot = t;
      return true;
    }
    return alpha_eq(slot, t);
  }
  if (!p.has_meta()) return alpha_eq(p, t);
  // `mu ?x` also matches a linear term t, with ?x := M t (M-eta read backwards)
  if (p.is(Tag::Mu) && p.a().is(Tag::Meta) && !t.is(Tag::Mu)) {
    if (t.loose_range() > 0) return false;
    Expr& slot = s.at(static_cast<std::size_t>(p.a().id()));
    if (!slot) {
      slot = Expr::unary(Tag::M, t);
      return true;
    }
    return slot.is(Tag::M) && alpha_eq(slot.a(), t);
  }
  if (p.tag() != t.tag()) return false;
  if (p.is(Tag::Lam)) return match(p.b(), t.b(), s);
  return match(p.a(), t.a(), s) && match(p.b(), t.b(), s) && match(p.c(), t.c(), s);
}

void Normalizer::tick() {
  if (++steps_ > fuel_) throw OutOfFuel{};
}

void Normalizer::add_context(const Ctx& ctx) {
  for (const auto& e : ctx.entries()) {
    locals_.push_back({e.var, e.type});
    if (!e.var.linear() && e.type) register_hypothesis(e.type, e.var.name());
  }
}

Expr Normalizer::whnf(Expr e) {
  for (;;) {
    switch (e.tag()) {
      case Tag::App: {
        Expr f = whnf(e.a());
        if (f.is(Tag::Lam)) {
          tick();
          e = instantiate1(f.b(), e.b());
          continue;
        }
        if (f.is(Tag::LetUnit)) {
          tick();
          e = Expr::let_unit(f.a(), Expr::app(e.fun_kind(), f.b(), e.b()));
          continue;
        }
        if (f.is(Tag::EqOut)) {
          Expr a = whnf(e.b());
          if (is_eq_value(a)) {
            tick();
            e = Expr::app(a.fun_kind(), a.a().c(), a.b());
            continue;
          }
          if (a.is(Tag::LetUnit)) {
            tick();
            e = Expr::let_unit(a.a(), Expr::app(e.fun_kind(), f, a.b()));
            continue;
          }
          return e.rebuild(f, a);
        }
        Expr r = e.rebuild(f, e.b());
        if (unfold_) {
          std::vector<Expr> args;
          Expr h = spine(r, args);
          if (h.is(Tag::Global)) {
            const GlobalDef* d = env_.find(h.name());
            if (d && d->is_type() && !d->params.empty() && d->params.size() == args.size()) {
              tick();
              e = instantiate(d->body, args);
              continue;
            }
          }
        }
        return r;
      }
      case Tag::Global: {
        if (!unfold_) return e;
        const GlobalDef* d = env_.find(e.name());
        if (!d || !d->params.empty() || !d->body) return e;
        tick();
        e = d->body;
        continue;
      }
      case Tag::Fst:
      case Tag::Snd: {
        Expr p = whnf(e.a());
        if (p.is(Tag::Pair)) {
          tick();
          e = e.is(Tag::Fst) ? p.a() : p.b();
          continue;
        }
        return e.rebuild(p);
      }
      case Tag::Let2: {
        Expr p = whnf(e.a());
        if (p.is(Tag::Pair)) {
          tick();
          e = instantiate(e.b(), {p.a(), p.b()});
          continue;
        }
        if (p.is(Tag::LetUnit)) {
          tick();
          e = Expr::let_unit(p.a(), e.rebuild(p.b(), e.b()));
          continue;
        }
        return e.rebuild(p, e.b());
      }
      case Tag::LetUnit: {
        Expr u = whnf(e.a());
        if (u.is(Tag::Star)) {
          tick();
          e = e.b();
          continue;
        }
        if (u.is(Tag::LetUnit)) {
          tick();
          e = Expr::let_unit(u.a(), Expr::let_unit(u.b(), e.b()));
          continue;
        }
        return e.rebuild(u, e.b());
      }
      case Tag::LetL: {
        Expr t = whnf(e.a());
        if (t.is(Tag::Ell)) {
          tick();
          e = instantiate1(e.b(), t.a());
          continue;
        }
        if (t.is(Tag::LetUnit)) {
          tick();
          e = Expr::let_unit(t.a(), e.rebuild(t.b(), e.b()));
          continue;
        }
        // a scrutinee without linear variables is a closed element of L A
        if (t.loose_range() == 0 && !t.has_meta() && !mentions_linear_fvar(t)) {
          tick();
          e = instantiate1(e.b(), Expr::unary(Tag::Lower, t));
          continue;
        }
        return e.rebuild(t, e.b());
      }
      case Tag::Lower: {
        Expr t = whnf(e.a());
        if (t.is(Tag::Ell)) {
          tick();
          e = t.a();
          continue;
        }
        return e.rebuild(t);
      }
      case Tag::Mu: {
        Expr a = whnf(e.a());
        if (a.is(Tag::M)) {
          tick();
          e = a.a();
          continue;
        }
        return e.rebuild(a);
      }
      case Tag::ElC: {
        Expr c = whnf(e.a());
        if (c.is(Tag::CodePi)) {
          tick();
          e = Expr::binder(Tag::Pi, c.name(), c.a(), Expr::unary(Tag::ElC, c.b()));
          continue;
        }
        return e.rebuild(c);
      }
      case Tag::ElL: {
        Expr c = whnf(e.a());
        Expr next;
        switch (c.tag()) {
          case Tag::CodeLpi:
            next = Expr::binder(Tag::Lpi, c.name(), c.a(), Expr::unary(Tag::ElL, c.b()));
            break;
          case Tag::CodeLolli:
            next = Expr::binary(Tag::Lolli, Expr::unary(Tag::ElL, c.a()),
                                Expr::unary(Tag::ElL, c.b()));
            break;
          case Tag::CodeBang:
            next = Expr::unary(Tag::L, Expr::unary(Tag::M, Expr::unary(Tag::ElL, c.a())));
            break;
          case Tag::CodeEq: next = Expr::binary(Tag::Eq, c.a(), c.b()); break;
          case Tag::CodeTUnit: next = Expr::leaf(Tag::TUnit); break;
          default: return e.rebuild(c);
        }
        tick();
        e = next;
        continue;
      }
      case Tag::Ann:
        e = e.a();
        continue;
      default:
        return e;
    }
  }
}

Expr Normalizer::open(const std::string& name, const Expr& dom, bool linear) {
  Expr x = Expr::fvar(fresh_id(), name, linear);
  locals_.push_back({x, dom});
  if (!linear && dom) register_hypothesis(dom, name);
  return x;
}

Expr Normalizer::nf_under(const std::string& name, const Expr& dom, bool linear,
                          const Expr& body) {
  std::size_t nl = locals_.size(), ns = schemas_.size();
  Expr x = open(name, dom, linear);
  Expr b = nf(instantiate1(body, x));
  locals_.resize(nl);
  schemas_.resize(ns);
  return abstract_fvar(b, x.id());
}

Expr Normalizer::nf(const Expr& e0) {
  Expr e = whnf(e0);
  Expr r;
  switch (e.tag()) {
    case Tag::Pi: case Tag::Sig: case Tag::Lpi: case Tag::Lsig: case Tag::CodePi:
    case Tag::CodeLpi: {
      Expr dom = nf(e.a());
      r = e.rebuild(dom, nf_under(e.name(), dom, false, e.b()));
      break;
    }
    case Tag::Lam:
      r = e.rebuild(e.a(), nf_under(e.name(), e.a(), e.fun_kind() == FunKind::Lin, e.b()));
      break;
    case Tag::LetL: {
      Expr s = nf(e.a());
      r = e.rebuild(s, nf_under(e.name(), {}, false, e.b()));
      break;
    }
    case Tag::Let2: {
      Expr s = nf(e.a());
      std::size_t nl = locals_.size();
      Expr x = open(e.name(), {}, e.pair_kind() != PairKind::Lsig);
      Expr y = open(e.name2(), {}, true);
      Expr b = nf(instantiate(e.b(), {x, y}));
      locals_.resize(nl);
      r = e.rebuild(s, abstract_fvars(b, {x.id(), y.id()}));
      break;
    }
    default: {
      Expr a = e.a() ? nf(e.a()) : Expr{};
      Expr b = e.b() ? nf(e.b()) : Expr{};
      Expr c = e.c() ? nf(e.c()) : Expr{};
      r = e.rebuild(a, b, c);
      break;
    }
  }
  return post(r);
}

Expr Normalizer::post(Expr r) {
  for (;;) {
    if (r.is(Tag::Lam)) {
      const Expr& b = r.b();
      if (b.is(Tag::App) && b.b().is(Tag::BVar) && b.b().index() == 0 &&
          !has_loose_bvar(b.a(), 0)) {
        tick();
        r = instantiate1(b.a(), Expr::leaf(Tag::Star));
        continue;
      }
    }
    if (r.is(Tag::Ell) && r.a().is(Tag::Lower)) {
      tick();
      r = r.a().a();
      continue;
    }
    if (r.is(Tag::M) && r.a().is(Tag::Mu)) {
      tick();
      r = r.a().a();
      continue;
    }
    if (r.is(Tag::App) && r.b().is(Tag::LetUnit)) {
      tick();
      const Expr inner = r.b();
      return nf(Expr::let_unit(inner.a(), r.rebuild(r.a(), inner.b())));
    }
    Expr w = whnf(r);
    if (!w.same_node(r)) return nf(w);
    for (std::size_t i = 0; i < schemas_.size(); ++i) {
      if (!schemas_[i].oriented) continue;
      std::vector<Expr> s(schemas_[i].meta_types.size());
      if (!match(schemas_[i].lhs, r, s)) continue;
      if (std::any_of(s.begin(), s.end(), [](const Expr& x) { return !x; })) continue;
      tick();
      used_ = true;
      Expr next = instantiate_metas(schemas_[i].rhs, s);
      return nf(next);
    }
    return r;
  }
}

void Normalizer::register_hypothesis(const Expr& type, const std::string& origin) {
  std::vector<Expr> meta_types;
  Expr t = whnf(type);
  while (t.is(Tag::Pi)) {
    Expr m = Expr::meta(static_cast<std::int64_t>(meta_types.size()), t.name());
    meta_types.push_back(t.a());
    t = whnf(instantiate1(t.b(), m));
  }
  if (!t.is(Tag::Id)) return;
  Expr lhs = nf(t.b());
  Expr rhs = nf(t.c());
  // equations between functions are used pointwise
  auto add = [&](Expr l, Expr r) {
    std::vector<Expr> mt = meta_types;
    while (l.is(Tag::Lam) && r.is(Tag::Lam)) {
      Expr m = Expr::meta(static_cast<std::int64_t>(mt.size()), l.name());
      mt.push_back(l.a());
      l = instantiate1(l.b(), m);
      r = instantiate1(r.b(), m);
    }
    add_schema(l, r, mt, origin);
  };
  add(lhs, rhs);
  if (whnf(t.a()).is(Tag::M)) add(nf(to_linear(lhs)), nf(to_linear(rhs)));
}

void Normalizer::add_schema(Expr lhs, Expr rhs, const std::vector<Expr>& meta_types,
                            const std::string& origin) {
  if (alpha_eq(lhs, rhs)) return;
  std::set<std::int64_t> vl, vr;
  meta_ids(lhs, vl);
  meta_ids(rhs, vr);
  Schema sc;
  sc.meta_types = meta_types;
  sc.origin = origin;
  if (subset(vr, vl) && rhs.size() <= lhs.size() && !lhs.is(Tag::Meta)) {
    // ground ties rewrite towards the smaller rendering
    if (vl.empty() && rhs.size() == lhs.size() && print_expr(lhs) < print_expr(rhs))
      std::swap(lhs, rhs);
    sc.oriented = true;
  } else if (subset(vl, vr) && lhs.size() <= rhs.size() && !rhs.is(Tag::Meta)) {
    std::swap(lhs, rhs);
    sc.oriented = true;
  }
  sc.lhs = std::move(lhs);
  sc.rhs = std::move(rhs);
  schemas_.push_back(std::move(sc));
}

bool Normalizer::equal(const Expr& s, const Expr& t, const Expr& type) {
  if (alpha_eq(s, t)) return true;
  if (type) {
    Expr ty = whnf(type);
    if (ty.is(Tag::Pi) || ty.is(Tag::Lpi) || ty.is(Tag::Lolli)) {
      bool lin = ty.is(Tag::Lolli);
      std::size_t nl = locals_.size(), ns = schemas_.size();
      Expr x = open(lin ? "x" : ty.name(), ty.a(), lin);
      FunKind k = lin ? FunKind::Lin : FunKind::Cart;
      Expr cod = lin ? ty.b() : instantiate1(ty.b(), x);
      bool r = equal(Expr::app(k, s, x), Expr::app(k, t, x), cod);
      locals_.resize(nl);
      schemas_.resize(ns);
      return r;
    }
    if (ty.is(Tag::M)) {
      Expr a = nf(s), b = nf(t);
      if (compare(a, b)) return true;
      // M-inj: M a = M a' reduces to a = a'
      Expr la = a.is(Tag::M) ? a.a() : nf(Expr::unary(Tag::Mu, a));
      Expr lb = b.is(Tag::M) ? b.a() : nf(Expr::unary(Tag::Mu, b));
      return equal(la, lb, ty.a());
    }
  }
  return compare(nf(s), nf(t));
}

bool Normalizer::compare(const Expr& s, const Expr& t) {
  if (alpha_eq(s, t)) return true;
  if (s.is(Tag::Lam) || t.is(Tag::Lam)) {
    const Expr& lam = s.is(Tag::Lam) ? s : t;
    std::size_t nl = locals_.size(), ns = schemas_.size();
    Expr x = open(lam.name(), lam.a(), lam.fun_kind() == FunKind::Lin);
    bool fresh = schemas_.size() > ns;
    auto side = [&](const Expr& e) {
      if (e.is(Tag::Lam)) {
        Expr b = instantiate1(e.b(), x);
        return fresh ? nf(b) : b;
      }
      return nf(Expr::app(lam.fun_kind(), e, x));
    };
    Expr sb = side(s);
    Expr tb = side(t);
    bool r = compare(sb, tb);
    locals_.resize(nl);
    schemas_.resize(ns);
    return r;
  }
  if (s.is(Tag::M) != t.is(Tag::M)) {
    // M-eta: a non-M side n stands for M (mu n)
    const Expr& m = s.is(Tag::M) ? s : t;
    const Expr& n = s.is(Tag::M) ? t : s;
    if (compare(m.a(), nf(Expr::unary(Tag::Mu, n)))) return true;
  } else if (s.tag() == t.tag() && compare_children(s, t)) {
    return true;
  }
  if (is_eq_value(s) || is_eq_value(t)) {
    const Expr& v = is_eq_value(s) ? s : t;
    Expr out = Expr::binary(Tag::EqOut, v.a().a(), v.a().b());
    Expr si = nf(Expr::app(FunKind::Lin, out, s));
    Expr ti = nf(Expr::app(FunKind::Lin, out, t));
    if (compare(si, ti)) return true;
  }
  return joint(s, t);
}

bool Normalizer::compare_open(const Expr& sb, const Expr& tb, const std::vector<Expr>& xs,
                              std::size_t schemas_before) {
  bool fresh = schemas_.size() > schemas_before;
  Expr a = instantiate(sb, xs);
  Expr b = instantiate(tb, xs);
  if (fresh) {
    a = nf(a);
    b = nf(b);
  }
  return compare(a, b);
}

bool Normalizer::compare_children(const Expr& s, const Expr& t) {
  switch (s.tag()) {
    case Tag::BVar: return s.index() == t.index();
    case Tag::FVar:
    case Tag::Meta: return s.id() == t.id();
    case Tag::Global: return s.name() == t.name();
    case Tag::Pi: case Tag::Sig: case Tag::Lpi: case Tag::Lsig: case Tag::CodePi:
    case Tag::CodeLpi: {
      if (!compare(s.a(), t.a())) return false;
      std::size_t nl = locals_.size(), ns = schemas_.size();
      Expr x = open(s.name(), s.a(), false);
      bool r = compare_open(s.b(), t.b(), {x}, ns);
      locals_.resize(nl);
      schemas_.resize(ns);
      return r;
    }
    case Tag::LetL: {
      if (!compare(s.a(), t.a())) return false;
      std::size_t nl = locals_.size();
      Expr x = open(s.name(), {}, false);
      bool r = compare_open(s.b(), t.b(), {x}, schemas_.size());
      locals_.resize(nl);
      return r;
    }
    case Tag::Let2: {
      if (!compare(s.a(), t.a())) return false;
      std::size_t nl = locals_.size();
      Expr x = open(s.name(), {}, s.pair_kind() != PairKind::Lsig);
      Expr y = open(s.name2(), {}, true);
      bool r = compare_open(s.b(), t.b(), {x, y}, schemas_.size());
      locals_.resize(nl);
      return r;
    }
    default:
      for (int i = 0; i < 3; ++i) {
        const Expr& a = i == 0 ? s.a() : i == 1 ? s.b() : s.c();
        const Expr& b = i == 0 ? t.a() : i == 1 ? t.b() : t.c();
        if (!a && !b) continue;
        if (!a || !b || !compare(a, b)) return false;
      }
      return true;
  }
}

void Normalizer::collect_iotas(const Expr& e, std::vector<Expr>& out) const {
  if (!e) return;
  if (e.is(Tag::App) && e.a().is(Tag::EqOut) && e.loose_range() == 0 && !is_eq_value(e.b())) {
    if (std::none_of(out.begin(), out.end(), [&](const Expr& o) { return alpha_eq(o, e); }))
      out.push_back(e);
  }
  collect_iotas(e.a(), out);
  collect_iotas(e.b(), out);
  collect_iotas(e.c(), out);
}

Schema Normalizer::beta1_schema(const Expr& iota) {
  for (const auto& [key, sc] : beta1_cache_)
    if (alpha_eq(key, iota)) return sc;
  Expr l = nf(Expr::app(FunKind::Lin, iota.a().a(), iota));
  Expr r = nf(Expr::app(FunKind::Lin, iota.a().b(), iota));
  Schema sc;
  sc.origin = "eq-beta1";
  while (l.is(Tag::Lam) && r.is(Tag::Lam)) {
    Expr m = Expr::meta(static_cast<std::int64_t>(sc.meta_types.size()), l.name());
    sc.meta_types.push_back(l.a());
    l = instantiate1(l.b(), m);
    r = instantiate1(r.b(), m);
  }
  sc.lhs = l;
  sc.rhs = r;
  beta1_cache_.emplace_back(iota, sc);
  return sc;
}

bool Normalizer::try_schema(const Schema& sc, const Expr& s, const Expr& t) {
  for (int dir = 0; dir < 2; ++dir) {
    std::vector<Expr> sig(sc.meta_types.size());
    const Expr& a = dir == 0 ? s : t;
    const Expr& b = dir == 0 ? t : s;
    if (!match(sc.lhs, a, sig) || !match(sc.rhs, b, sig)) continue;
    bool ok = true;
    // pattern variables absent from both sides must be witnessed by a
    // context variable of the instantiated type
    for (std::size_t k = 0; k < sig.size() && ok; ++k) {
      if (sig[k]) continue;
      Expr ty = instantiate_metas(sc.meta_types[k], sig);
      if (!ty || ty.has_meta() || ty.loose_range() > 0) {
        ok = false;
        break;
      }
      ty = nf(ty);
      bool found = false;
      for (std::size_t i = locals_.size(); i-- > 0 && !found;) {
        Local l = locals_[i];
        if (l.var.linear() || !l.type) continue;
        if (compare(nf(l.type), ty)) {
          sig[k] = l.var;
          found = true;
        }
      }
      ok = found;
    }
    if (ok) {
      used_ = true;
      return true;
    }
  }
  return false;
}

bool Normalizer::joint(const Expr& s, const Expr& t) {
  tick();
  std::size_t n = schemas_.size();
  for (std::size_t i = 0; i < n && i < schemas_.size(); ++i) {
    if (schemas_[i].oriented) continue;
    Schema sc = schemas_[i];
    if (try_schema(sc, s, t)) return true;
  }
  std::vector<Expr> iotas;
  collect_iotas(s, iotas);
  collect_iotas(t, iotas);
  for (const auto& iota : iotas)
    if (try_schema(beta1_schema(iota), s, t)) return true;
  return false;
}

}  // namespace lcr::detail
