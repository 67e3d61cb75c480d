#include "lcr/extraction.hpp"

namespace lcr {

namespace {

Comb cmb(Combinator c) { return Comb::comb(c); }

std::string var_name(const Expr& x) { return "v" + std::to_string(x.id()); }

// Open bodies are reduced before abstraction; lambda* x. t and
// lambda* x. t' track the same map when t reduces to t'.
Comb simplify(const Comb& t) {
  ReductionResult r = reduce(t, kDefaultFuel);
  return r.status == ReductionStatus::NormalForm ? r.term : t;
}

struct Sample {
  Join verdict = Join::Yes;
  std::string rendering;
};

SuiteReport aggregate(const std::vector<Sample>& results) {
  SuiteReport report;
  report.name = "extraction-soundness";
  report.samples = results.size();
  for (const auto& r : results) {
    switch (r.verdict) {
      case Join::Yes: ++report.passed; break;
      case Join::Unknown: ++report.unknown; break;
      case Join::No:
        ++report.failed;
        if (!report.witness) report.witness = r.rendering;
        break;
    }
  }
  return report;
}

}  // namespace

Comb Extractor::term(const Expr& t, const RealizerEnv& renv) {
  RealizerEnv local = renv;
  return go(t, local);
}

Comb Extractor::decl(const std::string& name) {
  auto it = decls_.find(name);
  if (it != decls_.end()) return it->second;
  const GlobalDef* g = env_.find(name);
  Comb r = !g || g->is_type() ? cmb(Combinator::I) : term(g->body);
  decls_.emplace(name, r);
  return r;
}

// Opens one binder of `body` as a realizer variable.
Comb Extractor::bind(const Expr& body, RealizerEnv& renv, const std::string& hint, Comb* var_out,
                     Expr* fvar_out) {
  Expr x = Expr::fvar(fresh_id(), hint, false);
  Comb v = Comb::var(var_name(x));
  renv.vars[x.id()] = v;
  Comb r = go(instantiate1(body, x), renv);
  renv.vars.erase(x.id());
  if (var_out) *var_out = v;
  if (fvar_out) *fvar_out = x;
  return r;
}

Comb Extractor::go(const Expr& t, RealizerEnv& renv) {
  switch (t.tag()) {
    case Tag::FVar: {
      auto it = renv.vars.find(t.id());
      return it != renv.vars.end() ? it->second : Comb::var(var_name(t));
    }
    case Tag::Global: return decl(t.name());
    case Tag::Ann: return go(t.a(), renv);
    case Tag::Lam: {
      Comb v;
      Comb body = simplify(bind(t.b(), renv, t.name(), &v, nullptr));
      return t.fun_kind() == FunKind::Lin ? lam_linear(v.name(), body) : lam_bang(v.name(), body);
    }
    case Tag::App: {
      Comb f = go(t.a(), renv);
      Comb a = go(t.b(), renv);
      return t.fun_kind() == FunKind::Lin ? Comb::app(f, a) : app_bang(f, a);
    }
    case Tag::Pair: {
      Comb a = go(t.a(), renv);
      Comb b = go(t.b(), renv);
      if (t.pair_kind() != PairKind::Tensor) a = Comb::bang(a);
      if (t.pair_kind() == PairKind::Sigma) b = Comb::bang(b);
      Comb z = Comb::var("z" + std::to_string(fresh_id()));
      return lam_linear(z.name(), Comb::apps(z, {a, b}));
    }
    case Tag::Let2: {
      Comb p = go(t.a(), renv);
      Expr x = Expr::fvar(fresh_id(), t.name(), false);
      Expr y = Expr::fvar(fresh_id(), t.name2(), true);
      renv.vars[x.id()] = Comb::var(var_name(x));
      renv.vars[y.id()] = Comb::var(var_name(y));
      Comb body = simplify(go(instantiate(t.b(), {x, y}), renv));
      renv.vars.erase(x.id());
      renv.vars.erase(y.id());
      Comb inner = lam_linear(var_name(y), body);
      Comb k = t.pair_kind() == PairKind::Lsig ? lam_bang(var_name(x), inner)
                                               : lam_linear(var_name(x), inner);
      return Comb::app(p, k);
    }
    case Tag::Fst:
    case Tag::Snd: {
      Comb x = Comb::var("x" + std::to_string(fresh_id()));
      Comb y = Comb::var("y" + std::to_string(fresh_id()));
      Comb pick = lam_bang(x.name(), lam_bang(y.name(), t.is(Tag::Fst) ? x : y));
      return Comb::app(go(t.a(), renv), pick);
    }
    case Tag::LetUnit: return Comb::app(go(t.a(), renv), go(t.b(), renv));
    case Tag::M:
    case Tag::Mu: return go(t.a(), renv);
    case Tag::Ell: return Comb::bang(go(t.a(), renv));
    case Tag::Lower: return Comb::app(cmb(Combinator::D), go(t.a(), renv));
    case Tag::LetL: {
      Comb s = go(t.a(), renv);
      Comb v;
      Comb body = simplify(bind(t.b(), renv, t.name(), &v, nullptr));
      return Comb::app(lam_bang(v.name(), body), s);
    }
    case Tag::EqIn: return go(t.c(), renv);
    default:
      // unit and refl proofs, equalizer inclusions and codes
      return cmb(Combinator::I);
  }
}

Comb extract_term(const Env& env, const Expr& t, const RealizerEnv& renv) {
  Extractor x(env);
  return x.term(t, renv);
}

Comb extract_decl(const Env& env, const std::string& name) {
  Extractor x(env);
  return x.decl(name);
}

Comb generic_realizer(const Kernel& k, const Expr& type, const std::string& name) {
  Expr w = k.whnf(type);
  switch (w.tag()) {
    case Tag::M: return generic_realizer(k, w.a(), name);
    case Tag::L: return Comb::bang(generic_realizer(k, w.a(), name));
    case Tag::TUnit: case Tag::Unit: case Tag::Id: case Tag::U:
      return cmb(Combinator::I);
    default:
      return Comb::constant(name);
  }
}

RealizerEnv generic_env(const Kernel& k, const Ctx& ctx) {
  RealizerEnv renv;
  std::size_t i = 0;
  for (const auto& e : ctx.entries())
    renv.vars[e.var.id()] = generic_realizer(k, e.type, "g" + std::to_string(i++));
  return renv;
}

std::vector<SoundnessPair> soundness_pairs(const Env& env, KernelOptions options) {
  Kernel k(env, options);
  std::vector<SoundnessPair> out;
  for (const auto& name : env.order()) {
    const GlobalDef* g = env.find(name);
    if (g->is_type()) continue;
    out.push_back({name + ":delta", Ctx{}, Expr::global(name), g->body, g->type});
    if (auto n = k.normalize(Ctx{}, g->body); n && !alpha_eq(*n, g->body))
      out.push_back({name + ":nf", Ctx{}, g->body, *n, g->type});
    Ctx ctx;
    Expr rest = k.whnf(k.open_telescope(ctx, g->type));
    if (!rest.is(Tag::Id)) continue;
    EqualityInfo info = k.def_eq_info(ctx, rest.b(), rest.c(), rest.a());
    if (info.result == Equality::Equal && !info.used_hypotheses)
      out.push_back({name + ":id", ctx, rest.b(), rest.c(), rest.a()});
  }
  return out;
}

std::vector<std::pair<Comb, Comb>> saturate(const Kernel& k, Expr type, Comb a, Comb b) {
  for (int n = 0; n < 32 && type; ++n) {
    Expr w = k.whnf(type);
    std::string name = "s" + std::to_string(n);
    if (w.is(Tag::M)) {
      type = w.a();
    } else if (w.is(Tag::L)) {
      a = Comb::app(cmb(Combinator::D), a);
      b = Comb::app(cmb(Combinator::D), b);
      type = w.a();
    } else if (w.is(Tag::Eq)) {
      Ctx ctx;
      Expr f = k.whnf(k.infer(ctx, w.a()).type);
      type = f.is(Tag::Lolli) ? f.a() : Expr{};
    } else if (w.is(Tag::Pi) || w.is(Tag::Lpi)) {
      Comb g = generic_realizer(k, w.a(), name);
      a = app_bang(a, g);
      b = app_bang(b, g);
      type = instantiate1(w.b(), Expr::fvar(fresh_id(), w.name(), false));
    } else if (w.is(Tag::Lolli)) {
      Comb g = generic_realizer(k, w.a(), name);
      a = Comb::app(a, g);
      b = Comb::app(b, g);
      type = w.b();
    } else if (w.is(Tag::Sig)) {
      auto proj = [](const Comb& p, bool first) {
        Comb pick = lam_bang("x", lam_bang("y", Comb::var(first ? "x" : "y")));
        return Comb::app(p, pick);
      };
      auto out = saturate(k, w.a(), proj(a, true), proj(b, true));
      auto rest = saturate(k, instantiate1(w.b(), Expr::fvar(fresh_id(), w.name(), false)),
                           proj(a, false), proj(b, false));
      out.insert(out.end(), rest.begin(), rest.end());
      return out;
    } else if (w.is(Tag::Tensor) || w.is(Tag::Lsig)) {
      Comb g = Comb::constant(name);
      return {{Comb::app(a, g), Comb::app(b, g)}};
    } else {
      break;
    }
  }
  return {{a, b}};
}

namespace {

using Obligations = std::vector<std::pair<Comb, Comb>>;

std::vector<Obligations> realize(const Env& env, const std::vector<SoundnessPair>& pairs) {
  Kernel k(env);
  Extractor x(env);
  std::vector<Obligations> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) {
    RealizerEnv renv = generic_env(k, p.ctx);
    out.push_back(saturate(k, p.type, x.term(p.lhs, renv), x.term(p.rhs, renv)));
  }
  return out;
}

Sample judge(const SoundnessPair& p, const Obligations& obs, std::size_t fuel) {
  Sample s;
  for (const auto& [l, r] : obs) {
    Join j = joinable(l, r, fuel);
    if (j == Join::No) return {Join::No, p.origin + ": " + l.str() + "  vs  " + r.str()};
    if (j == Join::Unknown) s.verdict = Join::Unknown;
  }
  return s;
}

}  // namespace

SuiteReport extraction_soundness(const Env& env, const std::vector<SoundnessPair>& pairs,
                                 std::size_t fuel) {
  auto rs = realize(env, pairs);
  std::vector<Sample> results(pairs.size());
  const long long n = static_cast<long long>(pairs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < n; ++i) results[i] = judge(pairs[i], rs[i], fuel);
  return aggregate(results);
}

SuiteReport extraction_soundness_serial(const Env& env, const std::vector<SoundnessPair>& pairs,
                                        std::size_t fuel) {
  auto rs = realize(env, pairs);
  std::vector<Sample> results;
  for (std::size_t i = 0; i < pairs.size(); ++i) results.push_back(judge(pairs[i], rs[i], fuel));
  return aggregate(results);
}

}  // namespace lcr
