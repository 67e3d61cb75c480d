#include "lcr/abstraction.hpp"

#include <map>

namespace lcr {

namespace {

bool has_bang(const Comb& t) {
  switch (t.kind()) {
    case Comb::Kind::Bang: return true;
    case Comb::Kind::App: return has_bang(t.fn()) || has_bang(t.arg());
    default: return false;
  }
}

void count_vars(const Comb& t, bool under_bang, std::map<std::string, std::pair<int, bool>>& acc) {
  switch (t.kind()) {
    case Comb::Kind::Var: {
      auto& [count, banged] = acc[t.name()];
      ++count;
      banged = banged || under_bang;
      return;
    }
    case Comb::Kind::App:
      count_vars(t.fn(), under_bang, acc);
      count_vars(t.arg(), under_bang, acc);
      return;
    case Comb::Kind::Bang:
      count_vars(t.body(), true, acc);
      return;
    default:
      return;
  }
}

bool occurs(const Comb& t, const std::string& x) {
  if (t.closed()) return false;
  switch (t.kind()) {
    case Comb::Kind::Var: return t.name() == x;
    case Comb::Kind::App: return occurs(t.fn(), x) || occurs(t.arg(), x);
    case Comb::Kind::Bang: return occurs(t.body(), x);
    default: return false;
  }
}

bool is_linear_in(const Comb& t, const std::string& x) {
  std::map<std::string, std::pair<int, bool>> acc;
  count_vars(t, false, acc);
  auto it = acc.find(x);
  return it != acc.end() && it->second.first == 1 && !it->second.second;
}

Comb cmb(Combinator c) { return Comb::comb(c); }

Comb lam_linear_unchecked(const std::string& x, const Comb& t) {
  if (t.is(Comb::Kind::Var)) return cmb(Combinator::I);
  // t = t1 t2 with the single occurrence of x in exactly one side
  if (occurs(t.fn(), x))
    return Comb::apps(cmb(Combinator::C), {lam_linear_unchecked(x, t.fn()), t.arg()});
  return Comb::apps(cmb(Combinator::B), {t.fn(), lam_linear_unchecked(x, t.arg())});
}

}  // namespace

Polynomial::Polynomial(Comb t, bool bang_allowed)
    : term_(std::move(t)), bang_allowed_(bang_allowed) {
  if (!bang_allowed_ && has_bang(term_))
    throw std::invalid_argument("plain polynomial contains a bang: " + term_.str());
}

VarAnalysis analyze(const Comb& t) {
  std::map<std::string, std::pair<int, bool>> acc;
  count_vars(t, false, acc);
  VarAnalysis out;
  for (const auto& [name, info] : acc) {
    out.vars.insert(name);
    if (info.first == 1 && !info.second) out.linvars.insert(name);
  }
  return out;
}

Comb subst(const Comb& t, const std::string& x, const Comb& a) {
  if (t.closed()) return t;
  switch (t.kind()) {
    case Comb::Kind::Var: return t.name() == x ? a : t;
    case Comb::Kind::App: return Comb::app(subst(t.fn(), x, a), subst(t.arg(), x, a));
    case Comb::Kind::Bang: return Comb::bang(subst(t.body(), x, a));
    default: return t;
  }
}

Comb lam_linear(const std::string& x, const Comb& t) {
  if (!is_linear_in(t, x))
    throw NotLinear("variable " + x + " is not linear in " + t.str());
  return lam_linear_unchecked(x, t);
}

Comb lam_bang(const std::string& x, const Comb& t) {
  if (!occurs(t, x)) return Comb::app(cmb(Combinator::K), t);
  switch (t.kind()) {
    case Comb::Kind::Var:
      return cmb(Combinator::D);
    case Comb::Kind::Bang:
      return Comb::apps(cmb(Combinator::B),
                        {Comb::app(cmb(Combinator::F), Comb::bang(lam_bang(x, t.body()))),
                         cmb(Combinator::Delta)});
    case Comb::Kind::App: {
      bool in_fn = occurs(t.fn(), x);
      bool in_arg = occurs(t.arg(), x);
      if (in_fn && in_arg) {
        Comb inner = Comb::apps(
            cmb(Combinator::C),
            {Comb::apps(cmb(Combinator::B), {cmb(Combinator::B), lam_bang(x, t.fn())}),
             lam_bang(x, t.arg())});
        return Comb::app(cmb(Combinator::W), inner);
      }
      if (in_fn) return Comb::apps(cmb(Combinator::C), {lam_bang(x, t.fn()), t.arg()});
      return Comb::apps(cmb(Combinator::B), {t.fn(), lam_bang(x, t.arg())});
    }
    default:
      return Comb::app(cmb(Combinator::K), t);  // unreachable: x occurs
  }
}

DerivedCca derive_cca(const LcaInstance&) {
  auto v = [](const char* n) { return Comb::var(n); };
  // S' = l!a. l!b. l!c. a !c (b !c)
  Comb body = Comb::app(app_bang(v("a"), v("c")), app_bang(v("b"), v("c")));
  Comb s = lam_bang("a", lam_bang("b", lam_bang("c", body)));
  Comb k = lam_bang("a", lam_bang("b", v("a")));
  Comb i = lam_bang("a", v("a"));
  return {s, k, i};
}

namespace {

bool bangs_only_as_arguments(const Comb& t, bool as_argument) {
  switch (t.kind()) {
    case Comb::Kind::Bang:
      return as_argument && bangs_only_as_arguments(t.body(), false);
    case Comb::Kind::App:
      return bangs_only_as_arguments(t.fn(), false) && bangs_only_as_arguments(t.arg(), true);
    default:
      return true;
  }
}

}  // namespace

Comb lam_cartesian(const std::string& x, const Comb& t) {
  if (!bangs_only_as_arguments(t, false))
    throw std::invalid_argument("cartesian polynomial has a bang outside an application: " +
                                t.str());
  return lam_bang(x, t);
}

}  // namespace lcr
