#include "lcr/encodings.hpp"

#include <fstream>
#include <sstream>

#include "lcr/rule_corpus.hpp"

namespace lcr {

bool EncodingReport::ok() const { return first_failure() == nullptr; }

const EquationCheck* EncodingReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.ok()) return &c;
  return nullptr;
}

EquationCheck check_equation(const Env& env, const std::string& name,
                             const std::vector<CtxVar>& vars, const std::string& lhs,
                             const std::string& rhs, bool realize, KernelOptions options,
                             Equality expected) {
  EquationCheck out;
  out.name = name;
  out.lhs = lhs;
  out.rhs = rhs;
  out.expected = expected;
  try {
    Kernel k(env, options);
    Ctx ctx;
    for (const auto& v : vars) {
      auto [t, s] = k.check_type(ctx, ctx.resolve(parse_expr(v.type)));
      ctx.push(v.name, t, v.linear);
    }
    Typed l = k.infer(ctx, ctx.resolve(parse_expr(lhs)));
    Typed r = k.check(ctx, ctx.resolve(parse_expr(rhs)), l.type);
    EqualityInfo info = k.def_eq_info(ctx, l.term, r.term, l.type);
    out.kernel = info.result;
    out.used_hypotheses = info.used_hypotheses;
    if (realize) {
      Extractor x(env);
      RealizerEnv renv = generic_env(k, ctx);
      Join j = Join::Yes;
      for (const auto& [a, b] : saturate(k, l.type, x.term(l.term, renv), x.term(r.term, renv))) {
        Join one = joinable(a, b, 100000);
        if (one == Join::No) {
          j = Join::No;
          break;
        }
        if (one == Join::Unknown) j = Join::Unknown;
      }
      out.realizer = j;
    }
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

Env load_lists_corpus(const std::string& path, KernelOptions options) {
  return check_program(parse_source(read_file(path)), options);
}

namespace {

const std::vector<CtxVar> kWeakCtx = {
    {"X", "U", false},
    {"k", "M (A -o ElL X -o ElL X)", false},
    {"g", "M (Lpi (X : U), ElL X -o ElL X)", false},
    {"n", "ElL X", true},
    {"a", "A", true},
    {"b", "A", true},
    {"l", "ListI", true},
};

std::string args_of(const AlgebraInstance& i) {
  return i.x + " " + i.nx + " " + i.cx + " " + i.y + " " + i.ny + " " + i.cy + " " + i.f + " p q";
}

std::vector<CtxVar> morphism_ctx(const AlgebraInstance& i) {
  std::vector<CtxVar> vars = i.params;
  vars.push_back({"p", "Id (M (ElL " + i.y + ")) (M (mu " + i.f + " (mu " + i.nx + "))) " + i.ny,
                  false});
  vars.push_back({"q", "Pi (a : M A) (x : M (ElL " + i.x + ")), Id (M (ElL " + i.y + ")) (M (mu " +
                           i.f + " (let ell k = mu " + i.cx +
                           " in mu k (mu a) (mu x)))) (M (let ell k = mu " + i.cy +
                           " in mu k (mu a) (mu " + i.f + " (mu x))))",
                  false});
  return vars;
}

std::string list_of(std::size_t len) {
  std::string l = "nil";
  for (std::size_t i = len; i-- > 0;) l = "cons a" + std::to_string(i) + " (" + l + ")";
  return l;
}

}  // namespace

EncodingReport check_weak_rules(const Env& lists, KernelOptions options) {
  EncodingReport r;
  r.name = "weak-rules";
  auto eq = [&](const std::string& name, const std::string& lhs, const std::string& rhs) {
    r.checks.push_back(check_equation(lists, name, kWeakCtx, lhs, rhs, true, options));
  };
  eq("rec-nil", "rec X n (ell k) nilStar", "n");
  eq("rec-cons-nil", "rec X n (ell k) (consStar a nilStar)", "mu k a n");
  eq("rec-cons-cons", "rec X n (ell k) (consStar a (consStar b nilStar))", "mu k a (mu k b n)");
  eq("rec-cons", "rec X n (ell k) (consStar a l)", "mu k a (rec X n (ell k) l)");
  eq("rec-nonstandard", "rec X n (ell k) (bad g)", "mu k * (mu g X n)");
  return r;
}

std::vector<AlgebraInstance> shipped_instances() {
  return {
      {"unit-identity", "unitX", "unitN", "unitC", "unitX", "unitN", "unitC", "unitId", {}, true},
      {"unit-endo", "unitX", "unitN", "unitC", "endoX", "endoN", "endoC", "toEndo", {}, true},
  };
}

AlgebraInstance symbolic_instance() {
  AlgebraInstance i{"symbolic", "X", "nX", "cX", "Y", "nY", "cY", "f", {}, false};
  i.params = {
      {"X", "U", false},
      {"nX", "M (ElL X)", false},
      {"cX", "M !(A -o ElL X -o ElL X)", false},
      {"Y", "U", false},
      {"nY", "M (ElL Y)", false},
      {"cY", "M !(A -o ElL Y -o ElL Y)", false},
      {"f", "M (ElL X -o ElL Y)", false},
  };
  return i;
}

EncodingReport check_lemma_nil_cons(const Env& lists, const std::vector<AlgebraInstance>& instances,
                                    KernelOptions options) {
  EncodingReport r;
  r.name = "lemma-nil-cons";
  for (const auto& inst : instances) {
    std::string args = args_of(inst);
    std::vector<CtxVar> vars = morphism_ctx(inst);
    r.checks.push_back(check_equation(lists, inst.name + ":nil", vars, "phi nilStar " + args,
                                      "psi nilStar " + args, inst.concrete, options));
    vars.push_back({"a", "M A", false});
    vars.push_back({"l", "M ListI", false});
    vars.push_back({"ih", "Id (M (ElL " + inst.y + ")) (M (phi (mu l) " + args + ")) (M (psi (mu l) " +
                              args + "))",
                    false});
    r.checks.push_back(check_equation(lists, inst.name + ":cons", vars,
                                      "phi (consStar (mu a) (mu l)) " + args,
                                      "psi (consStar (mu a) (mu l)) " + args, false, options));
  }
  return r;
}

Algebra list_algebra() { return {"list", "^Eq phi psi", "nil", "ell consM"}; }

std::vector<Algebra> shipped_algebras() {
  return {{"unit", "unitX", "mu unitN", "mu unitC"}, {"endo", "endoX", "mu endoN", "mu endoC"}};
}

EncodingReport check_initiality_instance(const Env& lists, const Algebra& alg, std::size_t samples,
                                         KernelOptions options) {
  EncodingReport r;
  r.name = "initiality:" + alg.name;
  std::string rec = "rec (" + alg.x + ") (" + alg.n + ") (" + alg.c + ")";
  std::string f = "(fun (m : List) => " + rec + " (eqOut phi psi m))";
  std::vector<CtxVar> vars = {{"a", "A", true}, {"l", "List", true}};
  r.checks.push_back(check_equation(lists, "exists-nil", {}, f + " nil", alg.n, true, options));
  r.checks.push_back(check_equation(lists, "exists-cons", vars, f + " (cons a l)",
                                    "let ell k = " + alg.c + " in mu k a (" + f + " l)", true,
                                    options));
  for (std::size_t len = 0; len < samples; ++len) {
    std::vector<CtxVar> elems;
    std::string unfolded = alg.n;
    for (std::size_t i = 0; i < len; ++i) elems.push_back({"a" + std::to_string(i), "A", true});
    for (std::size_t i = len; i-- > 0;)
      unfolded = "mu k a" + std::to_string(i) + " (" + unfolded + ")";
    unfolded = "let ell k = " + alg.c + " in " + unfolded;
    std::string l = list_of(len);
    std::string tag = "length-" + std::to_string(len);
    r.checks.push_back(check_equation(lists, tag + ":unfold", elems,
                                      rec + " (eqOut phi psi (" + l + "))", unfolded, true,
                                      options));
    r.checks.push_back(check_equation(lists, tag + ":roundtrip", elems,
                                      "rec (^Eq phi psi) nil (ell consM) (eqOut phi psi (" + l +
                                          "))",
                                      l, true, options));
  }
  return r;
}

EquationCheck check_nonstandard(const Env& lists, KernelOptions options) {
  return check_equation(lists, "nonstandard", {{"g", "M (Lpi (X : U), ElL X -o ElL X)", false}},
                        "M (phi (bad g))", "M (psi (bad g))", false, options,
                        Equality::NotEqual);
}

}  // namespace lcr
