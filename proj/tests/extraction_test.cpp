#include "doctest.h"
#include "lcr/extraction.hpp"
#include "lcr/rule_corpus.hpp"

using namespace lcr;

namespace {
const std::string kLists = std::string(LCR_SOURCE_DIR) + "/corpus/lists/lists.ldtt";

Env lists_env() { return check_program(parse_source(read_file(kLists))); }

Comb c(const char* name) { return Comb::constant(name); }
Comb bang(const char* name) { return Comb::bang(c(name)); }

Join join(const Comb& a, const Comb& b) { return joinable(a, b, 100000); }
}  // namespace

TEST_CASE("extraction of small declarations") {
  Env env = check_program(parse_source(
      "def A : Linear := ElL ^I ;"
      "lin idA : A -o A := fun x => x ;"
      "lin u : I := * ;"
      "lin sw : A (x) A -o A (x) A := fun p => let (a , b) = p in (b , a) ;"
      "lin poly : Lpi (X : U), ElL X -o ElL X := fun X x => x ;"
      "def m : M (A -o A) := M idA ;"));
  CHECK(extract_decl(env, "idA") == Comb::comb(Combinator::I));
  CHECK(extract_decl(env, "u") == Comb::comb(Combinator::I));
  CHECK(extract_decl(env, "m") == Comb::comb(Combinator::I));
  CHECK(extract_decl(env, "sw").closed());
  Comb pair = Comb::apps(extract_decl(env, "sw"),
                         {lam_linear("z", Comb::apps(Comb::var("z"), {c("a"), c("b")}))});
  Comb swapped = lam_linear("z", Comb::apps(Comb::var("z"), {c("b"), c("a")}));
  CHECK(join(pair, swapped) == Join::Yes);
  CHECK(join(Comb::apps(extract_decl(env, "poly"), {bang("X"), c("x")}), c("x")) == Join::Yes);
}

TEST_CASE("extraction of the list constructors") {
  Env env = lists_env();
  Comb nil = extract_decl(env, "nilStar");
  CHECK(nil.closed());
  CHECK(join(Comb::apps(nil, {bang("X"), c("n"), bang("c")}), c("n")) == Join::Yes);
  Comb cons = extract_decl(env, "consStar");
  Comb lhs = Comb::apps(cons, {c("a"), c("l"), bang("X"), c("n"), bang("c")});
  Comb rhs = Comb::apps(c("c"), {c("a"), Comb::apps(c("l"), {bang("X"), c("n"), bang("c")})});
  CHECK(join(lhs, rhs) == Join::Yes);
  Comb rec = extract_decl(env, "rec");
  CHECK(join(Comb::apps(rec, {bang("X"), c("n"), bang("c"), nil}), c("n")) == Join::Yes);
}

TEST_CASE("extraction respects beta and equalizer computation") {
  Env env = check_program(parse_source(
      "def A : Linear := ElL ^I ;"
      "lin f : A -o A := fun x => x ;"
      "lin h : A -o A := fun x => x ;"));
  Kernel k(env);
  Ctx ctx;
  auto realize = [&](const char* src) {
    Typed t = k.infer(ctx, parse_expr(src));
    return extract_term(env, t.term, generic_env(k, ctx));
  };
  CHECK(join(realize("(fun (Y : U) (y : ElL Y) => y) ^I"), realize("fun (y : ElL ^I) => y")) ==
        Join::Yes);
  auto obs = saturate(k, parse_expr("A -o A"), realize("fun (z : A) => eqOut f f (eqIn f f h z)"),
                      realize("h"));
  REQUIRE(obs.size() == 1);
  CHECK(join(obs[0].first, obs[0].second) == Join::Yes);
}

TEST_CASE("extraction soundness on the corpus") {
  SuiteReport total;
  std::size_t pairs = 0;
  for (const auto& file : accepted_corpus_files(std::string(LCR_SOURCE_DIR) + "/corpus")) {
    Env env = check_program(parse_source(read_file(file)));
    auto ps = soundness_pairs(env);
    pairs += ps.size();
    SuiteReport par = extraction_soundness(env, ps);
    SuiteReport ser = extraction_soundness_serial(env, ps);
    CHECK(par.passed == ser.passed);
    CHECK(par.unknown == ser.unknown);
    INFO(file << ": " << par.witness.value_or(""));
    CHECK(par.failed == 0);
    CHECK(par.unknown == 0);
  }
  CHECK(pairs >= 50);
}

TEST_CASE("weakening coherence and linearity of realizers") {
  Env env = lists_env();
  Extractor x(env);
  for (const auto& name : env.order()) {
    const GlobalDef* g = env.find(name);
    if (g->is_type()) continue;
    Comb r = x.decl(name);
    CHECK(join(Comb::apps(lam_bang("w", r), {bang("dummy")}), r) == Join::Yes);
    if (g->kind == DeclKind::Lin && g->body.is(Tag::Lam) && g->body.fun_kind() == FunKind::Lin) {
      Expr v = Expr::fvar(fresh_id(), "v", true);
      RealizerEnv renv;
      renv.vars[v.id()] = Comb::var("v");
      Comb body = x.term(instantiate1(g->body.b(), v), renv);
      CHECK(analyze(body).linvars.count("v") == 1);
    }
  }
}
