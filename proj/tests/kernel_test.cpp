#include <fstream>
#include <sstream>

#include "doctest.h"
#include "lcr/kernel.hpp"
#include "lcr/rule_corpus.hpp"

using namespace lcr;

namespace {
const char* kPrelude = R"(
def A : Linear := I ;
lin idA : A -o A := fun x => x ;
)";

ProgramReport run(const std::string& src) { return check_program_report(parse_source(src)); }

ErrorKind error_of(const std::string& src) {
  ProgramReport r = run(src);
  REQUIRE_MESSAGE(r.error.has_value(), "accepted: " << src);
  return r.error->kind;
}

void accepts(const std::string& src) {
  ProgramReport r = run(src);
  INFO(src);
  if (r.error) INFO(r.error->what());
  CHECK(r.ok());
}

Equality eq_in(const std::string& prelude, const std::vector<std::pair<std::string, std::string>>& vars,
               const std::string& a, const std::string& b) {
  Env env = check_program(parse_source(prelude));
  Kernel k(env);
  Ctx ctx;
  for (const auto& [name, type] : vars) {
    bool linear = name[0] == '!';
    std::string n = linear ? name.substr(1) : name;
    auto [t, s] = k.check_type(ctx, ctx.resolve(parse_expr(type)));
    ctx.push(n, t, linear);
  }
  Typed ta = k.infer(ctx, ctx.resolve(parse_expr(a)));
  Typed tb = k.check(ctx, ctx.resolve(parse_expr(b)), ta.type);
  return k.def_eq(ctx, ta.term, tb.term, ta.type);
}
}  // namespace

TEST_CASE("kernel accepts basic declarations") {
  accepts(kPrelude);
  accepts(std::string(kPrelude) + "lin twice : (A -o A) -o A -o A := fun f x => f (idA x) ;");
  accepts("def T : Type := Pi (X : U), ElC X -> ElC X ; def id : T := fun X x => x ;");
  accepts("def A : Linear := I ; lin s : A (x) A -o A (x) A := fun p => let (a , b) = p in (b , a) ;");
  accepts("lin u : I -o I -o I := fun u v => let * = u in v ;");
  accepts("def A : Linear := I ; def m : M (A -o A) := M (fun x => x) ;"
          "lin use : A -o A := fun a => m a ;");
  accepts("def A : Linear := I ; lin e : L (M A) -o L (M A) := fun c => let ell k = c in ell k ;");
  accepts("def B : Type := Unit ; def l : B := lower (ell tt) ;");
  accepts("def F (X : U) : Linear := ElL X -o ElL X ; lin f : Lpi (X : U), F X := fun X x => x ;");
}

TEST_CASE("kernel error kinds") {
  CHECK(error_of("def A : Linear := I ; lin dup : A -o A (x) A := fun x => (x , x) ;") ==
        ErrorKind::LinearUsage);
  CHECK(error_of("def A : Linear := I ; lin drop : A -o I := fun x => * ;") ==
        ErrorKind::LinearUsage);
  CHECK(error_of("def A : Linear := I ; lin f : A -o Unit := fun x => x ;") == ErrorKind::Mismatch);
  CHECK(error_of("def f : Unit := g ;") == ErrorKind::ScopeError);
  CHECK(error_of("def f : Unit := tt ; def f : Unit := tt ;") == ErrorKind::ScopeError);
  CHECK(error_of("def t : Unit := tt ; def f : t := tt ;") == ErrorKind::NotAType);
  CHECK(error_of("def A : Linear := I ; def f : M A -o A := fun x => mu x ;") ==
        ErrorKind::Mismatch);
  CHECK(error_of("def A : Linear := I ; def f : A -> A := fun x => x ;") == ErrorKind::Mismatch);
  CHECK(error_of("def r : Pi (X : U) (x y : M (ElL X)), Id (M (ElL X)) x y := "
                 "fun X x y => refl ;") == ErrorKind::UnknownEquality);
}

TEST_CASE("linear variable captured by M is rejected") {
  ProgramReport r = run("def A : Linear := I ; lin f : A -o L (M A) := fun x => ell (M x) ;");
  REQUIRE(r.error);
  CHECK(r.error->kind == ErrorKind::LinearUsage);
  CHECK(r.error->decl == "f");
  CHECK(r.error->loc.line == 1);
}

TEST_CASE("definitional equality") {
  std::string pre = "def A : Linear := I ;";
  CHECK(eq_in(pre, {{"!a", "A"}}, "(fun (x : A) => x) a", "a") == Equality::Equal);
  CHECK(eq_in(pre, {{"f", "M (A -o A)"}}, "f", "M (fun x => mu f x)") == Equality::Equal);
  CHECK(eq_in(pre, {{"!a", "A"}, {"!b", "A"}}, "a", "b") == Equality::NotEqual);
  CHECK(eq_in(pre, {{"!a", "A"}, {"!b", "A"}}, "let (x , y) = (a , b) in (y , x)", "(b , a)") ==
        Equality::Equal);
  CHECK(eq_in(pre, {{"!u", "I"}, {"!a", "A"}}, "let * = u in a", "let * = u in a") ==
        Equality::Equal);
  CHECK(eq_in(pre, {{"x", "M A"}}, "lower (ell x)", "x") == Equality::Equal);
}

TEST_CASE("equalizer computation") {
  std::string pre =
      "def A : Linear := I ; lin f : A -o A := fun x => x ; lin g : A -o A := fun x => x ;";
  CHECK(eq_in(pre, {{"!a", "A"}}, "eqOut f g (eqIn f g (fun (x : A) => x) a)", "a") ==
        Equality::Equal);
  CHECK(eq_in(pre, {{"!e", "Eq f g"}}, "eqIn f g (eqOut f g) e", "e") == Equality::Equal);
  accepts(pre + "lin i : A -o Eq f g := eqIn f g (fun x => x) ;");
}

TEST_CASE("function extensionality from pointwise equations") {
  std::string pre =
      "def A : Linear := I ; lin f : A -o A := fun x => x ;"
      "lin g : A -o A := fun x => let * = x in * ;";
  Env env = check_program(parse_source(pre));
  Kernel k(env);
  {
    Ctx ctx;
    auto [t, s] = k.check_type(
        ctx, parse_expr("Pi (x : M A), Id (M A) (M (f (mu x))) (M (g (mu x)))"));
    ctx.push("h", t, false);
    Typed r = k.derive_funext(ctx, parse_expr("f"), parse_expr("g"));
    CHECK(r.type.is(Tag::Id));
  }
  {
    Ctx ctx;
    try {
      k.derive_funext(ctx, parse_expr("f"), parse_expr("g"));
      FAIL("expected UnknownEquality");
    } catch (const TypeError& e) {
      CHECK(e.kind == ErrorKind::UnknownEquality);
    }
  }
}

namespace {
std::string lists_source() {
  std::ifstream in(std::string(LCR_SOURCE_DIR) + "/corpus/lists/lists.ldtt");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
}  // namespace

TEST_CASE("lists corpus checks") {
  ProgramReport r = run(lists_source());
  if (r.error)
    FAIL(r.error->decl << ": " << r.error->what() << " | expected " << r.error->expected
                       << " | actual " << r.error->actual);
  CHECK(r.decls.size() == 39);
}

TEST_CASE("lists corpus rejects false equations") {
  std::string src = lists_source();
  CHECK(error_of(src + "def no : Id (M List) (M (fold list1)) (M list2) := refl ;") ==
        ErrorKind::UnknownEquality);
  CHECK(error_of(src +
                 "def no : Pi (g : M (Lpi (X : U), ElL X -o ElL X)), "
                 "Id (M PhiT) (M (phi (bad g))) (M (psi (bad g))) := fun g => refl ;") ==
        ErrorKind::UnknownEquality);
  CHECK(error_of(src +
                 "lin no : Lpi (g : M (Lpi (X : U), ElL X -o ElL X)), List := "
                 "fun g => eqIn phi psi (fun (u : I) => let * = u in bad g) * ;") ==
        ErrorKind::UnknownEquality);
  accepts(src +
          "lin yes : List := eqIn phi psi (fun (u : I) => let * = u in bad (M (fun X x => x))) * ;");
  CHECK(error_of(src + "def no : Id (M PhiT) (M (phi nilStar)) (M (psi (consStar * nilStar))) := refl ;") ==
        ErrorKind::UnknownEquality);
}

TEST_CASE("golden rule corpus") {
  auto cases = run_rule_corpus(std::string(LCR_SOURCE_DIR) + "/corpus/rules");
  CHECK(cases.size() >= 50);
  for (const auto& c : cases) {
    INFO(c.rule << "/" << c.file << ": " << c.detail);
    CHECK_MESSAGE(c.passed, "expected " << c.expected << ", got " << c.actual);
  }
}
