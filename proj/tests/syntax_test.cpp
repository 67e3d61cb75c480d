#include "doctest.h"
#include "lcr/syntax.hpp"

using namespace lcr;

namespace {
std::vector<TokKind> kinds(const std::string& s) {
  std::vector<TokKind> out;
  for (const auto& t : tokenize(s)) out.push_back(t.kind);
  return out;
}

void round_trip(const std::string& src) {
  Expr e = parse_expr(src);
  std::string printed = print_expr(e);
  CHECK(printed == src);
  CHECK(alpha_eq(parse_expr(printed), e));
}
}  // namespace

TEST_CASE("tokenize") {
  CHECK(kinds("A -o B") ==
        std::vector<TokKind>{TokKind::Ident, TokKind::Lolli, TokKind::Ident, TokKind::End});
  CHECK(kinds("Lpi (x : A), B") ==
        std::vector<TokKind>{TokKind::Keyword, TokKind::LParen, TokKind::Ident, TokKind::Colon,
                             TokKind::Ident, TokKind::RParen, TokKind::Comma, TokKind::Ident,
                             TokKind::End});
  CHECK(kinds("a (x) b := c; -- comment\n*") ==
        std::vector<TokKind>{TokKind::Ident, TokKind::TensorOp, TokKind::Ident, TokKind::Define,
                             TokKind::Ident, TokKind::Semi, TokKind::Star, TokKind::End});
  try {
    tokenize("x\n  \xce\xbb");
    FAIL("expected LexError");
  } catch (const LexError& e) {
    CHECK(e.line == 2);
    CHECK(e.column == 3);
  }
  CHECK_THROWS_AS(tokenize("a - b"), LexError);
}

TEST_CASE("parse declarations") {
  auto ds = parse_source("lin idA : ElL a -o ElL a := fun x => x ;");
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].kind == DeclKind::Lin);
  CHECK(ds[0].name == "idA");
  CHECK(ds[0].type.is(Tag::Lolli));
  CHECK(ds[0].body.is(Tag::Lam));
  CHECK(ds[0].body.b().is(Tag::BVar));

  ds = parse_source(
      "def nilStar : Lpi (X : U), ElL X -o !(A -o ElL X -o ElL X) -o ElL X := "
      "fun X n c => let ell k = c in n ;");
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].kind == DeclKind::Def);
  Expr body = ds[0].body.b().b().b();  // under X n c
  CHECK(body.is(Tag::LetL));
  CHECK(body.b().is(Tag::BVar));
  CHECK(body.b().index() == 2);  // n, past k and c

  try {
    parse_source("def bad : U := ;");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.expected.count("identifier") == 1);
    CHECK(e.column == 16);
  }
  CHECK_THROWS_AS(parse_source("def f (x : U) : U := x ;"), ParseError);
  CHECK_NOTHROW(parse_source("def F (x : U) : Type := ElC x ;"));
}

TEST_CASE("precedence and associativity") {
  Expr e = parse_expr("A -o B -o C");
  CHECK(e.is(Tag::Lolli));
  CHECK(e.b().is(Tag::Lolli));
  e = parse_expr("A (x) B (x) C -o D");
  CHECK(e.is(Tag::Lolli));
  CHECK(e.a().is(Tag::Tensor));
  CHECK(e.a().a().is(Tag::Tensor));
  e = parse_expr("f a b (x) g c");
  CHECK(e.is(Tag::Tensor));
  CHECK(e.a().is(Tag::App));
  CHECK(e.a().a().is(Tag::App));
  e = parse_expr("mu k a b");
  CHECK(e.is(Tag::App));
  CHECK(e.a().a().is(Tag::Mu));
  e = parse_expr("!A -o B");
  CHECK(e.a().is(Tag::Bang));
  e = parse_expr("A -> B");
  CHECK(e.is(Tag::Pi));
  CHECK(e.name() == "_");
}

TEST_CASE("binder groups shift their domains") {
  Expr e = parse_expr("Pi (x y : ElC a), Id (ElC a) x y");
  CHECK(e.a().is(Tag::ElC));
  CHECK(e.b().a().is(Tag::ElC));
  Expr body = e.b().b();
  CHECK(body.b().index() == 1);
  CHECK(body.c().index() == 0);
  // a dependent domain in a group mentions the right binder
  e = parse_expr("Pi (X : U) (x y : ElC X), Unit");
  CHECK(e.b().a().a().index() == 0);
  CHECK(e.b().b().a().a().index() == 1);
}

TEST_CASE("printer round trips") {
  for (const char* s :
       {"A -o B", "Lpi (x : A), B", "(a , b)", "let (x , y) = p in (y , x)",
        "fun x => x", "fun (x y : A) (z : B) => z", "Pi (X : U), ElC X -> ElC X",
        "A (x) B -o I", "!(A -o B) -o M (ElL X)", "let * = u in t", "let ell k = c in mu k a",
        "eqIn f g (fun x => x) *", "eqOut f g l", "Id (M A) (M a) b", "^Pi (x : a), b x",
        "^Lpi (x : a), ^Lolli b (^Eq f g)", "!^I", "Sig (x : A), B x", "Lsig (x : A), ElL (b x)",
        "(x : A)", "fst p", "snd (p , tt)", "refl", "f (g x) (h y)", "(fun x => x) y",
        "(A -o B) -o C", "A (x) (B (x) C)", "U"})
    round_trip(s);
  CHECK(print_expr(parse_expr("fun x => fun x => x")) == "fun x x' => x'");
}

TEST_CASE("declarations round trip") {
  std::string src =
      "def Alg : Type := Sig (X : U) (_ : M (ElL X)), M !(A -o ElL X -o ElL X) ;\n"
      "def IsMor (X Y : U) (f : M (ElL X -o ElL Y)) : Linear := ElL X -o ElL Y ;\n"
      "lin idA : ElL a -o ElL a := fun x => x ;\n";
  auto ds = parse_source(src);
  REQUIRE(ds.size() == 3);
  CHECK(print_file(ds) == src);
  auto again = parse_source(print_file(ds));
  for (std::size_t i = 0; i < ds.size(); ++i) CHECK(decl_equal(ds[i], again[i]));
}
