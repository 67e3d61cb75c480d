#include "doctest.h"
#include "lcr/encodings.hpp"

using namespace lcr;

namespace {
const Env& lists() {
  static const Env env = load_lists_corpus(std::string(LCR_SOURCE_DIR) + "/corpus/lists/lists.ldtt");
  return env;
}

void expect_ok(const EncodingReport& r) {
  INFO(r.name);
  for (const auto& c : r.checks) {
    INFO(c.name << ": " << c.lhs << "  ==  " << c.rhs << " | " << c.error);
    CHECK(c.kernel == Equality::Equal);
    CHECK(c.error.empty());
    if (c.realizer) CHECK(*c.realizer == Join::Yes);
  }
  CHECK(r.ok());
}
}  // namespace

TEST_CASE("weak recursion rules") {
  EncodingReport r = check_weak_rules(lists());
  expect_ok(r);
  CHECK(r.checks.size() == 5);
}

TEST_CASE("equalizer lemma on instances") {
  auto instances = shipped_instances();
  instances.push_back(symbolic_instance());
  EncodingReport r = check_lemma_nil_cons(lists(), instances);
  expect_ok(r);
  CHECK(r.checks.size() == 6);
}

TEST_CASE("lemma equations rest on the morphism hypotheses") {
  EncodingReport r = check_lemma_nil_cons(lists(), {symbolic_instance()});
  REQUIRE(r.checks.size() == 2);
  CHECK(r.checks[0].used_hypotheses);
  CHECK(r.checks[1].used_hypotheses);
  // without p the nil case is not derivable
  AlgebraInstance i = symbolic_instance();
  std::vector<CtxVar> vars = i.params;
  EquationCheck c = check_equation(lists(), "no-p", vars, "M (mu f (rec X (mu nX) (mu cX) nilStar))",
                                   "M (rec Y (mu nY) (mu cY) nilStar)", false);
  CHECK(c.error.empty());
  CHECK(c.kernel != Equality::Equal);
}

TEST_CASE("initiality samples") {
  expect_ok(check_initiality_instance(lists(), list_algebra()));
  for (const auto& a : shipped_algebras()) expect_ok(check_initiality_instance(lists(), a));
}

TEST_CASE("non-standard element is outside the equalizer") {
  EquationCheck c = check_nonstandard(lists());
  CHECK(c.error.empty());
  CHECK(c.kernel != Equality::Equal);
  CHECK(c.ok());
  EncodingReport weak = check_weak_rules(lists());
  CHECK(weak.checks.back().name == "rec-nonstandard");
  CHECK(weak.checks.back().ok());
}
