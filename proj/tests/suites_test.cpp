#include "doctest.h"
#include "lcr/suites.hpp"

using namespace lcr;

namespace {
void check_same(const SuiteReport& a, const SuiteReport& b) {
  CHECK(a.passed == b.passed);
  CHECK(a.failed == b.failed);
  CHECK(a.unknown == b.unknown);
  CHECK(a.witness == b.witness);
}
}  // namespace

TEST_CASE("completeness suites pass and agree with the serial reference") {
  auto lin = completeness_linear(300, 5);
  CHECK(lin.ok());
  CHECK(lin.unknown_rate() < 0.01);
  check_same(lin, completeness_linear_serial(300, 5));

  auto bang = completeness_bang(300, 5);
  CHECK(bang.ok());
  CHECK(bang.unknown_rate() < 0.01);
  check_same(bang, completeness_bang_serial(300, 5));
}

TEST_CASE("derived CCA laws") {
  auto r = derived_cca_laws(200, 9);
  CHECK(r.ok());
  CHECK(r.passed + r.unknown == 200);
  check_same(r, derived_cca_laws_serial(200, 9));
}

TEST_CASE("suites are reproducible for a fixed seed") {
  auto a = completeness_bang(100, 77);
  auto b = completeness_bang(100, 77);
  check_same(a, b);
}
