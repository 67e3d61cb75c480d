#include <filesystem>

#include "doctest.h"
#include "lcr/abstraction.hpp"
#include "lcr/assemblies.hpp"
#include "lcr/model_battery.hpp"

using namespace lcr;

namespace {

Comb P(const char* s) { return parse_comb(s); }

Assembly make(std::string name, Flavor f,
              std::vector<std::pair<std::string, std::vector<const char*>>> elems) {
  Assembly a;
  a.name = std::move(name);
  a.flavor = f;
  for (auto& [label, terms] : elems) {
    a.carrier.push_back(label);
    for (const char* t : terms) a.realizers[label].push_back(P(t));
  }
  a.validate();
  return a;
}

Assembly points() {
  return make("points", Flavor::Cartesian, {{"p", {"c1"}}, {"q", {"c2"}}, {"r", {"c3", "I c3"}}});
}

Assembly tokens() {
  return make("tokens", Flavor::Linear, {{"a", {"c1"}}, {"b", {"c2"}}});
}

Assembly booleans() {
  return make("bool", Flavor::Cartesian, {{"tt", {"B K D"}}, {"ff", {"K D"}}});
}

std::string models_dir() { return std::string(LCR_SOURCE_DIR) + "/corpus/models"; }

}  // namespace

TEST_CASE("assembly invariants") {
  Assembly a;
  a.name = "bad";
  a.carrier = {"x"};
  CHECK_THROWS_AS(a.validate(), AssemblyError);
  a.realizers["x"] = {};
  CHECK_THROWS_AS(a.validate(), AssemblyError);
  a.realizers["x"] = {P("?y")};
  CHECK_THROWS_AS(a.validate(), AssemblyError);
  a.realizers["x"] = {P("c")};
  CHECK_NOTHROW(a.validate());
}

TEST_CASE("verify_morphism") {
  CHECK(verify_morphism(identity_morphism(tokens())).ok());
  CHECK(verify_morphism(identity_morphism(points())).ok());
  // the cartesian identity needs D; I leaves the bang in place
  AsmMorphism wrong = identity_morphism(points());
  wrong.tracker = P("I");
  CheckResult r = verify_morphism(wrong);
  CHECK(r.verdict == Verdict::Fail);
  CHECK(r.witness.has_value());
  // constant map to q tracked by K c2
  AsmMorphism k{points(), points(), {{"p", "q"}, {"q", "q"}, {"r", "q"}}, P("K c2")};
  CHECK(verify_morphism(k).ok());
  // a diverging tracker is inconclusive
  Comb omega = lam_bang("x", app_bang(Comb::var("x"), Comb::var("x")));
  AsmMorphism loop = identity_morphism(tokens());
  loop.tracker = Comb::app(Comb::comb(Combinator::K), app_bang(omega, omega));
  CHECK(verify_morphism(loop, 200).verdict == Verdict::Unknown);
}

TEST_CASE("unit, tensor, L and M") {
  Assembly u = asm_unit();
  CHECK(u.carrier == std::vector<std::string>{"*"});
  CHECK(is_modest(u).verdict == Join::Yes);
  CHECK(verify_morphism(identity_morphism(u)).ok());

  Assembly uu = asm_tensor(u, u);
  CHECK(uu.carrier == std::vector<std::string>{"(*,*)"});
  Assembly t = asm_tensor(tokens(), tokens());
  CHECK(t.carrier.size() == 4);
  Comb r = t.realizers_of("(a,b)").front();
  CHECK(joinable(Comb::app(r, P("p")), P("p c1 c2")) == Join::Yes);
  CHECK_THROWS_AS(asm_tensor(points(), u), AssemblyError);

  Assembly cu = asm_M(u);
  CHECK(cu.flavor == Flavor::Cartesian);
  CHECK(cu.carrier == u.carrier);
  CHECK(cu.realizers_of("*") == std::vector<Comb>{P("I")});
  Assembly lu = asm_L(cu);
  CHECK(lu.realizers_of("*") == std::vector<Comb>{P("!I")});
  CHECK(asm_M(asm_L(points())).carrier == points().carrier);
  CHECK(asm_L(asm_M(lu)).realizers_of("*") == std::vector<Comb>{P("!!I")});
  AsmMorphism id_l{asm_L(points()), asm_L(points()), identity_morphism(points()).map,
                   lam_bang("x", Comb::bang(Comb::var("x")))};
  CHECK(verify_morphism(id_l).ok());
}

TEST_CASE("composition and tensor of morphisms") {
  Assembly x = tokens();
  AsmMorphism swap{x, x, {{"a", "b"}, {"b", "a"}}, {}};
  AsmMorphism id = identity_morphism(x);
  CHECK(verify_morphism(compose(id, id)).ok());
  AsmMorphism k{points(), points(), {{"p", "q"}, {"q", "q"}, {"r", "q"}}, P("K c2")};
  AsmMorphism c = compose(identity_morphism(points()), k);
  CHECK(verify_morphism(c).ok());
  CHECK(c.map.at("r") == "q");
  AsmMorphism fg = tensor_morphism(id, id);
  CHECK(verify_morphism(fg).ok());
  CHECK(fg.map.at("(a,b)") == "(a,b)");
}

TEST_CASE("tracker search") {
  Assembly b = booleans();
  auto ms = trackable_morphisms(b, b, default_pool(b, Flavor::Cartesian));
  // all four maps on booleans: two constants, identity, negation
  CHECK(ms.size() == 4);
  for (const auto& m : ms) CHECK(verify_morphism(m).ok());
  auto linear = trackable_morphisms(tokens(), tokens(), default_pool(tokens(), Flavor::Linear));
  REQUIRE(linear.size() == 1);
  CHECK(linear.front().tracker == P("I"));
}

TEST_CASE("fam_lpi") {
  FamAssembly single{"single", make("one", Flavor::Cartesian, {{"o", {"c0"}}}),
                     {{"o", asm_unit()}}};
  LpiResult r = fam_lpi(single);
  REQUIRE(r.assembly.carrier.size() == 1);
  CHECK(r.excluded.empty());
  CHECK(r.assembly.realizers_of(r.assembly.carrier.front()).front() == P("K I"));

  FamAssembly empty{"empty", make("none", Flavor::Cartesian, {}), {}};
  LpiResult e = fam_lpi(empty);
  CHECK(e.assembly.carrier.size() == 1);
  CHECK(e.assembly.realizers_of("{}").front() == P("I"));

  Assembly two = make("two", Flavor::Cartesian, {{"u", {"c0"}}, {"v", {"c9"}}});
  FamAssembly constant{"constant", two, {{"u", tokens()}, {"v", tokens()}}};
  LpiResult c = fam_lpi(constant);
  CHECK(verify_lpi(constant, c.assembly).ok());
  // inert base realizers only admit constant choices
  CHECK(c.assembly.carrier.size() == 2);
  CHECK(c.excluded.size() == 2);
  CHECK(c.assembly.realizers_of("{u:a,v:a}").front() == P("K c1"));

  FamAssembly dep{"bool-indexed", booleans(), {{"tt", tokens()}, {"ff", asm_unit()}}};
  LpiResult d = fam_lpi(dep);
  CHECK(d.assembly.carrier.size() == 2);
  CHECK(d.excluded.empty());
  CHECK(verify_lpi(dep, d.assembly).ok());
}

TEST_CASE("equalizers") {
  Assembly b = booleans();
  auto ms = trackable_morphisms(b, b, default_pool(b, Flavor::Cartesian));
  std::size_t checked = 0;
  for (const auto& f : ms)
    for (const auto& g : ms) {
      Equalizer eq = fam_equalizer(f, g);
      CHECK(verify_morphism(eq.inclusion).ok());
      if (f.map == g.map) CHECK(eq.object.carrier == b.carrier);
      bool differ = f.map.at("tt") != g.map.at("tt") && f.map.at("ff") != g.map.at("ff");
      if (differ) CHECK(eq.object.carrier.empty());
      for (const auto& h : ms) {
        bool agrees = true;
        for (const auto& z : b.carrier)
          agrees = agrees && f.map.at(h.map.at(z)) == g.map.at(h.map.at(z));
        if (!agrees) continue;
        CHECK(check_factorization(eq, h).ok());
        ++checked;
      }
    }
  CHECK(checked > 16);
}

TEST_CASE("modest sets and PERs") {
  Assembly shared = make("shared", Flavor::Linear, {{"x", {"c"}}, {"y", {"c"}}});
  ModestResult m = is_modest(shared);
  CHECK(m.verdict == Join::No);
  CHECK(m.witness.has_value());
  CHECK_THROWS_AS(modest_to_per(shared), NotModest);
  CHECK(is_modest(make("d", Flavor::Linear, {{"x", {"c1"}}, {"y", {"c2"}}})).verdict ==
        Join::Yes);
  CHECK(is_modest(make("i", Flavor::Linear, {{"x", {"I c"}}, {"y", {"c"}}})).verdict ==
        Join::No);

  Per unit_per = modest_to_per(asm_unit());
  REQUIRE(unit_per.classes.size() == 1);
  CHECK(unit_per.classes.front() == std::vector<Comb>{P("I")});

  Per two{{{P("c1")}, {P("c2")}}};
  Assembly y = per_to_modest(two);
  CHECK(y.carrier.size() == 2);
  CHECK(is_modest(y).verdict == Join::Yes);
  RoundTrip rt = hyland_round_trip(y);
  CHECK(verify_morphism(rt.forward).ok());
  CHECK(verify_morphism(rt.backward).ok());
  CHECK(rt.forward.tracker == P("I"));
  RoundTrip rc = hyland_round_trip(points());
  CHECK(verify_morphism(rc.forward).ok());
  CHECK(verify_morphism(rc.backward).ok());

  CHECK(per_related(two, P("I c1"), P("c1")) == Join::Yes);
  CHECK(per_related(two, P("c1"), P("c2")) == Join::No);
  CHECK(per_related(two, P("c3"), P("c3")) == Join::No);
}

TEST_CASE("per_pi") {
  Assembly one = make("one", Flavor::Cartesian, {{"o", {"c0"}}});
  Per c{{{P("c")}}};
  PerPiResult r = per_pi(one, {{"o", c}}, Flavor::Linear, {P("K c"), P("K c"), P("K c2")});
  REQUIRE(r.per.classes.size() == 1);
  CHECK(r.per.classes.front().size() == 2);
  CHECK(r.missing.empty());

  Per split{{{P("c1")}, {P("c2")}}};
  PerPiResult s = per_pi(one, {{"o", split}}, Flavor::Linear, {P("K c2")});
  REQUIRE(s.per.classes.size() == 1);
  CHECK(per_class_of(split, app_bang(s.per.classes[0][0], P("c0")), 100) == 1u);
  CHECK(s.missing == std::vector<std::string>{"{o:class0}"});

  Assembly none = make("none", Flavor::Cartesian, {});
  PerPiResult e = per_pi(none, {}, Flavor::Linear, {P("c1"), P("K c2")});
  REQUIRE(e.per.classes.size() == 1);
  CHECK(e.per.classes.front().size() == 2);
}

TEST_CASE("model spec parsing") {
  ModelSpec s = parse_model_spec(
      R"({ "flavor": "linear", "carrier": ["x","y"], "realizers": { "x": ["c1"], "y": ["I c2"] } })",
      "inline");
  REQUIRE(s.assembly);
  CHECK(s.assembly->realizers_of("y").front() == P("I c2"));
  CHECK_THROWS_AS(parse_model_spec(R"({ "flavor": "linear", "carrier": ["x"], "realizers": { "x": [] } })", "e"),
                  SpecError);
  CHECK_THROWS_AS(parse_model_spec(R"({ "flavor": "blue", "carrier": [], "realizers": {} })", "f"),
                  SpecError);
  CHECK_THROWS_AS(parse_model_spec("{ not json", "g"), SpecError);
  CHECK_THROWS_AS(load_model_spec(models_dir() + "/invalid/empty_realizer.json"), SpecError);
  CHECK_THROWS_AS(load_model_spec(models_dir() + "/missing.json"), SpecError);
}

TEST_CASE("battery over the shipped model specs") {
  std::vector<Assembly> assemblies;
  std::vector<FamAssembly> families;
  for (const auto& entry : std::filesystem::directory_iterator(models_dir())) {
    if (entry.path().extension() != ".json") continue;
    ModelSpec s = load_model_spec(entry.path().string());
    if (s.assembly) assemblies.push_back(*s.assembly);
    if (s.family) families.push_back(*s.family);
  }
  std::sort(assemblies.begin(), assemblies.end(),
            [](const Assembly& a, const Assembly& b) { return a.name < b.name; });
  REQUIRE(assemblies.size() >= 5);
  REQUIRE(!families.empty());
  BatteryReport r = run_model_battery(assemblies, families);
  for (const auto& l : r.lines)
    if (l.verdict != Verdict::Ok) FAIL_CHECK(l.check << ": " << l.detail);
  CHECK_FALSE(r.failed());
  CHECK(r.equalizer_pairs > 0);
  CHECK(r.factorizations > 0);
  CHECK(r.round_trips >= 4);
  CHECK(r.lpi_elements > 0);
  CHECK(r.per_pi_classes > 0);
}
