#include <map>
#include <random>

#include "doctest.h"
#include "lcr/kernel.hpp"
#include "lcr/rule_corpus.hpp"

using namespace lcr;

namespace {

struct Program {
  std::string file;
  Env env;
};

const std::vector<Program>& corpus() {
  static const std::vector<Program> programs = [] {
    std::vector<Program> out;
    for (const auto& f : accepted_corpus_files(std::string(LCR_SOURCE_DIR) + "/corpus"))
      out.push_back({f, check_program(parse_source(read_file(f)))});
    return out;
  }();
  return programs;
}

std::vector<const GlobalDef*> terms(const Env& env) {
  std::vector<const GlobalDef*> out;
  for (const auto& n : env.order())
    if (!env.find(n)->is_type()) out.push_back(env.find(n));
  return out;
}

// Term declarations of one program grouped by normalized type.
std::map<std::string, std::vector<const GlobalDef*>> by_type(const Env& env) {
  std::map<std::string, std::vector<const GlobalDef*>> groups;
  for (const auto* g : terms(env)) groups[print_expr(g->normalized_type)].push_back(g);
  return groups;
}

}  // namespace

TEST_CASE("corpus is nonempty") { CHECK(corpus().size() >= 27); }

TEST_CASE("subject reduction on corpus terms") {
  std::size_t checked = 0;
  for (const auto& p : corpus()) {
    Kernel k(p.env);
    for (const auto* g : terms(p.env)) {
      auto n = k.normalize(Ctx{}, g->body);
      REQUIRE(n);
      INFO(p.file << " " << g->name << " nf " << print_expr(*n));
      Ctx ctx;
      try {
        Typed t = k.check(ctx, *n, g->type);
        CHECK(t.usage.empty());
        Typed i = k.infer(ctx, Expr::global(g->name));
        CHECK(k.def_eq(ctx, i.type, g->type) == Equality::Equal);
        ++checked;
      } catch (const TypeError& e) {
        FAIL_CHECK(e.what());
      }
    }
  }
  CHECK(checked >= 60);
}

TEST_CASE("def_eq is an equivalence on corpus terms") {
  std::mt19937 rng(7);
  std::size_t triples = 0;
  for (const auto& p : corpus()) {
    Kernel k(p.env);
    Ctx ctx;
    for (const auto& [type, group] : by_type(p.env)) {
      std::vector<Expr> xs;
      for (const auto* g : group) {
        xs.push_back(Expr::global(g->name));
        xs.push_back(g->body);
        if (auto n = k.normalize(ctx, g->body)) xs.push_back(*n);
      }
      const Expr& ty = group.front()->type;
      std::uniform_int_distribution<std::size_t> pick(0, xs.size() - 1);
      for (const auto& x : xs) CHECK(k.def_eq(ctx, x, x, ty) == Equality::Equal);
      for (int s = 0; s < 40; ++s) {
        const Expr& a = xs[pick(rng)];
        const Expr& b = xs[pick(rng)];
        const Expr& c = xs[pick(rng)];
        Equality ab = k.def_eq(ctx, a, b, ty);
        Equality ba = k.def_eq(ctx, b, a, ty);
        INFO(p.file << " " << print_expr(a) << " / " << print_expr(b) << " / " << print_expr(c));
        CHECK((ab == Equality::Equal) == (ba == Equality::Equal));
        if (ab == Equality::Equal && k.def_eq(ctx, b, c, ty) == Equality::Equal)
          CHECK(k.def_eq(ctx, a, c, ty) == Equality::Equal);
        ++triples;
      }
    }
  }
  CHECK(triples >= 1000);
}

TEST_CASE("M is injective on corpus terms") {
  std::size_t equal = 0;
  for (const auto& p : corpus()) {
    Kernel k(p.env);
    Ctx ctx;
    for (const auto& [type, group] : by_type(p.env)) {
      if (k.sort_of(group.front()->type) != Sort::Lin) continue;
      Expr mty = Expr::unary(Tag::M, group.front()->type);
      std::vector<Expr> xs;
      for (const auto* g : group) {
        xs.push_back(Expr::global(g->name));
        if (auto n = k.normalize(ctx, g->body)) xs.push_back(*n);
      }
      for (const auto& a : xs)
        for (const auto& b : xs) {
          if (k.def_eq(ctx, Expr::unary(Tag::M, a), Expr::unary(Tag::M, b), mty) != Equality::Equal)
            continue;
          ++equal;
          INFO(p.file << " " << print_expr(a) << " / " << print_expr(b));
          CHECK(k.def_eq(ctx, a, b, group.front()->type) == Equality::Equal);
        }
    }
  }
  CHECK(equal >= 50);
}

namespace {

bool is_code(Tag t) {
  switch (t) {
    case Tag::CodePi: case Tag::CodeLpi: case Tag::CodeLolli: case Tag::CodeBang:
    case Tag::CodeEq: case Tag::CodeTUnit:
      return true;
    default:
      return false;
  }
}

void collect_codes(const Expr& e, std::map<std::string, Expr>& out) {
  if (!e) return;
  if (is_code(e.tag()) && e.loose_range() == 0 && !e.has_fvar()) out.emplace(print_expr(e), e);
  collect_codes(e.a(), out);
  collect_codes(e.b(), out);
  collect_codes(e.c(), out);
}

}  // namespace

TEST_CASE("decoding commutes with normalizing codes") {
  std::size_t codes = 0;
  for (const auto& p : corpus()) {
    Kernel k(p.env);
    std::map<std::string, Expr> cs;
    for (const auto& n : p.env.order()) {
      const GlobalDef* g = p.env.find(n);
      if (!g->is_type() && k.whnf(g->type).is(Tag::U)) cs.emplace(n, Expr::global(n));
      collect_codes(g->body, cs);
      collect_codes(g->type, cs);
    }
    for (const auto& [text, code] : cs) {
      Ctx ctx;
      INFO(p.file << " " << text);
      UniverseFacts f = k.check_universe(ctx, code);
      auto nc = k.normalize(ctx, f.code);
      REQUIRE(nc);
      auto lin = k.normalize(ctx, Expr::unary(Tag::ElL, *nc));
      auto cart = k.normalize(ctx, Expr::unary(Tag::ElC, *nc));
      REQUIRE(lin);
      REQUIRE(cart);
      CHECK(alpha_eq(*lin, f.el_linear));
      CHECK(alpha_eq(*cart, f.el_cartesian));
      CHECK(k.sort_of(f.el_linear) == Sort::Lin);
      CHECK(k.sort_of(f.el_cartesian) == Sort::Cart);
      ++codes;
    }
  }
  CHECK(codes >= 10);
}
