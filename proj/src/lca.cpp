#include "lcr/lca.hpp"

#include <algorithm>

#include "lcr/random.hpp"

namespace lcr {

LcaInstance free_lca() { return LcaInstance{"free", {}}; }

LcaInstance bang_trivial_sk() {
  auto v = [](const char* n) { return Comb::var(n); };
  Comb s = Comb::constant("S");
  Comb k = Comb::constant("Kc");
  LcaInstance inst{"bang-trivial-sk", {}};
  inst.extra_rules.push_back(
      {Comb::apps(s, {v("a"), v("b"), v("c")}),
       Comb::apps(v("a"), {v("c"), Comb::app(v("b"), v("c"))})});
  inst.extra_rules.push_back({Comb::apps(k, {v("a"), v("b")}), v("a")});
  inst.extra_rules.push_back({Comb::bang(v("t")), v("t")});
  return inst;
}

std::string_view join_name(Join j) {
  switch (j) {
    case Join::Yes: return "yes";
    case Join::No: return "no";
    case Join::Unknown: return "unknown";
  }
  return "?";
}

bool match_pattern(const Comb& pattern, const Comb& term,
                   std::vector<std::pair<std::string, Comb>>& subst) {
  switch (pattern.kind()) {
    case Comb::Kind::Var: {
      for (const auto& [name, bound] : subst)
        if (name == pattern.name()) return bound == term;
      subst.emplace_back(pattern.name(), term);
      return true;
    }
    case Comb::Kind::App:
      return term.is(Comb::Kind::App) && match_pattern(pattern.fn(), term.fn(), subst) &&
             match_pattern(pattern.arg(), term.arg(), subst);
    case Comb::Kind::Bang:
      return term.is(Comb::Kind::Bang) && match_pattern(pattern.body(), term.body(), subst);
    default:
      return pattern == term;
  }
}

Comb instantiate_pattern(const Comb& pattern,
                         const std::vector<std::pair<std::string, Comb>>& subst) {
  switch (pattern.kind()) {
    case Comb::Kind::Var:
      for (const auto& [name, bound] : subst)
        if (name == pattern.name()) return bound;
      return pattern;
    case Comb::Kind::App:
      return Comb::app(instantiate_pattern(pattern.fn(), subst),
                       instantiate_pattern(pattern.arg(), subst));
    case Comb::Kind::Bang:
      return Comb::bang(instantiate_pattern(pattern.body(), subst));
    default:
      return pattern;
  }
}

namespace {

// Contracts `t` itself if it is a redex; `t` is viewed as a spine head a1..an.
std::optional<Comb> contract_root(const Comb& t, const LcaInstance& inst) {
  if (t.is(Comb::Kind::App)) {
    // Collect at most three arguments from the spine.
    const Comb* args[3];
    std::size_t n = 0;
    const Comb* cur = &t;
    while (cur->is(Comb::Kind::App) && n < 3) {
      args[n++] = &cur->arg();
      cur = &cur->fn();
    }
    std::reverse(args, args + n);
    bool exact = !cur->is(Comb::Kind::App);
    if (exact && cur->is(Comb::Kind::Combinator)) {
      const Comb& a = *args[0];
      switch (cur->combinator()) {
        case Combinator::I:
          if (n == 1) return a;
          break;
        case Combinator::D:
          if (n == 1 && a.is(Comb::Kind::Bang)) return a.body();
          break;
        case Combinator::Delta:
          if (n == 1 && a.is(Comb::Kind::Bang)) return Comb::bang(a);
          break;
        case Combinator::K:
          if (n == 2 && args[1]->is(Comb::Kind::Bang)) return a;
          break;
        case Combinator::W:
          if (n == 2 && args[1]->is(Comb::Kind::Bang))
            return Comb::apps(a, {*args[1], *args[1]});
          break;
        case Combinator::F:
          if (n == 2 && a.is(Comb::Kind::Bang) && args[1]->is(Comb::Kind::Bang))
            return Comb::bang(Comb::app(a.body(), args[1]->body()));
          break;
        case Combinator::B:
          if (n == 3) return Comb::app(a, Comb::app(*args[1], *args[2]));
          break;
        case Combinator::C:
          if (n == 3) return Comb::apps(a, {*args[2], *args[1]});
          break;
      }
    }
  }
  for (const auto& rule : inst.extra_rules) {
    std::vector<std::pair<std::string, Comb>> subst;
    if (match_pattern(rule.lhs, t, subst)) return instantiate_pattern(rule.rhs, subst);
  }
  return std::nullopt;
}

}  // namespace

std::optional<Comb> step(const Comb& t, const LcaInstance& inst) {
  if (auto r = contract_root(t, inst)) return r;
  switch (t.kind()) {
    case Comb::Kind::App:
      if (auto f = step(t.fn(), inst)) return Comb::app(std::move(*f), t.arg());
      if (auto a = step(t.arg(), inst)) return Comb::app(t.fn(), std::move(*a));
      return std::nullopt;
    case Comb::Kind::Bang:
      if (auto b = step(t.body(), inst)) return Comb::bang(std::move(*b));
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

ReductionResult reduce(const Comb& t, std::size_t fuel, const LcaInstance& inst) {
  ReductionResult r{ReductionStatus::NormalForm, t, 0};
  while (true) {
    auto next = step(r.term, inst);
    if (!next) return r;
    if (r.steps == fuel) {
      r.status = ReductionStatus::FuelExhausted;
      return r;
    }
    r.term = std::move(*next);
    ++r.steps;
  }
}

Join joinable(const Comb& a, const Comb& b, std::size_t fuel, const LcaInstance& inst) {
  ReductionResult ra = reduce(a, fuel, inst);
  ReductionResult rb = reduce(b, fuel, inst);
  if (ra.status != ReductionStatus::NormalForm || rb.status != ReductionStatus::NormalForm)
    return Join::Unknown;
  return ra.term == rb.term ? Join::Yes : Join::No;
}

// ---------------------------------------------------------------------------

std::string_view identity_name(Identity id) {
  switch (id) {
    case Identity::B: return "B a b c = a (b c)";
    case Identity::I: return "I a = a";
    case Identity::C: return "C a b c = a c b";
    case Identity::W: return "W a !b = a !b !b";
    case Identity::K: return "K a !b = a";
    case Identity::D: return "D !a = a";
    case Identity::Delta: return "d !a = !!a";
    case Identity::F: return "F !a !b = !(a b)";
  }
  return "?";
}

int identity_arity(Identity id) {
  switch (id) {
    case Identity::B:
    case Identity::C: return 3;
    case Identity::W:
    case Identity::K:
    case Identity::F: return 2;
    default: return 1;
  }
}

std::pair<Comb, Comb> identity_instance(Identity id, const std::vector<Comb>& args) {
  auto c = [](Combinator k) { return Comb::comb(k); };
  const Comb& a = args.at(0);
  switch (id) {
    case Identity::B:
      return {Comb::apps(c(Combinator::B), {a, args[1], args[2]}),
              Comb::app(a, Comb::app(args[1], args[2]))};
    case Identity::I:
      return {Comb::app(c(Combinator::I), a), a};
    case Identity::C:
      return {Comb::apps(c(Combinator::C), {a, args[1], args[2]}),
              Comb::apps(a, {args[2], args[1]})};
    case Identity::W: {
      Comb b = Comb::bang(args[1]);
      return {Comb::apps(c(Combinator::W), {a, b}), Comb::apps(a, {b, b})};
    }
    case Identity::K:
      return {Comb::apps(c(Combinator::K), {a, Comb::bang(args[1])}), a};
    case Identity::D:
      return {Comb::app(c(Combinator::D), Comb::bang(a)), a};
    case Identity::Delta:
      return {Comb::app(c(Combinator::Delta), Comb::bang(a)), Comb::bang(Comb::bang(a))};
    case Identity::F:
      return {Comb::apps(c(Combinator::F), {Comb::bang(a), Comb::bang(args[1])}),
              Comb::bang(Comb::app(a, args[1]))};
  }
  return {a, a};
}

bool IdentityReport::ok() const {
  return std::all_of(outcomes.begin(), outcomes.end(),
                     [](const IdentityOutcome& o) { return o.failed == 0; });
}

std::size_t IdentityReport::unknown_total() const {
  std::size_t n = 0;
  for (const auto& o : outcomes) n += o.unknown;
  return n;
}

namespace {

struct SampleResult {
  Join verdict = Join::Yes;
  Comb lhs, rhs;
};

SampleResult check_identity_sample(Identity id, std::size_t sample, std::uint64_t seed,
                                   std::size_t fuel, std::size_t max_arg_size) {
  Rng rng(mix_seed(seed, static_cast<std::uint64_t>(id), sample));
  TermShape shape;
  shape.max_size = max_arg_size;
  std::vector<Comb> args;
  for (int i = 0; i < identity_arity(id); ++i)
    args.push_back(random_normalizing_term(rng, shape, fuel / 10));
  auto [lhs, rhs] = identity_instance(id, args);
  return {joinable(lhs, rhs, fuel), std::move(lhs), std::move(rhs)};
}

IdentityReport aggregate(const LcaInstance& inst,
                         const std::vector<std::vector<SampleResult>>& results) {
  IdentityReport report{inst.name, {}};
  for (int k = 0; k < kIdentityCount; ++k) {
    IdentityOutcome out{static_cast<Identity>(k), 0, 0, 0, std::nullopt};
    for (const auto& r : results[k]) {
      switch (r.verdict) {
        case Join::Yes: ++out.passed; break;
        case Join::Unknown: ++out.unknown; break;
        case Join::No:
          ++out.failed;
          if (!out.witness) out.witness = std::make_pair(r.lhs, r.rhs);
          break;
      }
    }
    report.outcomes.push_back(std::move(out));
  }
  return report;
}

// Identities are checked in the instance's rewrite system; the samples only
// draw on free constants, so extra rules never interfere with the guards.
SampleResult check_in_instance(const LcaInstance& inst, Identity id, std::size_t sample,
                               std::uint64_t seed, std::size_t fuel,
                               std::size_t max_arg_size) {
  SampleResult r = check_identity_sample(id, sample, seed, fuel, max_arg_size);
  if (!inst.extra_rules.empty()) r.verdict = joinable(r.lhs, r.rhs, fuel, inst);
  return r;
}

}  // namespace

IdentityReport verify_identities(const LcaInstance& inst, std::size_t samples,
                                 std::uint64_t seed, std::size_t fuel,
                                 std::size_t max_arg_size) {
  std::vector<std::vector<SampleResult>> results(kIdentityCount,
                                                 std::vector<SampleResult>(samples));
  const long long total = static_cast<long long>(kIdentityCount * samples);
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < total; ++i) {
    int k = static_cast<int>(i / static_cast<long long>(samples));
    std::size_t s = static_cast<std::size_t>(i % static_cast<long long>(samples));
    results[k][s] =
        check_in_instance(inst, static_cast<Identity>(k), s, seed, fuel, max_arg_size);
  }
  return aggregate(inst, results);
}

IdentityReport verify_identities_serial(const LcaInstance& inst, std::size_t samples,
                                        std::uint64_t seed, std::size_t fuel,
                                        std::size_t max_arg_size) {
  std::vector<std::vector<SampleResult>> results(kIdentityCount);
  for (int k = 0; k < kIdentityCount; ++k)
    for (std::size_t s = 0; s < samples; ++s)
      results[k].push_back(
          check_in_instance(inst, static_cast<Identity>(k), s, seed, fuel, max_arg_size));
  return aggregate(inst, results);
}

}  // namespace lcr
