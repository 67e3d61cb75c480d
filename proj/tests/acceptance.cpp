// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "lcr/encodings.hpp"
#include "lcr/extraction.hpp"
#include "lcr/lca.hpp"
#include "lcr/model_battery.hpp"
#include "lcr/rule_corpus.hpp"
#include "lcr/suites.hpp"

using namespace lcr;

namespace {

const std::string kRoot = LCR_SOURCE_DIR;
constexpr std::uint64_t kSeed = 20240601;
constexpr std::size_t kSamples = 1000;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string suite_text(const SuiteReport& s) {
  std::ostringstream o;
  o << s.name << " " << s.passed << "/" << s.samples << " (failed " << s.failed << ", unknown "
    << s.unknown << ")";
  return o.str();
}

Outcome combinator_laws() {
  auto t0 = std::chrono::steady_clock::now();
  IdentityReport r = verify_identities(free_lca(), kSamples, kSeed, 10000, 8);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::size_t holding = 0;
  for (const auto& o : r.outcomes)
    if (o.passed == kSamples) ++holding;
  std::ostringstream d;
  d << holding << "/8 identities hold on " << kSamples << " instances each, " << secs << " s";
  return {holding == 8 && r.outcomes.size() == 8 && secs < 10.0, d.str()};
}

Outcome completeness() {
  SuiteReport lin = completeness_linear(kSamples, kSeed, kDefaultFuel, 12);
  SuiteReport bang = completeness_bang(kSamples, kSeed, kDefaultFuel, 12);
  bool ok = lin.failed == 0 && bang.failed == 0 && lin.unknown_rate() < 0.01 &&
            bang.unknown_rate() < 0.01 && lin.samples == kSamples && bang.samples == kSamples;
  return {ok, suite_text(lin) + "; " + suite_text(bang)};
}

Outcome derived_cca() {
  SuiteReport r = derived_cca_laws(kSamples, kSeed, kDefaultFuel, 8);
  return {r.failed == 0 && r.samples == kSamples, suite_text(r)};
}

Outcome rule_suite() {
  const std::set<std::string> required = {
      "lpi-f", "lpi-i", "lpi-e", "lpi-beta", "lpi-eta", "m-f",  "m-i",      "m-e",
      "m-beta", "m-eta", "eq-f", "eq-i",    "eq-e",    "eq-beta1", "eq-beta2", "eq-eta",
      "m-inj", "lpi-funext", "u-f", "el",   "pihat",   "lpihat"};
  auto cases = run_rule_corpus(kRoot + "/corpus/rules");
  std::map<std::string, std::pair<int, int>> per_rule;  // positives, negatives
  std::size_t failed = 0;
  std::string first;
  for (const auto& c : cases) {
    auto& [pos, neg] = per_rule[c.rule];
    (c.expected == "accept" ? pos : neg)++;
    if (!c.passed) {
      ++failed;
      if (first.empty()) first = c.rule + "/" + c.file + " expected " + c.expected + ", got " + c.actual;
    }
  }
  std::size_t covered = 0;
  std::string missing;
  for (const auto& r : required) {
    auto it = per_rule.find(r);
    if (it != per_rule.end() && it->second.first > 0 && it->second.second > 0) ++covered;
    else missing += " " + r;
  }
  std::ostringstream d;
  d << cases.size() << " cases over " << per_rule.size() << " rules, " << covered << "/"
    << required.size() << " required rules with both polarities, " << failed << " wrong";
  if (!missing.empty()) d << "; missing" << missing;
  if (!first.empty()) d << "; first: " << first;
  return {failed == 0 && covered == required.size(), d.str()};
}

Outcome extraction() {
  std::size_t pairs = 0, non_delta = 0, failed = 0, unknown = 0;
  std::string witness;
  for (const auto& file : accepted_corpus_files(kRoot + "/corpus")) {
    Env env = check_program(parse_source(read_file(file)));
    auto ps = soundness_pairs(env);
    pairs += ps.size();
    for (const auto& p : ps)
      if (p.origin.size() < 6 || p.origin.substr(p.origin.size() - 6) != ":delta") ++non_delta;
    SuiteReport r = extraction_soundness(env, ps, 100000);
    failed += r.failed;
    unknown += r.unknown;
    if (r.witness && witness.empty()) witness = *r.witness;
  }
  std::ostringstream d;
  d << pairs << " equal pairs (" << non_delta << " beyond unfolding), " << failed
    << " not joinable, " << unknown << " undecided";
  if (!witness.empty()) d << "; witness " << witness;
  return {pairs >= 50 && failed == 0, d.str()};
}

Outcome model_battery() {
  std::vector<Assembly> assemblies;
  std::vector<FamAssembly> families;
  std::vector<std::string> files;
  for (const auto& e : std::filesystem::directory_iterator(kRoot + "/corpus/models"))
    if (e.path().extension() == ".json") files.push_back(e.path().string());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    ModelSpec s = load_model_spec(f);
    if (s.assembly) assemblies.push_back(*s.assembly);
    if (s.family) families.push_back(*s.family);
  }
  std::size_t modest = 0;
  for (const auto& a : assemblies)
    if (is_modest(a).verdict == Join::Yes) ++modest;
  BatteryReport r = run_model_battery(assemblies, families);
  std::string first;
  for (const auto& l : r.lines)
    if (l.verdict != Verdict::Ok && first.empty()) first = l.check + ": " + l.detail;
  std::ostringstream d;
  d << assemblies.size() << " assemblies, " << families.size() << " families; "
    << r.equalizer_pairs << " parallel pairs, " << r.factorizations << " factorizations, "
    << r.round_trips << "/" << modest << " modest round trips, " << r.lpi_elements
    << " fam_lpi elements, " << r.per_pi_classes << " per_pi classes";
  if (!first.empty()) d << "; first problem: " << first;
  bool ok = !r.failed() && !r.inconclusive() && r.equalizer_pairs > 0 && r.factorizations > 0 &&
            modest > 0 && r.round_trips == modest && r.lpi_elements > 0 && r.per_pi_classes > 0;
  return {ok, d.str()};
}

Outcome lists_demo() {
  auto t0 = std::chrono::steady_clock::now();
  Env env = load_lists_corpus(kRoot + "/corpus/lists/lists.ldtt");
  std::vector<std::string> problems;
  auto note = [&](const EncodingReport& r) {
    if (const EquationCheck* c = r.first_failure()) problems.push_back(r.name + "/" + c->name);
  };

  EncodingReport weak = check_weak_rules(env);
  note(weak);
  bool realized = true;
  for (const auto& c : weak.checks) realized = realized && c.realizer && *c.realizer == Join::Yes;

  auto instances = shipped_instances();
  instances.push_back(symbolic_instance());
  EncodingReport lemma = check_lemma_nil_cons(env, instances);
  note(lemma);
  std::set<std::string> validated;
  for (std::size_t i = 0; i + 1 < lemma.checks.size(); i += 2)
    if (lemma.checks[i].ok() && lemma.checks[i + 1].ok())
      validated.insert(lemma.checks[i].name.substr(0, lemma.checks[i].name.find(':')));

  EncodingReport init = check_initiality_instance(env, list_algebra(), 3);
  note(init);
  std::size_t roundtrips = 0;
  for (const auto& c : init.checks)
    if (c.name.find(":roundtrip") != std::string::npos && c.ok()) ++roundtrips;
  for (const auto& a : shipped_algebras()) note(check_initiality_instance(env, a, 3));

  EquationCheck ns = check_nonstandard(env);
  if (!ns.ok()) problems.push_back("nonstandard");

  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream d;
  d << "weak rules " << weak.checks.size() << " (realizers " << (realized ? "joinable" : "NOT joinable")
    << "), lemma on " << validated.size() << " instances, " << roundtrips
    << "/3 round trips, non-standard element " << equality_name(ns.kernel) << ", " << secs << " s";
  for (const auto& p : problems) d << "; failed " << p;
  bool ok = problems.empty() && realized && validated.size() >= 2 && roundtrips == 3 && secs < 120;
  return {ok, d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"combinator laws", combinator_laws},
      {"combinatory completeness", completeness},
      {"derived cca", derived_cca},
      {"kernel rule suite", rule_suite},
      {"extraction soundness", extraction},
      {"model battery", model_battery},
      {"list encoding", lists_demo},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("criterion %zu %s  %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL",
                criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
