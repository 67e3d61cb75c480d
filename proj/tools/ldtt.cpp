// ldtt: batch front end over the checker, extraction and the model battery.
// Exit codes: 0 pass, 1 semantic failure, 2 input error, 3 inconclusive.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lcr/encodings.hpp"
#include "lcr/extraction.hpp"
#include "lcr/kernel.hpp"
#include "lcr/model_battery.hpp"
#include "lcr/rule_corpus.hpp"
#include "lcr/suites.hpp"

using json = nlohmann::ordered_json;
using namespace lcr;

namespace {

constexpr const char* kSchema = "ldtt-report/1";

enum Exit { kPass = 0, kFail = 1, kInput = 2, kInconclusive = 3 };

struct Config {
  std::size_t fuel = 10000;
  std::uint64_t seed = 0;
  std::string format = "text";
  bool json() const { return format == "json"; }
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Decl> parse_file(const std::string& path) {
  std::string text = slurp(path);
  try {
    return parse_source(text);
  } catch (const LexError& e) {
    throw InputError(path + ":" + e.what());
  } catch (const ParseError& e) {
    throw InputError(path + ":" + e.what());
  }
}

int emit(const Config& cfg, json report, int code, const std::string& text) {
  if (cfg.json()) {
    report["exit"] = code;
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << text;
  }
  return code;
}

int input_error(const Config& cfg, const std::string& command, const std::string& message) {
  if (cfg.json()) {
    json r = {{"schema", kSchema}, {"command", command}, {"error", message}, {"exit", kInput}};
    std::cout << r.dump(2) << "\n";
  } else {
    std::cerr << "error: " << message << "\n";
  }
  return kInput;
}

json decl_json(const DeclReport& d) {
  json j = {{"name", d.name}, {"status", d.accepted ? "accepted" : "rejected"}};
  if (d.accepted) j["type"] = d.normalized_type;
  if (d.error) {
    j["error"] = {{"kind", error_kind_name(d.error->kind)},
                  {"line", d.error->loc.line},
                  {"column", d.error->loc.column},
                  {"message", d.error->message}};
    if (!d.error->expected.empty()) j["error"]["expected"] = d.error->expected;
    if (!d.error->actual.empty()) j["error"]["actual"] = d.error->actual;
  }
  return j;
}

int cmd_check(const Config& cfg, const std::vector<std::string>& files) {
  json report = {{"schema", kSchema}, {"command", "check"}, {"files", json::array()}};
  std::ostringstream text;
  int code = kPass;
  for (const auto& f : files) {
    std::vector<Decl> decls;
    try {
      decls = parse_file(f);
    } catch (const InputError& e) {
      return input_error(cfg, "check", e.what());
    }
    ProgramReport r = check_program_report(decls, KernelOptions{cfg.fuel});
    json fj = {{"file", f}, {"declarations", json::array()}};
    for (const auto& d : r.decls) {
      fj["declarations"].push_back(decl_json(d));
      if (d.accepted)
        text << f << ": " << d.name << " : " << d.normalized_type << "\n";
      else if (d.error)
        text << f << ":" << d.error->what() << "  [in " << d.name << "]\n";
      if (d.error && !d.error->expected.empty())
        text << "  expected: " << d.error->expected << "\n  actual:   " << d.error->actual << "\n";
    }
    if (r.error) code = kFail;
    fj["ok"] = r.ok();
    report["files"].push_back(fj);
  }
  text << (code == kPass ? "ok" : "rejected") << "\n";
  return emit(cfg, report, code, text.str());
}

// Argument i is passed banged when the i-th binder of the declared type is cartesian.
std::vector<bool> cartesian_arguments(const Kernel& k, Expr type, std::size_t n) {
  std::vector<bool> out;
  while (out.size() < n) {
    Expr w = k.whnf(type);
    if (w.is(Tag::M) || w.is(Tag::L)) {
      type = w.a();
    } else if (w.is(Tag::Pi) || w.is(Tag::Lpi)) {
      out.push_back(true);
      type = instantiate1(w.b(), Expr::fvar(fresh_id(), w.name(), false));
    } else if (w.is(Tag::Lolli)) {
      out.push_back(false);
      type = w.b();
    } else {
      throw InputError("too many arguments for type " + print_expr(type));
    }
  }
  return out;
}

int cmd_eval(const Config& cfg, const std::string& file, const std::string& name,
             const std::vector<std::string>& args) {
  std::vector<Decl> decls;
  try {
    decls = parse_file(file);
  } catch (const InputError& e) {
    return input_error(cfg, "eval", e.what());
  }
  ProgramReport r = check_program_report(decls, KernelOptions{cfg.fuel});
  const GlobalDef* g = r.env.find(name);
  if (!g) {
    if (r.error && r.error->decl == name) {
      json report = {{"schema", kSchema}, {"command", "eval"}, {"declaration", name},
                     {"error", r.error->what()}};
      return emit(cfg, report, kFail, std::string(r.error->what()) + "\n");
    }
    return input_error(cfg, "eval", "no accepted declaration " + name);
  }
  if (g->is_type()) return input_error(cfg, "eval", name + " is a type");
  Kernel k(r.env, KernelOptions{cfg.fuel});
  Comb t = extract_decl(r.env, name);
  try {
    std::vector<bool> bang = cartesian_arguments(k, g->type, args.size());
    for (std::size_t i = 0; i < args.size(); ++i) {
      Comb a = parse_comb(args[i]);
      t = bang[i] ? app_bang(t, a) : Comb::app(t, a);
    }
  } catch (const std::exception& e) {
    return input_error(cfg, "eval", e.what());
  }
  ReductionResult res = reduce(t, cfg.fuel);
  bool nf = res.status == ReductionStatus::NormalForm;
  json report = {{"schema", kSchema},
                 {"command", "eval"},
                 {"declaration", name},
                 {"input", t.str()},
                 {"status", nf ? "NormalForm" : "FuelExhausted"},
                 {"steps", res.steps},
                 {"term", res.term.str()}};
  std::ostringstream text;
  text << res.term.str() << "\n"
       << (nf ? "NormalForm" : "FuelExhausted") << " after " << res.steps << " steps\n";
  return emit(cfg, report, nf ? kPass : kInconclusive, text.str());
}

int cmd_extract(const Config& cfg, const std::vector<std::string>& files) {
  json report = {{"schema", kSchema}, {"command", "extract"}, {"files", json::array()}};
  std::ostringstream text;
  int code = kPass;
  for (const auto& f : files) {
    std::vector<Decl> decls;
    try {
      decls = parse_file(f);
    } catch (const InputError& e) {
      return input_error(cfg, "extract", e.what());
    }
    ProgramReport r = check_program_report(decls, KernelOptions{cfg.fuel});
    json fj = {{"file", f}, {"realizers", json::array()}};
    Extractor x(r.env);
    for (const auto& n : r.env.order()) {
      if (r.env.find(n)->is_type()) continue;
      std::string s = x.decl(n).str();
      fj["realizers"].push_back({{"name", n}, {"realizer", s}});
      text << n << " = " << s << "\n";
    }
    if (r.error) {
      code = kFail;
      fj["error"] = r.error->what();
      text << f << ":" << r.error->what() << "  [in " << r.error->decl << "]\n";
    }
    report["files"].push_back(fj);
  }
  return emit(cfg, report, code, text.str());
}

json suite_json(const SuiteReport& s) {
  json j = {{"name", s.name},
            {"samples", s.samples},
            {"passed", s.passed},
            {"failed", s.failed},
            {"unknown", s.unknown}};
  if (s.witness) j["witness"] = *s.witness;
  return j;
}

std::string suite_line(const SuiteReport& s) {
  std::ostringstream o;
  o << s.name << ": " << s.passed << "/" << s.samples << " passed, " << s.failed << " failed, "
    << s.unknown << " unknown";
  if (s.witness) o << "  witness " << *s.witness;
  return o.str();
}

int cmd_lca_verify(const Config& cfg, std::size_t samples) {
  IdentityReport ids = verify_identities(free_lca(), samples, cfg.seed, cfg.fuel);
  std::vector<SuiteReport> suites = {completeness_linear(samples, cfg.seed, cfg.fuel),
                                     completeness_bang(samples, cfg.seed, cfg.fuel)};
  json report = {{"schema", kSchema},
                 {"command", "lca-verify"},
                 {"samples", samples},
                 {"seed", cfg.seed},
                 {"fuel", cfg.fuel},
                 {"identities", json::array()},
                 {"suites", json::array()}};
  std::ostringstream text;
  std::size_t id_ok = 0, id_failed = 0, unknown = 0, suites_ok = 0, suites_failed = 0;
  for (const auto& o : ids.outcomes) {
    json j = {{"identity", identity_name(o.identity)},
              {"passed", o.passed},
              {"failed", o.failed},
              {"unknown", o.unknown}};
    if (o.witness) j["witness"] = {o.witness->first.str(), o.witness->second.str()};
    report["identities"].push_back(j);
    text << identity_name(o.identity) << ": " << o.passed << " passed, " << o.failed << " failed, "
         << o.unknown << " unknown\n";
    if (o.failed) ++id_failed;
    else if (!o.unknown) ++id_ok;
    unknown += o.unknown;
  }
  for (const auto& s : suites) {
    report["suites"].push_back(suite_json(s));
    text << suite_line(s) << "\n";
    if (s.failed) ++suites_failed;
    else if (!s.unknown) ++suites_ok;
    unknown += s.unknown;
  }
  text << id_ok << "/" << ids.outcomes.size() << " identities, " << suites_ok << "/"
       << suites.size() << " completeness suites pass\n";
  int code = id_failed || suites_failed ? kFail : unknown ? kInconclusive : kPass;
  return emit(cfg, report, code, text.str());
}

std::vector<std::string> expand_specs(const std::vector<std::string>& paths) {
  std::vector<std::string> out;
  for (const auto& p : paths) {
    if (std::filesystem::is_directory(p)) {
      std::vector<std::string> dir;
      for (const auto& e : std::filesystem::directory_iterator(p))
        if (e.path().extension() == ".json") dir.push_back(e.path().string());
      std::sort(dir.begin(), dir.end());
      out.insert(out.end(), dir.begin(), dir.end());
    } else {
      out.push_back(p);
    }
  }
  return out;
}

int cmd_model_check(const Config& cfg, const std::vector<std::string>& paths) {
  std::vector<Assembly> assemblies;
  std::vector<FamAssembly> families;
  for (const auto& p : expand_specs(paths)) {
    try {
      ModelSpec s = parse_model_spec(slurp(p), std::filesystem::path(p).stem().string());
      if (s.assembly) assemblies.push_back(*s.assembly);
      if (s.family) families.push_back(*s.family);
    } catch (const std::exception& e) {
      return input_error(cfg, "model-check", p + ": " + e.what());
    }
  }
  BatteryOptions opts;
  opts.fuel = cfg.fuel;
  BatteryReport r = run_model_battery(assemblies, families, opts);
  json report = {{"schema", kSchema},
                 {"command", "model-check"},
                 {"assemblies", assemblies.size()},
                 {"families", families.size()},
                 {"lines", json::array()}};
  std::ostringstream text;
  for (const auto& l : r.lines) {
    report["lines"].push_back(
        {{"check", l.check}, {"verdict", verdict_name(l.verdict)}, {"detail", l.detail}});
    text << verdict_name(l.verdict) << "  " << l.check;
    if (!l.detail.empty()) text << "  " << l.detail;
    text << "\n";
  }
  report["counts"] = {{"morphisms", r.morphisms},
                      {"equalizer_pairs", r.equalizer_pairs},
                      {"factorizations", r.factorizations},
                      {"round_trips", r.round_trips},
                      {"lpi_elements", r.lpi_elements},
                      {"per_pi_classes", r.per_pi_classes}};
  text << r.morphisms << " morphisms, " << r.equalizer_pairs << " equalizer pairs, "
       << r.factorizations << " factorizations, " << r.round_trips << " round trips\n";
  int code = r.failed() ? kFail : r.inconclusive() ? kInconclusive : kPass;
  return emit(cfg, report, code, text.str());
}

json check_json(const EquationCheck& c) {
  json j = {{"name", c.name},
            {"lhs", c.lhs},
            {"rhs", c.rhs},
            {"kernel", equality_name(c.kernel)},
            {"expected", equality_name(c.expected)},
            {"hypotheses", c.used_hypotheses},
            {"ok", c.ok()}};
  if (c.realizer) j["realizer"] = join_name(*c.realizer);
  if (!c.error.empty()) j["error"] = c.error;
  return j;
}

int cmd_lists(const Config& cfg, const std::string& file, std::size_t samples) {
  Env env;
  try {
    env = check_program(parse_file(file), KernelOptions{cfg.fuel});
  } catch (const InputError& e) {
    return input_error(cfg, "lists", e.what());
  } catch (const TypeError& e) {
    json report = {{"schema", kSchema}, {"command", "lists"}, {"error", e.what()}};
    return emit(cfg, report, kFail, std::string(e.what()) + "\n");
  }
  KernelOptions opts{cfg.fuel};
  auto instances = shipped_instances();
  instances.push_back(symbolic_instance());
  std::vector<EncodingReport> reports = {check_weak_rules(env, opts),
                                         check_lemma_nil_cons(env, instances, opts),
                                         check_initiality_instance(env, list_algebra(), samples, opts)};
  for (const auto& a : shipped_algebras())
    reports.push_back(check_initiality_instance(env, a, samples, opts));
  EncodingReport nonstandard;
  nonstandard.name = "nonstandard";
  nonstandard.checks.push_back(check_nonstandard(env, opts));
  reports.push_back(nonstandard);

  json report = {{"schema", kSchema}, {"command", "lists"}, {"reports", json::array()}};
  std::ostringstream text;
  bool failed = false, unknown = false;
  for (const auto& r : reports) {
    json rj = {{"name", r.name}, {"ok", r.ok()}, {"checks", json::array()}};
    for (const auto& c : r.checks) {
      rj["checks"].push_back(check_json(c));
      text << (c.ok() ? "ok   " : "FAIL ") << r.name << "/" << c.name << "  kernel "
           << equality_name(c.kernel);
      if (c.realizer) text << ", realizer " << join_name(*c.realizer);
      if (!c.error.empty()) text << "  " << c.error;
      text << "\n";
      if (!c.ok()) {
        bool undecided = c.error.empty() && (c.kernel == Equality::Unknown ||
                                             (c.realizer && *c.realizer == Join::Unknown));
        (undecided ? unknown : failed) = true;
      }
    }
    report["reports"].push_back(rj);
  }
  int code = failed ? kFail : unknown ? kInconclusive : kPass;
  return emit(cfg, report, code, text.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear dependent type theory workbench"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--fuel", cfg.fuel, "reduction and normalization step bound")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for sampled suites");
  app.add_option("--format", cfg.format, "report format")->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> files;
  auto* check = app.add_subcommand("check", "type-check .ldtt files");
  check->add_option("files", files, "source files")->required();

  std::string eval_file, eval_decl;
  std::vector<std::string> eval_args;
  auto* eval = app.add_subcommand("eval", "extract a declaration, apply arguments and reduce");
  eval->add_option("file", eval_file)->required();
  eval->add_option("decl", eval_decl)->required();
  eval->add_option("args", eval_args, "argument terms; cartesian positions are banged");

  auto* extract = app.add_subcommand("extract", "print the realizer of every term declaration");
  extract->add_option("files", files, "source files")->required();

  std::size_t samples = 1000;
  auto* verify = app.add_subcommand("lca-verify", "combinator identities and completeness suites");
  verify->add_option("--samples", samples, "instances per identity and suite")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> specs;
  auto* model = app.add_subcommand("model-check", "run the assemblies battery over JSON specs");
  model->add_option("specs", specs, "spec files or directories")->required();

  std::string lists_file = "corpus/lists/lists.ldtt";
  std::size_t lengths = 3;
  auto* lists = app.add_subcommand("lists", "equational checks of the list encoding");
  lists->add_option("file", lists_file, "list corpus");
  lists->add_option("--lengths", lengths, "sample lists of length below this bound");

  for (auto* sub : {check, eval, extract, verify, model, lists}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kInput;
  }

  try {
    if (*check) return cmd_check(cfg, files);
    if (*eval) return cmd_eval(cfg, eval_file, eval_decl, eval_args);
    if (*extract) return cmd_extract(cfg, files);
    if (*verify) return cmd_lca_verify(cfg, samples);
    if (*model) return cmd_model_check(cfg, specs);
    if (*lists) return cmd_lists(cfg, lists_file, lengths);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
