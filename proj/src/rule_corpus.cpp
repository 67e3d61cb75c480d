#include "lcr/rule_corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lcr {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> accepted_corpus_files(const std::string& corpus_root) {
  std::vector<std::string> out;
  for (const auto& f : fs::directory_iterator(fs::path(corpus_root) / "lists"))
    if (f.path().extension() == ".ldtt") out.push_back(f.path().string());
  for (const auto& sub : fs::directory_iterator(fs::path(corpus_root) / "rules")) {
    if (!sub.is_directory()) continue;
    for (const auto& f : fs::directory_iterator(sub.path()))
      if (f.path().extension() == ".ldtt" && f.path().filename().string().rfind("pos", 0) == 0)
        out.push_back(f.path().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

RuleCase run_rule_case(const std::string& rule, const std::string& path, KernelOptions options) {
  RuleCase c;
  c.rule = rule;
  c.file = fs::path(path).filename().string();
  std::string src = read_file(path);
  const std::string marker = "-- expect:";
  auto pos = src.find(marker);
  if (pos != std::string::npos) {
    auto end = src.find('\n', pos);
    std::string v = src.substr(pos + marker.size(), end - pos - marker.size());
    v.erase(0, v.find_first_not_of(' '));
    v.erase(v.find_last_not_of(" \r") + 1);
    c.expected = v;
  }
  try {
    ProgramReport r = check_program_report(parse_source(src), options);
    if (r.error) {
      c.actual = std::string(error_kind_name(r.error->kind));
      c.detail = r.error->what();
    } else {
      c.actual = "accept";
    }
  } catch (const LexError& e) {
    c.actual = "LexError";
    c.detail = e.what();
  } catch (const ParseError& e) {
    c.actual = "ParseError";
    c.detail = e.what();
  }
  c.passed = !c.expected.empty() && c.expected == c.actual;
  return c;
}

std::vector<RuleCase> run_rule_corpus(const std::string& dir, KernelOptions options) {
  std::vector<std::pair<std::string, std::string>> files;
  for (const auto& sub : fs::directory_iterator(dir)) {
    if (!sub.is_directory()) continue;
    for (const auto& f : fs::directory_iterator(sub.path()))
      if (f.path().extension() == ".ldtt")
        files.emplace_back(sub.path().filename().string(), f.path().string());
  }
  std::sort(files.begin(), files.end());
  std::vector<RuleCase> out;
  for (const auto& [rule, path] : files) out.push_back(run_rule_case(rule, path, options));
  return out;
}

}  // namespace lcr
