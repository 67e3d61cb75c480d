#pragma once

// Golden rule corpus: one directory per rule, each file headed by
// `-- expect: accept` or `-- expect: <ErrorKind>`.

#include <string>
#include <vector>

#include "lcr/kernel.hpp"

namespace lcr {

struct RuleCase {
  std::string rule;
  std::string file;
  std::string expected;  ///< "accept" or an error kind name
  std::string actual;
  std::string detail;  ///< error message when rejected
  bool passed = false;
};

RuleCase run_rule_case(const std::string& rule, const std::string& path,
                       KernelOptions options = {});
/// Cases sorted by rule, then file name.
std::vector<RuleCase> run_rule_corpus(const std::string& dir, KernelOptions options = {});

std::string read_file(const std::string& path);
/// The lists corpus and every positive rule case under `corpus_root`, sorted.
std::vector<std::string> accepted_corpus_files(const std::string& corpus_root);

}  // namespace lcr
