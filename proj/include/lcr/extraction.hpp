#pragma once

// Realizer extraction: compiles elaborated core terms to LCA terms by
// bracket abstraction. Cartesian arguments are passed banged.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lcr/abstraction.hpp"
#include "lcr/kernel.hpp"
#include "lcr/suites.hpp"

namespace lcr {

/// Realizers of the free variables of a term, by FVar id.
struct RealizerEnv {
  std::map<std::int64_t, Comb> vars;
};

class Extractor {
public:
  explicit Extractor(const Env& env) : env_(env) {}

  /// Structural compilation of an elaborated term.
  Comb term(const Expr& t, const RealizerEnv& renv = {});
  /// Closed realizer of a term declaration; memoized.
  Comb decl(const std::string& name);

private:
  const Env& env_;
  std::map<std::string, Comb> decls_;

  Comb go(const Expr& t, RealizerEnv& renv);
  Comb bind(const Expr& body, RealizerEnv& renv, const std::string& hint, Comb* var_out,
            Expr* fvar_out);
};

Comb extract_term(const Env& env, const Expr& t, const RealizerEnv& renv = {});
Comb extract_decl(const Env& env, const std::string& name);

/// Stand-in realizer for a variable of the given type: a fresh constant,
/// banged under L (through M, which keeps realizers).
Comb generic_realizer(const Kernel& k, const Expr& type, const std::string& name);
/// Generic realizers for every context variable.
RealizerEnv generic_env(const Kernel& k, const Ctx& ctx);

struct SoundnessPair {
  std::string origin;
  Ctx ctx;
  Expr lhs;
  Expr rhs;
  Expr type;
};

/// Equal pairs drawn from the checked declarations of `env`. Each term
/// declaration is paired with its body and its normal form; declared
/// identities contribute their two sides when def_eq proves them without
/// context equations.
std::vector<SoundnessPair> soundness_pairs(const Env& env, KernelOptions options = {});

/// Joinability obligations for two realizers of `type`. Both sides are
/// applied to generic arguments at function types (looking through M, Eq
/// and L) and split into projections at Sig; linear products get a generic
/// continuation.
std::vector<std::pair<Comb, Comb>> saturate(const Kernel& k, Expr type, Comb a, Comb b);

/// Saturated realizers of both sides are joinable within `fuel`.
SuiteReport extraction_soundness(const Env& env, const std::vector<SoundnessPair>& pairs,
                                 std::size_t fuel = 100000);
SuiteReport extraction_soundness_serial(const Env& env, const std::vector<SoundnessPair>& pairs,
                                        std::size_t fuel = 100000);

}  // namespace lcr
