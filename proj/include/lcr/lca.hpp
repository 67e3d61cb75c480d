#pragma once

// Rewriting semantics of linear combinatory algebras: the eight combinator
// identities read left to right, fuel-bounded normal-order reduction, and
// joinability as the equality of realizers.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcr/comb.hpp"

namespace lcr {

inline constexpr std::size_t kDefaultFuel = 10000;

/// An extra oriented equation; `Var` nodes in `lhs` are pattern variables.
struct RewriteRule {
  Comb lhs;
  Comb rhs;
};

/// The eight identities are always active; an instance may only add rules.
struct LcaInstance {
  std::string name;
  std::vector<RewriteRule> extra_rules;
};

LcaInstance free_lca();

/// Free LCA extended with constants `S`, `Kc` (S a b c -> a c (b c),
/// Kc a b -> a) and bang erasure `!t -> t`.
LcaInstance bang_trivial_sk();

enum class ReductionStatus { NormalForm, FuelExhausted };

struct ReductionResult {
  ReductionStatus status;
  Comb term;
  std::size_t steps = 0;
};

enum class Join { Yes, No, Unknown };
std::string_view join_name(Join j);

/// One leftmost-outermost contraction, or nullopt if `t` is a normal form.
std::optional<Comb> step(const Comb& t, const LcaInstance& inst = free_lca());

ReductionResult reduce(const Comb& t, std::size_t fuel = kDefaultFuel,
                       const LcaInstance& inst = free_lca());

Join joinable(const Comb& a, const Comb& b, std::size_t fuel = kDefaultFuel,
              const LcaInstance& inst = free_lca());

/// First-order matching of a pattern whose `Var` nodes are pattern variables.
bool match_pattern(const Comb& pattern, const Comb& term,
                   std::vector<std::pair<std::string, Comb>>& subst);
Comb instantiate_pattern(const Comb& pattern,
                         const std::vector<std::pair<std::string, Comb>>& subst);

// ---------------------------------------------------------------------------
// Identity verification.

enum class Identity { B, I, C, W, K, D, Delta, F };
inline constexpr int kIdentityCount = 8;
std::string_view identity_name(Identity id);

/// Left- and right-hand side of an identity on the given arguments (bangs are
/// inserted where the identity demands them).
std::pair<Comb, Comb> identity_instance(Identity id, const std::vector<Comb>& args);
int identity_arity(Identity id);

struct IdentityOutcome {
  Identity identity;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t unknown = 0;
  std::optional<std::pair<Comb, Comb>> witness;  ///< first refuted instance
};

struct IdentityReport {
  std::string instance;
  std::vector<IdentityOutcome> outcomes;
  bool ok() const;
  std::size_t unknown_total() const;
};

/// Checks every identity on `samples` seeded random closed arguments of size
/// at most `max_arg_size`. OpenMP-parallel over samples; the result does not
/// depend on the thread count.
IdentityReport verify_identities(const LcaInstance& inst, std::size_t samples,
                                 std::uint64_t seed, std::size_t fuel,
                                 std::size_t max_arg_size = 8);

/// Serial reference for verify_identities.
IdentityReport verify_identities_serial(const LcaInstance& inst, std::size_t samples,
                                        std::uint64_t seed, std::size_t fuel,
                                        std::size_t max_arg_size = 8);

}  // namespace lcr
