#pragma once

// Finite-carrier assemblies over the free LCA. Realizer sets are finite
// designated witnesses; equality of realizers is joinability.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcr/comb.hpp"
#include "lcr/lca.hpp"

namespace lcr {

/// Cartesian: realizability read in A_! (trackers consume `!a`).
/// Linear: read in A (trackers consume `a`).
enum class Flavor { Cartesian, Linear };
std::string_view flavor_name(Flavor f);

struct AssemblyError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Assembly {
  std::string name;
  Flavor flavor = Flavor::Linear;
  std::vector<std::string> carrier;
  std::map<std::string, std::vector<Comb>> realizers;

  /// Throws AssemblyError unless every element has a designated realizer
  /// and realizers are given exactly on the carrier.
  void validate() const;
  std::size_t index_of(const std::string& label) const;
  const std::vector<Comb>& realizers_of(const std::string& label) const;
};

struct AsmMorphism {
  Assembly source;
  Assembly target;
  std::map<std::string, std::string> map;
  Comb tracker;
};

enum class Verdict { Ok, Fail, Unknown };
std::string_view verdict_name(Verdict v);

struct CheckResult {
  Verdict verdict = Verdict::Ok;
  std::optional<std::string> witness;
  bool ok() const { return verdict == Verdict::Ok; }
};

/// Whether `term` reduces to (a normal form shared with) one of `targets`.
Join realizes(const Comb& term, const std::vector<Comb>& targets, std::size_t fuel);

/// Tracker applied to a source realizer according to the source flavor.
Comb apply_tracker(const Comb& tracker, const Comb& realizer, Flavor flavor);

CheckResult verify_morphism(const AsmMorphism& m, std::size_t fuel = kDefaultFuel);

/// g after f; tracker B e_g e_f (Linear) or l!x. e_g !(e_f !x) (Cartesian).
AsmMorphism compose(const AsmMorphism& f, const AsmMorphism& g);

AsmMorphism identity_morphism(const Assembly& x);

Assembly asm_unit();
Assembly asm_tensor(const Assembly& y, const Assembly& y2);
/// f (x) g with tracker l*p. p (l*u. l*v. l*z. z (e_f u) (e_g v)).
AsmMorphism tensor_morphism(const AsmMorphism& f, const AsmMorphism& g);
Assembly asm_L(const Assembly& x);
Assembly asm_M(const Assembly& y);

std::string pair_label(const std::string& a, const std::string& b);

// ---------------------------------------------------------------------------
// Tracker search.

/// All polynomials over `x` and `leaves` of depth <= `depth`, abstracted over
/// `x` per flavor (lam_bang for Cartesian, lam_linear for Linear when x is
/// linear), deduplicated and ordered by size then rendering.
std::vector<Comb> tracker_pool(const std::vector<Comb>& leaves, Flavor flavor, int depth = 3,
                               std::size_t max_leaves = 4);

/// Default pool for maps into `target`: leaves are its designated realizers.
std::vector<Comb> default_pool(const Assembly& target, Flavor flavor, int depth = 3);

/// Every map source -> target tracked by some pool term, with its first
/// tracker in pool order. Candidate checks use `fuel`.
std::vector<AsmMorphism> trackable_morphisms(const Assembly& source, const Assembly& target,
                                             const std::vector<Comb>& pool,
                                             std::size_t fuel = 1000);

// ---------------------------------------------------------------------------
// Families, linear dependent products, equalizers.

struct FamAssembly {
  std::string name;
  Assembly base;
  std::map<std::string, Assembly> fibers;

  void validate() const;
};

struct LpiResult {
  Assembly assembly;
  std::vector<std::string> excluded;  ///< choice functions with no tracker in the pool
};

std::string choice_label(const std::vector<std::string>& base,
                         const std::vector<std::string>& choice);

/// Linear dependent product over a finite Cartesian base with Linear fibers.
/// A term a tracks a choice function f iff a !b realizes f(x) for every x and
/// designated b of x. Without a pool, one is built from the fiber realizers.
LpiResult fam_lpi(const FamAssembly& fam, const std::optional<std::vector<Comb>>& pool = {},
                  std::size_t fuel = 1000, std::size_t trackers_per_element = 2);

/// Checks the tracking law of every element of a fam_lpi result.
CheckResult verify_lpi(const FamAssembly& fam, const Assembly& lpi,
                       std::size_t fuel = kDefaultFuel);

struct Equalizer {
  Assembly object;
  AsmMorphism inclusion;
};

/// Sub-assembly on which f and g agree, with its inclusion (tracker I for
/// Linear, D for Cartesian).
Equalizer fam_equalizer(const AsmMorphism& f, const AsmMorphism& g);

/// Existence and carrier-level uniqueness of the factorization of h through
/// the equalizer of f and g. Requires f after h = g after h pointwise.
CheckResult check_factorization(const Equalizer& eq, const AsmMorphism& h,
                                std::size_t fuel = kDefaultFuel);

// ---------------------------------------------------------------------------
// Modest sets and PERs.

struct ModestResult {
  Join verdict = Join::Yes;  ///< Yes: modest, No: witness found
  std::optional<std::string> witness;
};

ModestResult is_modest(const Assembly& x, std::size_t fuel = kDefaultFuel);

struct NotModest : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Per {
  std::vector<std::vector<Comb>> classes;
  void validate() const;
};

/// Class index of the designated member `a` reduces to, if any.
std::optional<std::size_t> per_class_of(const Per& r, const Comb& a, std::size_t fuel);
/// a ~ b: both reduce into designated members of the same class.
Join per_related(const Per& r, const Comb& a, const Comb& b, std::size_t fuel = kDefaultFuel);

Per modest_to_per(const Assembly& x, std::size_t fuel = kDefaultFuel);
Assembly per_to_modest(const Per& r, Flavor flavor = Flavor::Linear, std::string name = "per");

struct RoundTrip {
  AsmMorphism forward;   ///< X -> per_to_modest(modest_to_per(X))
  AsmMorphism backward;  ///< and back
};
RoundTrip hyland_round_trip(const Assembly& x, std::size_t fuel = kDefaultFuel);

struct PerPiResult {
  Per per;
  std::vector<std::string> missing;  ///< class choices without a pool member
};

/// PER of trackers over a finite Cartesian base: a ~ a' iff for every x and
/// designated b of x, a !b and a' !b land in the same class of codes(x).
PerPiResult per_pi(const Assembly& base, const std::map<std::string, Per>& codes, Flavor flavor,
                   const std::vector<Comb>& pool, std::size_t fuel = 1000);

// ---------------------------------------------------------------------------
// Model spec files.

struct SpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// `{ "flavor": "linear", "carrier": [...], "realizers": { label: [term...] } }`
/// or a family `{ "base": <assembly>, "fibers": { label: <assembly> } }`.
struct ModelSpec {
  std::string path;
  std::optional<Assembly> assembly;
  std::optional<FamAssembly> family;
};

ModelSpec parse_model_spec(const std::string& json_text, const std::string& name);
ModelSpec load_model_spec(const std::string& path);

}  // namespace lcr
