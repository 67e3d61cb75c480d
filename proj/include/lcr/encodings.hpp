#pragma once

// Drivers for the list development in corpus/lists. Equations are checked
// by kernel equality and, on closed instances, by realizer joinability.

#include <optional>
#include <string>
#include <vector>

#include "lcr/extraction.hpp"
#include "lcr/kernel.hpp"

namespace lcr {

struct EquationCheck {
  std::string name;
  std::string lhs;
  std::string rhs;
  Equality kernel = Equality::Unknown;
  Equality expected = Equality::Equal;
  bool used_hypotheses = false;  ///< context equations took part in the kernel verdict
  std::optional<Join> realizer;  ///< absent when not meaningful (hypothetical equations)
  std::string error;             ///< elaboration failure, if any

  /// An expected NotEqual is met by any verdict other than Equal.
  bool ok() const {
    bool k = expected == Equality::Equal ? kernel == Equality::Equal : kernel != Equality::Equal;
    return error.empty() && k && (!realizer || *realizer == Join::Yes);
  }
};

struct EncodingReport {
  std::string name;
  std::vector<EquationCheck> checks;
  bool ok() const;
  const EquationCheck* first_failure() const;
};

/// A variable of the checking context: `linear` selects the linear part.
struct CtxVar {
  std::string name;
  std::string type;
  bool linear = false;
};

/// Elaborates `lhs` and `rhs` (surface syntax) in the context built from
/// `vars`, compares them by def_eq at their type and, when `realize` is set,
/// compares their saturated realizers over generic context realizers.
EquationCheck check_equation(const Env& env, const std::string& name,
                             const std::vector<CtxVar>& vars, const std::string& lhs,
                             const std::string& rhs, bool realize, KernelOptions options = {},
                             Equality expected = Equality::Equal);

Env load_lists_corpus(const std::string& path, KernelOptions options = {});

/// rec over nilStar and consStar for symbolic X, n, c, a, l; also on the
/// non-standard element.
EncodingReport check_weak_rules(const Env& lists, KernelOptions options = {});

struct AlgebraInstance {
  std::string name;
  std::string x, nx, cx;  ///< source algebra: code, M point, M structure map
  std::string y, ny, cy;  ///< target algebra
  std::string f;          ///< M morphism
  std::vector<CtxVar> params;  ///< context for symbolic instances
  bool concrete = true;        ///< closed instance; realizers are compared
};

/// Unit algebra to itself along the identity, and unit to endomaps.
std::vector<AlgebraInstance> shipped_instances();
/// Arbitrary algebras and morphism as context variables.
AlgebraInstance symbolic_instance();

/// phi nilStar = psi nilStar and the cons case under an induction
/// hypothesis, with the morphism equations as context hypotheses.
EncodingReport check_lemma_nil_cons(const Env& lists, const std::vector<AlgebraInstance>& instances,
                                    KernelOptions options = {});

struct Algebra {
  std::string name;
  std::string x;  ///< code
  std::string n;  ///< linear point of ElL x
  std::string c;  ///< !(A -o ElL x -o ElL x)
};

/// The algebra structure of List itself.
Algebra list_algebra();
/// The unit and endomap algebras.
std::vector<Algebra> shipped_algebras();

/// Existence: rec into `alg` commutes with nil and cons. Uniqueness at desk
/// scale: rec (List, nil, cons) is the identity on lists of length below
/// `samples`, and rec into `alg` over such lists unfolds to iterated c.
EncodingReport check_initiality_instance(const Env& lists, const Algebra& alg,
                                         std::size_t samples = 3, KernelOptions options = {});

/// phi and psi disagree on the shipped element outside the equalizer.
EquationCheck check_nonstandard(const Env& lists, KernelOptions options = {});

}  // namespace lcr
