#pragma once

// !-polynomials over an LCA and bracket abstraction (lambda* for linear
// variables, lambda!* for banged ones). The derived cartesian combinatory
// algebra A_! applies by `a . !b`.

#include <set>
#include <stdexcept>
#include <string>

#include "lcr/comb.hpp"
#include "lcr/lca.hpp"

namespace lcr {

/// A combinator term with variables. Plain polynomials carry no bang.
class Polynomial {
public:
  explicit Polynomial(Comb t, bool bang_allowed = true);

  const Comb& term() const { return term_; }
  bool bang_allowed() const { return bang_allowed_; }

private:
  Comb term_;
  bool bang_allowed_;
};

struct VarAnalysis {
  std::set<std::string> vars;
  std::set<std::string> linvars;  ///< exactly one occurrence, not under `!`
};

VarAnalysis analyze(const Comb& t);

/// Replaces every occurrence of variable `x` by `a`.
Comb subst(const Comb& t, const std::string& x, const Comb& a);

struct NotLinear : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// lambda* x. t; requires x in linvars(t).
Comb lam_linear(const std::string& x, const Comb& t);

/// lambda!* x. t; (lam_bang(x, t)) !a reduces to t[a/x].
Comb lam_bang(const std::string& x, const Comb& t);

/// Application in the derived CCA: `a ._! b = a !b`.
inline Comb app_bang(Comb a, Comb b) { return Comb::app(std::move(a), Comb::bang(std::move(b))); }

struct DerivedCca {
  Comb s;  ///< S' !a !b !c joins a !c (b !c)
  Comb k;  ///< K' !a !b joins a
  Comb i;  ///< I' !a joins a
};

DerivedCca derive_cca(const LcaInstance& inst = free_lca());

/// Abstraction in A_!: `t` is written with cartesian applications already
/// encoded as `a !b` (see app_bang). Implemented by lam_bang.
Comb lam_cartesian(const std::string& x, const Comb& t);

}  // namespace lcr
