#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lcr/kernel.hpp"

namespace lcr::detail {

struct OutOfFuel {};

/// Equation with pattern variables (Meta 0..n-1). Oriented schemas rewrite
/// lhs to rhs during normalization; the others are only used by joint
/// matching of both sides of an equality problem.
struct Schema {
  std::vector<Expr> meta_types;
  Expr lhs;
  Expr rhs;
  bool oriented = false;
  std::string origin;
};

class Normalizer {
public:
  Normalizer(const Env& env, std::size_t fuel, bool unfold_globals = true)
      : env_(env), fuel_(fuel), unfold_(unfold_globals) {}

  /// Context variables become locals; Id-typed cartesian ones also become
  /// equation schemas.
  void add_context(const Ctx& ctx);

  Expr whnf(Expr e);
  Expr nf(const Expr& e);
  /// Definitional equality of two locally closed expressions, with
  /// type-directed eta when `type` is given.
  bool equal(const Expr& s, const Expr& t, const Expr& type);

  bool used_hypotheses() const { return used_; }
  std::size_t steps() const { return steps_; }
  const std::vector<Schema>& schemas() const { return schemas_; }

private:
  struct Local {
    Expr var;
    Expr type;
  };

  const Env& env_;
  std::size_t fuel_;
  bool unfold_;
  std::size_t steps_ = 0;
  bool used_ = false;
  std::vector<Local> locals_;
  std::vector<Schema> schemas_;
  std::vector<std::pair<Expr, Schema>> beta1_cache_;

  void tick();
  Expr post(Expr r);
  Expr nf_under(const std::string& name, const Expr& dom, bool linear, const Expr& body);

  /// Opens a binder as a local; returns the FVar. Registers a hypothesis for
  /// cartesian binders with an equation type.
  Expr open(const std::string& name, const Expr& dom, bool linear);
  void register_hypothesis(const Expr& type, const std::string& origin);
  void add_schema(Expr lhs, Expr rhs, const std::vector<Expr>& meta_types,
                  const std::string& origin);

  bool compare(const Expr& s, const Expr& t);
  bool compare_children(const Expr& s, const Expr& t);
  bool compare_open(const Expr& sb, const Expr& tb, const std::vector<Expr>& binders,
                    std::size_t schemas_before);
  bool joint(const Expr& s, const Expr& t);
  bool try_schema(const Schema& sc, const Expr& s, const Expr& t);
  void collect_iotas(const Expr& e, std::vector<Expr>& out) const;
  Schema beta1_schema(const Expr& iota);
};

bool match(const Expr& pattern, const Expr& term, std::vector<Expr>& assignment);

}  // namespace lcr::detail
