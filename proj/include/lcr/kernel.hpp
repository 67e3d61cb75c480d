#pragma once

// Bidirectional checker for the dual-context theory, with linear usage
// threading, normalization and definitional equality.

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcr/expr.hpp"
#include "lcr/syntax.hpp"

namespace lcr {

enum class ErrorKind { Mismatch, LinearUsage, NotAType, UnknownEquality, ScopeError };
std::string_view error_kind_name(ErrorKind k);

struct TypeError : std::runtime_error {
  TypeError(ErrorKind kind, const std::string& message, Loc loc = {}, std::string expected = {},
            std::string actual = {});
  ErrorKind kind;
  std::string message;
  Loc loc;
  std::string expected;
  std::string actual;
  std::string decl;  ///< filled in by check_program
};

enum class Sort { Cart, Lin };

struct GlobalDef {
  std::string name;
  DeclKind kind = DeclKind::Def;
  DeclSort sort = DeclSort::Term;
  std::vector<Param> params;  ///< elaborated; type definitions only
  Expr type;                  ///< elaborated stated type (terms)
  Expr body;                  ///< elaborated body
  Expr normalized_type;       ///< beta-normal, globals folded
  Loc loc;

  bool is_type() const { return sort != DeclSort::Term; }
  Sort type_sort() const { return sort == DeclSort::Linear ? Sort::Lin : Sort::Cart; }
};

class Env {
public:
  const GlobalDef* find(const std::string& name) const;
  void add(GlobalDef def);
  const std::vector<std::string>& order() const { return order_; }
  std::size_t size() const { return order_.size(); }

private:
  std::map<std::string, GlobalDef> defs_;
  std::vector<std::string> order_;
};

struct CtxEntry {
  Expr var;   ///< FVar; linear() tells the context part
  Expr type;  ///< elaborated, may mention earlier cartesian FVars
};

/// Mixed context: cartesian and linear entries in binding order.
class Ctx {
public:
  Expr push(const std::string& name, const Expr& type, bool linear);
  void pop();
  std::size_t size() const { return entries_.size(); }
  void truncate(std::size_t n) { entries_.resize(n); }
  const std::vector<CtxEntry>& entries() const { return entries_; }
  const CtxEntry* lookup(std::int64_t id) const;
  const CtxEntry* lookup(const std::string& name) const;  ///< innermost
  /// Replaces Global nodes naming context variables by those variables.
  Expr resolve(const Expr& e) const;

private:
  std::vector<CtxEntry> entries_;
};

enum class Equality { Equal, NotEqual, Unknown };
std::string_view equality_name(Equality e);

struct KernelOptions {
  std::size_t fuel = 10000;  ///< normalization steps per equality problem
};

struct EqualityInfo {
  Equality result = Equality::NotEqual;
  bool used_hypotheses = false;  ///< a context equation or eq-beta1 schema was used
  std::size_t steps = 0;
};

struct Typed {
  Expr term;  ///< elaborated
  Expr type;
  std::vector<std::int64_t> usage;  ///< linear variables consumed, sorted
};

struct UniverseFacts {
  Expr code;
  Expr el_cartesian;  ///< normalized ElC code
  Expr el_linear;     ///< normalized ElL code
};

class Kernel {
public:
  explicit Kernel(const Env& env, KernelOptions options = {}) : env_(env), opts_(options) {}

  const Env& env() const { return env_; }
  const KernelOptions& options() const { return opts_; }

  /// Type formation; returns the elaborated type and whether it is
  /// cartesian or linear.
  std::pair<Expr, Sort> check_type(Ctx& ctx, const Expr& type) const;
  Typed infer(Ctx& ctx, const Expr& term) const;
  Typed check(Ctx& ctx, const Expr& term, const Expr& type) const;
  /// Sort of an elaborated type.
  Sort sort_of(const Expr& type) const;

  EqualityInfo def_eq_info(const Ctx& ctx, const Expr& a, const Expr& b,
                           const Expr& type = {}) const;
  Equality def_eq(const Ctx& ctx, const Expr& a, const Expr& b, const Expr& type = {}) const {
    return def_eq_info(ctx, a, b, type).result;
  }

  /// Full normal form (context equations applied); nullopt on fuel exhaustion.
  std::optional<Expr> normalize(const Ctx& ctx, const Expr& e, bool unfold_globals = true) const;
  Expr whnf(const Expr& e) const;

  UniverseFacts check_universe(Ctx& ctx, const Expr& code) const;
  /// refl at Id (M T) (M f) (M g) for f, g of function type T, validated by
  /// def_eq with the context equations; UnknownEquality otherwise.
  Typed derive_funext(Ctx& ctx, const Expr& f, const Expr& g) const;

  /// Pushes the leading Pi/Lpi/Lolli binders of `type` (up to `max`) and
  /// returns the remaining type.
  Expr open_telescope(Ctx& ctx, const Expr& type, std::size_t max = SIZE_MAX) const;

private:
  const Env& env_;
  KernelOptions opts_;
};

struct DeclReport {
  std::string name;
  bool accepted = false;
  std::string normalized_type;
  std::optional<TypeError> error;
};

struct ProgramReport {
  Env env;
  std::vector<DeclReport> decls;  ///< accepted prefix and the failing one
  std::optional<TypeError> error;
  bool ok() const { return !error; }
};

/// Checks declarations in order; stops at the first TypeError.
ProgramReport check_program_report(const std::vector<Decl>& decls, KernelOptions options = {});
/// Throws the first TypeError (with the declaration name set).
Env check_program(const std::vector<Decl>& decls, KernelOptions options = {});

/// Extends an environment with further declarations.
ProgramReport extend_program(const Env& base, const std::vector<Decl>& decls,
                             KernelOptions options = {});

}  // namespace lcr
