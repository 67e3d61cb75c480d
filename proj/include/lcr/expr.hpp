#pragma once

// Core syntax of linear dependent type theory: one locally nameless tree for
// terms and types. Bound variables are de Bruijn indices; variables of an
// open context are FVar nodes; pattern variables of equation schemas are Meta
// nodes; references to declarations are Global nodes.

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace lcr {

enum class Tag : std::uint8_t {
  BVar, FVar, Meta, Global,
  // cartesian
  U, Pi, Sig, Unit, Tt, Id, Refl, ElC, Fst, Snd,
  // linear
  Lpi, Lsig, Lolli, Tensor, TUnit, L, Eq, ElL, Star, LetUnit, LetL, Ell, Lower,
  // shared formers
  Lam, App, Pair, Let2,
  // modality M and its eliminator
  M, Mu,
  // equalizers
  EqIn, EqOut,
  // universe codes
  CodePi, CodeLpi, CodeLolli, CodeBang, CodeEq, CodeTUnit,
  Ann,
  // surface `!a`: L (M a) on types, the bang code on codes
  Bang,
};

/// Lam/App: cartesian-indexed (Pi, Lpi) or linear (-o).
enum class FunKind : std::uint8_t { Unknown, Cart, Lin };
/// Pair/Let2: which product is built or eliminated.
enum class PairKind : std::uint8_t { Unknown, Sigma, Tensor, Lsig };

struct Loc {
  int line = 0;
  int column = 0;
  bool known() const { return line > 0; }
};

class Expr {
public:
  Expr() = default;

  // leaves
  static Expr bvar(std::uint32_t index);
  static Expr fvar(std::int64_t id, std::string name, bool linear);
  static Expr meta(std::int64_t id, std::string name);
  static Expr global(std::string name);
  static Expr leaf(Tag t);  ///< U, Unit, Tt, Refl, TUnit, Star, CodeTUnit

  // one binder in `body`
  static Expr binder(Tag t, std::string name, Expr dom, Expr body);  ///< Pi Sig Lpi Lsig CodePi CodeLpi
  static Expr lam(FunKind k, std::string name, Expr dom, Expr body);  ///< dom may be empty
  static Expr let_ell(std::string name, Expr scrut, Expr body);
  // two binders in `body`: `name` is index 1, `name2` index 0
  static Expr let2(PairKind k, std::string name, std::string name2, Expr scrut, Expr body);

  static Expr app(FunKind k, Expr fn, Expr arg);
  static Expr pair(PairKind k, Expr a, Expr b);
  static Expr let_unit(Expr scrut, Expr body);
  static Expr unary(Tag t, Expr a);            ///< Fst Snd ElC ElL L M Mu Ell Lower CodeBang Bang
  static Expr binary(Tag t, Expr a, Expr b);   ///< Lolli Tensor Eq EqOut CodeLolli CodeEq Ann
  static Expr ternary(Tag t, Expr a, Expr b, Expr c);  ///< Id EqIn

  bool empty() const { return node_ == nullptr; }
  explicit operator bool() const { return node_ != nullptr; }

  Tag tag() const;
  bool is(Tag t) const { return node_ && tag() == t; }
  FunKind fun_kind() const;
  PairKind pair_kind() const;
  const std::string& name() const;
  const std::string& name2() const;
  std::uint32_t index() const;  ///< BVar
  std::int64_t id() const;      ///< FVar, Meta
  bool linear() const;          ///< FVar
  const Expr& a() const;
  const Expr& b() const;
  const Expr& c() const;
  /// One past the largest loose bound index (0 iff locally closed).
  std::uint32_t loose_range() const;
  bool has_fvar() const;
  bool has_meta() const;
  std::size_t size() const;
  Loc loc() const;
  Expr with_loc(Loc l) const;

  /// Rebuilds this node with new children (same tag, kind and names).
  Expr rebuild(Expr a, Expr b = {}, Expr c = {}) const;
  Expr with_fun_kind(FunKind k) const;
  Expr with_pair_kind(PairKind k) const;
  Expr with_domain(Expr dom) const;  ///< Lam only

  bool same_node(const Expr& o) const { return node_ == o.node_; }

private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Expr make(Node n);
  std::shared_ptr<const Node> node_;
};

/// Number of binders child `i` (0, 1, 2) of a node with this tag sits under.
int binders_of(Tag t, int child);
std::string_view tag_name(Tag t);

/// Alpha-equality: ignores binder names, source locations, lambda domains and
/// the elaboration kinds of Lam/App/Pair/Let2.
bool alpha_eq(const Expr& x, const Expr& y);

/// Replaces loose index `depth + k` by `values[n-1-k]` (k < n) and lowers
/// larger loose indices by n. Values must be locally closed.
Expr instantiate(const Expr& body, const std::vector<Expr>& values);
Expr instantiate1(const Expr& body, const Expr& value);

/// Raises loose indices >= `from` by `n`.
Expr lift_loose(const Expr& e, std::uint32_t n, std::uint32_t from = 0);

/// Replaces FVar `id` by the loose index of a new binder (inverse of
/// instantiate1 with that FVar).
Expr abstract_fvar(const Expr& e, std::int64_t id);
Expr abstract_fvars(const Expr& e, const std::vector<std::int64_t>& ids);  ///< last id is index 0

/// Replaces Meta nodes by the assigned expressions (unassigned stay).
Expr instantiate_metas(const Expr& e, const std::vector<Expr>& assignment);

/// Replaces Global `name` nodes using `f` (returning empty keeps the node).
Expr replace_globals(const Expr& e, const std::function<Expr(const std::string&)>& f);

bool occurs_fvar(const Expr& e, std::int64_t id);
void collect_fvars(const Expr& e, std::vector<Expr>& out);  ///< distinct, first-occurrence order
bool mentions_linear_fvar(const Expr& e);
bool mentions_global(const Expr& e, const std::string& name);

/// Application spine: head and arguments in order.
Expr spine(const Expr& e, std::vector<Expr>& args);
Expr apps(Expr head, const std::vector<Expr>& args, FunKind k = FunKind::Unknown);

/// Bound-variable usage of a body: does loose index `k` occur?
bool has_loose_bvar(const Expr& e, std::uint32_t k);

std::int64_t fresh_id();

}  // namespace lcr
