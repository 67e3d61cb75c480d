#pragma once

// Applicative terms over a linear combinatory algebra.

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lcr {

enum class Combinator { B, I, C, W, K, D, Delta, F };

std::string_view combinator_name(Combinator c);

class Comb {
public:
  enum class Kind { Combinator, Const, Var, App, Bang };

  Comb() = default;

  static Comb comb(Combinator c);
  static Comb constant(std::string name);
  static Comb var(std::string name);
  static Comb app(Comb fn, Comb arg);
  static Comb bang(Comb body);

  /// Left-nested application `head a1 ... an`.
  static Comb apps(Comb head, std::initializer_list<Comb> args);

  bool empty() const { return node_ == nullptr; }
  Kind kind() const;
  Combinator combinator() const;
  const std::string& name() const;
  const Comb& fn() const;
  const Comb& arg() const;
  const Comb& body() const { return fn(); }

  bool is(Kind k) const;
  bool is_comb(Combinator c) const { return is(Kind::Combinator) && combinator() == c; }

  std::size_t size() const;
  bool closed() const;

  friend bool operator==(const Comb& a, const Comb& b);
  friend bool operator!=(const Comb& a, const Comb& b) { return !(a == b); }

  std::string str() const;

private:
  struct Node;
  explicit Comb(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  const Node* raw() const { return node_.get(); }

  std::shared_ptr<const Node> node_;
};

struct Comb::Node {
  Kind kind;
  Combinator comb = Combinator::I;
  std::string name;
  Comb left;
  Comb right;
  std::size_t size = 1;
  bool closed = true;
};

inline Comb::Kind Comb::kind() const { return node_->kind; }
inline Combinator Comb::combinator() const { return node_->comb; }
inline const std::string& Comb::name() const { return node_->name; }
inline const Comb& Comb::fn() const { return node_->left; }
inline const Comb& Comb::arg() const { return node_->right; }
inline bool Comb::is(Kind k) const { return node_ && node_->kind == k; }
inline std::size_t Comb::size() const { return node_->size; }
inline bool Comb::closed() const { return node_->closed; }

struct CombParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Textual syntax: the single-letter tokens `B I C W K D d F` are the
/// combinators (`d` is delta), any other identifier is a constant, `?x` is a
/// variable, `!t` is bang, juxtaposition applies (left associative).
Comb parse_comb(std::string_view text);

}  // namespace lcr
