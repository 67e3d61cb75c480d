#pragma once

// `.ldtt` surface language. The recursive-descent parser produces core Expr
// trees; the printer is its inverse up to alpha.

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcr/expr.hpp"

namespace lcr {

enum class TokKind {
  Ident, Keyword,
  Lolli,     // -o
  TensorOp,  // (x)
  Star,      // *
  Arrow,     // ->
  FatArrow,  // =>
  Colon, Define, Semi, Comma, LParen, RParen, Bang, Hat, Equals,
  End,
};

struct Token {
  TokKind kind = TokKind::End;
  std::string text;
  int line = 0;
  int column = 0;
  bool operator==(const Token& o) const { return kind == o.kind && text == o.text; }
};

std::string_view tok_kind_name(TokKind k);

struct LexError : std::runtime_error {
  LexError(const std::string& msg, int line, int column);
  int line;
  int column;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line, int column, std::set<std::string> expected);
  int line;
  int column;
  std::set<std::string> expected;
};

bool is_keyword(const std::string& s);

/// Longest-match lexing; `--` starts a line comment. The stream ends with End.
std::vector<Token> tokenize(const std::string& source);

enum class DeclKind { Def, Lin };
/// Term declarations have no sort; type definitions are `: Type` or `: Linear`.
enum class DeclSort { Term, Type, Linear };

struct Param {
  std::string name;
  Expr type;  ///< may mention earlier params as bound indices
};

struct Decl {
  DeclKind kind = DeclKind::Def;
  DeclSort sort = DeclSort::Term;
  std::string name;
  std::vector<Param> params;  ///< type definitions only
  Expr type;                  ///< stated type; empty for type definitions
  Expr body;                  ///< under the params
  Loc loc;
};

std::vector<Decl> parse_file(const std::vector<Token>& tokens);
std::vector<Decl> parse_source(const std::string& source);
/// Parses a single expression; unbound names become Global nodes.
Expr parse_expr(const std::string& source);

/// Canonical rendering; free bound indices render as `#i`.
std::string print_expr(const Expr& e);
std::string print_decl(const Decl& d);
std::string print_file(const std::vector<Decl>& decls);

bool decl_equal(const Decl& x, const Decl& y);  ///< structural (alpha) equality

}  // namespace lcr
