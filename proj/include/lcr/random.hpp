#pragma once

// Seeded generators for combinator terms and !-polynomials.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lcr/comb.hpp"

namespace lcr {

using Rng = std::mt19937_64;

/// Deterministic per-sample seed derived from a run seed and sample coordinates.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

struct TermShape {
  std::size_t max_size = 8;
  bool allow_bang = true;
  bool allow_combinators = true;
  std::vector<std::string> constants{"c0", "c1", "c2", "c3"};
  std::vector<std::string> variables;  ///< leaves drawn as Var nodes
};

/// Random term of size in [1, max_size].
Comb random_term(Rng& rng, const TermShape& shape);

/// Random closed term that reaches a normal form within `fuel`.
Comb random_normalizing_term(Rng& rng, const TermShape& shape, std::size_t fuel);

/// Random !-polynomial of size <= max_size in which `x` occurs exactly once
/// and not under a bang.
Comb random_linear_polynomial(Rng& rng, const TermShape& shape, const std::string& x);

/// Random !-polynomial of size <= max_size over `shape.variables` plus `x`
/// (any number of occurrences, possibly under bangs).
Comb random_bang_polynomial(Rng& rng, const TermShape& shape, const std::string& x);

}  // namespace lcr
