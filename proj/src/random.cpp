#include "lcr/random.hpp"

#include "lcr/lca.hpp"

namespace lcr {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  // splitmix64 over the three coordinates
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(seed) ^ a) ^ (b * 0x632be59bd9b4e019ULL));
}

namespace {

constexpr Combinator kAllCombinators[] = {
    Combinator::B, Combinator::I, Combinator::C, Combinator::W,
    Combinator::K, Combinator::D, Combinator::Delta, Combinator::F};

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Comb random_leaf(Rng& rng, const TermShape& shape) {
  std::size_t options = shape.constants.size() + shape.variables.size() +
                        (shape.allow_combinators ? 8 : 0);
  std::size_t pick = uniform(rng, 0, options - 1);
  if (pick < shape.constants.size()) return Comb::constant(shape.constants[pick]);
  pick -= shape.constants.size();
  if (pick < shape.variables.size()) return Comb::var(shape.variables[pick]);
  pick -= shape.variables.size();
  return Comb::comb(kAllCombinators[pick]);
}

Comb random_exact(Rng& rng, const TermShape& shape, std::size_t size) {
  if (size <= 1) return random_leaf(rng, shape);
  if (size == 2) {
    if (shape.allow_bang) return Comb::bang(random_leaf(rng, shape));
    return random_leaf(rng, shape);
  }
  // roughly one bang per five nodes
  if (shape.allow_bang && uniform(rng, 0, 4) == 0)
    return Comb::bang(random_exact(rng, shape, size - 1));
  std::size_t left = uniform(rng, 1, size - 2);
  Comb fn = random_exact(rng, shape, left);
  Comb arg = random_exact(rng, shape, size - 1 - left);
  return Comb::app(std::move(fn), std::move(arg));
}

// Leaves of `t` not under a bang, addressed by pre-order index.
void collect_free_leaves(const Comb& t, std::vector<std::size_t>& out, std::size_t& index) {
  std::size_t here = index++;
  switch (t.kind()) {
    case Comb::Kind::App:
      collect_free_leaves(t.fn(), out, index);
      collect_free_leaves(t.arg(), out, index);
      return;
    case Comb::Kind::Bang:
      return;
    default:
      out.push_back(here);
      return;
  }
}

Comb replace_at(const Comb& t, std::size_t target, std::size_t& index, const Comb& with) {
  std::size_t here = index++;
  if (here == target) return with;
  if (t.is(Comb::Kind::App)) {
    Comb fn = replace_at(t.fn(), target, index, with);
    Comb arg = replace_at(t.arg(), target, index, with);
    return Comb::app(std::move(fn), std::move(arg));
  }
  return t;
}

}  // namespace

Comb random_term(Rng& rng, const TermShape& shape) {
  return random_exact(rng, shape, uniform(rng, 1, shape.max_size));
}

Comb random_normalizing_term(Rng& rng, const TermShape& shape, std::size_t fuel) {
  while (true) {
    Comb t = random_term(rng, shape);
    if (reduce(t, fuel).status == ReductionStatus::NormalForm) return t;
  }
}

Comb random_linear_polynomial(Rng& rng, const TermShape& shape, const std::string& x) {
  std::size_t size = uniform(rng, 1, shape.max_size);
  if (size == 1) return Comb::var(x);
  Comb t = random_exact(rng, shape, size - 1);
  std::vector<std::size_t> leaves;
  std::size_t index = 0;
  collect_free_leaves(t, leaves, index);
  if (leaves.empty()) {
    Comb other = random_exact(rng, shape, size >= 3 ? size - 2 : 1);
    return uniform(rng, 0, 1) ? Comb::app(Comb::var(x), other)
                              : Comb::app(other, Comb::var(x));
  }
  std::size_t target = leaves[uniform(rng, 0, leaves.size() - 1)];
  index = 0;
  return replace_at(t, target, index, Comb::var(x));
}

Comb random_bang_polynomial(Rng& rng, const TermShape& shape, const std::string& x) {
  TermShape s = shape;
  s.variables.push_back(x);
  s.variables.push_back(x);  // bias towards occurrences of x
  return random_term(rng, s);
}

}  // namespace lcr
