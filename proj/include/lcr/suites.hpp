#pragma once

// Seeded property suites over the combinator layer. Each suite has an
// OpenMP-parallel kernel and a serial reference; both produce identical
// reports for the same seed.

#include <cstdint>
#include <optional>
#include <string>

#include "lcr/lca.hpp"

namespace lcr {

struct SuiteReport {
  std::string name;
  std::size_t samples = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t unknown = 0;
  std::optional<std::string> witness;  ///< first failing sample, rendered

  bool ok() const { return failed == 0; }
  double unknown_rate() const {
    return samples == 0 ? 0.0 : static_cast<double>(unknown) / static_cast<double>(samples);
  }
};

/// (lambda* x. t) a joins t[a/x] for random t with x linear.
SuiteReport completeness_linear(std::size_t samples, std::uint64_t seed,
                                std::size_t fuel = kDefaultFuel, std::size_t max_size = 12);
SuiteReport completeness_linear_serial(std::size_t samples, std::uint64_t seed,
                                       std::size_t fuel = kDefaultFuel,
                                       std::size_t max_size = 12);

/// (lambda!* x. t) !a joins t[a/x] for random t.
SuiteReport completeness_bang(std::size_t samples, std::uint64_t seed,
                              std::size_t fuel = kDefaultFuel, std::size_t max_size = 12);
SuiteReport completeness_bang_serial(std::size_t samples, std::uint64_t seed,
                                     std::size_t fuel = kDefaultFuel, std::size_t max_size = 12);

/// S' !a !b !c joins a !c (b !c) and K' !a !b joins a on random closed triples.
SuiteReport derived_cca_laws(std::size_t samples, std::uint64_t seed,
                             std::size_t fuel = kDefaultFuel, std::size_t max_arg_size = 8);
SuiteReport derived_cca_laws_serial(std::size_t samples, std::uint64_t seed,
                                    std::size_t fuel = kDefaultFuel,
                                    std::size_t max_arg_size = 8);

}  // namespace lcr
