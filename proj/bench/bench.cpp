// Wall-clock comparison of the OpenMP kernels with their serial references.
// Usage: bench [samples] [repeats]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include "lcr/extraction.hpp"
#include "lcr/lca.hpp"
#include "lcr/rule_corpus.hpp"
#include "lcr/suites.hpp"

using namespace lcr;

namespace {

double best_of(int repeats, const std::function<void()>& f) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const char* name, int repeats, const std::function<std::size_t()>& serial,
         const std::function<std::size_t()>& parallel) {
  std::size_t s = 0, p = 0;
  double ts = best_of(repeats, [&] { s = serial(); });
  double tp = best_of(repeats, [&] { p = parallel(); });
  std::printf("%-24s serial %9.4f s  parallel %9.4f s  speedup %5.2fx  %s\n", name, ts, tp,
              ts / tp, s == p ? "same result" : "RESULTS DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 5000;
  int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
  const std::uint64_t seed = 1;
  std::printf("threads %d, samples %zu, best of %d\n", omp_get_max_threads(), n, repeats);

  auto ids = [](const IdentityReport& r) {
    std::size_t t = 0;
    for (const auto& o : r.outcomes) t = t * 31 + o.passed * 7 + o.unknown;
    return t;
  };
  auto suite = [](const SuiteReport& r) { return r.passed * 1000003 + r.unknown; };

  row("identities", repeats,
      [&] { return ids(verify_identities_serial(free_lca(), n, seed, kDefaultFuel)); },
      [&] { return ids(verify_identities(free_lca(), n, seed, kDefaultFuel)); });
  row("completeness-linear", repeats,
      [&] { return suite(completeness_linear_serial(n, seed)); },
      [&] { return suite(completeness_linear(n, seed)); });
  row("completeness-bang", repeats,
      [&] { return suite(completeness_bang_serial(n, seed)); },
      [&] { return suite(completeness_bang(n, seed)); });
  row("derived-cca", repeats,
      [&] { return suite(derived_cca_laws_serial(n, seed)); },
      [&] { return suite(derived_cca_laws(n, seed)); });

  Env env = check_program(parse_source(read_file(std::string(LCR_SOURCE_DIR) +
                                                 "/corpus/lists/lists.ldtt")));
  auto pairs = soundness_pairs(env);
  row("extraction-soundness", repeats,
      [&] { return suite(extraction_soundness_serial(env, pairs)); },
      [&] { return suite(extraction_soundness(env, pairs)); });
  return 0;
}
