#include "lcr/suites.hpp"

#include <vector>

#include "lcr/abstraction.hpp"
#include "lcr/random.hpp"

namespace lcr {

namespace {

struct Sample {
  Join verdict = Join::Yes;
  std::string rendering;
};

enum class SuiteId : std::uint64_t { Linear = 1, Bang = 2, Cca = 3 };

SuiteReport aggregate(std::string name, const std::vector<Sample>& results) {
  SuiteReport report;
  report.name = std::move(name);
  report.samples = results.size();
  for (const auto& r : results) {
    switch (r.verdict) {
      case Join::Yes: ++report.passed; break;
      case Join::Unknown: ++report.unknown; break;
      case Join::No:
        ++report.failed;
        if (!report.witness) report.witness = r.rendering;
        break;
    }
  }
  return report;
}

template <class F>
std::vector<Sample> run_parallel(std::size_t samples, F&& sample) {
  std::vector<Sample> results(samples);
  const long long n = static_cast<long long>(samples);
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < n; ++i) results[i] = sample(static_cast<std::size_t>(i));
  return results;
}

template <class F>
std::vector<Sample> run_serial(std::size_t samples, F&& sample) {
  std::vector<Sample> results;
  results.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) results.push_back(sample(i));
  return results;
}

Sample render(Join verdict, const Comb& lhs, const Comb& rhs) {
  Sample s{verdict, {}};
  if (verdict == Join::No) s.rendering = lhs.str() + "  vs  " + rhs.str();
  return s;
}

TermShape polynomial_shape(std::size_t max_size) {
  TermShape shape;
  shape.max_size = max_size;
  return shape;
}

Sample linear_sample(std::size_t i, std::uint64_t seed, std::size_t fuel, std::size_t max_size) {
  Rng rng(mix_seed(seed, static_cast<std::uint64_t>(SuiteId::Linear), i));
  Comb t = random_linear_polynomial(rng, polynomial_shape(max_size), "x");
  Comb a = Comb::constant("a");
  Comb lhs = Comb::app(lam_linear("x", t), a);
  Comb rhs = subst(t, "x", a);
  return render(joinable(lhs, rhs, fuel), lhs, rhs);
}

Sample bang_sample(std::size_t i, std::uint64_t seed, std::size_t fuel, std::size_t max_size) {
  Rng rng(mix_seed(seed, static_cast<std::uint64_t>(SuiteId::Bang), i));
  Comb t = random_bang_polynomial(rng, polynomial_shape(max_size), "x");
  Comb a = Comb::constant("a");
  Comb lhs = app_bang(lam_bang("x", t), a);
  Comb rhs = subst(t, "x", a);
  return render(joinable(lhs, rhs, fuel), lhs, rhs);
}

Sample cca_sample(const DerivedCca& cca, std::size_t i, std::uint64_t seed, std::size_t fuel,
                  std::size_t max_arg_size) {
  Rng rng(mix_seed(seed, static_cast<std::uint64_t>(SuiteId::Cca), i));
  TermShape shape;
  shape.max_size = max_arg_size;
  Comb a = random_normalizing_term(rng, shape, fuel / 10);
  Comb b = random_normalizing_term(rng, shape, fuel / 10);
  Comb c = random_normalizing_term(rng, shape, fuel / 10);
  Comb s_lhs = Comb::apps(cca.s, {Comb::bang(a), Comb::bang(b), Comb::bang(c)});
  Comb s_rhs = Comb::app(app_bang(a, c), app_bang(b, c));
  Join s = joinable(s_lhs, s_rhs, fuel);
  if (s == Join::No) return render(s, s_lhs, s_rhs);
  Comb k_lhs = Comb::apps(cca.k, {Comb::bang(a), Comb::bang(b)});
  Join k = joinable(k_lhs, a, fuel);
  if (k == Join::No) return render(k, k_lhs, a);
  return {s == Join::Yes && k == Join::Yes ? Join::Yes : Join::Unknown, {}};
}

}  // namespace

SuiteReport completeness_linear(std::size_t samples, std::uint64_t seed, std::size_t fuel,
                                std::size_t max_size) {
  return aggregate("completeness-linear", run_parallel(samples, [&](std::size_t i) {
                     return linear_sample(i, seed, fuel, max_size);
                   }));
}

SuiteReport completeness_linear_serial(std::size_t samples, std::uint64_t seed,
                                       std::size_t fuel, std::size_t max_size) {
  return aggregate("completeness-linear", run_serial(samples, [&](std::size_t i) {
                     return linear_sample(i, seed, fuel, max_size);
                   }));
}

SuiteReport completeness_bang(std::size_t samples, std::uint64_t seed, std::size_t fuel,
                              std::size_t max_size) {
  return aggregate("completeness-bang", run_parallel(samples, [&](std::size_t i) {
                     return bang_sample(i, seed, fuel, max_size);
                   }));
}

SuiteReport completeness_bang_serial(std::size_t samples, std::uint64_t seed, std::size_t fuel,
                                     std::size_t max_size) {
  return aggregate("completeness-bang", run_serial(samples, [&](std::size_t i) {
                     return bang_sample(i, seed, fuel, max_size);
                   }));
}

SuiteReport derived_cca_laws(std::size_t samples, std::uint64_t seed, std::size_t fuel,
                             std::size_t max_arg_size) {
  DerivedCca cca = derive_cca();
  return aggregate("derived-cca", run_parallel(samples, [&](std::size_t i) {
                     return cca_sample(cca, i, seed, fuel, max_arg_size);
                   }));
}

SuiteReport derived_cca_laws_serial(std::size_t samples, std::uint64_t seed, std::size_t fuel,
                                    std::size_t max_arg_size) {
  DerivedCca cca = derive_cca();
  return aggregate("derived-cca", run_serial(samples, [&](std::size_t i) {
                     return cca_sample(cca, i, seed, fuel, max_arg_size);
                   }));
}

}  // namespace lcr
