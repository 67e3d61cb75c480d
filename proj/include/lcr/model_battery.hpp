#pragma once

// The assemblies test battery run over a set of model specs.

#include <string>
#include <vector>

#include "lcr/assemblies.hpp"

namespace lcr {

struct BatteryLine {
  std::string check;
  Verdict verdict = Verdict::Ok;
  std::string detail;
};

struct BatteryReport {
  std::vector<BatteryLine> lines;
  std::size_t morphisms = 0;          ///< verified morphisms found between specs
  std::size_t equalizer_pairs = 0;    ///< parallel pairs whose equalizer was checked
  std::size_t factorizations = 0;     ///< universal-property instances checked
  std::size_t round_trips = 0;        ///< modest assemblies round-tripped through PERs
  std::size_t lpi_elements = 0;
  std::size_t per_pi_classes = 0;

  bool failed() const;
  bool inconclusive() const;
};

struct BatteryOptions {
  std::size_t fuel = kDefaultFuel;
  std::size_t search_fuel = 1000;
  std::size_t max_carrier = 4;  ///< equalizer checks only range over carriers this small
};

BatteryReport run_model_battery(const std::vector<Assembly>& assemblies,
                                const std::vector<FamAssembly>& families,
                                const BatteryOptions& options = {});

}  // namespace lcr
