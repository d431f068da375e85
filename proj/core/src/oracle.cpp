#include "vmig/oracle.hpp"

#include <format>
#include <stdexcept>

namespace vmig {

OracleResult exhaustive_optimum(const Scenario& scenario) {
  const int count = scenario.vehicle_count();
  if (count > kExhaustiveMaxVehicles) {
    throw std::invalid_argument(std::format(
        "exhaustive_optimum: {} vehicles exceed the cap of {}", count, kExhaustiveMaxVehicles));
  }

  OracleResult best;
  best.decisions.assign(scenario.tasks.size(), Mode::local);
  if (count == 0) return best;

  // Odometer over the joint decision space; the last vehicle spins fastest,
  // so enumeration is lexicographic ascending and the first optimum found is
  // the lexicographically smallest.
  DecisionVector d(scenario.tasks.size(), Mode::local);
  SystemOverhead so = system_overhead(d, scenario.tasks, scenario.params);
  best.decisions = d;
  best.total = so.total;
  best.failed = so.failed;

  while (true) {
    int pos = count - 1;
    while (pos >= 0 && d[pos] == Mode::i2i_mig) {
      d[pos] = Mode::local;
      --pos;
    }
    if (pos < 0) break;
    d[pos] = mode_from_code(mode_code(d[pos]) + 1);

    so = system_overhead(d, scenario.tasks, scenario.params);
    if (so.failed < best.failed || (so.failed == best.failed && so.total < best.total)) {
      best.decisions = d;
      best.total = so.total;
      best.failed = so.failed;
    }
  }
  return best;
}

GameResult mec_baseline(const Scenario& scenario, int max_sweeps) {
  return run_tm(scenario, max_sweeps, kNoMigrationModes);
}

}  // namespace vmig
