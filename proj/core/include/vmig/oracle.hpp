#pragma once

#include "vmig/game.hpp"

// Ground-truth references the game results are checked against: the
// exhaustive optimum over all joint decisions, and the no-migration
// baseline the reduction rates are measured from.

namespace vmig {

/// 5^M joint decisions at the cap is ~390k evaluations.
inline constexpr int kExhaustiveMaxVehicles = 8;

struct OracleResult {
  DecisionVector decisions;
  double total = 0;
  int failed = 0;
};

/// Enumerates every joint decision and returns the one minimizing
/// (failed count, system overhead) lexicographically; among equal optima the
/// lexicographically smallest vector wins. Throws std::invalid_argument when
/// the vehicle count exceeds the cap.
OracleResult exhaustive_optimum(const Scenario& scenario);

/// The no-migration scheme: best-response dynamics restricted to
/// {local, v2v, v2i}. Vehicles that cannot finish under any of the three
/// are failed.
GameResult mec_baseline(const Scenario& scenario, int max_sweeps);

}  // namespace vmig
