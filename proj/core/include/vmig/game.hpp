#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>

#include "vmig/cost.hpp"

// The sequential best-response offloading game. Vehicles update in a fixed
// round-robin order, one accepted move applied immediately; a run stops when
// a full sweep changes nothing. Runs are single-threaded and deterministic.

namespace vmig {

/// Moves whose relative improvement is below this are rejected, keeping the
/// improvement path strictly decreasing despite floating-point noise.
inline constexpr double kImprovementRelTol = 1e-9;

/// True when `candidate` improves on `current` by more than the relative
/// tolerance. `current` may be +inf (no feasible option yet).
bool strictly_better(double candidate, double current);

struct TraceEntry {
  int sweep = 0;  ///< 1-based sweep index
  int vehicle = 0;
  Mode old_mode = Mode::local;
  Mode new_mode = Mode::local;
  double old_overhead = 0;  ///< mover's overhead before the move (+inf if infeasible)
  double new_overhead = 0;  ///< mover's overhead after the move
  std::vector<double> overheads;  ///< per-vehicle overhead after the move (+inf if infeasible)
  double system_overhead = 0;     ///< system overhead after the move
  int failed = 0;                 ///< vehicles without a feasible chosen mode after the move
  bool forced = false;  ///< true when a vehicle with no feasible mode was parked at local
};

struct GameTrace {
  double initial_overhead = 0;  ///< system overhead of the starting decision (all-local)
  int initial_failed = 0;
  std::vector<TraceEntry> moves;  ///< accepted moves only
  bool converged = false;
  int sweeps = 0;                 ///< Q: sweeps executed, including the final quiet one
  std::int64_t evaluations = 0;   ///< per-vehicle decision evaluations; M per sweep
};

struct GameResult {
  DecisionVector decisions;
  SystemOverhead outcome;
  GameTrace trace;
};

/// Migration Selection routing for a vehicle that elected RSU processing:
/// stays in coverage -> direct V2I; leaves coverage -> the cheaper feasible
/// of V2V/I2I result migration. Empty when no RSU-based option is feasible.
struct MigrationChoice {
  Mode mode = Mode::v2i;
  CostBreakdown cost;
};
std::optional<MigrationChoice> migration_select(const Task& task, int m, const DecisionVector& d,
                                                const NetworkParams& params);

/// The mode minimizing the vehicle's own overhead against d_{-m}, feasible
/// modes only, ties to the smallest code. When nothing is feasible the
/// current mode is returned with any_feasible=false.
struct BestResponse {
  Mode mode = Mode::local;
  CostBreakdown cost;
  bool any_feasible = false;
};
BestResponse best_response(int m, const DecisionVector& d, const std::vector<Task>& tasks,
                           const NetworkParams& params,
                           std::span<const Mode> allowed = kAllModes);

/// Task Migration algorithm: selfish best-response dynamics from all-local,
/// accepting only strict own-overhead decreases.
GameResult run_tm(const Scenario& scenario, int max_sweeps,
                  std::span<const Mode> allowed = kAllModes);

/// Computation Overhead Minimization Offloading: coordinate descent on the
/// system overhead from all-local. A candidate must be feasible for the
/// mover; a move is accepted only if it lowers (failed count, overhead)
/// lexicographically, so accepted moves never strand a vehicle.
GameResult run_como(const Scenario& scenario, int max_sweeps);

/// Nash certificate: no non-failed vehicle can lower its own overhead by a
/// unilateral feasible deviation. On failure carries one improving deviation.
struct NashWitness {
  int vehicle = 0;
  Mode better_mode = Mode::local;
};
struct NashCheck {
  bool equilibrium = false;
  std::optional<NashWitness> witness;
};
NashCheck is_nash_equilibrium(const DecisionVector& d, const std::vector<Task>& tasks,
                              const NetworkParams& params);

/// Row-per-move CSV (sweep, vehicle, old_mode, new_mode, system_overhead)
/// preceded by a sweep-0 row carrying the initial system overhead.
void write_trace_csv(std::ostream& out, const GameTrace& trace);

}  // namespace vmig
