#pragma once

#include <optional>
#include <random>
#include <string_view>

#include "vmig/oracle.hpp"

// Experiment harness: seeded scenario generation, the sweeps behind the
// published figures/tables, and their CSV form. Every table is a pure
// function of (spec, seed); replication r of a sweep cell uses seed + r.

namespace vmig {

/// Deterministic uniform sampling. Draws come straight from mt19937_64
/// (which the standard pins down bit-exactly) instead of the
/// implementation-defined std:: distributions, so identical seeds give
/// identical scenarios on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// [0,1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  std::size_t pick(std::size_t n) { return static_cast<std::size_t>(uniform01() * static_cast<double>(n)); }

 private:
  std::mt19937_64 engine_;
};

/// A fixed value, a uniform range, or a uniform choice from a finite set.
struct SamplingSpec {
  enum class Kind { fixed, range, choice };

  Kind kind = Kind::fixed;
  double value = 0;
  double lo = 0;
  double hi = 0;
  std::vector<double> choices;

  static SamplingSpec fixed(double v);
  static SamplingSpec range(double lo, double hi);
  static SamplingSpec choice(std::vector<double> values);

  double sample(Rng& rng) const;
  /// The value when fixed, otherwise empty.
  std::optional<double> fixed_value() const;
};

/// How each task field is drawn. Per vehicle the draw order is data_in,
/// alpha, mu.
struct TaskSpec {
  SamplingSpec data_in = SamplingSpec::fixed(5e6);
  SamplingSpec alpha = SamplingSpec::fixed(0.5);
  SamplingSpec mu = SamplingSpec::fixed(1.0);
  double tau = kNoDeadline;
};

Scenario generate_scenario(int vehicle_count, const TaskSpec& spec, std::uint64_t seed,
                           const NetworkParams& params);

enum class Algorithm { local, mec, tm, como };

std::string_view to_string(Algorithm a);
std::optional<Algorithm> algorithm_from_string(std::string_view name);

/// `local` evaluates the all-local decision without running a game.
GameResult run_algorithm(Algorithm a, const Scenario& scenario, int max_sweeps);

/// One row of the experiment tables. NaN doubles render as empty CSV cells.
struct SweepRow {
  std::string experiment;
  std::string algorithm;
  int vehicles = 0;
  double data_bits = std::numeric_limits<double>::quiet_NaN();
  double tau_s = kNoDeadline;
  std::uint64_t seed = 0;
  double total_overhead = std::numeric_limits<double>::quiet_NaN();
  double mean_delay_s = std::numeric_limits<double>::quiet_NaN();
  double mean_energy_j = std::numeric_limits<double>::quiet_NaN();
  double reduction_rate = std::numeric_limits<double>::quiet_NaN();
  double success_rate = std::numeric_limits<double>::quiet_NaN();
};

struct ExperimentContext {
  NetworkParams params;
  TaskSpec task_spec;
  int replications = 10;
  std::uint64_t seed = 1;
  int max_sweeps = 1000;
};

/// Overhead versus vehicle count: per (M, algorithm), replication-mean total
/// and per-vehicle system overhead.
std::vector<SweepRow> sweep_vehicles(const ExperimentContext& ctx, const std::vector<int>& m_values,
                                     const std::vector<Algorithm>& algorithms);

/// Overhead versus task size at fixed M, with the reduction rate
/// (mec - alg)/mec of every algorithm against the no-migration baseline.
std::vector<SweepRow> sweep_data_size(const ExperimentContext& ctx,
                                      const std::vector<double>& sizes_bits,
                                      const std::vector<Algorithm>& algorithms, int vehicle_count);

/// Fraction of vehicles whose final mode finishes within tau, per (tau,
/// algorithm).
std::vector<SweepRow> success_rate(const ExperimentContext& ctx, const std::vector<double>& taus,
                                   const std::vector<Algorithm>& algorithms, int vehicle_count);

/// Per-iteration system overhead trajectory of one run; the initial trace
/// point is the all-local overhead.
GameTrace convergence_trace(const ExperimentContext& ctx, int vehicle_count, Algorithm a);

void write_table_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace vmig
