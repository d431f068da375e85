#include "vmig/harness.hpp"

#include <cmath>
#include <format>
#include <ostream>
#include <stdexcept>

#include "vmig/csv.hpp"

namespace vmig {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct RunStats {
  double total = 0;        // system overhead
  double mean_delay = kNaN;
  double mean_energy = kNaN;
  double success = 0;      // fraction of vehicles with a feasible final mode
};

RunStats stats_of(const GameResult& result) {
  RunStats s;
  s.total = result.outcome.total;
  const auto& per_vehicle = result.outcome.per_vehicle;
  double delay_sum = 0;
  double energy_sum = 0;
  int feasible = 0;
  for (const CostBreakdown& cb : per_vehicle) {
    if (!cb.feasible) continue;
    delay_sum += cb.delay;
    energy_sum += cb.energy;
    ++feasible;
  }
  if (feasible > 0) {
    s.mean_delay = delay_sum / feasible;
    s.mean_energy = energy_sum / feasible;
  }
  if (!per_vehicle.empty()) {
    s.success = static_cast<double>(feasible) / static_cast<double>(per_vehicle.size());
  }
  return s;
}

// Replication-mean statistics of one (scenario spec, algorithm) cell. The
// delay/energy means skip replications where every vehicle failed.
RunStats replicated(const ExperimentContext& ctx, int vehicle_count, const TaskSpec& spec,
                    Algorithm algorithm) {
  RunStats mean;
  double delay_sum = 0;
  double energy_sum = 0;
  int with_survivors = 0;
  for (int rep = 0; rep < ctx.replications; ++rep) {
    const Scenario scenario =
        generate_scenario(vehicle_count, spec, ctx.seed + static_cast<std::uint64_t>(rep),
                          ctx.params);
    const RunStats s = stats_of(run_algorithm(algorithm, scenario, ctx.max_sweeps));
    mean.total += s.total;
    mean.success += s.success;
    if (!std::isnan(s.mean_delay)) {
      delay_sum += s.mean_delay;
      energy_sum += s.mean_energy;
      ++with_survivors;
    }
  }
  const double n = ctx.replications;
  mean.total /= n;
  mean.success /= n;
  if (with_survivors > 0) {
    mean.mean_delay = delay_sum / with_survivors;
    mean.mean_energy = energy_sum / with_survivors;
  }
  return mean;
}

}  // namespace

SamplingSpec SamplingSpec::fixed(double v) {
  SamplingSpec s;
  s.kind = Kind::fixed;
  s.value = v;
  return s;
}

SamplingSpec SamplingSpec::range(double lo, double hi) {
  if (!(lo <= hi)) throw std::invalid_argument(std::format("empty sampling range [{}, {}]", lo, hi));
  SamplingSpec s;
  s.kind = Kind::range;
  s.lo = lo;
  s.hi = hi;
  return s;
}

SamplingSpec SamplingSpec::choice(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("empty sampling choice set");
  SamplingSpec s;
  s.kind = Kind::choice;
  s.choices = std::move(values);
  return s;
}

double SamplingSpec::sample(Rng& rng) const {
  switch (kind) {
    case Kind::fixed: return value;
    case Kind::range: return rng.uniform(lo, hi);
    case Kind::choice: return choices[rng.pick(choices.size())];
  }
  return value;
}

std::optional<double> SamplingSpec::fixed_value() const {
  if (kind == Kind::fixed) return value;
  return std::nullopt;
}

Scenario generate_scenario(int vehicle_count, const TaskSpec& spec, std::uint64_t seed,
                           const NetworkParams& params) {
  if (vehicle_count < 1) {
    throw std::invalid_argument(std::format("scenario needs at least one vehicle, got {}",
                                            vehicle_count));
  }
  validate_params(params);
  Scenario scenario;
  scenario.params = params;
  scenario.seed = seed;
  scenario.tasks.reserve(static_cast<std::size_t>(vehicle_count));
  Rng rng(seed);
  for (int m = 0; m < vehicle_count; ++m) {
    const double data = spec.data_in.sample(rng);
    const double alpha = spec.alpha.sample(rng);
    const double mu = spec.mu.sample(rng);
    scenario.tasks.push_back(make_task(data, spec.tau, alpha, mu, params));
  }
  return scenario;
}

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::local: return "local";
    case Algorithm::mec: return "mec";
    case Algorithm::tm: return "tm";
    case Algorithm::como: return "como";
  }
  return "?";
}

std::optional<Algorithm> algorithm_from_string(std::string_view name) {
  if (name == "local") return Algorithm::local;
  if (name == "mec") return Algorithm::mec;
  if (name == "tm") return Algorithm::tm;
  if (name == "como") return Algorithm::como;
  return std::nullopt;
}

GameResult run_algorithm(Algorithm a, const Scenario& scenario, int max_sweeps) {
  switch (a) {
    case Algorithm::local: {
      GameResult result;
      result.decisions.assign(scenario.tasks.size(), Mode::local);
      result.outcome = system_overhead(result.decisions, scenario.tasks, scenario.params);
      result.trace.initial_overhead = result.outcome.total;
      result.trace.initial_failed = result.outcome.failed;
      result.trace.converged = true;
      return result;
    }
    case Algorithm::mec: return mec_baseline(scenario, max_sweeps);
    case Algorithm::tm: return run_tm(scenario, max_sweeps);
    case Algorithm::como: return run_como(scenario, max_sweeps);
  }
  throw std::invalid_argument("unknown algorithm");
}

std::vector<SweepRow> sweep_vehicles(const ExperimentContext& ctx, const std::vector<int>& m_values,
                                     const std::vector<Algorithm>& algorithms) {
  if (m_values.empty()) throw std::invalid_argument("sweep_vehicles: empty vehicle-count list");
  std::vector<SweepRow> rows;
  for (int vehicles : m_values) {
    for (Algorithm a : algorithms) {
      const RunStats s = replicated(ctx, vehicles, ctx.task_spec, a);
      SweepRow row;
      row.experiment = "sweep-vehicles";
      row.algorithm = std::string(to_string(a));
      row.vehicles = vehicles;
      row.data_bits = ctx.task_spec.data_in.fixed_value().value_or(kNaN);
      row.tau_s = ctx.task_spec.tau;
      row.seed = ctx.seed;
      row.total_overhead = s.total;
      row.mean_delay_s = s.mean_delay;
      row.mean_energy_j = s.mean_energy;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<SweepRow> sweep_data_size(const ExperimentContext& ctx,
                                      const std::vector<double>& sizes_bits,
                                      const std::vector<Algorithm>& algorithms,
                                      int vehicle_count) {
  std::vector<SweepRow> rows;
  for (double size : sizes_bits) {
    TaskSpec spec = ctx.task_spec;
    spec.data_in = SamplingSpec::fixed(size);
    // The baseline denominator is always the no-migration scheme.
    const RunStats mec = replicated(ctx, vehicle_count, spec, Algorithm::mec);
    for (Algorithm a : algorithms) {
      const RunStats s =
          a == Algorithm::mec ? mec : replicated(ctx, vehicle_count, spec, a);
      SweepRow row;
      row.experiment = "sweep-size";
      row.algorithm = std::string(to_string(a));
      row.vehicles = vehicle_count;
      row.data_bits = size;
      row.tau_s = spec.tau;
      row.seed = ctx.seed;
      row.total_overhead = s.total;
      row.mean_delay_s = s.mean_delay;
      row.mean_energy_j = s.mean_energy;
      row.reduction_rate = mec.total > 0 ? (mec.total - s.total) / mec.total : kNaN;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<SweepRow> success_rate(const ExperimentContext& ctx, const std::vector<double>& taus,
                                   const std::vector<Algorithm>& algorithms, int vehicle_count) {
  std::vector<SweepRow> rows;
  for (double tau : taus) {
    if (!(tau > 0)) throw std::invalid_argument(std::format("tau must be positive, got {}", tau));
    TaskSpec spec = ctx.task_spec;
    spec.tau = tau;
    for (Algorithm a : algorithms) {
      const RunStats s = replicated(ctx, vehicle_count, spec, a);
      SweepRow row;
      row.experiment = "success-rate";
      row.algorithm = std::string(to_string(a));
      row.vehicles = vehicle_count;
      row.data_bits = spec.data_in.fixed_value().value_or(kNaN);
      row.tau_s = tau;
      row.seed = ctx.seed;
      row.total_overhead = s.total;
      row.success_rate = s.success;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

GameTrace convergence_trace(const ExperimentContext& ctx, int vehicle_count, Algorithm a) {
  const Scenario scenario = generate_scenario(vehicle_count, ctx.task_spec, ctx.seed, ctx.params);
  return run_algorithm(a, scenario, ctx.max_sweeps).trace;
}

void write_table_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  CsvWriter csv(out);
  csv.row({"experiment", "algorithm", "M", "data_bits", "tau_s", "seed", "total_overhead",
           "mean_delay_s", "mean_energy_j", "reduction_rate", "success_rate"});
  for (const SweepRow& row : rows) {
    csv.field(row.experiment)
        .field(row.algorithm)
        .field(row.vehicles)
        .field(row.data_bits)
        .field(row.tau_s)
        .field(row.seed)
        .field(row.total_overhead)
        .field(row.mean_delay_s)
        .field(row.mean_energy_j)
        .field(row.reduction_rate)
        .field(row.success_rate)
        .end_row();
  }
}

}  // namespace vmig
