#include "vmig/game.hpp"

#include <cmath>
#include <ostream>

#include "vmig/csv.hpp"

namespace vmig {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> overhead_column(const SystemOverhead& so) {
  std::vector<double> out;
  out.reserve(so.per_vehicle.size());
  for (const CostBreakdown& cb : so.per_vehicle) out.push_back(cb.feasible ? cb.overhead : kInf);
  return out;
}

struct Engine {
  const Scenario& scenario;
  bool system_objective;          // false: own overhead (TM/MEC), true: (failed, total)
  std::span<const Mode> allowed;

  GameResult run(int max_sweeps) {
    const std::vector<Task>& tasks = scenario.tasks;
    const NetworkParams& params = scenario.params;
    const int count = static_cast<int>(tasks.size());

    GameResult result;
    result.decisions.assign(tasks.size(), Mode::local);
    DecisionVector& d = result.decisions;
    GameTrace& trace = result.trace;

    SystemOverhead current = system_overhead(d, tasks, params);
    trace.initial_overhead = current.total;
    trace.initial_failed = current.failed;

    LinkLoad load = LinkLoad::of(d);
    while (trace.sweeps < max_sweeps) {
      ++trace.sweeps;
      bool changed = false;
      for (int m = 0; m < count; ++m) {
        ++trace.evaluations;
        LinkLoad others = load;
        others.remove(d[m]);

        const CostBreakdown cur_cost = mode_cost(d[m], tasks[m], others, params);
        const BestResponse br = best_response(m, d, tasks, params, allowed);

        Mode chosen = d[m];
        bool forced = false;
        if (!br.any_feasible) {
          // No mode completes within tau: the vehicle gives up and stops
          // transmitting, which the cost model represents as local.
          if (d[m] != Mode::local) {
            chosen = Mode::local;
            forced = true;
          }
        } else if (system_objective) {
          chosen = system_best(m, d, others);
        } else if (br.mode != d[m] &&
                   strictly_better(br.cost.overhead,
                                   cur_cost.feasible ? cur_cost.overhead : kInf)) {
          chosen = br.mode;
        }

        if (chosen == d[m]) continue;
        const Mode old_mode = d[m];
        load.remove(old_mode);
        load.add(chosen);
        d[m] = chosen;
        changed = true;

        SystemOverhead after = system_overhead(d, tasks, params);
        TraceEntry entry;
        entry.sweep = trace.sweeps;
        entry.vehicle = m;
        entry.old_mode = old_mode;
        entry.new_mode = chosen;
        entry.old_overhead = cur_cost.feasible ? cur_cost.overhead : kInf;
        entry.new_overhead =
            after.per_vehicle[m].feasible ? after.per_vehicle[m].overhead : kInf;
        entry.overheads = overhead_column(after);
        entry.system_overhead = after.total;
        entry.failed = after.failed;
        entry.forced = forced;
        trace.moves.push_back(std::move(entry));
      }
      if (!changed) {
        trace.converged = true;
        break;
      }
    }

    result.outcome = system_overhead(d, tasks, params);
    return result;
  }

  // Candidate minimizing (failed, total) of the whole system among modes
  // feasible for the mover; returns the current mode unless the best
  // candidate is a strict lexicographic improvement.
  Mode system_best(int m, DecisionVector& d, const LinkLoad& others) {
    const SystemOverhead current = system_overhead(d, tasks_ref(), params_ref());
    const Mode original = d[m];
    Mode best = original;
    int best_failed = current.failed;
    double best_total = current.total;
    bool improved = false;
    for (Mode candidate : allowed) {
      if (candidate == original) continue;
      if (!mode_cost(candidate, tasks_ref()[m], others, params_ref()).feasible) continue;
      d[m] = candidate;
      const SystemOverhead so = system_overhead(d, tasks_ref(), params_ref());
      d[m] = original;
      const bool better =
          so.failed < best_failed ||
          (so.failed == best_failed &&
           (improved ? so.total < best_total : strictly_better(so.total, best_total)));
      if (better) {
        best = candidate;
        best_failed = so.failed;
        best_total = so.total;
        improved = true;
      }
    }
    return improved ? best : original;
  }

  const std::vector<Task>& tasks_ref() const { return scenario.tasks; }
  const NetworkParams& params_ref() const { return scenario.params; }
};

}  // namespace

bool strictly_better(double candidate, double current) {
  if (!std::isfinite(current)) return std::isfinite(candidate);
  return candidate < current - kImprovementRelTol * std::abs(current);
}

std::optional<MigrationChoice> migration_select(const Task& task, int m, const DecisionVector& d,
                                                const NetworkParams& params) {
  const LinkLoad others = others_load(m, d);
  const CostBreakdown direct = v2i_cost(task, others, params);
  if (direct.why != Infeasibility::leaves_coverage) {
    if (direct.feasible) return MigrationChoice{Mode::v2i, direct};
    return std::nullopt;
  }
  const CostBreakdown via_v2v = v2v_mig_cost(task, others, params);
  const CostBreakdown via_i2i = i2i_mig_cost(task, others, params);
  if (via_v2v.feasible && (!via_i2i.feasible || via_v2v.overhead <= via_i2i.overhead)) {
    return MigrationChoice{Mode::v2v_mig, via_v2v};
  }
  if (via_i2i.feasible) return MigrationChoice{Mode::i2i_mig, via_i2i};
  return std::nullopt;
}

BestResponse best_response(int m, const DecisionVector& d, const std::vector<Task>& tasks,
                           const NetworkParams& params, std::span<const Mode> allowed) {
  const LinkLoad others = others_load(m, d);
  const Task& task = tasks[static_cast<std::size_t>(m)];
  BestResponse br;
  br.mode = d[static_cast<std::size_t>(m)];
  br.cost = mode_cost(br.mode, task, others, params);
  for (Mode candidate : allowed) {
    const CostBreakdown cb = mode_cost(candidate, task, others, params);
    if (!cb.feasible) continue;
    if (!br.any_feasible || cb.overhead < br.cost.overhead ||
        (cb.overhead == br.cost.overhead && mode_code(candidate) < mode_code(br.mode))) {
      br.mode = candidate;
      br.cost = cb;
      br.any_feasible = true;
    }
  }
  return br;
}

GameResult run_tm(const Scenario& scenario, int max_sweeps, std::span<const Mode> allowed) {
  Engine engine{scenario, /*system_objective=*/false, allowed};
  return engine.run(max_sweeps);
}

GameResult run_como(const Scenario& scenario, int max_sweeps) {
  Engine engine{scenario, /*system_objective=*/true, kAllModes};
  return engine.run(max_sweeps);
}

NashCheck is_nash_equilibrium(const DecisionVector& d, const std::vector<Task>& tasks,
                              const NetworkParams& params) {
  NashCheck check;
  for (int m = 0; m < static_cast<int>(tasks.size()); ++m) {
    const LinkLoad others = others_load(m, d);
    const CostBreakdown cur = mode_cost(d[m], tasks[m], others, params);
    const double cur_overhead = cur.feasible ? cur.overhead : kInf;
    for (Mode candidate : kAllModes) {
      if (candidate == d[m]) continue;
      const CostBreakdown cb = mode_cost(candidate, tasks[m], others, params);
      if (cb.feasible && strictly_better(cb.overhead, cur_overhead)) {
        check.witness = NashWitness{m, candidate};
        return check;
      }
    }
  }
  check.equilibrium = true;
  return check;
}

void write_trace_csv(std::ostream& out, const GameTrace& trace) {
  CsvWriter csv(out);
  csv.row({"sweep", "vehicle", "old_mode", "new_mode", "system_overhead"});
  csv.field(0).field("").field("").field("").field(trace.initial_overhead).end_row();
  for (const TraceEntry& entry : trace.moves) {
    csv.field(entry.sweep)
        .field(entry.vehicle)
        .field(mode_code(entry.old_mode))
        .field(mode_code(entry.new_mode))
        .field(entry.system_overhead)
        .end_row();
  }
}

}  // namespace vmig
