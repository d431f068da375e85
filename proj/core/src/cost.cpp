#include "vmig/cost.hpp"

#include <cmath>

namespace vmig {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

CostBreakdown unusable(Infeasibility why) {
  CostBreakdown cb;
  cb.delay = kInf;
  cb.energy = kInf;
  cb.overhead = kInf;
  cb.feasible = false;
  cb.why = why;
  return cb;
}

CostBreakdown finish(const Task& task, double delay, double energy, int hops) {
  CostBreakdown cb;
  cb.delay = delay;
  cb.energy = energy;
  cb.overhead = task.alpha * delay + task.beta * energy;
  cb.hops = hops;
  cb.feasible = delay <= task.deadline;
  cb.why = cb.feasible ? Infeasibility::none : Infeasibility::deadline;
  return cb;
}

// Uplink + RSU execution + direct downlink delay; the S1 test and both
// migration modes are built on it. Modes 2, 3 and 4 all transmit on the
// V2I comm link, so the interferer count is the same for all three.
double v2i_round_trip_delay(const Task& task, const LinkLoad& others,
                            const NetworkParams& params, double* rate_out) {
  const double r = rate_with_interferers(LinkKind::v2i_comm, others.interferers(LinkKind::v2i_comm),
                                         params);
  if (rate_out != nullptr) *rate_out = r;
  if (!(r > 0)) return kInf;
  return (task.data_in + task.data_out) / r + task.cycles / params.f_mec;
}

// The vehicle keeps moving while the result is relayed; a hop is worthwhile
// only if the vehicle advances less than one relay spacing per hop.
HopCount migration_hops(const Task& task, const LinkLoad& others, const NetworkParams& params,
                        LinkKind mig_link, double relay_spacing, Infeasibility catch_failure) {
  HopCount h;
  const double t_v2i = v2i_round_trip_delay(task, others, params, nullptr);
  if (!std::isfinite(t_v2i)) {
    h.why = Infeasibility::zero_rate;
    return h;
  }
  if (!(params.speed * t_v2i > params.l_i2i)) {  // S1
    h.why = Infeasibility::migration_unneeded;
    return h;
  }
  const double mig_rate =
      rate_with_interferers(mig_link, others.interferers(mig_link), params);
  if (!(mig_rate > 0)) {
    h.why = Infeasibility::zero_rate;
    return h;
  }
  const double advance_per_hop = params.speed * task.data_out / mig_rate;
  if (!(relay_spacing > advance_per_hop)) {  // S2 / S3
    h.why = catch_failure;
    return h;
  }
  const double arg = (2.0 * params.speed * t_v2i - params.l_i2i) /
                     (2.0 * (relay_spacing - advance_per_hop));
  h.feasible = true;
  h.hops = static_cast<int>(std::floor(arg));
  return h;
}

CostBreakdown migration_cost(const Task& task, const LinkLoad& others, const NetworkParams& params,
                             LinkKind mig_link, const HopCount& hops, bool charge_migration) {
  if (!hops.feasible) return unusable(hops.why);
  double v2i_rate = 0;
  const double t_v2i = v2i_round_trip_delay(task, others, params, &v2i_rate);
  const double mig_rate =
      rate_with_interferers(mig_link, others.interferers(mig_link), params);
  const double hop_count = static_cast<double>(hops.hops);
  const double delay = t_v2i + hop_count * task.data_out / mig_rate;
  double energy = params.v2i_comm.power * (task.data_in + task.data_out) / v2i_rate;
  if (charge_migration) {
    energy += hop_count * link_params(params, mig_link).power * task.data_out / mig_rate;
  }
  return finish(task, delay, energy, hops.hops);
}

}  // namespace

CostBreakdown local_cost(const Task& task, const NetworkParams& params) {
  const double delay = task.cycles / (task.mu * params.f_ue);
  const double energy = params.k * task.mu * task.mu * task.cycles * params.f_ue * params.f_ue;
  return finish(task, delay, energy, 0);
}

CostBreakdown v2v_cost(const Task& task, const LinkLoad& others, const NetworkParams& params) {
  const double r = rate_with_interferers(LinkKind::v2v_comm, others.interferers(LinkKind::v2v_comm),
                                         params);
  if (!(r > 0)) return unusable(Infeasibility::zero_rate);
  const double transfer = (task.data_in + task.data_out) / r;
  const double delay = transfer + task.cycles / params.f_ue;
  const double energy = params.v2v_comm.power * transfer +
                        params.k * task.cycles * params.f_ue * params.f_ue;
  return finish(task, delay, energy, 0);
}

CostBreakdown v2i_cost(const Task& task, const LinkLoad& others, const NetworkParams& params) {
  double r = 0;
  const double delay = v2i_round_trip_delay(task, others, params, &r);
  if (!std::isfinite(delay)) return unusable(Infeasibility::zero_rate);
  if (params.speed * delay > params.l_i2i) {  // S1: result would return to an empty cell
    CostBreakdown cb = finish(task, delay, params.v2i_comm.power * (task.data_in + task.data_out) / r, 0);
    cb.feasible = false;
    cb.why = Infeasibility::leaves_coverage;
    return cb;
  }
  const double energy = params.v2i_comm.power * (task.data_in + task.data_out) / r;
  return finish(task, delay, energy, 0);
}

HopCount v2v_mig_hops(const Task& task, const LinkLoad& others, const NetworkParams& params) {
  return migration_hops(task, others, params, LinkKind::v2v_mig, params.l_v2v,
                        Infeasibility::result_uncatchable);
}

HopCount i2i_mig_hops(const Task& task, const LinkLoad& others, const NetworkParams& params) {
  return migration_hops(task, others, params, LinkKind::i2i_mig, params.l_i2i,
                        Infeasibility::result_uncatchable);
}

CostBreakdown v2v_mig_cost(const Task& task, const LinkLoad& others, const NetworkParams& params) {
  return migration_cost(task, others, params, LinkKind::v2v_mig,
                        v2v_mig_hops(task, others, params), /*charge_migration=*/true);
}

CostBreakdown i2i_mig_cost(const Task& task, const LinkLoad& others, const NetworkParams& params) {
  return migration_cost(task, others, params, LinkKind::i2i_mig,
                        i2i_mig_hops(task, others, params), /*charge_migration=*/false);
}

CostBreakdown mode_cost(Mode mode, const Task& task, const LinkLoad& others,
                        const NetworkParams& params) {
  switch (mode) {
    case Mode::local: return local_cost(task, params);
    case Mode::v2v: return v2v_cost(task, others, params);
    case Mode::v2i: return v2i_cost(task, others, params);
    case Mode::v2v_mig: return v2v_mig_cost(task, others, params);
    case Mode::i2i_mig: return i2i_mig_cost(task, others, params);
  }
  return unusable(Infeasibility::none);  // unreachable
}

CostBreakdown v2v_cost(const Task& task, int m, const DecisionVector& d,
                       const NetworkParams& params) {
  return v2v_cost(task, others_load(m, d), params);
}

CostBreakdown v2i_cost(const Task& task, int m, const DecisionVector& d,
                       const NetworkParams& params) {
  return v2i_cost(task, others_load(m, d), params);
}

HopCount v2v_mig_hops(const Task& task, int m, const DecisionVector& d,
                      const NetworkParams& params) {
  return v2v_mig_hops(task, others_load(m, d), params);
}

HopCount i2i_mig_hops(const Task& task, int m, const DecisionVector& d,
                      const NetworkParams& params) {
  return i2i_mig_hops(task, others_load(m, d), params);
}

CostBreakdown v2v_mig_cost(const Task& task, int m, const DecisionVector& d,
                           const NetworkParams& params) {
  return v2v_mig_cost(task, others_load(m, d), params);
}

CostBreakdown i2i_mig_cost(const Task& task, int m, const DecisionVector& d,
                           const NetworkParams& params) {
  return i2i_mig_cost(task, others_load(m, d), params);
}

CostBreakdown mode_cost(Mode mode, const Task& task, int m, const DecisionVector& d,
                        const NetworkParams& params) {
  return mode_cost(mode, task, others_load(m, d), params);
}

SystemOverhead system_overhead(const DecisionVector& d, const std::vector<Task>& tasks,
                               const NetworkParams& params) {
  SystemOverhead so;
  so.per_vehicle.reserve(tasks.size());
  const LinkLoad all = LinkLoad::of(d);
  for (std::size_t m = 0; m < tasks.size(); ++m) {
    LinkLoad others = all;
    others.remove(d[m]);
    CostBreakdown cb = mode_cost(d[m], tasks[m], others, params);
    if (cb.feasible) {
      so.total += cb.overhead;
    } else {
      ++so.failed;
    }
    so.per_vehicle.push_back(std::move(cb));
  }
  return so;
}

}  // namespace vmig
