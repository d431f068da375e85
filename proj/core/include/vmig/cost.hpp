#pragma once

#include "vmig/channel.hpp"

// Per-vehicle delay, energy, overhead and feasibility for every offloading
// mode, plus the system overhead of a joint decision. The `others` tally
// excludes the vehicle being evaluated; the d-based overloads build it from
// a candidate joint decision vector.

namespace vmig {

struct HopCount {
  bool feasible = false;
  int hops = 0;
  Infeasibility why = Infeasibility::none;
};

/// Local processing: delay C/(mu f_ue), energy k mu^2 C f_ue^2.
CostBreakdown local_cost(const Task& task, const NetworkParams& params);

/// Offload to an idle vehicle. The helper executes at full f_ue and its
/// execution energy k C f_ue^2 is charged to the task.
CostBreakdown v2v_cost(const Task& task, const LinkLoad& others, const NetworkParams& params);

/// Offload to the RSU with the result returned directly. Infeasible when
/// the vehicle would leave coverage first (speed * delay > l_i2i, S1).
CostBreakdown v2i_cost(const Task& task, const LinkLoad& others, const NetworkParams& params);

/// Average number of relay vehicles a V2V-migrated result passes (phi).
/// Requires S1 and S2 (l_v2v > speed * data_out / migration rate).
HopCount v2v_mig_hops(const Task& task, const LinkLoad& others, const NetworkParams& params);

/// Average number of relay RSUs an I2I-migrated result passes (varphi).
/// Requires S1 and S3 (l_i2i > speed * data_out / migration rate).
HopCount i2i_mig_hops(const Task& task, const LinkLoad& others, const NetworkParams& params);

/// RSU processing with the result relayed over vehicles.
CostBreakdown v2v_mig_cost(const Task& task, const LinkLoad& others, const NetworkParams& params);

/// RSU processing with the result relayed over RSUs. Only the vehicle's own
/// transmission energy is charged; RSU-to-RSU transmission is free.
CostBreakdown i2i_mig_cost(const Task& task, const LinkLoad& others, const NetworkParams& params);

/// Dispatches to the cost of `mode`. Infeasibility is data, never an error.
CostBreakdown mode_cost(Mode mode, const Task& task, const LinkLoad& others,
                        const NetworkParams& params);

CostBreakdown v2v_cost(const Task& task, int m, const DecisionVector& d,
                       const NetworkParams& params);
CostBreakdown v2i_cost(const Task& task, int m, const DecisionVector& d,
                       const NetworkParams& params);
HopCount v2v_mig_hops(const Task& task, int m, const DecisionVector& d,
                      const NetworkParams& params);
HopCount i2i_mig_hops(const Task& task, int m, const DecisionVector& d,
                      const NetworkParams& params);
CostBreakdown v2v_mig_cost(const Task& task, int m, const DecisionVector& d,
                           const NetworkParams& params);
CostBreakdown i2i_mig_cost(const Task& task, int m, const DecisionVector& d,
                           const NetworkParams& params);
CostBreakdown mode_cost(Mode mode, const Task& task, int m, const DecisionVector& d,
                        const NetworkParams& params);

/// System overhead of a joint decision. Vehicles whose chosen mode is
/// infeasible contribute 0 and are counted in `failed`.
struct SystemOverhead {
  double total = 0;
  std::vector<CostBreakdown> per_vehicle;
  int failed = 0;
};

SystemOverhead system_overhead(const DecisionVector& d, const std::vector<Task>& tasks,
                               const NetworkParams& params);

}  // namespace vmig
