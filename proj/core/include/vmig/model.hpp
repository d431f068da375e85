#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

// Domain model of the MEC-assisted vehicular offloading simulator.
// All quantities are SI: bits, seconds, joules, watts, hertz, metres.

namespace vmig {

inline constexpr double kNoDeadline = std::numeric_limits<double>::infinity();

// Raised when an input violates a model constraint. `constraint()` carries
// the short id used in messages (C1..C4, C12, C13, or a positivity note).
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string constraint, const std::string& message)
      : std::runtime_error(message), constraint_(std::move(constraint)) {}

  const std::string& constraint() const { return constraint_; }

 private:
  std::string constraint_;
};

/// Offloading decision of a vehicle.
///   local    — process on the own OBU
///   v2v      — offload to a nearby idle vehicle
///   v2i      — offload to the RSU, result returned directly
///   v2v_mig  — offload to the RSU, result relayed over vehicles
///   i2i_mig  — offload to the RSU, result relayed over RSUs
enum class Mode : int { local = 0, v2v = 1, v2i = 2, v2v_mig = 3, i2i_mig = 4 };

inline constexpr std::array<Mode, 5> kAllModes = {Mode::local, Mode::v2v, Mode::v2i,
                                                  Mode::v2v_mig, Mode::i2i_mig};
inline constexpr std::array<Mode, 3> kNoMigrationModes = {Mode::local, Mode::v2v, Mode::v2i};

inline constexpr int mode_code(Mode m) { return static_cast<int>(m); }
Mode mode_from_code(int code);  // throws ValidationError("C6") out of {0..4}

/// Joint offloading decision d = (d_1..d_M).
using DecisionVector = std::vector<Mode>;

/// Checks length and the per-entry mode range (C5 is vacuous, C6 is the
/// range check); throws ValidationError on violation.
void validate_decisions(const DecisionVector& d, std::size_t vehicle_count);

/// Physical constants of one link class: transmit power (W), bandwidth (Hz),
/// channel gain (dimensionless), and the maximum allowed power (W).
struct LinkParams {
  double power = 0;
  double bandwidth = 0;
  double gain = 0;
  double power_max = 0;
};

/// All physical and channel constants of the scenario.
struct NetworkParams {
  double delta = 0;  ///< CPU cycles per input bit
  double xi = 0;     ///< input bits per result bit
  double f_ue = 0;   ///< vehicle CPU frequency, Hz
  double f_mec = 0;  ///< RSU CPU frequency, Hz
  double k = 0;      ///< chip energy coefficient
  double noise = 0;  ///< white noise power, W
  double speed = 0;  ///< average vehicle speed, m/s
  double l_v2v = 0;  ///< average inter-vehicle distance, m
  double l_i2i = 0;  ///< inter-RSU distance (coverage diameter), m
  double l_v2i = 0;  ///< vehicle-to-RSU distance, m
  double theta = 0;  ///< path-loss exponent

  LinkParams v2v_comm;
  LinkParams v2i_comm;
  LinkParams v2v_mig;
  LinkParams i2i_mig;

  /// The published simulation parameter set. Gains are L^(-theta) of the
  /// corresponding link distance; power caps equal the table powers.
  static NetworkParams table1();
};

/// Checks positivity of every physical constant and the power caps
/// (C1: v2v comm, C2: v2i comm, C3: v2v migration, C4: i2i migration).
/// Throws ValidationError naming the first violated constraint.
void validate_params(const NetworkParams& params);

/// One vehicle's computation job.
struct Task {
  double data_in = 0;   ///< input size, bits
  double cycles = 0;    ///< CPU cycles (= delta * data_in)
  double data_out = 0;  ///< result size, bits (= data_in / xi)
  double deadline = kNoDeadline;  ///< seconds; kNoDeadline disables the limit
  double alpha = 0;     ///< delay weight
  double beta = 0;      ///< energy weight (= 1 - alpha)
  double mu = 0;        ///< available fraction of the own CPU, (0,1]
};

/// Builds a task with the derived fields filled in. Throws ValidationError
/// naming C12 (alpha out of [0,1]), C13 (mu out of (0,1]) or a positivity
/// violation.
Task make_task(double data_in_bits, double deadline_s, double alpha, double mu,
               const NetworkParams& params);

/// Why a mode is unavailable to a vehicle under a given joint decision.
enum class Infeasibility {
  none,
  deadline,            ///< delay exceeds tau (C7..C11)
  leaves_coverage,     ///< S1 holds: the vehicle exits coverage before the direct return
  migration_unneeded,  ///< S1 fails: the vehicle never leaves coverage, migration pointless
  result_uncatchable,  ///< S2/S3 fails: the vehicle outruns the relayed result
  zero_rate,           ///< a required link has no capacity
};

const char* to_string(Infeasibility why);

/// Delay/energy/overhead of one vehicle under one mode of a joint decision.
struct CostBreakdown {
  double delay = 0;    ///< seconds
  double energy = 0;   ///< joules
  double overhead = 0; ///< alpha*delay + beta*energy
  bool feasible = false;
  int hops = 0;        ///< migration hop count (phi/varphi), 0 for modes 0..2
  Infeasibility why = Infeasibility::none;
};

/// A complete simulation input: constants, tasks, and the PRNG seed that
/// produced the tasks. Immutable once built; safe to share across threads.
struct Scenario {
  NetworkParams params;
  std::vector<Task> tasks;
  std::uint64_t seed = 0;

  int vehicle_count() const { return static_cast<int>(tasks.size()); }
};

}  // namespace vmig
