#include "vmig/model.hpp"

#include <cmath>
#include <format>

namespace vmig {

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0) || !std::isfinite(value)) {
    throw ValidationError("positivity",
                          std::format("{} must be strictly positive, got {}", name, value));
  }
}

void check_link(const LinkParams& link, const char* name, const char* cap_constraint) {
  require_positive(link.power, name);
  require_positive(link.bandwidth, name);
  require_positive(link.gain, name);
  require_positive(link.power_max, name);
  if (link.power > link.power_max) {
    throw ValidationError(cap_constraint,
                          std::format("{}: transmission power {} W exceeds the {} W cap ({})",
                                      name, link.power, link.power_max, cap_constraint));
  }
}

}  // namespace

Mode mode_from_code(int code) {
  if (code < 0 || code > 4) {
    throw ValidationError("C6", std::format("offloading decision {} is outside {{0..4}}", code));
  }
  return static_cast<Mode>(code);
}

void validate_decisions(const DecisionVector& d, std::size_t vehicle_count) {
  if (d.size() != vehicle_count) {
    throw ValidationError("C6", std::format("decision vector has {} entries, expected {}",
                                            d.size(), vehicle_count));
  }
  for (Mode m : d) mode_from_code(mode_code(m));  // C6; C5 is vacuous as written
}

NetworkParams NetworkParams::table1() {
  NetworkParams p;
  p.delta = 3.055e3;
  p.xi = 100.0;
  p.f_ue = 1e9;
  p.f_mec = 5e9;
  p.k = 1e-28;
  p.noise = 1e-10;
  p.speed = 30.0;  // 108 km/h
  p.l_v2v = 100.0;
  p.l_i2i = 300.0;
  p.l_v2i = 100.0;
  p.theta = 4.0;

  auto gain = [&p](double distance) { return std::pow(distance, -p.theta); };
  p.v2v_comm = {0.1, 1e7, gain(p.l_v2v), 0.1};
  p.v2i_comm = {0.4, 1e7, gain(p.l_v2i), 0.4};
  p.v2v_mig = {0.1, 4e6, gain(p.l_v2v), 0.1};
  p.i2i_mig = {0.4, 4e6, gain(p.l_i2i), 0.4};
  return p;
}

void validate_params(const NetworkParams& p) {
  require_positive(p.delta, "delta");
  require_positive(p.xi, "xi");
  require_positive(p.f_ue, "f_ue");
  require_positive(p.f_mec, "f_mec");
  require_positive(p.k, "k");
  require_positive(p.noise, "noise");
  require_positive(p.speed, "speed");
  require_positive(p.l_v2v, "l_v2v");
  require_positive(p.l_i2i, "l_i2i");
  require_positive(p.l_v2i, "l_v2i");
  require_positive(p.theta, "theta");
  check_link(p.v2v_comm, "v2v_comm", "C1");
  check_link(p.v2i_comm, "v2i_comm", "C2");
  check_link(p.v2v_mig, "v2v_mig", "C3");
  check_link(p.i2i_mig, "i2i_mig", "C4");
}

Task make_task(double data_in_bits, double deadline_s, double alpha, double mu,
               const NetworkParams& params) {
  if (!(data_in_bits > 0) || !std::isfinite(data_in_bits)) {
    throw ValidationError("positivity",
                          std::format("task data size must be positive, got {}", data_in_bits));
  }
  if (!(deadline_s > 0)) {  // +inf is allowed: no deadline
    throw ValidationError("positivity",
                          std::format("task deadline must be positive, got {}", deadline_s));
  }
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ValidationError("C12", std::format("delay weight alpha={} outside [0,1] (C12)", alpha));
  }
  if (!(mu > 0.0 && mu <= 1.0)) {
    throw ValidationError("C13", std::format("compute fraction mu={} outside (0,1] (C13)", mu));
  }
  Task t;
  t.data_in = data_in_bits;
  t.cycles = params.delta * data_in_bits;
  t.data_out = data_in_bits / params.xi;
  t.deadline = deadline_s;
  t.alpha = alpha;
  t.beta = 1.0 - alpha;
  t.mu = mu;
  return t;
}

const char* to_string(Infeasibility why) {
  switch (why) {
    case Infeasibility::none: return "none";
    case Infeasibility::deadline: return "deadline exceeded";
    case Infeasibility::leaves_coverage: return "vehicle leaves coverage before direct return";
    case Infeasibility::migration_unneeded: return "migration unnecessary";
    case Infeasibility::result_uncatchable: return "vehicle cannot catch the migrated result";
    case Infeasibility::zero_rate: return "required link has zero rate";
  }
  return "?";
}

}  // namespace vmig
