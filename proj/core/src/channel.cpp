#include "vmig/channel.hpp"

#include <cmath>

namespace vmig {

const LinkParams& link_params(const NetworkParams& params, LinkKind kind) {
  switch (kind) {
    case LinkKind::v2v_comm: return params.v2v_comm;
    case LinkKind::v2i_comm: return params.v2i_comm;
    case LinkKind::v2v_mig: return params.v2v_mig;
    case LinkKind::i2i_mig: return params.i2i_mig;
  }
  return params.v2v_comm;  // unreachable
}

bool interferes(LinkKind kind, Mode mode) {
  switch (kind) {
    case LinkKind::v2v_comm: return mode == Mode::v2v;
    case LinkKind::v2i_comm:
      return mode == Mode::v2i || mode == Mode::v2v_mig || mode == Mode::i2i_mig;
    case LinkKind::v2v_mig: return mode == Mode::v2v_mig;
    case LinkKind::i2i_mig: return mode == Mode::i2i_mig;
  }
  return false;
}

LinkLoad LinkLoad::of(const DecisionVector& d) {
  LinkLoad load;
  for (Mode m : d) load.add(m);
  return load;
}

int LinkLoad::interferers(LinkKind kind) const {
  int n = 0;
  for (Mode m : kAllModes) {
    if (interferes(kind, m)) n += per_mode[mode_code(m)];
  }
  return n;
}

LinkLoad others_load(int m, const DecisionVector& d) {
  LinkLoad load = LinkLoad::of(d);
  load.remove(d.at(static_cast<std::size_t>(m)));
  return load;
}

double sinr_with_interferers(LinkKind kind, int interferers, const NetworkParams& params) {
  const LinkParams& link = link_params(params, kind);
  const double signal = link.power * link.gain;
  return signal / (params.noise + static_cast<double>(interferers) * signal);
}

double rate_with_interferers(LinkKind kind, int interferers, const NetworkParams& params) {
  const LinkParams& link = link_params(params, kind);
  return link.bandwidth * std::log2(1.0 + sinr_with_interferers(kind, interferers, params));
}

int interferer_count(LinkKind kind, int m, const DecisionVector& d) {
  int n = 0;
  for (std::size_t g = 0; g < d.size(); ++g) {
    if (static_cast<int>(g) != m && interferes(kind, d[g])) ++n;
  }
  return n;
}

double sinr(LinkKind kind, int m, const DecisionVector& d, const NetworkParams& params) {
  return sinr_with_interferers(kind, interferer_count(kind, m, d), params);
}

double rate(LinkKind kind, int m, const DecisionVector& d, const NetworkParams& params) {
  return rate_with_interferers(kind, interferer_count(kind, m, d), params);
}

}  // namespace vmig
