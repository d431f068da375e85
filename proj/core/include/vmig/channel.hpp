#pragma once

#include "vmig/model.hpp"

// SINR and transmission/migration rates of the four frequency-orthogonal
// link classes under the co-channel interference induced by a joint
// decision vector. All vehicles on a link class share its constants, so the
// interference sum reduces to (interferer count) * power * gain.

namespace vmig {

enum class LinkKind : int { v2v_comm = 0, v2i_comm = 1, v2v_mig = 2, i2i_mig = 3 };

inline constexpr std::array<LinkKind, 4> kAllLinkKinds = {
    LinkKind::v2v_comm, LinkKind::v2i_comm, LinkKind::v2v_mig, LinkKind::i2i_mig};

const LinkParams& link_params(const NetworkParams& params, LinkKind kind);

/// True when a vehicle deciding `mode` transmits on (and thus interferes
/// with) link class `kind`:
///   v2v_comm <- d=1;  v2i_comm <- d in {2,3,4};  v2v_mig <- d=3;  i2i_mig <- d=4.
bool interferes(LinkKind kind, Mode mode);

/// Per-mode occupancy tally of a joint decision. Lets the cost of one
/// vehicle be evaluated in O(1) instead of rescanning the vector.
struct LinkLoad {
  std::array<int, 5> per_mode{};

  static LinkLoad of(const DecisionVector& d);
  void add(Mode m) { ++per_mode[mode_code(m)]; }
  void remove(Mode m) { --per_mode[mode_code(m)]; }
  /// Number of tallied vehicles transmitting on `kind`.
  int interferers(LinkKind kind) const;
};

/// Tally of everyone except vehicle m; the complement a candidate decision
/// for m is evaluated against.
LinkLoad others_load(int m, const DecisionVector& d);

// Closed forms over an interferer count.
double sinr_with_interferers(LinkKind kind, int interferers, const NetworkParams& params);
double rate_with_interferers(LinkKind kind, int interferers, const NetworkParams& params);

/// Vehicles g != m whose decision transmits on `kind`.
int interferer_count(LinkKind kind, int m, const DecisionVector& d);

/// SINR seen by vehicle m on `kind` under the joint decision d:
/// p h / (noise + sum over interferers of p h). The caller passes a
/// candidate vector with d[m] already set when evaluating hypotheticals.
double sinr(LinkKind kind, int m, const DecisionVector& d, const NetworkParams& params);

/// Shannon rate b * log2(1 + sinr) in bit/s. Uplink and result downlink of
/// a comm link share the channel and therefore this rate.
double rate(LinkKind kind, int m, const DecisionVector& d, const NetworkParams& params);

}  // namespace vmig
