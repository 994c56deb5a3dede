// Copyright 2026 taqr contributors
// SPDX-License-Identifier: Apache-2.0

#include "taqr/photonic.hpp"

#include <cmath>
#include <numbers>

#include "taqr/error.hpp"
#include "taqr/tolerances.hpp"

namespace taqr {

namespace {
constexpr double kPi = std::numbers::pi;
}

PulseSequence export_photonic(const PulseSequence& seq) {
  PulseSequence out;
  out.dim = seq.dim;
  out.pulses.reserve(seq.pulses.size() * 3);

  auto push_phase = [&out](int level, double theta) {
    if (std::abs(theta) > kZeroTol) out.pulses.push_back(make_phase(level, theta));
  };

  for (const Pulse& p : seq.pulses) {
    if (std::holds_alternative<BeamSplitter>(p)) {
      throw Error(ErrorKind::kValidation,
                  "sequence already contains beam splitters");
    }
    if (const auto* ph = std::get_if<Phase>(&p)) {
      push_phase(ph->level, ph->theta);
      continue;
    }
    const auto& rot = std::get<Rotation>(p);
    double theta = rot.theta;  // canonical range (-2π, 2π]
    double phi = rot.phi;
    if (theta < 0.0) {
      theta = -theta;
      phi = normalize_phi(phi + kPi);
    }
    if (theta > kPi) {
      // The leftover factor is -1 on span{|i>,|j>}, a scalar there, so the two
      // π phases commute with the beam-splitter triple and can be emitted
      // first.
      theta = 2.0 * kPi - theta;
      phi = normalize_phi(phi + kPi);
      push_phase(rot.i, kPi);
      push_phase(rot.j, kPi);
    }
    if (theta <= kZeroTol) continue;  // identity rotation, nothing to emit
    push_phase(rot.j, normalize_phi(kPi / 2.0 - phi));
    out.pulses.push_back(make_beam_splitter(rot.i, rot.j, std::cos(theta / 2.0)));
    push_phase(rot.j, normalize_phi(phi - kPi / 2.0));
  }
  return out;
}

}  // namespace taqr
