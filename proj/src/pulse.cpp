// Copyright 2026 taqr contributors
// SPDX-License-Identifier: Apache-2.0

#include "taqr/pulse.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "taqr/error.hpp"

namespace taqr {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_level(int level, int dim, const char* what) {
  if (level < 0 || level >= dim) {
    throw Error(ErrorKind::kValidation,
                std::string(what) + " level " + std::to_string(level) +
                    " out of range for dimension " + std::to_string(dim));
  }
}

}  // namespace

double normalize_theta(double theta) {
  double t = std::fmod(theta, 2.0 * kTwoPi);
  if (t <= -kTwoPi) t += 2.0 * kTwoPi;
  if (t > kTwoPi) t -= 2.0 * kTwoPi;
  return t;
}

double normalize_phi(double phi) {
  double p = std::fmod(phi + kPi, kTwoPi);
  if (p <= 0.0) p += kTwoPi;
  return p - kPi;
}

Rotation make_rotation(int i, int j, double theta, double phi) {
  if (i == j) {
    throw Error(ErrorKind::kValidation,
                "rotation needs two distinct levels, got (" +
                    std::to_string(i) + ", " + std::to_string(j) + ")");
  }
  if (i < 0 || j < 0) {
    throw Error(ErrorKind::kValidation, "rotation level index must be >= 0");
  }
  // Swapping the roles of the two levels conjugates the off-diagonal entries,
  // which is the same rotation with φ negated.
  if (i > j) return Rotation{j, i, normalize_theta(theta), normalize_phi(-phi)};
  return Rotation{i, j, normalize_theta(theta), normalize_phi(phi)};
}

Phase make_phase(int level, double theta) {
  if (level < 0) {
    throw Error(ErrorKind::kValidation, "phase level index must be >= 0");
  }
  return Phase{level, theta};
}

BeamSplitter make_beam_splitter(int i, int j, double r) {
  if (i == j || i < 0 || j < 0) {
    throw Error(ErrorKind::kValidation,
                "beam splitter needs two distinct non-negative levels");
  }
  if (r < 0.0 || r > 1.0) {
    throw Error(ErrorKind::kValidation,
                "beam splitter reflectivity " + std::to_string(r) +
                    " outside [0, 1]");
  }
  if (i > j) std::swap(i, j);
  return BeamSplitter{i, j, r};
}

ComplexMatrix pulse_to_matrix(const Pulse& p, int dim) {
  if (dim < 1) {
    throw Error(ErrorKind::kValidation,
                "invalid dimension " + std::to_string(dim));
  }
  ComplexMatrix m = ComplexMatrix::Identity(dim, dim);
  const Complex imag_unit(0.0, 1.0);
  if (const auto* rot = std::get_if<Rotation>(&p)) {
    check_level(rot->i, dim, "rotation");
    check_level(rot->j, dim, "rotation");
    const double c = std::cos(rot->theta / 2.0);
    const double s = std::sin(rot->theta / 2.0);
    m(rot->i, rot->i) = c;
    m(rot->j, rot->j) = c;
    m(rot->i, rot->j) = -imag_unit * std::exp(-imag_unit * rot->phi) * s;
    m(rot->j, rot->i) = -imag_unit * std::exp(imag_unit * rot->phi) * s;
  } else if (const auto* ph = std::get_if<Phase>(&p)) {
    check_level(ph->level, dim, "phase");
    m(ph->level, ph->level) = std::exp(imag_unit * ph->theta);
  } else {
    const auto& bs = std::get<BeamSplitter>(p);
    check_level(bs.i, dim, "beam splitter");
    check_level(bs.j, dim, "beam splitter");
    const double t = std::sqrt(std::max(0.0, 1.0 - bs.r * bs.r));
    m(bs.i, bs.i) = bs.r;
    m(bs.j, bs.j) = bs.r;
    m(bs.i, bs.j) = -t;
    m(bs.j, bs.i) = t;
  }
  return m;
}

ComplexMatrix compose_pulses(const PulseSequence& seq) {
  if (seq.dim < 1) {
    throw Error(ErrorKind::kValidation,
                "invalid sequence dimension " + std::to_string(seq.dim));
  }
  ComplexMatrix m = ComplexMatrix::Identity(seq.dim, seq.dim);
  const Complex imag_unit(0.0, 1.0);
  // Left-multiplying by a two-level pulse only touches two rows of the
  // accumulator, so the whole composition costs O(pulses · d) instead of a
  // chain of full matrix products.
  for (const Pulse& p : seq.pulses) {
    if (const auto* rot = std::get_if<Rotation>(&p)) {
      check_level(rot->i, seq.dim, "rotation");
      check_level(rot->j, seq.dim, "rotation");
      const double c = std::cos(rot->theta / 2.0);
      const double s = std::sin(rot->theta / 2.0);
      const Complex upper = -imag_unit * std::exp(-imag_unit * rot->phi) * s;
      const Complex lower = -imag_unit * std::exp(imag_unit * rot->phi) * s;
      for (int col = 0; col < seq.dim; ++col) {
        const Complex a = m(rot->i, col);
        const Complex b = m(rot->j, col);
        m(rot->i, col) = c * a + upper * b;
        m(rot->j, col) = lower * a + c * b;
      }
    } else if (const auto* ph = std::get_if<Phase>(&p)) {
      check_level(ph->level, seq.dim, "phase");
      m.row(ph->level) *= std::exp(imag_unit * ph->theta);
    } else {
      const auto& bs = std::get<BeamSplitter>(p);
      check_level(bs.i, seq.dim, "beam splitter");
      check_level(bs.j, seq.dim, "beam splitter");
      const double t = std::sqrt(std::max(0.0, 1.0 - bs.r * bs.r));
      for (int col = 0; col < seq.dim; ++col) {
        const Complex a = m(bs.i, col);
        const Complex b = m(bs.j, col);
        m(bs.i, col) = bs.r * a - t * b;
        m(bs.j, col) = t * a + bs.r * b;
      }
    }
  }
  return m;
}

ComplexMatrix& right_mix_columns(ComplexMatrix& u, int i, int j, double theta,
                                 double phi) {
  const int dim = static_cast<int>(u.rows());
  check_level(i, dim, "mix");
  check_level(j, dim, "mix");
  if (i == j) {
    throw Error(ErrorKind::kValidation, "mix needs two distinct columns");
  }
  const Complex imag_unit(0.0, 1.0);
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  // U · R^{ij}(-θ,φ): column i picks up +i e^{+iφ} sin(θ/2) of column j and
  // vice versa with the conjugate phase.
  const Complex into_i = imag_unit * std::exp(imag_unit * phi) * s;
  const Complex into_j = imag_unit * std::exp(-imag_unit * phi) * s;
  for (int row = 0; row < dim; ++row) {
    const Complex a = u(row, i);
    const Complex b = u(row, j);
    u(row, i) = c * a + into_i * b;
    u(row, j) = into_j * a + c * b;
  }
  return u;
}

int rotation_count(const PulseSequence& seq) {
  int n = 0;
  for (const Pulse& p : seq.pulses) n += std::holds_alternative<Rotation>(p);
  return n;
}

int phase_count(const PulseSequence& seq) {
  int n = 0;
  for (const Pulse& p : seq.pulses) n += std::holds_alternative<Phase>(p);
  return n;
}

}  // namespace taqr
