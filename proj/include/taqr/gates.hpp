// Copyright 2026 taqr contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <string>

#include "taqr/matrix.hpp"

namespace taqr {

// Qudit-level mapping for two-qubit gates embedded in a ququart.  Entry b is
// the level storing two-qubit basis state |q1 q2> with b = 2·q1 + q2 for the
// big-endian convention (q1, the control, is the high bit).
inline constexpr std::array<int, 4> kBigEndianLevels{0, 1, 2, 3};
inline constexpr std::array<int, 4> kLittleEndianLevels{0, 2, 1, 3};

// Cyclic shift |n> -> |n+k mod d>; k may be negative and is reduced mod d.
ComplexMatrix make_x_shift(int dim, int k);

// Z = diag(1, ω, ω², …) with ω = e^{i2π/d}.
ComplexMatrix make_z(int dim);

// H = Σ ω^{nm}/√d |n><m| (the discrete Fourier transform; Hadamard at d=2).
ComplexMatrix make_qft(int dim);

// Transposition permutation |i> <-> |j>.
ComplexMatrix make_level_swap(int dim, int i, int j);

// Reinterpret a 4×4 two-qubit unitary on qudit levels.  level_of_basis[b]
// names the level that holds two-qubit basis state b.
ComplexMatrix embed_two_qubit(
    const ComplexMatrix& gate,
    const std::array<int, 4>& level_of_basis = kBigEndianLevels);

// Standard two-qubit gates, already embedded (big-endian by default).
ComplexMatrix make_rxx(double chi,
                       const std::array<int, 4>& level_of_basis = kBigEndianLevels);
ComplexMatrix make_rzz(double chi,
                       const std::array<int, 4>& level_of_basis = kBigEndianLevels);
ComplexMatrix make_cx(const std::array<int, 4>& level_of_basis = kBigEndianLevels);
ComplexMatrix make_cz(const std::array<int, 4>& level_of_basis = kBigEndianLevels);
ComplexMatrix make_ch(const std::array<int, 4>& level_of_basis = kBigEndianLevels);
ComplexMatrix make_swap2q(const std::array<int, 4>& level_of_basis = kBigEndianLevels);

enum class GateName {
  kXShift,
  kZ,
  kQft,
  kLevelSwap,
  kRxx,
  kRzz,
  kCx,
  kCz,
  kCh,
  kSwap2q,
};

struct GateSpec {
  GateName name = GateName::kXShift;
  int dim = 2;
  int shift = 1;     // x-shift amount
  int i = 0, j = 1;  // level-swap operands
  double chi = 0.0;  // rxx / rzz angle
};

bool is_two_qubit_gate(GateName name);

// Parse a CLI-facing gate name: x+1, x-1, x+k:<k>, z, qft, swap:<i>:<j>,
// rxx[:<chi>], rzz[:<chi>], cx, cz, ch, swap2q.  rxx/rzz default to χ = π/2.
GateSpec parse_gate_spec(const std::string& text, int dim);

ComplexMatrix make_gate(const GateSpec& spec,
                        const std::array<int, 4>& level_of_basis = kBigEndianLevels);

}  // namespace taqr
