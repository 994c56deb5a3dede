// Copyright 2026 taqr contributors
// SPDX-License-Identifier: Apache-2.0

#include "taqr/gates.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "taqr/error.hpp"

namespace taqr {

namespace {

constexpr double kPi = std::numbers::pi;

void check_dim(int dim, int min_dim) {
  if (dim < min_dim) {
    throw Error(ErrorKind::kValidation,
                "invalid dimension " + std::to_string(dim) + ": need at least " +
                    std::to_string(min_dim) + " levels");
  }
}

// Two-qubit gates in the |q1 q2> computational basis (row/col index 2·q1+q2).
ComplexMatrix qubit_cx() {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  m(2, 3) = 1.0;
  m(3, 2) = 1.0;
  return m;
}

ComplexMatrix qubit_cz() {
  ComplexMatrix m = ComplexMatrix::Identity(4, 4);
  m(3, 3) = -1.0;
  return m;
}

ComplexMatrix qubit_ch() {
  ComplexMatrix m = ComplexMatrix::Identity(4, 4);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  m(2, 2) = inv_sqrt2;
  m(2, 3) = inv_sqrt2;
  m(3, 2) = inv_sqrt2;
  m(3, 3) = -inv_sqrt2;
  return m;
}

ComplexMatrix qubit_swap() {
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = 1.0;
  m(1, 2) = 1.0;
  m(2, 1) = 1.0;
  m(3, 3) = 1.0;
  return m;
}

ComplexMatrix qubit_rxx(double chi) {
  // exp{-iχ σx⊗σx}: σx⊗σx flips both qubits, i.e. maps basis state b to 3-b.
  ComplexMatrix m = ComplexMatrix::Identity(4, 4) * std::cos(chi);
  const Complex off(0.0, -std::sin(chi));
  for (int b = 0; b < 4; ++b) m(3 - b, b) += off;
  return m;
}

ComplexMatrix qubit_rzz(double chi) {
  // exp{-iχ σz⊗σz}: basis state b picks up e^{∓iχ} with the sign of z1·z2.
  ComplexMatrix m = ComplexMatrix::Identity(4, 4);
  const Complex same = std::exp(Complex(0.0, -chi));
  const Complex diff = std::exp(Complex(0.0, chi));
  m(0, 0) = same;
  m(1, 1) = diff;
  m(2, 2) = diff;
  m(3, 3) = same;
  return m;
}

}  // namespace

ComplexMatrix make_x_shift(int dim, int k) {
  check_dim(dim, 2);
  const int shift = ((k % dim) + dim) % dim;
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) m((n + shift) % dim, n) = 1.0;
  return m;
}

ComplexMatrix make_z(int dim) {
  check_dim(dim, 2);
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) m(n, n) = std::polar(1.0, 2.0 * kPi * n / dim);
  return m;
}

ComplexMatrix make_qft(int dim) {
  check_dim(dim, 2);
  const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
  ComplexMatrix m(dim, dim);
  for (int n = 0; n < dim; ++n) {
    for (int c = 0; c < dim; ++c) {
      // ω^{nm} with the exponent reduced mod d keeps the angle small and the
      // matrix exactly symmetric.
      m(n, c) = norm * std::polar(1.0, 2.0 * kPi * ((n * c) % dim) / dim);
    }
  }
  return m;
}

ComplexMatrix make_level_swap(int dim, int i, int j) {
  check_dim(dim, 2);
  if (i == j || i < 0 || j < 0 || i >= dim || j >= dim) {
    throw Error(ErrorKind::kValidation,
                "level swap (" + std::to_string(i) + ", " + std::to_string(j) +
                    ") out of range for dimension " + std::to_string(dim));
  }
  ComplexMatrix m = ComplexMatrix::Identity(dim, dim);
  m(i, i) = 0.0;
  m(j, j) = 0.0;
  m(i, j) = 1.0;
  m(j, i) = 1.0;
  return m;
}

ComplexMatrix embed_two_qubit(const ComplexMatrix& gate,
                              const std::array<int, 4>& level_of_basis) {
  if (gate.rows() != 4 || gate.cols() != 4) {
    throw Error(ErrorKind::kValidation,
                "two-qubit embedding needs a 4x4 matrix, got " +
                    std::to_string(gate.rows()) + "x" +
                    std::to_string(gate.cols()));
  }
  std::array<bool, 4> seen{};
  for (int level : level_of_basis) {
    if (level < 0 || level > 3 || seen[level]) {
      throw Error(ErrorKind::kValidation,
                  "level_of_basis must be a permutation of {0,1,2,3}");
    }
    seen[level] = true;
  }
  ComplexMatrix m(4, 4);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      m(level_of_basis[a], level_of_basis[b]) = gate(a, b);
    }
  }
  return m;
}

ComplexMatrix make_rxx(double chi, const std::array<int, 4>& level_of_basis) {
  return embed_two_qubit(qubit_rxx(chi), level_of_basis);
}

ComplexMatrix make_rzz(double chi, const std::array<int, 4>& level_of_basis) {
  return embed_two_qubit(qubit_rzz(chi), level_of_basis);
}

ComplexMatrix make_cx(const std::array<int, 4>& level_of_basis) {
  return embed_two_qubit(qubit_cx(), level_of_basis);
}

ComplexMatrix make_cz(const std::array<int, 4>& level_of_basis) {
  return embed_two_qubit(qubit_cz(), level_of_basis);
}

ComplexMatrix make_ch(const std::array<int, 4>& level_of_basis) {
  return embed_two_qubit(qubit_ch(), level_of_basis);
}

ComplexMatrix make_swap2q(const std::array<int, 4>& level_of_basis) {
  return embed_two_qubit(qubit_swap(), level_of_basis);
}

bool is_two_qubit_gate(GateName name) {
  switch (name) {
    case GateName::kRxx:
    case GateName::kRzz:
    case GateName::kCx:
    case GateName::kCz:
    case GateName::kCh:
    case GateName::kSwap2q:
      return true;
    default:
      return false;
  }
}

GateSpec parse_gate_spec(const std::string& text, int dim) {
  GateSpec spec;
  spec.dim = dim;

  auto split = [](const std::string& s) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
      const std::size_t pos = s.find(':', start);
      if (pos == std::string::npos) {
        parts.push_back(s.substr(start));
        break;
      }
      parts.push_back(s.substr(start, pos - start));
      start = pos + 1;
    }
    return parts;
  };
  auto bad = [&text](const std::string& why) -> Error {
    return Error(ErrorKind::kValidation,
                 "unknown gate '" + text + "': " + why);
  };
  auto to_int = [&bad](const std::string& s) {
    try {
      std::size_t used = 0;
      const int value = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return value;
    } catch (const std::exception&) {
      throw bad("'" + s + "' is not an integer");
    }
  };
  auto to_double = [&bad](const std::string& s) {
    try {
      std::size_t used = 0;
      const double value = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return value;
    } catch (const std::exception&) {
      throw bad("'" + s + "' is not a number");
    }
  };

  const std::vector<std::string> parts = split(text);
  const std::string& head = parts[0];
  if (head == "x+1" && parts.size() == 1) {
    spec.name = GateName::kXShift;
    spec.shift = 1;
  } else if (head == "x-1" && parts.size() == 1) {
    spec.name = GateName::kXShift;
    spec.shift = -1;
  } else if (head == "x+k") {
    if (parts.size() != 2) throw bad("expected x+k:<k>");
    spec.name = GateName::kXShift;
    spec.shift = to_int(parts[1]);
  } else if (head == "z" && parts.size() == 1) {
    spec.name = GateName::kZ;
  } else if (head == "qft" && parts.size() == 1) {
    spec.name = GateName::kQft;
  } else if (head == "swap") {
    if (parts.size() != 3) throw bad("expected swap:<i>:<j>");
    spec.name = GateName::kLevelSwap;
    spec.i = to_int(parts[1]);
    spec.j = to_int(parts[2]);
  } else if (head == "rxx" || head == "rzz") {
    if (parts.size() > 2) throw bad("expected " + head + "[:<chi>]");
    spec.name = head == "rxx" ? GateName::kRxx : GateName::kRzz;
    spec.chi = parts.size() == 2 ? to_double(parts[1]) : kPi / 2.0;
  } else if (head == "cx" && parts.size() == 1) {
    spec.name = GateName::kCx;
  } else if (head == "cz" && parts.size() == 1) {
    spec.name = GateName::kCz;
  } else if (head == "ch" && parts.size() == 1) {
    spec.name = GateName::kCh;
  } else if (head == "swap2q" && parts.size() == 1) {
    spec.name = GateName::kSwap2q;
  } else {
    throw bad(
        "expected one of x+1, x-1, x+k:<k>, z, qft, swap:<i>:<j>, rxx[:<chi>], "
        "rzz[:<chi>], cx, cz, ch, swap2q");
  }
  return spec;
}

ComplexMatrix make_gate(const GateSpec& spec,
                        const std::array<int, 4>& level_of_basis) {
  if (is_two_qubit_gate(spec.name) && spec.dim != 4) {
    throw Error(ErrorKind::kValidation,
                "two-qubit gates need dimension 4, got " +
                    std::to_string(spec.dim));
  }
  switch (spec.name) {
    case GateName::kXShift:
      return make_x_shift(spec.dim, spec.shift);
    case GateName::kZ:
      return make_z(spec.dim);
    case GateName::kQft:
      return make_qft(spec.dim);
    case GateName::kLevelSwap:
      return make_level_swap(spec.dim, spec.i, spec.j);
    case GateName::kRxx:
      return make_rxx(spec.chi, level_of_basis);
    case GateName::kRzz:
      return make_rzz(spec.chi, level_of_basis);
    case GateName::kCx:
      return make_cx(level_of_basis);
    case GateName::kCz:
      return make_cz(level_of_basis);
    case GateName::kCh:
      return make_ch(level_of_basis);
    case GateName::kSwap2q:
      return make_swap2q(level_of_basis);
  }
  throw Error(ErrorKind::kInternal, "unhandled gate name");
}

}  // namespace taqr
