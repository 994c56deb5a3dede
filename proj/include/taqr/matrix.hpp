// Copyright 2026 taqr contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace taqr {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

// ‖M†M − I‖_F ≤ tol.  Non-square input is never unitary.
bool is_unitary(const ComplexMatrix& m, double tol);

// ‖A − B‖_F; throws on mismatched dimensions.
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

// Haar-distributed d×d unitary: complex Ginibre matrix, QR, then each column
// rescaled by the phase of the matching R diagonal so the measure is uniform.
// Bit-identical output for a fixed seed (the Gaussian sampling is hand-rolled
// Box-Muller on mt19937_64 rather than std::normal_distribution, whose output
// is implementation-defined).
ComplexMatrix haar_random_unitary(int dim, std::uint64_t seed);

}  // namespace taqr
