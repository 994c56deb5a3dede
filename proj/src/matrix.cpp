// Copyright 2026 taqr contributors
// SPDX-License-Identifier: Apache-2.0

#include "taqr/matrix.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "taqr/error.hpp"

namespace taqr {

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) return false;
  const ComplexMatrix gram = m.adjoint() * m;
  return (gram - ComplexMatrix::Identity(m.cols(), m.cols())).norm() <= tol;
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream msg;
    msg << "dimension mismatch: " << a.rows() << "x" << a.cols() << " vs "
        << b.rows() << "x" << b.cols();
    throw Error(ErrorKind::kValidation, msg.str());
  }
  return (a - b).norm();
}

ComplexMatrix haar_random_unitary(int dim, std::uint64_t seed) {
  if (dim < 1) {
    throw Error(ErrorKind::kValidation,
                "invalid dimension " + std::to_string(dim) +
                    ": need at least one level");
  }
  std::mt19937_64 rng(seed);
  // 53-bit draw in (0, 1]; never 0, so the log below is safe.
  auto uniform = [&rng]() {
    return static_cast<double>((rng() >> 11) + 1) * 0x1p-53;
  };

  ComplexMatrix ginibre(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      // Box-Muller: one (radius, angle) pair yields the real and imaginary
      // parts of a standard complex Gaussian entry.
      const double radius = std::sqrt(-2.0 * std::log(uniform()));
      const double angle = 2.0 * std::numbers::pi * uniform();
      ginibre(r, c) = Complex(radius * std::cos(angle), radius * std::sin(angle));
    }
  }

  Eigen::HouseholderQR<ComplexMatrix> qr(ginibre);
  ComplexMatrix q = qr.householderQ();
  const auto r_diag = qr.matrixQR().diagonal();
  for (int c = 0; c < dim; ++c) {
    const double mag = std::abs(r_diag(c));
    // mag == 0 has probability zero; keep the column as-is in that case.
    if (mag > 0.0) q.col(c) *= r_diag(c) / mag;
  }
  return q;
}

}  // namespace taqr
