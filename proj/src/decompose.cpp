// Copyright 2026 taqr contributors
// SPDX-License-Identifier: Apache-2.0

#include "taqr/decompose.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>
#include <sstream>

#include "taqr/error.hpp"

namespace taqr {

namespace {

constexpr double kPi = std::numbers::pi;

void require_unitary(const ComplexMatrix& u, int expected_dim) {
  if (u.rows() != u.cols() || u.rows() != expected_dim) {
    std::ostringstream msg;
    msg << "dimension mismatch: matrix is " << u.rows() << "x" << u.cols()
        << " but the transition graph has " << expected_dim << " levels";
    throw Error(ErrorKind::kValidation, msg.str());
  }
  if (!is_unitary(u, kUnitaryTol)) {
    throw Error(ErrorKind::kValidation,
                "input matrix is not unitary within tolerance");
  }
}

// arg with the 0 -> 0 convention used throughout the elimination equations.
double safe_arg(Complex z) { return std::abs(z) == 0.0 ? 0.0 : std::arg(z); }

// Absorb the leftover diagonal phase of `level` into a pulse and reset the
// column so the remaining block is exactly unitary.
void absorb_diagonal_phase(ComplexMatrix& u, int level,
                           std::vector<Pulse>& pulses) {
  const double alpha = safe_arg(u(level, level));
  if (std::abs(alpha) > kZeroTol) {
    u.col(level) *= std::exp(Complex(0.0, -alpha));
    pulses.push_back(make_phase(level, alpha));
  }
}

PulseSequence run_scheme(const ComplexMatrix& u,
                         const EliminationScheme& scheme) {
  ComplexMatrix work = u;
  PulseSequence seq;
  seq.dim = scheme.dim;
  for (const auto& row : scheme.rows) {
    auto pulses = eliminate_row(work, row.row, row.steps);
    seq.pulses.insert(seq.pulses.end(), pulses.begin(), pulses.end());
  }
  absorb_diagonal_phase(work, scheme.final_level, seq.pulses);
  return seq;
}

std::vector<int> shortest_path(const TransitionGraph& g, int from, int to) {
  std::vector<int> prev(g.dim(), -1);
  prev[from] = from;
  std::deque<int> queue{from};
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (int w : g.neighbors(v)) {
      if (prev[w] == -1) {
        prev[w] = v;
        queue.push_back(w);
      }
    }
  }
  if (prev[to] == -1) {
    throw Error(ErrorKind::kValidation,
                "no path between levels " + std::to_string(from) + " and " +
                    std::to_string(to));
  }
  std::vector<int> path{to};
  while (path.back() != from) path.push_back(prev[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

// Level swap Sw^{ab} = R^{ab}(π, π/2): |a> -> |b>, |b> -> -|a>.  Expressed on
// the canonical (min, max) ordering the sign of φ tracks which level is "a".
Rotation swap_pulse(int a, int b) {
  return a < b ? make_rotation(a, b, kPi, kPi / 2.0)
               : make_rotation(b, a, kPi, -kPi / 2.0);
}

// R^{ij}(θ,φ) = Sw^{ki} ∘ R^{kj}(θ,φ) ∘ Sw^{ik} with k the first hop from i
// toward j: move |i> onto |k>, rotate there, move back.  Recurses until the
// rotation lands on an allowed edge.
void emit_routed(const TransitionGraph& g, int i, int j, double theta,
                 double phi, std::vector<Pulse>& out) {
  if (g.has_edge(i, j)) {
    out.push_back(make_rotation(i, j, theta, phi));
    return;
  }
  const auto path = shortest_path(g, i, j);
  const int k = path[1];
  out.push_back(swap_pulse(i, k));
  emit_routed(g, k, j, theta, phi, out);
  out.push_back(swap_pulse(k, i));
}

}  // namespace

std::pair<double, double> solve_elimination(Complex u_z, Complex u_p) {
  const double mag_z = std::abs(u_z);
  const double mag_p = std::abs(u_p);
  if (mag_z <= kZeroTol && mag_p <= kZeroTol) {
    throw Error(ErrorKind::kValidation,
                "degenerate elimination: both entries are zero");
  }
  const double theta = 2.0 * std::atan2(mag_z, mag_p);
  const double phi = normalize_phi(kPi / 2.0 + safe_arg(u_z) - safe_arg(u_p));
  return {theta, phi};
}

std::vector<Pulse> eliminate_row(ComplexMatrix& u, int row,
                                 const std::vector<std::pair<int, int>>& steps) {
  const int dim = static_cast<int>(u.rows());
  if (row < 0 || row >= dim) {
    throw Error(ErrorKind::kValidation,
                "row " + std::to_string(row) + " out of range");
  }
  std::vector<Pulse> pulses;
  pulses.reserve(steps.size() + 1);
  for (auto [z, p] : steps) {
    const Complex u_z = u(row, z);
    if (std::abs(u_z) <= kZeroTol) continue;  // already clear, pulse omitted
    const auto [theta, phi] = solve_elimination(u_z, u(row, p));
    // right_mix_columns zeroes the entry in its *first* column slot, so when
    // the eliminated column has the higher index the rotation is expressed on
    // the canonical ordering with φ negated.
    if (z < p) {
      right_mix_columns(u, z, p, theta, phi);
      pulses.push_back(make_rotation(z, p, theta, phi));
    } else {
      right_mix_columns(u, p, z, theta, -phi);
      pulses.push_back(make_rotation(p, z, theta, -phi));
    }
  }
  for (auto [z, p] : steps) {
    if (std::abs(u(row, z)) > kRowResidualTol) {
      std::ostringstream msg;
      msg << "row " << row << " entry " << z
          << " survived elimination with magnitude " << std::abs(u(row, z));
      throw Error(ErrorKind::kInternal, msg.str());
    }
  }
  absorb_diagonal_phase(u, row, pulses);
  // Clamp: by unitarity the column is eliminated along with the row, so both
  // are reset exactly and numerical dust cannot leak into later rows.
  u.row(row).setZero();
  u.col(row).setZero();
  u(row, row) = 1.0;
  return pulses;
}

PulseSequence decompose_static(const ComplexMatrix& u,
                               const EliminationScheme& scheme) {
  require_unitary(u, scheme.dim);
  return run_scheme(u, scheme);
}

PulseSequence decompose_static(const ComplexMatrix& u,
                               const TransitionGraph& g) {
  require_unitary(u, g.dim());
  return run_scheme(u, build_static_scheme(g));
}

PulseSequence decompose_adaptive(const ComplexMatrix& u,
                                 const TransitionGraph& g, double sparse_tol) {
  require_unitary(u, g.dim());
  ComplexMatrix work = u;
  PulseSequence seq;
  seq.dim = g.dim();

  std::set<int> active;
  for (int v = 0; v < g.dim(); ++v) active.insert(v);

  while (active.size() > 1) {
    // Candidate cost = rotations actually needed for that row once its zero
    // pattern has pruned the graph.  The cheapest row goes first; ties fall
    // to the highest index, matching the static heuristic on dense input.
    int best_row = -1;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    std::set<int> best_active;
    for (int candidate : removable_levels(g, active)) {
      std::set<int> zeros;
      for (int c : active) {
        if (c != candidate && std::abs(work(candidate, c)) <= sparse_tol) {
          zeros.insert(c);
        }
      }
      auto pruned = prune_for_row(g, active, candidate, zeros);
      const std::size_t cost = pruned.size() - 1;
      if (cost <= best_cost) {  // ascending scan, so <= keeps the highest index
        best_cost = cost;
        best_row = candidate;
        best_active = std::move(pruned);
      }
    }
    auto pulses = eliminate_row(work, best_row,
                                elimination_steps(g, best_active, best_row));
    seq.pulses.insert(seq.pulses.end(), pulses.begin(), pulses.end());
    active.erase(best_row);
  }
  absorb_diagonal_phase(work, *active.begin(), seq.pulses);
  return seq;
}

PulseSequence swap_route_baseline(const ComplexMatrix& u,
                                  const TransitionGraph& g) {
  require_unitary(u, g.dim());
  std::set<int> all_levels;
  for (int v = 0; v < g.dim(); ++v) all_levels.insert(v);
  if (!induced_connected(g, all_levels)) {
    throw Error(ErrorKind::kValidation, "transition graph is disconnected");
  }
  // Dense row-by-row plan over neighboring columns, ignoring the graph.
  EliminationScheme plan;
  plan.dim = g.dim();
  plan.final_level = 0;
  for (int row = g.dim() - 1; row >= 1; --row) {
    EliminationScheme::Row r;
    r.row = row;
    for (int z = 0; z < row; ++z) r.steps.emplace_back(z, z + 1);
    plan.rows.push_back(std::move(r));
  }
  const PulseSequence raw = run_scheme(u, plan);

  PulseSequence routed;
  routed.dim = g.dim();
  for (const Pulse& p : raw.pulses) {
    if (const auto* rot = std::get_if<Rotation>(&p)) {
      emit_routed(g, rot->i, rot->j, rot->theta, rot->phi, routed.pulses);
    } else {
      routed.pulses.push_back(p);
    }
  }
  return routed;
}

VerificationReport verify(const ComplexMatrix& u, const PulseSequence& seq,
                          const TransitionGraph& g, double tol) {
  if (u.rows() != u.cols() || static_cast<int>(u.rows()) != seq.dim ||
      seq.dim != g.dim()) {
    throw Error(ErrorKind::kValidation,
                "matrix, sequence and graph dimensions disagree");
  }
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.all_edges_allowed = true;
  for (const Pulse& p : seq.pulses) {
    if (const auto* rot = std::get_if<Rotation>(&p)) {
      ++report.rotation_count;
      if (!g.has_edge(rot->i, rot->j)) report.all_edges_allowed = false;
    } else if (std::holds_alternative<Phase>(p)) {
      ++report.phase_count;
    } else {
      throw Error(ErrorKind::kValidation,
                  "beam-splitter pulses cannot be checked against a "
                  "transition graph; verify the rotation sequence instead");
    }
  }
  report.distance = frobenius_distance(compose_pulses(seq), u);
  const auto end = std::chrono::steady_clock::now();
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(end - start).count();
  report.passed = report.distance <= tol && report.all_edges_allowed;
  return report;
}

}  // namespace taqr
