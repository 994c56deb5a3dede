// Copyright 2026 taqr contributors
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end acceptance checks.  Each criterion prints one [PASS]/[FAIL]
// line; the exit code is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "taqr/decompose.hpp"
#include "taqr/gates.hpp"
#include "taqr/matrix.hpp"
#include "taqr/photonic.hpp"
#include "taqr/scheme.hpp"
#include "test_support.hpp"

using taqr::ComplexMatrix;
using taqr::EliminationScheme;
using taqr::Pulse;
using taqr::PulseSequence;
using taqr::Rotation;
using taqr::TransitionGraph;

namespace {

constexpr double kPi = std::numbers::pi;

int failures = 0;

class Criterion {
 public:
  Criterion(int number, std::string title)
      : number_(number), title_(std::move(title)) {}

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (problems_ < 5) std::cout << "       - " << what << "\n";
    ++problems_;
  }

  ~Criterion() {
    if (problems_ == 0) {
      std::cout << "[PASS] criterion " << number_ << ": " << title_ << "\n";
    } else {
      std::cout << "[FAIL] criterion " << number_ << ": " << title_ << " ("
                << problems_ << " problem(s))\n";
      ++failures;
    }
  }

 private:
  int number_;
  std::string title_;
  int problems_ = 0;
};

std::vector<TransitionGraph> preset_family(int d) {
  std::vector<TransitionGraph> graphs;
  graphs.push_back(taqr::preset_graph("line:" + std::to_string(d)));
  graphs.push_back(taqr::preset_graph("star:" + std::to_string(d)));
  const int p = std::min(2, d - 1);
  graphs.push_back(taqr::preset_graph("bipartite:" + std::to_string(d) + ":" +
                                      std::to_string(p)));
  return graphs;
}

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v.size() % 2 == 1 ? v[v.size() / 2]
                           : 0.5 * (v[v.size() / 2 - 1] + v[v.size() / 2]);
}

void criterion_1() {
  Criterion c(1, "round-trip exactness sweep (< 60 s)");
  const auto start = std::chrono::steady_clock::now();

  for (int d = 2; d <= 8; ++d) {
    std::vector<TransitionGraph> graphs = preset_family(d);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      graphs.push_back(taqr::testing::random_connected_graph(d, seed));
    }
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
      const TransitionGraph& g = graphs[gi];
      const EliminationScheme scheme = taqr::build_static_scheme(g);
      for (int sample = 0; sample < 100; ++sample) {
        const ComplexMatrix u = taqr::haar_random_unitary(
            d, 7000 + 100 * std::uint64_t(gi) + sample);
        const PulseSequence seqs[2] = {taqr::decompose_static(u, scheme),
                                       taqr::decompose_adaptive(u, g)};
        for (const PulseSequence& seq : seqs) {
          const auto report = taqr::verify(u, seq, g, 1e-9 * d);
          if (!report.passed || report.rotation_count > d * (d - 1) / 2 ||
              report.phase_count > d) {
            std::ostringstream what;
            what << "d=" << d << " graph#" << gi << " sample " << sample
                 << ": distance=" << report.distance
                 << " legal=" << report.all_edges_allowed
                 << " rot=" << report.rotation_count
                 << " ph=" << report.phase_count;
            c.expect(false, what.str());
          }
        }
      }
    }
  }

  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  std::ostringstream what;
  what << "sweep took " << elapsed << " s (budget 60 s)";
  c.expect(elapsed < 60.0, what.str());
  std::cout << "       sweep time: " << elapsed << " s\n";
}

void criterion_2() {
  Criterion c(2, "dense Haar counts 6/10/15 on every family");
  for (int d : {4, 5, 6}) {
    const int expected = d * (d - 1) / 2;
    for (const TransitionGraph& g : preset_family(d)) {
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const ComplexMatrix u = taqr::haar_random_unitary(d, 31 + seed);
        const int got =
            taqr::rotation_count(taqr::decompose_static(u, g));
        std::ostringstream what;
        what << "d=" << d << ": static Haar count " << got << " != "
             << expected;
        c.expect(got == expected, what.str());
      }
    }
  }
}

void criterion_3() {
  Criterion c(3, "sparse counts: shifts, diagonal gates, two-qubit SWAP");

  for (int d : {4, 5, 6}) {
    const TransitionGraph line =
        taqr::preset_graph("line:" + std::to_string(d));
    const int got = taqr::rotation_count(
        taqr::decompose_static(taqr::make_x_shift(d, -1), line));
    std::ostringstream what;
    what << "X^-1 static line:" << d << " = " << got << " != " << d - 1;
    c.expect(got == d - 1, what.str());
  }

  for (int d : {4, 5, 6}) {
    for (const TransitionGraph& g : preset_family(d)) {
      for (int shift : {1, -1}) {
        const int got = taqr::rotation_count(
            taqr::decompose_adaptive(taqr::make_x_shift(d, shift), g));
        std::ostringstream what;
        what << "X^" << shift << " adaptive d=" << d << " = " << got
             << " != " << d - 1;
        c.expect(got == d - 1, what.str());
      }
    }
  }

  for (const ComplexMatrix& diag : {taqr::make_rzz(kPi / 2), taqr::make_cz()}) {
    for (const TransitionGraph& g : preset_family(4)) {
      c.expect(taqr::rotation_count(taqr::decompose_static(diag, g)) == 0,
               "diagonal gate produced rotations in static mode");
      c.expect(taqr::rotation_count(taqr::decompose_adaptive(diag, g)) == 0,
               "diagonal gate produced rotations in adaptive mode");
    }
  }

  const ComplexMatrix swap = taqr::make_swap2q();
  for (const char* spec : {"line:4", "bipartite:4:2"}) {
    const TransitionGraph g = taqr::preset_graph(spec);
    for (const PulseSequence& seq : {taqr::decompose_static(swap, g),
                                     taqr::decompose_adaptive(swap, g)}) {
      std::ostringstream what;
      what << "SWAP on " << spec << " = " << taqr::rotation_count(seq)
           << " != 1";
      c.expect(taqr::rotation_count(seq) == 1, what.str());
    }
  }
}

void criterion_4() {
  Criterion c(4, "heuristic-dependent counts stay within the table bounds");

  for (int d : {4, 5, 6}) {
    const int bound = d * (d - 1) / 2;  // 6 / 10 / 15
    const ComplexMatrix h = taqr::make_qft(d);
    for (const TransitionGraph& g : preset_family(d)) {
      for (const PulseSequence& seq : {taqr::decompose_static(h, g),
                                       taqr::decompose_adaptive(h, g)}) {
        std::ostringstream what;
        what << "QFT d=" << d << " count " << taqr::rotation_count(seq)
             << " exceeds " << bound;
        c.expect(taqr::rotation_count(seq) <= bound, what.str());
      }
    }
  }

  for (const auto& levels :
       {taqr::kBigEndianLevels, taqr::kLittleEndianLevels}) {
    const ComplexMatrix cx = taqr::make_cx(levels);
    for (const TransitionGraph& g : preset_family(4)) {
      for (const PulseSequence& seq : {taqr::decompose_static(cx, g),
                                       taqr::decompose_adaptive(cx, g)}) {
        std::ostringstream what;
        what << "CX count " << taqr::rotation_count(seq) << " exceeds 3";
        c.expect(taqr::rotation_count(seq) <= 3, what.str());
      }
    }
  }
}

void criterion_5() {
  Criterion c(5, "swap baseline: Haar d=4 on star:4 costs exactly 12");
  const TransitionGraph g = taqr::preset_graph("star:4");
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const ComplexMatrix u = taqr::haar_random_unitary(4, 500 + seed);
    const PulseSequence seq = taqr::swap_route_baseline(u, g);
    const auto report = taqr::verify(u, seq, g, 4e-9);
    std::ostringstream what;
    what << "seed " << 500 + seed << ": rotations=" << report.rotation_count
         << " distance=" << report.distance
         << " legal=" << report.all_edges_allowed;
    c.expect(report.rotation_count == 12 && report.passed, what.str());
  }
}

void criterion_6() {
  Criterion c(6, "photonic export: unitary preserved, one BS per rotation");
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int dim = 2 + int(seed % 5);
    const PulseSequence seq =
        taqr::testing::random_pulse_sequence(dim, 12, 900 + seed);
    const PulseSequence ph = taqr::export_photonic(seq);

    const double dist = taqr::frobenius_distance(taqr::compose_pulses(ph),
                                                 taqr::compose_pulses(seq));
    int survivors = 0;
    for (const Pulse& p : seq.pulses) {
      if (const auto* r = std::get_if<Rotation>(&p)) {
        double t = std::abs(r->theta);
        if (t > kPi) t = 2 * kPi - t;
        if (t > 1e-12) ++survivors;
      }
    }
    int splitters = 0;
    for (const Pulse& p : ph.pulses) {
      if (std::holds_alternative<taqr::BeamSplitter>(p)) ++splitters;
    }
    std::ostringstream what;
    what << "seed " << 900 + seed << ": distance=" << dist << " splitters="
         << splitters << " survivors=" << survivors;
    c.expect(dist <= 1e-10 && splitters == survivors, what.str());
  }
}

void criterion_7() {
  Criterion c(7, "elimination equation holds to 1e-12 on 1e5 random pairs");
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  int checked = 0;
  double worst = 0.0;
  while (checked < 100000) {
    taqr::Complex z(coord(rng), coord(rng));
    taqr::Complex p(coord(rng), coord(rng));
    if (checked % 1000 == 0) z = 0.0;        // exercise the arg(0) edge
    if (checked % 1000 == 500) p = 0.0;
    if (std::abs(z) < 1e-12 && std::abs(p) < 1e-12) continue;
    const auto [theta, phi] = taqr::solve_elimination(z, p);
    const taqr::Complex residual =
        std::cos(theta / 2) * z +
        taqr::Complex(0, 1) * std::exp(taqr::Complex(0, phi)) *
            std::sin(theta / 2) * p;
    worst = std::max(worst, std::abs(residual));
    ++checked;
  }
  std::ostringstream what;
  what << "worst residual " << worst;
  c.expect(worst <= 1e-12, what.str());
  std::cout << "       worst residual: " << worst << "\n";
}

void criterion_8() {
  Criterion c(8, "timing: Haar d=6 static < 50 ms, schemes to d=32 < 10 ms");

  for (const TransitionGraph& g : preset_family(6)) {
    const EliminationScheme scheme = taqr::build_static_scheme(g);
    std::vector<double> times;
    for (std::uint64_t seed = 0; seed < 21; ++seed) {
      const ComplexMatrix u = taqr::haar_random_unitary(6, 600 + seed);
      const auto t0 = std::chrono::steady_clock::now();
      const PulseSequence seq = taqr::decompose_static(u, scheme);
      const auto t1 = std::chrono::steady_clock::now();
      times.push_back(
          std::chrono::duration<double, std::milli>(t1 - t0).count());
      if (seq.pulses.empty()) c.expect(false, "empty decomposition");
    }
    std::ostringstream what;
    what << "median decomposition " << median_of(times) << " ms";
    c.expect(median_of(times) < 50.0, what.str());
  }

  for (const char* spec : {"line:32", "star:32", "bipartite:32:2"}) {
    const TransitionGraph g = taqr::preset_graph(spec);
    std::vector<double> times;
    for (int rep = 0; rep < 11; ++rep) {
      const auto t0 = std::chrono::steady_clock::now();
      const EliminationScheme scheme = taqr::build_static_scheme(g);
      const auto t1 = std::chrono::steady_clock::now();
      times.push_back(
          std::chrono::duration<double, std::milli>(t1 - t0).count());
      if (scheme.rows.size() != 31) c.expect(false, "bad scheme size");
    }
    std::ostringstream what;
    what << spec << " median scheme build " << median_of(times) << " ms";
    c.expect(median_of(times) < 10.0, what.str());
  }
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  if (failures == 0) {
    std::cout << "all acceptance criteria passed\n";
  } else {
    std::cout << failures << " acceptance criteria failed\n";
  }
  return failures;
}
