// Copyright 2026 taqr contributors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <variant>

#include "taqr/decompose.hpp"
#include "taqr/error.hpp"
#include "taqr/gates.hpp"
#include "taqr/matrix.hpp"
#include "test_support.hpp"

using taqr::Complex;
using taqr::ComplexMatrix;
using taqr::Phase;
using taqr::Pulse;
using taqr::PulseSequence;
using taqr::Rotation;
using taqr::TransitionGraph;

namespace {
constexpr double kPi = std::numbers::pi;

std::vector<std::pair<int, int>> rotation_pairs(const PulseSequence& seq) {
  std::vector<std::pair<int, int>> pairs;
  for (const Pulse& p : seq.pulses) {
    if (const auto* r = std::get_if<Rotation>(&p)) pairs.push_back({r->i, r->j});
  }
  return pairs;
}
}  // namespace

TEST_CASE("solve_elimination pins the textbook cases") {
  {
    const auto [theta, phi] = taqr::solve_elimination(0.0, 1.0);
    CHECK(theta == doctest::Approx(0.0));
    CHECK(phi == doctest::Approx(kPi / 2));
  }
  {
    const double s = 1.0 / std::sqrt(2.0);
    const auto [theta, phi] = taqr::solve_elimination(s, s);
    CHECK(theta == doctest::Approx(kPi / 2));
    CHECK(phi == doctest::Approx(kPi / 2));
  }
  {
    const auto [theta, phi] = taqr::solve_elimination(1.0, 0.0);
    CHECK(theta == doctest::Approx(kPi));
    CHECK(phi == doctest::Approx(kPi / 2));
  }
  CHECK_THROWS_AS(taqr::solve_elimination(1e-13, -1e-14), taqr::Error);
}

TEST_CASE("solve_elimination satisfies its defining equation") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  for (int n = 0; n < 2000; ++n) {
    const Complex z(coord(rng), coord(rng));
    const Complex p(coord(rng), coord(rng));
    if (std::abs(z) < 1e-12 && std::abs(p) < 1e-12) continue;
    const auto [theta, phi] = taqr::solve_elimination(z, p);
    const Complex residual = std::cos(theta / 2) * z +
                             Complex(0, 1) * std::exp(Complex(0, phi)) *
                                 std::sin(theta / 2) * p;
    REQUIRE(std::abs(residual) <= 1e-12);
    REQUIRE(theta >= 0.0);
    REQUIRE(theta <= kPi);
  }
}

TEST_CASE("eliminate_row leaves the identity alone") {
  ComplexMatrix u = ComplexMatrix::Identity(4, 4);
  const auto pulses = taqr::eliminate_row(u, 3, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(pulses.empty());
  CHECK(taqr::frobenius_distance(u, ComplexMatrix::Identity(4, 4)) == 0.0);
}

TEST_CASE("eliminate_row spends one rotation on a one-entry row") {
  ComplexMatrix u = taqr::make_x_shift(4, 1);
  const auto pulses = taqr::eliminate_row(u, 3, {{0, 1}, {1, 2}, {2, 3}});
  REQUIRE(pulses.size() == 1);
  const auto* r = std::get_if<Rotation>(&pulses[0]);
  REQUIRE(r != nullptr);
  CHECK(r->i == 2);
  CHECK(r->j == 3);
  CHECK(r->theta == doctest::Approx(kPi));
  CHECK(r->phi == doctest::Approx(kPi / 2));
}

TEST_CASE("eliminate_row uses d-1 rotations on a dense row") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    ComplexMatrix u = taqr::haar_random_unitary(5, seed);
    const auto pulses =
        taqr::eliminate_row(u, 4, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    int rotations = 0;
    for (const Pulse& p : pulses) {
      if (const auto* r = std::get_if<Rotation>(&p)) {
        REQUIRE(std::abs(r->theta) > 1e-12);
        ++rotations;
      }
    }
    REQUIRE(rotations == 4);
    // the row is now a clean unit vector
    for (int c = 0; c < 4; ++c) REQUIRE(std::abs(u(4, c)) == 0.0);
    REQUIRE(std::abs(u(4, 4) - 1.0) == 0.0);
  }
}

TEST_CASE("static decomposition of the identity is empty") {
  const PulseSequence seq = taqr::decompose_static(
      ComplexMatrix::Identity(4, 4), taqr::preset_graph("line:4"));
  CHECK(seq.pulses.empty());
}

TEST_CASE("static decomposition saturates on Haar input") {
  for (const char* spec : {"line:4", "star:4", "bipartite:4:2"}) {
    const PulseSequence seq = taqr::decompose_static(
        taqr::haar_random_unitary(4, 11), taqr::preset_graph(spec));
    CHECK(taqr::rotation_count(seq) == 6);
  }
}

TEST_CASE("static X^{-1} on lines costs d-1 rotations") {
  for (int d : {4, 5, 6}) {
    const PulseSequence seq = taqr::decompose_static(
        taqr::make_x_shift(d, -1),
        taqr::preset_graph("line:" + std::to_string(d)));
    CHECK(taqr::rotation_count(seq) == d - 1);
  }
}

TEST_CASE("static X^{+1} on the star pays the routing overhead") {
  const PulseSequence seq = taqr::decompose_static(
      taqr::make_x_shift(4, 1), taqr::preset_graph("star:4"));
  CHECK(taqr::rotation_count(seq) == 5);
  CHECK(rotation_pairs(seq) == std::vector<std::pair<int, int>>{
                                   {0, 2}, {0, 3}, {0, 1}, {0, 2}, {0, 1}});
}

TEST_CASE("adaptive X^{+1} on the star needs only d-1 rotations") {
  const PulseSequence seq = taqr::decompose_adaptive(
      taqr::make_x_shift(4, 1), taqr::preset_graph("star:4"));
  CHECK(taqr::rotation_count(seq) == 3);
}

TEST_CASE("adaptive cyclic shifts cost d-1 on every preset family") {
  for (int d : {4, 5, 6}) {
    for (const std::string family : {"line", "star"}) {
      const TransitionGraph g =
          taqr::preset_graph(family + ":" + std::to_string(d));
      for (int shift : {1, -1}) {
        const PulseSequence seq =
            taqr::decompose_adaptive(taqr::make_x_shift(d, shift), g);
        CHECK(taqr::rotation_count(seq) == d - 1);
      }
    }
    const TransitionGraph bp =
        taqr::preset_graph("bipartite:" + std::to_string(d) + ":2");
    for (int shift : {1, -1}) {
      CHECK(taqr::rotation_count(taqr::decompose_adaptive(
                taqr::make_x_shift(d, shift), bp)) == d - 1);
    }
  }
}

TEST_CASE("adaptive Haar d=6 on bipartite matches the dense count") {
  const PulseSequence seq = taqr::decompose_adaptive(
      taqr::haar_random_unitary(6, 5), taqr::preset_graph("bipartite:6:2"));
  CHECK(taqr::rotation_count(seq) == 15);
}

TEST_CASE("diagonal unitaries need no rotations") {
  ComplexMatrix diag = ComplexMatrix::Identity(4, 4);
  diag(1, 1) = std::exp(Complex(0, 0.7));
  diag(2, 2) = std::exp(Complex(0, -1.1));
  diag(3, 3) = std::exp(Complex(0, 2.9));
  for (const char* spec : {"line:4", "star:4"}) {
    const TransitionGraph g = taqr::preset_graph(spec);
    for (const PulseSequence& seq :
         {taqr::decompose_static(diag, g), taqr::decompose_adaptive(diag, g)}) {
      CHECK(taqr::rotation_count(seq) == 0);
      CHECK(taqr::phase_count(seq) <= 4);
      CHECK(taqr::frobenius_distance(taqr::compose_pulses(seq), diag) < 4e-9);
    }
  }
}

TEST_CASE("embedded RZZ is free of rotations") {
  const ComplexMatrix rzz = taqr::make_rzz(kPi / 2);
  for (const char* spec : {"line:4", "star:4", "bipartite:4:2"}) {
    const PulseSequence seq =
        taqr::decompose_adaptive(rzz, taqr::preset_graph(spec));
    CHECK(taqr::rotation_count(seq) == 0);
    CHECK(taqr::phase_count(seq) <= 4);
  }
}

TEST_CASE("no emitted pulse carries a negligible angle") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const TransitionGraph g = taqr::testing::random_connected_graph(5, seed);
    const ComplexMatrix u = taqr::haar_random_unitary(5, seed);
    for (const PulseSequence& seq :
         {taqr::decompose_static(u, g), taqr::decompose_adaptive(u, g)}) {
      for (const Pulse& p : seq.pulses) {
        if (const auto* r = std::get_if<Rotation>(&p)) {
          REQUIRE(std::abs(r->theta) > 1e-12);
        } else if (const auto* ph = std::get_if<Phase>(&p)) {
          REQUIRE(std::abs(ph->theta) > 1e-12);
        }
      }
    }
  }
}

TEST_CASE("both modes reconstruct Haar unitaries on preset graphs") {
  for (int d : {2, 3, 5, 7}) {
    std::vector<TransitionGraph> graphs;
    graphs.push_back(taqr::preset_graph("line:" + std::to_string(d)));
    graphs.push_back(taqr::preset_graph("star:" + std::to_string(d)));
    if (d >= 3) {
      graphs.push_back(
          taqr::preset_graph("bipartite:" + std::to_string(d) + ":2"));
    }
    for (const TransitionGraph& g : graphs) {
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const ComplexMatrix u = taqr::haar_random_unitary(d, seed);
        for (const PulseSequence& seq : {taqr::decompose_static(u, g),
                                         taqr::decompose_adaptive(u, g)}) {
          const auto report = taqr::verify(u, seq, g, 1e-9 * d);
          REQUIRE(report.passed);
          REQUIRE(report.rotation_count <= d * (d - 1) / 2);
          REQUIRE(report.phase_count <= d);
        }
      }
    }
  }
}

TEST_CASE("decompositions hold up on random connected graphs") {
  for (int d = 3; d <= 7; ++d) {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      const TransitionGraph g =
          taqr::testing::random_connected_graph(d, 1000 + seed);
      const ComplexMatrix u = taqr::haar_random_unitary(d, seed);
      for (const PulseSequence& seq : {taqr::decompose_static(u, g),
                                       taqr::decompose_adaptive(u, g)}) {
        const auto report = taqr::verify(u, seq, g, 1e-9 * d);
        REQUIRE(report.passed);
      }
    }
  }
}

TEST_CASE("swap baseline routes Haar d=4 through 12 star rotations") {
  const TransitionGraph g = taqr::preset_graph("star:4");
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const ComplexMatrix u = taqr::haar_random_unitary(4, seed);
    const PulseSequence seq = taqr::swap_route_baseline(u, g);
    CHECK(taqr::rotation_count(seq) == 12);
    const auto report = taqr::verify(u, seq, g, 4e-9);
    CHECK(report.passed);
  }
}

TEST_CASE("swap baseline on a line degenerates to the static scheme") {
  const TransitionGraph g = taqr::preset_graph("line:5");
  const ComplexMatrix u = taqr::haar_random_unitary(5, 3);
  const PulseSequence base = taqr::swap_route_baseline(u, g);
  const PulseSequence stat = taqr::decompose_static(u, g);
  CHECK(base.pulses == stat.pulses);
}

TEST_CASE("one disallowed rotation routes as a three-pulse conjugation") {
  // R^{12} is not a star:4 edge; the unitary it implements still decomposes.
  const ComplexMatrix u =
      taqr::pulse_to_matrix(taqr::make_rotation(1, 2, 1.3, 0.4), 4);
  const TransitionGraph g = taqr::preset_graph("star:4");
  const PulseSequence seq = taqr::swap_route_baseline(u, g);
  CHECK(taqr::rotation_count(seq) == 3);
  CHECK(taqr::phase_count(seq) == 0);
  CHECK(taqr::verify(u, seq, g, 4e-9).passed);
}

TEST_CASE("verify reports distance zero for trivial inputs") {
  const TransitionGraph g = taqr::preset_graph("line:3");
  const auto report =
      taqr::verify(ComplexMatrix::Identity(3, 3), {3, {}}, g, 1e-12);
  CHECK(report.distance == 0.0);
  CHECK(report.passed);
  CHECK(report.all_edges_allowed);
}

TEST_CASE("verify flags rotations outside the graph") {
  const TransitionGraph g = taqr::preset_graph("line:4");
  const Pulse bad = taqr::make_rotation(0, 3, 0.9, 0.1);
  const ComplexMatrix u = taqr::pulse_to_matrix(bad, 4);
  const auto report = taqr::verify(u, {4, {bad}}, g, 1e-9);
  CHECK_FALSE(report.all_edges_allowed);
  CHECK_FALSE(report.passed);
  CHECK(report.distance < 1e-12);
}

TEST_CASE("verify rejects dimension mismatches and beam splitters") {
  const TransitionGraph g = taqr::preset_graph("line:3");
  CHECK_THROWS_AS(taqr::verify(ComplexMatrix::Identity(4, 4), {4, {}}, g, 1.0),
                  taqr::Error);
  CHECK_THROWS_AS(taqr::verify(ComplexMatrix::Identity(3, 3),
                               {3, {taqr::make_beam_splitter(0, 1, 0.5)}}, g,
                               1.0),
                  taqr::Error);
}

TEST_CASE("non-unitary input is refused with a validation error") {
  ComplexMatrix m = ComplexMatrix::Identity(4, 4);
  m(0, 0) = 2.0;
  const TransitionGraph g = taqr::preset_graph("line:4");
  try {
    taqr::decompose_static(m, g);
    FAIL("expected a validation error");
  } catch (const taqr::Error& e) {
    CHECK(e.kind() == taqr::ErrorKind::kValidation);
    CHECK(e.exit_code() == 3);
  }
  CHECK_THROWS_AS(taqr::decompose_adaptive(m, g), taqr::Error);
  CHECK_THROWS_AS(taqr::swap_route_baseline(m, g), taqr::Error);
}

TEST_CASE("matrix and graph dimensions must agree") {
  CHECK_THROWS_AS(taqr::decompose_static(ComplexMatrix::Identity(3, 3),
                                         taqr::preset_graph("line:4")),
                  taqr::Error);
}

TEST_CASE("global phase is reproduced, not just the projective part") {
  const TransitionGraph g = taqr::preset_graph("line:3");
  const ComplexMatrix u =
      std::exp(Complex(0, 1.234)) * taqr::haar_random_unitary(3, 8);
  const PulseSequence seq = taqr::decompose_static(u, g);
  CHECK(taqr::frobenius_distance(taqr::compose_pulses(seq), u) < 3e-9);
}
