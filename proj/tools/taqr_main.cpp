// Copyright 2026 taqr contributors
// SPDX-License-Identifier: Apache-2.0
//
// taqr — decompose single-qudit unitaries into two-level rotation pulses
// restricted to a hardware transition graph.

#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "taqr/cli.hpp"
#include "taqr/error.hpp"

namespace {

// CLI11 subcommand callbacks run inside App::parse, so taqr::Error thrown by
// a command propagates to the handler in main.
void register_decompose(CLI::App& app, int& rc) {
  auto opts = std::make_shared<taqr::DecomposeOptions>();
  auto mode = std::make_shared<std::string>("static");
  CLI::App* sc = app.add_subcommand(
      "decompose", "Decompose a unitary into transition-graph pulses");
  sc->add_option("--matrix", opts->matrix_path, "Matrix JSON file")
      ->required();
  sc->add_option("--graph", opts->graph_arg,
                 "Graph preset (line:d, star:d, bipartite:d:p) or JSON file")
      ->required();
  sc->add_option("--mode", *mode, "Decomposition mode")
      ->check(CLI::IsMember({"static", "adaptive", "swap-baseline"}))
      ->capture_default_str();
  sc->add_option("--tol", opts->tol, "Unitarity admission tolerance")
      ->capture_default_str();
  sc->add_option("--out", opts->out_path, "Pulse JSON destination (- = stdout)");
  sc->add_flag("--verify", opts->run_verify,
               "Re-verify the result and print the report");
  sc->add_flag("--photonic", opts->photonic,
               "Convert rotations to beam splitters and phase shifts");
  sc->add_option("--row-order", opts->row_order,
                 "Static-mode row elimination order, comma separated")
      ->delimiter(',');
  sc->callback([opts, mode, &rc] {
    opts->mode = taqr::parse_mode(*mode);
    rc = taqr::cmd_decompose(*opts);
  });
}

void register_verify(CLI::App& app, int& rc) {
  auto opts = std::make_shared<taqr::VerifyOptions>();
  CLI::App* sc = app.add_subcommand(
      "verify", "Check a pulse sequence against a target unitary");
  sc->add_option("--matrix", opts->matrix_path, "Matrix JSON file")
      ->required();
  sc->add_option("--pulses", opts->pulses_path, "Pulse JSON file")
      ->required();
  sc->add_option("--graph", opts->graph_arg,
                 "Graph preset or JSON file for edge legality")
      ->required();
  sc->add_option("--tol", opts->tol,
                 "Distance budget (default 1e-9 per dimension)");
  sc->add_option("--out", opts->out_path, "Report destination (- = stdout)");
  sc->callback([opts, &rc] { rc = taqr::cmd_verify(*opts); });
}

void register_gate(CLI::App& app, int& rc) {
  auto opts = std::make_shared<taqr::GateOptions>();
  auto order = std::make_shared<std::string>("big");
  CLI::App* sc =
      app.add_subcommand("gate", "Emit a built-in gate as matrix JSON");
  sc->add_option("name", opts->gate,
                 "Gate name: x+1, x-1, x:k, z, qft, swap:i:j, rxx[:chi], "
                 "rzz[:chi], cx, cz, ch, swap2q")
      ->required();
  sc->add_option("--dim", opts->dim, "Matrix dimension")
      ->capture_default_str();
  sc->add_option("--qubit-order", *order,
                 "Two-qubit level convention: big (2*q1+q2) or little")
      ->check(CLI::IsMember({"big", "little"}))
      ->capture_default_str();
  sc->add_option("--out", opts->out_path, "Matrix destination (- = stdout)");
  sc->callback([opts, order, &rc] {
    opts->little_endian = (*order == "little");
    rc = taqr::cmd_gate(*opts);
  });
}

void register_random(CLI::App& app, int& rc) {
  auto opts = std::make_shared<taqr::RandomOptions>();
  auto seed = std::make_shared<std::uint64_t>(0);
  CLI::App* sc = app.add_subcommand(
      "random", "Sample a Haar-random unitary as matrix JSON");
  sc->add_option("--dim", opts->dim, "Matrix dimension")
      ->capture_default_str();
  CLI::Option* seed_opt =
      sc->add_option("--seed", *seed, "RNG seed (default: TAQR_SEED or 0)");
  sc->add_option("--out", opts->out_path, "Matrix destination (- = stdout)");
  sc->callback([opts, seed, seed_opt, &rc] {
    if (seed_opt->count() > 0) opts->seed = *seed;
    rc = taqr::cmd_random(*opts);
  });
}

void register_scheme(CLI::App& app, int& rc) {
  auto opts = std::make_shared<taqr::SchemeOptions>();
  CLI::App* sc = app.add_subcommand(
      "scheme", "Print the static elimination scheme for a graph");
  sc->add_option("--graph", opts->graph_arg, "Graph preset or JSON file")
      ->required();
  sc->add_option("--row-order", opts->row_order,
                 "Row elimination order override, comma separated")
      ->delimiter(',');
  sc->add_option("--out", opts->out_path, "Scheme destination (- = stdout)");
  sc->callback([opts, &rc] { rc = taqr::cmd_scheme(*opts); });
}

void register_bench(CLI::App& app, int& rc) {
  auto opts = std::make_shared<taqr::BenchOptions>();
  auto seed = std::make_shared<std::uint64_t>(0);
  auto order = std::make_shared<std::string>("big");
  CLI::App* sc = app.add_subcommand(
      "bench", "Run the gate-count and timing suite over graph presets");
  sc->add_option("--graphs", opts->graphs,
                 "Graph families: line, star, bipartite")
      ->delimiter(',')
      ->capture_default_str();
  sc->add_option("--dims", opts->dims, "Dimensions to sweep")
      ->delimiter(',')
      ->capture_default_str();
  sc->add_option("--gates", opts->gates,
                 "Gates to decompose ('random' = Haar samples)")
      ->delimiter(',')
      ->capture_default_str();
  sc->add_option("--modes", opts->modes, "Decomposition modes")
      ->delimiter(',')
      ->capture_default_str();
  sc->add_option("--reps", opts->reps,
                 "Repetitions per cell (0 = 100 random / 20 fixed)");
  sc->add_option("--format", opts->format, "Output format")
      ->check(CLI::IsMember({"md", "csv"}))
      ->capture_default_str();
  CLI::Option* seed_opt =
      sc->add_option("--seed", *seed, "RNG seed (default: TAQR_SEED or 0)");
  sc->add_option("--qubit-order", *order,
                 "Two-qubit level convention: big (2*q1+q2) or little")
      ->check(CLI::IsMember({"big", "little"}))
      ->capture_default_str();
  sc->add_option("--out", opts->out_path, "Table destination (- = stdout)");
  sc->callback([opts, seed, seed_opt, order, &rc] {
    if (seed_opt->count() > 0) opts->seed = *seed;
    opts->little_endian = (*order == "little");
    rc = taqr::cmd_bench(*opts);
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "taqr: two-level pulse decomposition of qudit unitaries under "
      "transition-graph selection rules"};
  app.require_subcommand(1);

  int rc = 0;
  register_decompose(app, rc);
  register_verify(app, rc);
  register_gate(app, rc);
  register_random(app, rc);
  register_scheme(app, rc);
  register_bench(app, rc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // usage problems exit 1
  } catch (const taqr::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  }
  return rc;
}
