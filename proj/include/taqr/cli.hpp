// Copyright 2026 taqr contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "taqr/decompose.hpp"

namespace taqr {

// Command implementations return the process exit code for success paths and
// throw taqr::Error otherwise; main() maps ErrorKind to the exit code
// (0 success, 1 usage, 2 I/O, 3 validation, 4 internal).

struct DecomposeOptions {
  std::string matrix_path;
  std::string graph_arg;
  DecompositionMode mode = DecompositionMode::kStatic;
  double tol = kUnitaryTol;      // admission tolerance for the input matrix
  std::string out_path;          // pulse JSON destination; "" or "-" = stdout
  bool run_verify = false;       // re-verify and print the report
  bool photonic = false;         // export beam-splitter form
  std::vector<int> row_order;    // static-mode row order override
};
int cmd_decompose(const DecomposeOptions& opts);

struct VerifyOptions {
  std::string matrix_path;
  std::string pulses_path;
  std::string graph_arg;
  double tol = 0.0;              // 0 = default budget 1e-9·d
  std::string out_path;
};
int cmd_verify(const VerifyOptions& opts);

struct GateOptions {
  std::string gate;
  int dim = 4;
  std::string out_path;
  bool little_endian = false;    // two-qubit embedding convention
};
int cmd_gate(const GateOptions& opts);

struct RandomOptions {
  int dim = 2;
  std::optional<std::uint64_t> seed;  // unset = TAQR_SEED env or 0
  std::string out_path;
};
int cmd_random(const RandomOptions& opts);

struct SchemeOptions {
  std::string graph_arg;
  std::vector<int> row_order;
  std::string out_path;
};
int cmd_scheme(const SchemeOptions& opts);

struct BenchOptions {
  std::vector<std::string> graphs{"line", "star", "bipartite"};
  std::vector<int> dims{4, 5, 6};
  std::vector<std::string> gates{"x+1",  "x-1", "qft", "random", "rxx",
                                 "rzz", "cx",  "cz",  "ch",     "swap2q"};
  std::vector<std::string> modes{"static", "adaptive"};
  int reps = 0;                  // 0 = 100 for random, 20 for fixed gates
  std::string format = "md";     // md | csv
  std::string out_path;
  std::optional<std::uint64_t> seed;
  bool little_endian = false;
};

struct BenchRecord {
  std::string gate;
  std::string graph;             // resolved preset spec, e.g. line:5
  int dim = 0;
  std::string mode;
  int rotation_count = 0;
  int phase_count = 0;
  double distance = 0.0;         // worst sample
  double median_ms = 0.0;        // decomposition wall time
};

// Every cell is decomposed, re-verified (a failure aborts the run) and timed;
// counts and distances are deterministic for a fixed seed.
std::vector<BenchRecord> run_bench(const BenchOptions& opts);
std::string bench_to_csv(const std::vector<BenchRecord>& records);
std::string bench_to_markdown(const std::vector<BenchRecord>& records);
int cmd_bench(const BenchOptions& opts);

DecompositionMode parse_mode(const std::string& text);

// --seed beats the TAQR_SEED environment variable beats 0.
std::uint64_t resolve_seed(std::optional<std::uint64_t> explicit_seed);

}  // namespace taqr
