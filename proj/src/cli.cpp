// Copyright 2026 taqr contributors
// SPDX-License-Identifier: Apache-2.0

#include "taqr/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>

#include "taqr/batch.hpp"
#include "taqr/error.hpp"
#include "taqr/gates.hpp"
#include "taqr/io.hpp"
#include "taqr/photonic.hpp"

namespace taqr {

namespace {

const std::array<int, 4>& basis_levels(bool little_endian) {
  return little_endian ? kLittleEndianLevels : kBigEndianLevels;
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n == 0) return 0.0;
  return n % 2 == 1 ? values[n / 2]
                    : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

PulseSequence decompose_with_mode(const ComplexMatrix& u,
                                  const TransitionGraph& g,
                                  const EliminationScheme& scheme,
                                  DecompositionMode mode) {
  switch (mode) {
    case DecompositionMode::kStatic:
      return decompose_static(u, scheme);
    case DecompositionMode::kAdaptive:
      return decompose_adaptive(u, g);
    case DecompositionMode::kSwapBaseline:
      return swap_route_baseline(u, g);
  }
  throw Error(ErrorKind::kInternal, "unhandled decomposition mode");
}

std::string preset_for(const std::string& family, int dim) {
  if (family == "line" || family == "star") {
    return family + ":" + std::to_string(dim);
  }
  if (family == "bipartite") {
    // p = 2 as soon as the dimension allows it
    return "bipartite:" + std::to_string(dim) + ":" +
           std::to_string(std::min(2, dim - 1));
  }
  throw Error(ErrorKind::kValidation,
              "unknown graph family '" + family +
                  "' (expected line, star or bipartite)");
}

}  // namespace

DecompositionMode parse_mode(const std::string& text) {
  if (text == "static") return DecompositionMode::kStatic;
  if (text == "adaptive") return DecompositionMode::kAdaptive;
  if (text == "swap-baseline") return DecompositionMode::kSwapBaseline;
  throw Error(ErrorKind::kUsage,
              "unknown mode '" + text +
                  "' (expected static, adaptive or swap-baseline)");
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> explicit_seed) {
  if (explicit_seed) return *explicit_seed;
  if (const char* env = std::getenv("TAQR_SEED")) {
    try {
      std::size_t used = 0;
      const std::uint64_t value = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
      return value;
    } catch (const std::exception&) {
      throw Error(ErrorKind::kUsage,
                  std::string("TAQR_SEED='") + env +
                      "' is not an unsigned integer");
    }
  }
  return 0;
}

int cmd_decompose(const DecomposeOptions& opts) {
  if (!opts.row_order.empty() && opts.mode != DecompositionMode::kStatic) {
    throw Error(ErrorKind::kUsage, "--row-order only applies to static mode");
  }
  const ComplexMatrix u = read_matrix_json(opts.matrix_path, opts.tol);
  const TransitionGraph g = graph_from_arg(opts.graph_arg);

  EliminationScheme scheme;
  if (opts.mode == DecompositionMode::kStatic) {
    scheme = opts.row_order.empty() ? build_static_scheme(g)
                                    : build_static_scheme(g, opts.row_order);
  }
  PulseSequence seq = decompose_with_mode(u, g, scheme, opts.mode);

  VerificationReport report;
  if (opts.run_verify) {
    report = verify(u, seq, g, kReconstructionTolPerDim * g.dim());
    if (!report.passed) {
      std::ostringstream msg;
      msg << "decomposition failed self-verification (distance "
          << report.distance << ", legal " << report.all_edges_allowed << ")";
      throw Error(ErrorKind::kInternal, msg.str());
    }
  }
  if (opts.photonic) seq = export_photonic(seq);
  write_text_output(opts.out_path, pulses_to_json_string(seq));
  if (opts.run_verify) {
    // keep stdout single-purpose when the pulses already went there
    const bool pulses_on_stdout = opts.out_path.empty() || opts.out_path == "-";
    (pulses_on_stdout ? std::cerr : std::cout)
        << report_to_json_string(report) << '\n';
  }
  return 0;
}

int cmd_verify(const VerifyOptions& opts) {
  const ComplexMatrix u = read_matrix_json(opts.matrix_path);
  const PulseSequence seq = read_pulses_json(opts.pulses_path);
  const TransitionGraph g = graph_from_arg(opts.graph_arg);
  const double budget =
      opts.tol > 0.0 ? opts.tol : kReconstructionTolPerDim * g.dim();
  const VerificationReport report = verify(u, seq, g, budget);
  write_text_output(opts.out_path, report_to_json_string(report));
  return report.passed ? 0 : 3;
}

int cmd_gate(const GateOptions& opts) {
  const GateSpec spec = parse_gate_spec(opts.gate, opts.dim);
  const ComplexMatrix m = make_gate(spec, basis_levels(opts.little_endian));
  write_text_output(opts.out_path, matrix_to_json_string(m));
  return 0;
}

int cmd_random(const RandomOptions& opts) {
  const ComplexMatrix m =
      haar_random_unitary(opts.dim, resolve_seed(opts.seed));
  write_text_output(opts.out_path, matrix_to_json_string(m));
  return 0;
}

int cmd_scheme(const SchemeOptions& opts) {
  const TransitionGraph g = graph_from_arg(opts.graph_arg);
  const EliminationScheme scheme = opts.row_order.empty()
                                       ? build_static_scheme(g)
                                       : build_static_scheme(g, opts.row_order);
  write_text_output(opts.out_path, scheme_to_json_string(scheme));
  return 0;
}

std::vector<BenchRecord> run_bench(const BenchOptions& opts) {
  const std::uint64_t seed = resolve_seed(opts.seed);
  std::vector<BenchRecord> records;

  for (const std::string& family : opts.graphs) {
    for (const int dim : opts.dims) {
      const std::string spec = preset_for(family, dim);
      const TransitionGraph g = preset_graph(spec);
      const EliminationScheme scheme = build_static_scheme(g);

      for (const std::string& gate_name : opts.gates) {
        const bool random_gate = gate_name == "random";
        ComplexMatrix fixed;
        if (!random_gate) {
          const GateSpec gate_spec = parse_gate_spec(gate_name, dim);
          if (is_two_qubit_gate(gate_spec.name) && dim != 4) continue;
          fixed = make_gate(gate_spec, basis_levels(opts.little_endian));
        }
        const int reps = opts.reps > 0 ? opts.reps : (random_gate ? 100 : 20);

        for (const std::string& mode_text : opts.modes) {
          const DecompositionMode mode = parse_mode(mode_text);
          BenchRecord record;
          record.gate = gate_name;
          record.graph = spec;
          record.dim = dim;
          record.mode = mode_text;

          std::vector<double> times;
          times.reserve(reps);
          for (int rep = 0; rep < reps; ++rep) {
            const ComplexMatrix u =
                random_gate ? haar_random_unitary(dim, seed + rep) : fixed;
            const auto start = std::chrono::steady_clock::now();
            const PulseSequence seq = decompose_with_mode(u, g, scheme, mode);
            const auto end = std::chrono::steady_clock::now();
            times.push_back(
                std::chrono::duration<double, std::milli>(end - start).count());

            const auto report =
                verify(u, seq, g, kReconstructionTolPerDim * dim);
            if (!report.passed) {
              std::ostringstream msg;
              msg << "verification failed for " << gate_name << " on " << spec
                  << " (" << mode_text << "): distance " << report.distance
                  << ", legal " << report.all_edges_allowed;
              throw Error(ErrorKind::kValidation, msg.str());
            }
            record.rotation_count =
                std::max(record.rotation_count, report.rotation_count);
            record.phase_count =
                std::max(record.phase_count, report.phase_count);
            record.distance = std::max(record.distance, report.distance);
          }
          record.median_ms = median(std::move(times));
          records.push_back(std::move(record));
        }
      }
    }
  }
  return records;
}

std::string bench_to_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << "graph,dim,gate,mode,rotations,phases,distance,median_ms\n";
  for (const auto& r : records) {
    out << r.graph << ',' << r.dim << ',' << r.gate << ',' << r.mode << ','
        << r.rotation_count << ',' << r.phase_count << ','
        << std::scientific << r.distance << std::defaultfloat << ','
        << r.median_ms << '\n';
  }
  return out.str();
}

std::string bench_to_markdown(const std::vector<BenchRecord>& records) {
  // rotation counts as one gate × dimension table per (graph family, mode)
  std::vector<std::string> families, modes, gates;
  std::vector<int> dims;
  auto remember = [](auto& list, const auto& value) {
    if (std::find(list.begin(), list.end(), value) == list.end()) {
      list.push_back(value);
    }
  };
  std::map<std::string, const BenchRecord*> cells;
  auto family_of = [](const std::string& spec) {
    return spec.substr(0, spec.find(':'));
  };
  for (const auto& r : records) {
    remember(families, family_of(r.graph));
    remember(modes, r.mode);
    remember(gates, r.gate);
    remember(dims, r.dim);
    cells[family_of(r.graph) + '|' + r.mode + '|' + r.gate + '|' +
          std::to_string(r.dim)] = &r;
  }

  std::ostringstream out;
  for (const auto& family : families) {
    for (const auto& mode : modes) {
      out << "### " << family << " — " << mode << "\n\n| gate |";
      for (int d : dims) out << " d=" << d << " |";
      out << "\n|---|";
      for (std::size_t i = 0; i < dims.size(); ++i) out << "---|";
      out << '\n';
      for (const auto& gate : gates) {
        out << "| " << gate << " |";
        for (int d : dims) {
          const auto it =
              cells.find(family + '|' + mode + '|' + gate + '|' +
                         std::to_string(d));
          if (it == cells.end()) {
            out << " – |";
          } else {
            out << ' ' << it->second->rotation_count << " |";
          }
        }
        out << '\n';
      }
      out << '\n';
    }
  }
  return out.str();
}

int cmd_bench(const BenchOptions& opts) {
  const auto records = run_bench(opts);
  const std::string text = opts.format == "csv" ? bench_to_csv(records)
                                                : bench_to_markdown(records);
  write_text_output(opts.out_path, text);
  return 0;
}

}  // namespace taqr
