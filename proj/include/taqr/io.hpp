// Copyright 2026 taqr contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "taqr/decompose.hpp"
#include "taqr/graph.hpp"
#include "taqr/pulse.hpp"
#include "taqr/tolerances.hpp"

namespace taqr {

// Matrix files: {"dim": d, "re": [[...]], "im": [[...]]} with row-major d×d
// arrays.  The reader rejects non-square shapes and matrices that fail the
// unitarity check at unitary_tol.
ComplexMatrix read_matrix_json(const std::string& path,
                               double unitary_tol = kUnitaryTol);
void write_matrix_json(const std::string& path, const ComplexMatrix& m);
std::string matrix_to_json_string(const ComplexMatrix& m);

// Graph files: {"dim": d, "edges": [[i,j], ...], "weights": {"i-j": w}} with
// the weights object optional.
TransitionGraph read_graph_json(const std::string& path);
void write_graph_json(const std::string& path, const TransitionGraph& g);
std::string graph_to_json_string(const TransitionGraph& g);

// CLI front door: a preset spec (line:/star:/bipartite: prefix) or a JSON
// file path.
TransitionGraph graph_from_arg(const std::string& arg);

// Pulse files, application order:
// {"dim": d, "pulses": [{"type":"R","i":..,"j":..,"theta":..,"phi":..} |
//                       {"type":"Ph","k":..,"theta":..} |
//                       {"type":"BS","i":..,"j":..,"r":..}, ...]}
PulseSequence read_pulses_json(const std::string& path);
void write_pulses_json(const std::string& path, const PulseSequence& seq);
std::string pulses_to_json_string(const PulseSequence& seq);

// {"distance":.., "rotations":.., "phases":.., "legal":.., "ms":..}
std::string report_to_json_string(const VerificationReport& report);

// {"dim":.., "rows": [{"row":.., "steps": [[z,p],..]},..], "final":..}
std::string scheme_to_json_string(const EliminationScheme& scheme);

// Write `text` (plus trailing newline) to the file, or to stdout when path is
// empty or "-".
void write_text_output(const std::string& path, const std::string& text);

}  // namespace taqr
