// Copyright 2026 taqr contributors
// SPDX-License-Identifier: Apache-2.0

#include "taqr/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

#include "taqr/error.hpp"

namespace taqr {

namespace {

using nlohmann::json;

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::kIo, "cannot open '" + path + "' for reading");
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kIo, "cannot parse '" + path + "': " + e.what());
  }
}

// Schema slips (missing keys, wrong JSON types) are I/O-class parse errors;
// value-level problems (non-unitary, bad indices) are validation errors.
const json& require_key(const json& j, const char* key,
                        const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorKind::kIo, where + ": missing key '" + key + "'");
  }
  return j.at(key);
}

int require_int(const json& j, const char* key, const std::string& where) {
  const json& value = require_key(j, key, where);
  if (!value.is_number_integer()) {
    throw Error(ErrorKind::kIo, where + ": '" + key + "' must be an integer");
  }
  return value.get<int>();
}

double require_number(const json& j, const char* key,
                      const std::string& where) {
  const json& value = require_key(j, key, where);
  if (!value.is_number()) {
    throw Error(ErrorKind::kIo, where + ": '" + key + "' must be a number");
  }
  return value.get<double>();
}

Eigen::MatrixXd parse_real_part(const json& rows, int dim,
                                const std::string& where) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != dim) {
    throw Error(ErrorKind::kIo, where + ": expected " + std::to_string(dim) +
                                    " rows");
  }
  Eigen::MatrixXd m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const json& row = rows.at(r);
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      throw Error(ErrorKind::kIo, where + ": row " + std::to_string(r) +
                                      " is not a list of " +
                                      std::to_string(dim) + " numbers");
    }
    for (int c = 0; c < dim; ++c) {
      if (!row.at(c).is_number()) {
        throw Error(ErrorKind::kIo, where + ": entry (" + std::to_string(r) +
                                        ", " + std::to_string(c) +
                                        ") is not a number");
      }
      m(r, c) = row.at(c).get<double>();
    }
  }
  return m;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorKind::kIo, "cannot open '" + path + "' for writing");
  }
  out << text << '\n';
  if (!out) {
    throw Error(ErrorKind::kIo, "failed writing '" + path + "'");
  }
}

json pulse_to_json(const Pulse& p) {
  json j;
  if (const auto* rot = std::get_if<Rotation>(&p)) {
    j["type"] = "R";
    j["i"] = rot->i;
    j["j"] = rot->j;
    j["theta"] = rot->theta;
    j["phi"] = rot->phi;
  } else if (const auto* ph = std::get_if<Phase>(&p)) {
    j["type"] = "Ph";
    j["k"] = ph->level;
    j["theta"] = ph->theta;
  } else {
    const auto& bs = std::get<BeamSplitter>(p);
    j["type"] = "BS";
    j["i"] = bs.i;
    j["j"] = bs.j;
    j["r"] = bs.r;
  }
  return j;
}

}  // namespace

ComplexMatrix read_matrix_json(const std::string& path, double unitary_tol) {
  const json j = parse_file(path);
  const std::string where = "matrix file '" + path + "'";
  const int dim = require_int(j, "dim", where);
  if (dim < 1) {
    throw Error(ErrorKind::kValidation, where + ": dim must be >= 1");
  }
  const Eigen::MatrixXd re =
      parse_real_part(require_key(j, "re", where), dim, where + " (re)");
  const Eigen::MatrixXd im =
      parse_real_part(require_key(j, "im", where), dim, where + " (im)");
  ComplexMatrix m(dim, dim);
  m.real() = re;
  m.imag() = im;
  if (!is_unitary(m, unitary_tol)) {
    throw Error(ErrorKind::kValidation,
                where + ": matrix is not unitary within tolerance");
  }
  return m;
}

std::string matrix_to_json_string(const ComplexMatrix& m) {
  json re = json::array();
  json im = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json re_row = json::array();
    json im_row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      re_row.push_back(m(r, c).real());
      im_row.push_back(m(r, c).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  const json j{{"dim", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
  return j.dump(2);
}

void write_matrix_json(const std::string& path, const ComplexMatrix& m) {
  write_file(path, matrix_to_json_string(m));
}

TransitionGraph read_graph_json(const std::string& path) {
  const json j = parse_file(path);
  const std::string where = "graph file '" + path + "'";
  const int dim = require_int(j, "dim", where);
  const json& edges_json = require_key(j, "edges", where);
  if (!edges_json.is_array()) {
    throw Error(ErrorKind::kIo, where + ": 'edges' must be a list of pairs");
  }
  std::vector<std::pair<int, int>> edges;
  for (const json& e : edges_json) {
    if (!e.is_array() || e.size() != 2 || !e.at(0).is_number_integer() ||
        !e.at(1).is_number_integer()) {
      throw Error(ErrorKind::kIo, where + ": each edge must be [i, j]");
    }
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  }
  std::map<std::pair<int, int>, double> weights;
  if (j.contains("weights")) {
    const json& weights_json = j.at("weights");
    if (!weights_json.is_object()) {
      throw Error(ErrorKind::kIo, where + ": 'weights' must be an object");
    }
    for (const auto& [key, value] : weights_json.items()) {
      const std::size_t dash = key.find('-');
      int i = -1, k = -1;
      try {
        if (dash == std::string::npos) throw std::invalid_argument(key);
        i = std::stoi(key.substr(0, dash));
        k = std::stoi(key.substr(dash + 1));
      } catch (const std::exception&) {
        throw Error(ErrorKind::kIo,
                    where + ": weight key '" + key + "' is not 'i-j'");
      }
      if (!value.is_number()) {
        throw Error(ErrorKind::kIo,
                    where + ": weight '" + key + "' must be a number");
      }
      weights[{i, k}] = value.get<double>();
    }
  }
  return TransitionGraph(dim, edges, weights);
}

std::string graph_to_json_string(const TransitionGraph& g) {
  json edges = json::array();
  json weights = json::object();
  bool any_weight = false;
  for (auto [i, j] : g.edges()) {
    edges.push_back(json::array({i, j}));
    const double w = g.weight(i, j);
    if (w != 1.0) {
      weights[std::to_string(i) + "-" + std::to_string(j)] = w;
      any_weight = true;
    }
  }
  json j{{"dim", g.dim()}, {"edges", std::move(edges)}};
  if (any_weight) j["weights"] = std::move(weights);
  return j.dump(2);
}

void write_graph_json(const std::string& path, const TransitionGraph& g) {
  write_file(path, graph_to_json_string(g));
}

TransitionGraph graph_from_arg(const std::string& arg) {
  if (arg.rfind("line:", 0) == 0 || arg.rfind("star:", 0) == 0 ||
      arg.rfind("bipartite:", 0) == 0) {
    return preset_graph(arg);
  }
  return read_graph_json(arg);
}

PulseSequence read_pulses_json(const std::string& path) {
  const json j = parse_file(path);
  const std::string where = "pulse file '" + path + "'";
  PulseSequence seq;
  seq.dim = require_int(j, "dim", where);
  if (seq.dim < 1) {
    throw Error(ErrorKind::kValidation, where + ": dim must be >= 1");
  }
  const json& pulses = require_key(j, "pulses", where);
  if (!pulses.is_array()) {
    throw Error(ErrorKind::kIo, where + ": 'pulses' must be a list");
  }
  for (const json& p : pulses) {
    const json& type = require_key(p, "type", where);
    if (type == "R") {
      seq.pulses.push_back(make_rotation(
          require_int(p, "i", where), require_int(p, "j", where),
          require_number(p, "theta", where), require_number(p, "phi", where)));
    } else if (type == "Ph") {
      seq.pulses.push_back(make_phase(require_int(p, "k", where),
                                      require_number(p, "theta", where)));
    } else if (type == "BS") {
      seq.pulses.push_back(make_beam_splitter(require_int(p, "i", where),
                                              require_int(p, "j", where),
                                              require_number(p, "r", where)));
    } else {
      throw Error(ErrorKind::kIo,
                  where + ": pulse type must be R, Ph or BS, got " +
                      type.dump());
    }
  }
  return seq;
}

std::string pulses_to_json_string(const PulseSequence& seq) {
  json pulses = json::array();
  for (const Pulse& p : seq.pulses) pulses.push_back(pulse_to_json(p));
  const json j{{"dim", seq.dim}, {"pulses", std::move(pulses)}};
  return j.dump(2);
}

void write_pulses_json(const std::string& path, const PulseSequence& seq) {
  write_file(path, pulses_to_json_string(seq));
}

std::string report_to_json_string(const VerificationReport& report) {
  const json j{{"distance", report.distance},
               {"rotations", report.rotation_count},
               {"phases", report.phase_count},
               {"legal", report.all_edges_allowed},
               {"ms", report.elapsed_ms}};
  return j.dump(2);
}

std::string scheme_to_json_string(const EliminationScheme& scheme) {
  json rows = json::array();
  for (const auto& row : scheme.rows) {
    json steps = json::array();
    for (auto [z, p] : row.steps) steps.push_back(json::array({z, p}));
    rows.push_back(json{{"row", row.row}, {"steps", std::move(steps)}});
  }
  const json j{{"dim", scheme.dim},
               {"rows", std::move(rows)},
               {"final", scheme.final_level}};
  return j.dump(2);
}

void write_text_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << '\n';
    return;
  }
  write_file(path, text);
}

}  // namespace taqr
