// Copyright 2026 The lopc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lopc/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

#include "lopc/errors.hpp"

namespace lopc {

namespace {

using json = nlohmann::json;

void write_double(std::string& out, double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  out += buf;
}

// nlohmann::json keeps objects in a std::map, so iteration is already in
// sorted key order; only number formatting needs our own code.
void write(std::string& out, const json& j) {
  switch (j.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        out += json(key).dump();
        out += ':';
        write(out, value);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        write(out, j[i]);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float:
      write_double(out, j.get<double>());
      break;
    default:
      out += j.dump();
  }
}

std::string canonical(const json& j) {
  std::string out;
  write(out, j);
  return out;
}

json matrix_value(const ComplexMatrix& m) {
  json re = json::array();
  json im = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      re.push_back(m(r, c).real());
      im.push_back(m(r, c).imag());
    }
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

json occupation_value(const OccupationVector& v) {
  json a = json::array();
  for (int n : v.occupations()) a.push_back(n);
  return a;
}

json element_value(const OpticalElement& e) {
  if (const auto* ps = std::get_if<PhaseShifter>(&e)) {
    return {{"kind", "ps"}, {"mode", ps->mode}, {"phi", ps->phi}};
  }
  const auto& bs = std::get<BeamSplitter>(e);
  return {{"kind", "bs"},
          {"modes", {bs.first, bs.second}},
          {"theta", bs.theta},
          {"phi_tau", bs.phi_tau},
          {"phi_rho", bs.phi_rho},
          {"phi_0", bs.phi_0}};
}

// --- parsing -------------------------------------------------------------

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("invalid JSON at byte " + std::to_string(e.byte) + ": " +
                     e.what());
  }
}

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError((path.empty() ? std::string("document") : path) + ": " +
                   what);
}

void expect_object(const json& j, const std::string& path,
                   std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) fail(path, "expected an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) fail(path, "unknown key \"" + key + "\"");
  }
}

const json& field(const json& obj, const char* key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing key \"") + key + "\"");
  return *it;
}

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string index_path(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

long long as_integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  if (j.is_number_unsigned() &&
      j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT32_MAX)) {
    fail(path, "integer out of range");
  }
  const long long v = j.get<long long>();
  if (v < INT32_MIN || v > INT32_MAX) fail(path, "integer out of range");
  return v;
}

double as_real(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(path, "expected a finite number");
  return v;
}

const json& as_array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::vector<double> real_array(const json& j, const std::string& path) {
  as_array(j, path);
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(as_real(j[i], index_path(path, i)));
  }
  return out;
}

std::vector<int> int_array(const json& j, const std::string& path) {
  as_array(j, path);
  std::vector<int> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(static_cast<int>(as_integer(j[i], index_path(path, i))));
  }
  return out;
}

ComplexMatrix parse_matrix(const json& j, const std::string& path) {
  expect_object(j, path, {"rows", "cols", "re", "im"});
  const long long rows = as_integer(field(j, "rows", path), join(path, "rows"));
  const long long cols = as_integer(field(j, "cols", path), join(path, "cols"));
  if (rows < 1 || cols < 1 || rows > 65536 || cols > 65536) {
    fail(path, "rows and cols must be in [1, 65536]");
  }
  const auto re = real_array(field(j, "re", path), join(path, "re"));
  const auto im = real_array(field(j, "im", path), join(path, "im"));
  const auto count = static_cast<std::size_t>(rows * cols);
  if (re.size() != count || im.size() != count) {
    fail(path, "re and im must each hold rows*cols = " +
                   std::to_string(count) + " entries");
  }
  ComplexMatrix m(rows, cols);
  for (long long r = 0; r < rows; ++r) {
    for (long long c = 0; c < cols; ++c) {
      const auto k = static_cast<std::size_t>(r * cols + c);
      m(r, c) = {re[k], im[k]};
    }
  }
  return m;
}

OpticalElement parse_element(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const json& kind = field(j, "kind", path);
  if (!kind.is_string()) fail(join(path, "kind"), "expected a string");
  const auto name = kind.get<std::string>();
  if (name == "ps") {
    expect_object(j, path, {"kind", "mode", "phi"});
    return PhaseShifter{
        static_cast<int>(as_integer(field(j, "mode", path), join(path, "mode"))),
        as_real(field(j, "phi", path), join(path, "phi"))};
  }
  if (name == "bs") {
    expect_object(j, path,
                  {"kind", "modes", "theta", "phi_tau", "phi_rho", "phi_0"});
    const auto modes = int_array(field(j, "modes", path), join(path, "modes"));
    if (modes.size() != 2) fail(join(path, "modes"), "expected two modes");
    return BeamSplitter{modes[0],
                        modes[1],
                        as_real(field(j, "theta", path), join(path, "theta")),
                        as_real(field(j, "phi_tau", path),
                                join(path, "phi_tau")),
                        as_real(field(j, "phi_rho", path),
                                join(path, "phi_rho")),
                        as_real(field(j, "phi_0", path), join(path, "phi_0"))};
  }
  fail(join(path, "kind"), "expected \"bs\" or \"ps\", got \"" + name + "\"");
}

Gate parse_gate(const json& j, const std::string& path) {
  expect_object(j, path, {"name", "targets", "phi", "matrix"});
  const json& name_value = field(j, "name", path);
  if (!name_value.is_string()) fail(join(path, "name"), "expected a string");
  const auto name = name_value.get<std::string>();
  const auto kind = gate_kind_from_name(name);
  if (!kind) fail(join(path, "name"), "unknown gate \"" + name + "\"");
  auto targets = int_array(field(j, "targets", path), join(path, "targets"));

  const bool takes_phi = *kind == GateKind::Phase || *kind == GateKind::CPhase;
  double phi = 0.0;
  if (takes_phi) {
    phi = as_real(field(j, "phi", path), join(path, "phi"));
  } else if (j.contains("phi")) {
    fail(path, name + " takes no phi");
  }
  ComplexMatrix matrix;
  if (*kind == GateKind::Custom) {
    matrix = parse_matrix(field(j, "matrix", path), join(path, "matrix"));
  } else if (j.contains("matrix")) {
    fail(path, name + " takes no matrix");
  }
  try {
    return Gate(*kind, std::move(targets), phi, std::move(matrix));
  } catch (const InvalidArgument& e) {
    fail(path, e.what());
  }
}

}  // namespace

std::string canonical_number(double x) {
  std::string out;
  write_double(out, x);
  return out;
}

std::string to_json(const ComplexMatrix& m) { return canonical(matrix_value(m)); }

std::string to_json(const Netlist& netlist) {
  json elements = json::array();
  for (const auto& e : netlist.elements()) elements.push_back(element_value(e));
  return canonical({{"modes", netlist.modes()},
                    {"elements", elements},
                    {"final_phases", netlist.final_phases()}});
}

std::string to_json(const LogicalCircuit& circuit) {
  json gates = json::array();
  for (const auto& g : circuit.gates()) {
    json gate = {{"name", std::string(gate_name(g.kind()))},
                 {"targets", g.targets()}};
    if (g.kind() == GateKind::Phase || g.kind() == GateKind::CPhase) {
      gate["phi"] = g.phi();
    }
    if (g.kind() == GateKind::Custom) gate["matrix"] = matrix_value(g.custom_matrix());
    gates.push_back(std::move(gate));
  }
  return canonical({{"qubits", circuit.qubits()}, {"gates", gates}});
}

std::string to_json(const SimulationResult& result) {
  json basis = json::array();
  for (const auto& s : result.basis().states()) {
    basis.push_back(occupation_value(s));
  }
  json re = json::array();
  json im = json::array();
  for (const auto& a : result.state.amplitudes()) {
    re.push_back(a.real());
    im.push_back(a.imag());
  }
  return canonical({{"basis", basis},
                    {"amplitudes", {{"re", re}, {"im", im}}},
                    {"probabilities", result.probabilities}});
}

std::string to_json(const FockBasis& basis) {
  json out = json::array();
  for (const auto& s : basis.states()) out.push_back(occupation_value(s));
  return canonical(out);
}

std::string to_json(const OccupationVector& v) {
  return canonical(occupation_value(v));
}

ComplexMatrix matrix_from_json(std::string_view text) {
  return parse_matrix(parse_document(text), "");
}

Netlist netlist_from_json(std::string_view text) {
  const json doc = parse_document(text);
  expect_object(doc, "", {"modes", "elements", "final_phases"});
  const int modes = static_cast<int>(as_integer(field(doc, "modes", ""), "modes"));
  const json& elements = as_array(field(doc, "elements", ""), "elements");
  std::vector<OpticalElement> parsed;
  parsed.reserve(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    parsed.push_back(parse_element(elements[i], index_path("elements", i)));
  }
  std::vector<double> phases;
  if (doc.contains("final_phases")) {
    phases = real_array(doc["final_phases"], "final_phases");
  }
  try {
    return Netlist(modes, std::move(parsed), std::move(phases));
  } catch (const InvalidArgument& e) {
    fail("", e.what());
  }
}

LogicalCircuit circuit_from_json(std::string_view text) {
  const json doc = parse_document(text);
  expect_object(doc, "", {"qubits", "gates"});
  const int qubits =
      static_cast<int>(as_integer(field(doc, "qubits", ""), "qubits"));
  const json& gates = as_array(field(doc, "gates", ""), "gates");
  std::vector<Gate> parsed;
  parsed.reserve(gates.size());
  for (std::size_t i = 0; i < gates.size(); ++i) {
    parsed.push_back(parse_gate(gates[i], index_path("gates", i)));
  }
  try {
    return LogicalCircuit(qubits, std::move(parsed));
  } catch (const InvalidArgument& e) {
    fail("", e.what());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw ParseError("error reading " + path.string());
  return buf.str();
}

}  // namespace lopc
