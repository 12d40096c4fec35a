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

#pragma once

// JSON interchange for matrices, netlists, circuits and simulation results.
//
// Output is canonical: object keys sorted, no whitespace, doubles printed
// with 17 significant digits and -0 written as 0. Parsers are strict about
// types and reject unknown keys; every failure is a ParseError.

#include <filesystem>
#include <string>
#include <string_view>

#include "lopc/circuits.hpp"
#include "lopc/fock.hpp"
#include "lopc/liftops.hpp"
#include "lopc/mesh.hpp"
#include "lopc/simulate.hpp"

namespace lopc {

// {"cols":C,"im":[...],"re":[...],"rows":R}, row-major.
std::string to_json(const ComplexMatrix& m);
// {"elements":[...],"final_phases":[...],"modes":N}
std::string to_json(const Netlist& netlist);
// {"gates":[{"name":..,"targets":[..]},...],"qubits":k}
std::string to_json(const LogicalCircuit& circuit);
// {"amplitudes":{"im":[..],"re":[..]},"basis":[[..],..],"probabilities":[..]}
std::string to_json(const SimulationResult& result);
// [[..],..] in basis order.
std::string to_json(const FockBasis& basis);
// [n_0,...,n_{N-1}]
std::string to_json(const OccupationVector& v);

ComplexMatrix matrix_from_json(std::string_view text);
Netlist netlist_from_json(std::string_view text);
LogicalCircuit circuit_from_json(std::string_view text);

// A double in the canonical form used by every writer above.
std::string canonical_number(double x);

// Whole file as a string; ParseError if it cannot be read.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace lopc
