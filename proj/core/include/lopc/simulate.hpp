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

// Exact propagation of Fock states through netlists.

#include <cstdint>
#include <vector>

#include "lopc/circuits.hpp"
#include "lopc/fock.hpp"
#include "lopc/mesh.hpp"

namespace lopc {

// Forward runs the netlist input to output (generation); Adjoint runs it
// output to input (analysis), i.e. applies the adjoint transfer matrix.
enum class Direction { Forward, Adjoint };

struct SimulationOptions {
  std::uint64_t dim_cap = 20000;
  int photon_cap = 12;
};

struct SimulationResult {
  StateVector state;
  // |amplitude|^2 in basis order.
  std::vector<double> probabilities;

  const FockBasis& basis() const { return state.basis(); }
};

// Lifts the netlist's transfer matrix (or its adjoint) once to the input's
// photon-number subspace and applies it. The output basis is the input's.
// Throws InvalidArgument on a mode-count mismatch and CapExceeded when the
// photon number or subspace dimension is over the configured caps.
SimulationResult run(const Netlist& netlist, const StateVector& input,
                     Direction direction = Direction::Forward,
                     const SimulationOptions& options = {});
SimulationResult run(const Netlist& netlist, const OccupationVector& input,
                     Direction direction = Direction::Forward,
                     const SimulationOptions& options = {});

// Same result as run(), computed as the product of the per-element lifts.
SimulationResult run_elementwise(const Netlist& netlist,
                                 const StateVector& input,
                                 Direction direction = Direction::Forward,
                                 const SimulationOptions& options = {});

// run(compile(c), spmq_encode(logical_in, k)).
SimulationResult run_logical(const LogicalCircuit& circuit,
                             std::uint64_t logical_in,
                             const SimulationOptions& options = {},
                             const CompileOptions& compile_options = {});

// Two SPMQ registers of k1 and k2 qubits share one netlist over
// 2^k1 + 2^k2 modes (register 1 first). One photon enters each register at
// the given logical indices; returns the probability that the output is not
// one photon per register, i.e. does not decode as a pair of logical states.
double leakage_demo(int k1, int k2, const Netlist& coupling, std::uint64_t in1,
                    std::uint64_t in2, const SimulationOptions& options = {});

}  // namespace lopc
