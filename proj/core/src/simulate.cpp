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

#include "lopc/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "lopc/errors.hpp"
#include "lopc/liftops.hpp"

namespace lopc {

namespace {

void check_input(const Netlist& netlist, const StateVector& input,
                 const SimulationOptions& options) {
  const FockBasis& basis = input.basis();
  if (basis.modes() != netlist.modes()) {
    throw InvalidArgument("input spans " + std::to_string(basis.modes()) +
                          " modes, netlist has " +
                          std::to_string(netlist.modes()));
  }
  if (basis.photons() > options.photon_cap) {
    throw CapExceeded("input carries " + std::to_string(basis.photons()) +
                      " photons, cap is " +
                      std::to_string(options.photon_cap));
  }
  if (basis.size() > options.dim_cap) {
    throw CapExceeded("subspace dimension " + std::to_string(basis.size()) +
                      " exceeds cap " + std::to_string(options.dim_cap));
  }
}

SimulationResult finish(const StateVector& input, Eigen::VectorXcd amps) {
  const double in_norm = input.norm_squared();
  const double out_norm = amps.squaredNorm();
  if (std::abs(out_norm - in_norm) > 1e-9) {
    throw ToleranceError("propagation changed the norm from " +
                         std::to_string(in_norm) + " to " +
                         std::to_string(out_norm));
  }
  std::vector<double> probs(static_cast<std::size_t>(amps.size()));
  for (Eigen::Index i = 0; i < amps.size(); ++i) {
    probs[static_cast<std::size_t>(i)] = std::norm(amps(i));
  }
  return {StateVector(input.basis(), std::move(amps)), std::move(probs)};
}

}  // namespace

SimulationResult run(const Netlist& netlist, const StateVector& input,
                     Direction direction, const SimulationOptions& options) {
  check_input(netlist, input, options);
  ComplexMatrix m = total_matrix(netlist);
  if (direction == Direction::Adjoint) m.adjointInPlace();
  LiftOptions lift_options;
  lift_options.dim_cap = options.dim_cap;
  const LiftedOperator lifted =
      lift_unitary(m, input.basis().photons(), lift_options);
  return finish(input, lifted.matrix * input.amplitudes());
}

SimulationResult run(const Netlist& netlist, const OccupationVector& input,
                     Direction direction, const SimulationOptions& options) {
  if (static_cast<int>(input.modes()) != netlist.modes()) {
    throw InvalidArgument("input " + input.to_string() + " spans " +
                          std::to_string(input.modes()) +
                          " modes, netlist has " +
                          std::to_string(netlist.modes()));
  }
  if (input.total() > options.photon_cap) {
    throw CapExceeded("input carries " + std::to_string(input.total()) +
                      " photons, cap is " +
                      std::to_string(options.photon_cap));
  }
  if (dimension(netlist.modes(), input.total()) > options.dim_cap) {
    throw CapExceeded("subspace dimension exceeds cap " +
                      std::to_string(options.dim_cap));
  }
  FockBasis basis(netlist.modes(), input.total());
  return run(netlist, StateVector::basis_state(std::move(basis), input),
             direction, options);
}

SimulationResult run_elementwise(const Netlist& netlist,
                                 const StateVector& input, Direction direction,
                                 const SimulationOptions& options) {
  check_input(netlist, input, options);
  const int n = input.basis().photons();
  const int modes = netlist.modes();
  LiftOptions lift_options;
  lift_options.dim_cap = options.dim_cap;

  std::vector<ComplexMatrix> stages;
  for (const auto& e : netlist.elements()) stages.push_back(embed(e, modes));
  ComplexMatrix phases = ComplexMatrix::Identity(modes, modes);
  for (int k = 0; k < modes; ++k) {
    phases(k, k) =
        std::polar(1.0, netlist.final_phases()[static_cast<std::size_t>(k)]);
  }
  stages.push_back(std::move(phases));
  if (direction == Direction::Adjoint) {
    std::reverse(stages.begin(), stages.end());
    for (auto& s : stages) s.adjointInPlace();
  }

  Eigen::VectorXcd amps = input.amplitudes();
  for (const auto& s : stages) {
    amps = lift_unitary(s, n, lift_options).matrix * amps;
  }
  return finish(input, std::move(amps));
}

SimulationResult run_logical(const LogicalCircuit& circuit,
                             std::uint64_t logical_in,
                             const SimulationOptions& options,
                             const CompileOptions& compile_options) {
  const OccupationVector input = spmq_encode(logical_in, circuit.qubits());
  return run(compile(circuit, compile_options), input, Direction::Forward,
             options);
}

double leakage_demo(int k1, int k2, const Netlist& coupling, std::uint64_t in1,
                    std::uint64_t in2, const SimulationOptions& options) {
  if (k1 < 1 || k2 < 1 || k1 > 16 || k2 > 16) {
    throw InvalidArgument("leakage_demo: register sizes must be in [1, 16]");
  }
  const int n1 = 1 << k1;
  const int n2 = 1 << k2;
  if (coupling.modes() != n1 + n2) {
    throw InvalidArgument("leakage_demo: coupling spans " +
                          std::to_string(coupling.modes()) +
                          " modes, registers need " +
                          std::to_string(n1 + n2));
  }
  if (in1 >= static_cast<std::uint64_t>(n1) ||
      in2 >= static_cast<std::uint64_t>(n2)) {
    throw InvalidArgument("leakage_demo: logical input out of range");
  }
  std::vector<int> occ(static_cast<std::size_t>(n1 + n2), 0);
  occ[in1] = 1;
  occ[static_cast<std::size_t>(n1) + in2] = 1;
  const SimulationResult result =
      run(coupling, OccupationVector(std::move(occ)), Direction::Forward,
          options);

  double leaked = 0.0;
  for (std::size_t i = 0; i < result.basis().size(); ++i) {
    const OccupationVector& out = result.basis()[i];
    int first = 0;
    for (int m = 0; m < n1; ++m) first += out[static_cast<std::size_t>(m)];
    if (first != 1) leaked += result.probabilities[i];
  }
  return leaked;
}

}  // namespace lopc
