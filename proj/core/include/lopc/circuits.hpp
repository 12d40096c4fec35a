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

// Logical circuits, their computational-basis matrices, the single-photon
// multi-qubit (SPMQ) encoding, and compilation to optical netlists.
//
// Under SPMQ a k-qubit basis state |i> is one photon in mode i of 2^k modes,
// so a circuit's 2^k x 2^k matrix is directly the mode transfer matrix of the
// optical network that implements it. Qubit 0 is the most significant bit of
// the basis index: for k = 2, |10> is index 2 and mode 2.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lopc/fock.hpp"
#include "lopc/liftops.hpp"
#include "lopc/mesh.hpp"

namespace lopc {

enum class GateKind { H, X, Y, Z, S, T, Phase, CNOT, CPhase, Swap, Custom };

// Lowercase JSON name ("h", "cnot", "cphase", ...).
std::string_view gate_name(GateKind kind);
// Case-insensitive inverse of gate_name.
std::optional<GateKind> gate_kind_from_name(std::string_view name);

class Gate {
 public:
  // Validates arity, distinct nonnegative targets, and (for Custom) that the
  // matrix is a 2^arity square unitary within 1e-10. Throws InvalidArgument.
  Gate(GateKind kind, std::vector<int> targets, double phi = 0.0,
       ComplexMatrix matrix = {});

  static Gate h(int q) { return Gate(GateKind::H, {q}); }
  static Gate x(int q) { return Gate(GateKind::X, {q}); }
  static Gate y(int q) { return Gate(GateKind::Y, {q}); }
  static Gate z(int q) { return Gate(GateKind::Z, {q}); }
  static Gate s(int q) { return Gate(GateKind::S, {q}); }
  static Gate t(int q) { return Gate(GateKind::T, {q}); }
  static Gate phase(int q, double phi) {
    return Gate(GateKind::Phase, {q}, phi);
  }
  static Gate cnot(int control, int target) {
    return Gate(GateKind::CNOT, {control, target});
  }
  static Gate cphase(int a, int b, double phi) {
    return Gate(GateKind::CPhase, {a, b}, phi);
  }
  static Gate swap(int a, int b) { return Gate(GateKind::Swap, {a, b}); }
  static Gate custom(std::vector<int> targets, ComplexMatrix matrix) {
    return Gate(GateKind::Custom, std::move(targets), 0.0, std::move(matrix));
  }

  GateKind kind() const { return kind_; }
  const std::vector<int>& targets() const { return targets_; }
  int arity() const { return static_cast<int>(targets_.size()); }
  double phi() const { return phi_; }
  const ComplexMatrix& custom_matrix() const { return matrix_; }

 private:
  GateKind kind_;
  std::vector<int> targets_;
  double phi_;
  ComplexMatrix matrix_;
};

// The gate's own 2^arity unitary, first target = most significant bit.
// PHASE(phi) = diag(1, e^{i phi}); CPHASE(phi) = diag(1, 1, 1, e^{-i phi}).
ComplexMatrix gate_matrix(const Gate& gate);

class LogicalCircuit {
 public:
  // Throws InvalidArgument for qubits < 1 or a gate target >= qubits.
  explicit LogicalCircuit(int qubits, std::vector<Gate> gates = {});

  LogicalCircuit& add(Gate gate);

  int qubits() const { return qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }

 private:
  int qubits_;
  std::vector<Gate> gates_;
};

struct CircuitOptions {
  int max_qubits = 12;
};

// Product G_m ... G_1 of the gates embedded on their targets. Throws
// CapExceeded when the circuit has more than options.max_qubits qubits.
ComplexMatrix circuit_matrix(const LogicalCircuit& circuit,
                             const CircuitOptions& options = {});

// One photon in mode `index` of 2^qubits modes. Throws InvalidArgument when
// index >= 2^qubits or qubits is outside [1, 24].
OccupationVector spmq_encode(std::uint64_t index, int qubits);

// Mode of the single photon. Throws NotEncoding when the total photon number
// is not 1 or the mode count is not a power of two.
std::uint64_t spmq_decode(const OccupationVector& v);

// Binary form of a logical basis index, qubit 0 first ("10" for index 2).
std::string binary_label(std::uint64_t index, int qubits);

struct CompileOptions {
  CircuitOptions circuit;
  DecomposeOptions decompose;
};

// reck_decompose(circuit_matrix(c)) over 2^k modes. Throws ToleranceError
// if the netlist does not reproduce the circuit within 1e-9 * 2^k.
Netlist compile(const LogicalCircuit& circuit,
                const CompileOptions& options = {});

}  // namespace lopc
