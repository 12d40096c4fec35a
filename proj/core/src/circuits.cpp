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

#include "lopc/circuits.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "lopc/errors.hpp"

namespace lopc {

namespace {

constexpr std::array<std::pair<GateKind, std::string_view>, 11> kGateNames{{
    {GateKind::H, "h"},
    {GateKind::X, "x"},
    {GateKind::Y, "y"},
    {GateKind::Z, "z"},
    {GateKind::S, "s"},
    {GateKind::T, "t"},
    {GateKind::Phase, "phase"},
    {GateKind::CNOT, "cnot"},
    {GateKind::CPhase, "cphase"},
    {GateKind::Swap, "swap"},
    {GateKind::Custom, "custom"},
}};

int fixed_arity(GateKind kind) {
  switch (kind) {
    case GateKind::CNOT:
    case GateKind::CPhase:
    case GateKind::Swap:
      return 2;
    case GateKind::Custom:
      return -1;
    default:
      return 1;
  }
}

// Left-multiplies `m` by `g` acting on `targets` of a `qubits`-qubit register.
void apply_gate(const ComplexMatrix& g, const std::vector<int>& targets,
                int qubits, ComplexMatrix& m) {
  const int arity = static_cast<int>(targets.size());
  const std::uint64_t local_dim = std::uint64_t{1} << arity;
  const std::uint64_t dim = std::uint64_t{1} << qubits;
  std::uint64_t target_mask = 0;
  std::vector<std::uint64_t> offsets(local_dim, 0);
  for (std::uint64_t l = 0; l < local_dim; ++l) {
    for (int t = 0; t < arity; ++t) {
      if ((l >> (arity - 1 - t)) & 1U) {
        offsets[l] |= std::uint64_t{1} << (qubits - 1 - targets[t]);
      }
    }
  }
  for (int t = 0; t < arity; ++t) {
    target_mask |= std::uint64_t{1} << (qubits - 1 - targets[t]);
  }

  std::vector<Eigen::Index> rows(local_dim);
  Eigen::VectorXcd scratch(static_cast<Eigen::Index>(local_dim));
  for (std::uint64_t base = 0; base < dim; ++base) {
    if (base & target_mask) continue;
    for (std::uint64_t l = 0; l < local_dim; ++l) {
      rows[l] = static_cast<Eigen::Index>(base | offsets[l]);
    }
    for (Eigen::Index col = 0; col < m.cols(); ++col) {
      for (std::uint64_t l = 0; l < local_dim; ++l) {
        Complex acc(0.0);
        for (std::uint64_t k = 0; k < local_dim; ++k) {
          acc += g(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(k)) *
                 m(rows[k], col);
        }
        scratch(static_cast<Eigen::Index>(l)) = acc;
      }
      for (std::uint64_t l = 0; l < local_dim; ++l) {
        m(rows[l], col) = scratch(static_cast<Eigen::Index>(l));
      }
    }
  }
}

}  // namespace

std::string_view gate_name(GateKind kind) {
  for (const auto& [k, name] : kGateNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](char c) {
    return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  });
  for (const auto& [k, n] : kGateNames) {
    if (n == lower) return k;
  }
  return std::nullopt;
}

Gate::Gate(GateKind kind, std::vector<int> targets, double phi,
           ComplexMatrix matrix)
    : kind_(kind),
      targets_(std::move(targets)),
      phi_(phi),
      matrix_(std::move(matrix)) {
  const std::string name(gate_name(kind_));
  if (targets_.empty()) throw InvalidArgument(name + ": no targets");
  const int expected = fixed_arity(kind_);
  if (expected > 0 && arity() != expected) {
    throw InvalidArgument(name + ": expects " + std::to_string(expected) +
                          " target(s), got " + std::to_string(arity()));
  }
  for (std::size_t i = 0; i < targets_.size(); ++i) {
    if (targets_[i] < 0) throw InvalidArgument(name + ": negative target");
    for (std::size_t j = 0; j < i; ++j) {
      if (targets_[i] == targets_[j]) {
        throw InvalidArgument(name + ": targets must be distinct");
      }
    }
  }
  if (!std::isfinite(phi_)) throw InvalidArgument(name + ": phi not finite");
  if (kind_ == GateKind::Custom) {
    if (arity() > 12) throw InvalidArgument("custom: too many targets");
    const Eigen::Index size = Eigen::Index{1} << arity();
    if (matrix_.rows() != size || matrix_.cols() != size) {
      throw InvalidArgument("custom: matrix must be " + std::to_string(size) +
                            "x" + std::to_string(size) + " for " +
                            std::to_string(arity()) + " target(s)");
    }
    if (unitarity_defect(matrix_) > 1e-10) {
      throw InvalidArgument("custom: matrix is not unitary within 1e-10");
    }
  } else if (matrix_.size() != 0) {
    throw InvalidArgument(name + ": only custom gates carry a matrix");
  }
}

ComplexMatrix gate_matrix(const Gate& gate) {
  using namespace std::complex_literals;
  const double r = 1.0 / std::numbers::sqrt2;
  ComplexMatrix m;
  switch (gate.kind()) {
    case GateKind::H:
      m.resize(2, 2);
      m << r, r, r, -r;
      break;
    case GateKind::X:
      m = pauli(1);
      break;
    case GateKind::Y:
      m = pauli(2);
      break;
    case GateKind::Z:
      m = pauli(3);
      break;
    case GateKind::S:
      m.resize(2, 2);
      m << 1.0, 0.0, 0.0, 1.0i;
      break;
    case GateKind::T:
      m.resize(2, 2);
      m << 1.0, 0.0, 0.0, std::polar(1.0, std::numbers::pi / 4.0);
      break;
    case GateKind::Phase:
      m.resize(2, 2);
      m << 1.0, 0.0, 0.0, std::polar(1.0, gate.phi());
      break;
    case GateKind::CNOT:
      m = ComplexMatrix::Zero(4, 4);
      m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
      break;
    case GateKind::CPhase:
      m = ComplexMatrix::Identity(4, 4);
      m(3, 3) = std::polar(1.0, -gate.phi());
      break;
    case GateKind::Swap:
      m = ComplexMatrix::Zero(4, 4);
      m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1.0;
      break;
    case GateKind::Custom:
      m = gate.custom_matrix();
      break;
  }
  return m;
}

LogicalCircuit::LogicalCircuit(int qubits, std::vector<Gate> gates)
    : qubits_(qubits) {
  if (qubits_ < 1) throw InvalidArgument("circuit needs at least one qubit");
  for (auto& g : gates) add(std::move(g));
}

LogicalCircuit& LogicalCircuit::add(Gate gate) {
  for (int t : gate.targets()) {
    if (t >= qubits_) {
      throw InvalidArgument(std::string(gate_name(gate.kind())) +
                            ": target " + std::to_string(t) +
                            " outside a " + std::to_string(qubits_) +
                            "-qubit circuit");
    }
  }
  gates_.push_back(std::move(gate));
  return *this;
}

ComplexMatrix circuit_matrix(const LogicalCircuit& circuit,
                             const CircuitOptions& options) {
  const int k = circuit.qubits();
  if (k > options.max_qubits || k > 30) {
    throw CapExceeded("circuit has " + std::to_string(k) +
                      " qubits, cap is " + std::to_string(options.max_qubits));
  }
  const Eigen::Index dim = Eigen::Index{1} << k;
  ComplexMatrix m = ComplexMatrix::Identity(dim, dim);
  for (const Gate& g : circuit.gates()) {
    apply_gate(gate_matrix(g), g.targets(), k, m);
  }
  return m;
}

OccupationVector spmq_encode(std::uint64_t index, int qubits) {
  if (qubits < 1 || qubits > 24) {
    throw InvalidArgument("spmq_encode: qubits must be in [1, 24]");
  }
  const std::uint64_t modes = std::uint64_t{1} << qubits;
  if (index >= modes) {
    throw InvalidArgument("spmq_encode: index " + std::to_string(index) +
                          " out of range for " + std::to_string(qubits) +
                          " qubit(s)");
  }
  std::vector<int> occ(modes, 0);
  occ[index] = 1;
  return OccupationVector(std::move(occ));
}

std::uint64_t spmq_decode(const OccupationVector& v) {
  if (!std::has_single_bit(v.modes()) || v.modes() < 2) {
    throw NotEncoding("state " + v.to_string() + " spans " +
                      std::to_string(v.modes()) +
                      " modes, not a power of two >= 2");
  }
  if (v.total() != 1) {
    throw NotEncoding("state " + v.to_string() + " carries " +
                      std::to_string(v.total()) +
                      " photons and encodes no logical state");
  }
  for (std::size_t i = 0; i < v.modes(); ++i) {
    if (v[i] == 1) return i;
  }
  return 0;  // unreachable: total() == 1
}

std::string binary_label(std::uint64_t index, int qubits) {
  std::string out;
  for (int q = 0; q < qubits; ++q) {
    out += ((index >> (qubits - 1 - q)) & 1U) ? '1' : '0';
  }
  return out;
}

Netlist compile(const LogicalCircuit& circuit, const CompileOptions& options) {
  const ComplexMatrix u = circuit_matrix(circuit, options.circuit);
  Netlist netlist = reck_decompose(u, options.decompose);
  const double err = max_abs_diff(total_matrix(netlist), u);
  const double tol = 1e-9 * static_cast<double>(u.rows());
  if (!(err <= tol)) {
    throw ToleranceError("compile: reconstruction error " +
                         std::to_string(err) + " exceeds " +
                         std::to_string(tol));
  }
  return netlist;
}

}  // namespace lopc
