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

// Phase shifters, beam splitters, netlists of them, and the triangular
// decomposition of an N x N unitary into such a netlist.
//
// A netlist applies its elements in order (input to output) and then the
// per-mode final phases, so its transfer matrix is
//   diag(exp(i final_phases)) * E_m * ... * E_2 * E_1.

#include <Eigen/Core>
#include <cstddef>
#include <variant>
#include <vector>

#include "lopc/liftops.hpp"

namespace lopc {

// Multiplies one mode by exp(i phi).
struct PhaseShifter {
  int mode = 0;
  double phi = 0.0;
  friend bool operator==(const PhaseShifter&, const PhaseShifter&) = default;
};

// General lossless two-mode coupler on (first, second), first < second:
//   exp(i phi_0) [[ exp(i phi_tau) cos(theta),  exp(i phi_rho) sin(theta)],
//                 [-exp(-i phi_rho) sin(theta), exp(-i phi_tau) cos(theta)]]
struct BeamSplitter {
  int first = 0;
  int second = 1;
  double theta = 0.0;
  double phi_tau = 0.0;
  double phi_rho = 0.0;
  double phi_0 = 0.0;
  friend bool operator==(const BeamSplitter&, const BeamSplitter&) = default;
};

using OpticalElement = std::variant<PhaseShifter, BeamSplitter>;

// Reduces an angle to (-pi, pi].
double wrap_phase(double angle);

Eigen::Matrix2cd bs_matrix(double theta, double phi_tau, double phi_rho,
                           double phi_0);

// exp(-i gamma Jz) exp(-i beta Jy) exp(-i alpha Jz) with J_k = sigma_k / 2.
Eigen::Matrix2cd euler_su2(double alpha, double beta, double gamma);

// 1x1 block of a phase shifter, 2x2 block of a beam splitter.
ComplexMatrix element_matrix(const OpticalElement& element);

// Modes an element acts on (one or two entries).
std::vector<int> element_modes(const OpticalElement& element);

// Canonical beam-splitter parameters reproducing a 2x2 unitary block:
// theta in [0, pi/2], phi_0 in (-pi/2, pi/2], phases in (-pi, pi], and the
// phase of a vanished cos/sin coefficient set to zero.
BeamSplitter fit_beam_splitter(int first, int second,
                               const Eigen::Matrix2cd& block);

// Identity except for the element's block. Throws InvalidArgument when a
// mode index is outside [0, modes) or a beam splitter's modes are not
// strictly increasing.
ComplexMatrix embed(const OpticalElement& element, int modes);

// True for a beam splitter with theta = pi/2 (full exchange of its modes).
bool is_exchange(const OpticalElement& element, double tol = 1e-12);

class Netlist {
 public:
  // Validates every element against `modes`. An empty `final_phases` means
  // all zeros.
  explicit Netlist(int modes, std::vector<OpticalElement> elements = {},
                   std::vector<double> final_phases = {});

  int modes() const { return modes_; }
  const std::vector<OpticalElement>& elements() const { return elements_; }
  const std::vector<double>& final_phases() const { return final_phases_; }

  std::size_t beam_splitter_count() const;

 private:
  int modes_;
  std::vector<OpticalElement> elements_;
  std::vector<double> final_phases_;
};

ComplexMatrix total_matrix(const Netlist& netlist);

// Every phase shifter in the netlist: explicit PS elements followed by the
// nonzero final phases, which act as output phase shifters.
std::vector<PhaseShifter> phase_shifters(const Netlist& netlist,
                                         double zero_tol = 1e-12);

// Elements plus nonzero final phases: the number of physical components.
std::size_t component_count(const Netlist& netlist, double zero_tol = 1e-12);

struct DecomposeOptions {
  // Input unitarity tolerance; <= 0 selects 1e-10 * N.
  double unitary_tol = -1.0;
  // Maximum off-diagonal magnitude left after elimination; <= 0 selects
  // 1e-9 * N.
  double residual_tol = -1.0;
  // Entries, elements and phases this close to zero/identity are dropped.
  double prune_tol = 1e-12;
};

// Triangular decomposition into at most N(N-1)/2 beam splitters plus final
// phases. Row r (top to bottom) is reduced to its diagonal entry by mixing
// column r with each column c > r, rightmost first; each mixing step is one
// beam splitter on modes (r, c). The leftover diagonal phases are absorbed
// into the last beam splitter touching each mode, so only modes no beam
// splitter touches keep a final phase.
//
// Throws ToleranceError if U is not unitary within options.unitary_tol or
// the residual is not diagonal within options.residual_tol.
Netlist reck_decompose(const ComplexMatrix& u,
                       const DecomposeOptions& options = {});

}  // namespace lopc
