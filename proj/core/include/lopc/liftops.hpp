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

// Mode-space unitaries and their action on n-photon Fock subspaces.
//
// A passive linear-optical device is described by an N x N unitary U acting
// on the mode operators, b_i = sum_j U_ij a_j. Its action on Fock states is
// obtained by writing U = exp(iJ) with J Hermitian, mapping J to the
// number-conserving operator Q = sum_ij J_ij a_i^dag a_j, and exponentiating
// exp(iQ) on each fixed-photon-number subspace. The result does not depend on
// which logarithm J is picked, fixes the vacuum, and reproduces U itself on
// the one-photon subspace.
//
// permanent_amplitude() computes the same matrix elements by an unrelated
// route (permanents of repeated-row/column submatrices) and is used as an
// oracle in tests.

#include <Eigen/Core>
#include <complex>
#include <cstdint>

#include "lopc/fock.hpp"

namespace lopc {

using ComplexMatrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

// max_ij |(M M^dag - I)_ij|; infinity for non-square input.
double unitarity_defect(const ComplexMatrix& m);
// max_ij |M_ij - conj(M_ji)|; infinity for non-square input.
double hermiticity_defect(const ComplexMatrix& m);
// max_ij |A_ij - B_ij|; infinity on shape mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// The library-wide default: a matrix counts as unitary when its defect is at
// most 1e-10 per row.
inline double default_unitary_tolerance(Eigen::Index rows) {
  return 1e-10 * static_cast<double>(rows);
}
bool is_unitary(const ComplexMatrix& m, double tol);

// Matrix of sum_ij J_ij a_i^dag a_j on `basis`.
// Throws InvalidArgument if J is not N x N Hermitian (within hermitian_tol)
// with N = basis.modes().
ComplexMatrix js_generator(const ComplexMatrix& generator,
                           const FockBasis& basis,
                           double hermitian_tol = 1e-10);

// Hermitian J with exp(iJ) = U, eigenphases in the principal branch
// (-pi, pi]. Throws ToleranceError if U's unitarity defect exceeds `tol`
// (default: default_unitary_tolerance).
ComplexMatrix log_unitary(const ComplexMatrix& u, double tol = -1.0);

// exp(iH) for Hermitian H, through its eigendecomposition.
ComplexMatrix exp_i_hermitian(const ComplexMatrix& h);

struct LiftOptions {
  std::uint64_t dim_cap = 20000;
  // Unitarity tolerance for the input; <= 0 selects the default.
  double unitary_tol = -1.0;
};

// The restriction of a lifted unitary to one n-photon subspace.
struct LiftedOperator {
  FockBasis basis;
  ComplexMatrix matrix;
};

// exp(i JS(log U)) on the `photons`-photon subspace over U.rows() modes.
// Throws CapExceeded when the subspace dimension is over options.dim_cap.
LiftedOperator lift_unitary(const ComplexMatrix& u, int photons,
                            const LiftOptions& options = {});

// exp(i JS(J)) for an explicitly chosen Hermitian logarithm J. Any two
// logarithms of the same unitary give the same lift.
LiftedOperator lift_generator(const ComplexMatrix& generator, int photons,
                              const LiftOptions& options = {});

// Permanent by Ryser's formula, Gray-code ordered: O(2^n n).
// Throws CapExceeded for n > 30. The permanent of a 0 x 0 matrix is 1.
Complex permanent(const ComplexMatrix& m);

// <out| U |in> = per(U[out|in]) / sqrt(prod out_i! prod in_j!), where
// U[out|in] repeats row i out_i times and column j in_j times.
// Throws InvalidArgument on mismatched lengths or totals and CapExceeded for
// more than 12 photons.
Complex permanent_amplitude(const ComplexMatrix& u, const OccupationVector& out,
                            const OccupationVector& in);

// Bosonic su(2) plus the number operator on the two-mode n-photon subspace:
// J_k = JS(sigma_k / 2), number = JS(Id).
struct Su2Generators {
  ComplexMatrix j1;
  ComplexMatrix j2;
  ComplexMatrix j3;
  ComplexMatrix number;
};
Su2Generators su2_fixtures(int photons);

// Pauli matrices (standard convention, sigma_2 = [[0, -i], [i, 0]]).
Eigen::Matrix2cd pauli(int k);

}  // namespace lopc
