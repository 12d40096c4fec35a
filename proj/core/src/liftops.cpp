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

#include "lopc/liftops.hpp"

#include <Eigen/Eigenvalues>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "lopc/errors.hpp"

namespace lopc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw InvalidArgument(std::string(what) + ": expected a nonempty square "
                          "matrix, got " + std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()));
  }
}

}  // namespace

double unitarity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return kInf;
  if (m.size() == 0) return 0.0;
  const ComplexMatrix d =
      m * m.adjoint() - ComplexMatrix::Identity(m.rows(), m.cols());
  return d.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return kInf;
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return kInf;
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  return unitarity_defect(m) <= tol;
}

ComplexMatrix js_generator(const ComplexMatrix& generator,
                           const FockBasis& basis, double hermitian_tol) {
  require_square(generator, "js_generator");
  const int modes = basis.modes();
  if (generator.rows() != modes) {
    throw InvalidArgument("js_generator: generator is " +
                          std::to_string(generator.rows()) + "x" +
                          std::to_string(generator.cols()) +
                          " but the basis has " + std::to_string(modes) +
                          " modes");
  }
  if (hermiticity_defect(generator) > hermitian_tol) {
    throw InvalidArgument("js_generator: generator is not Hermitian");
  }

  const auto dim = static_cast<Eigen::Index>(basis.size());
  ComplexMatrix q = ComplexMatrix::Zero(dim, dim);
  std::vector<int> work(static_cast<std::size_t>(modes));
  for (Eigen::Index col = 0; col < dim; ++col) {
    const OccupationVector& state = basis[static_cast<std::size_t>(col)];
    for (int i = 0; i < modes; ++i) {
      q(col, col) += generator(i, i) * static_cast<double>(state[i]);
    }
    // a_i^dag a_j |..n_i..n_j..> = sqrt(n_j (n_i + 1)) |..n_i+1..n_j-1..>
    for (int j = 0; j < modes; ++j) {
      if (state[j] == 0) continue;
      for (int i = 0; i < modes; ++i) {
        if (i == j || generator(i, j) == Complex(0.0)) continue;
        auto occ = state.occupations();
        work.assign(occ.begin(), occ.end());
        const double factor = std::sqrt(static_cast<double>(work[j]) *
                                        static_cast<double>(work[i] + 1));
        --work[j];
        ++work[i];
        const auto row = static_cast<Eigen::Index>(
            basis.index_of(OccupationVector(work)));
        q(row, col) += generator(i, j) * factor;
      }
    }
  }
  return q;
}

ComplexMatrix log_unitary(const ComplexMatrix& u, double tol) {
  require_square(u, "log_unitary");
  if (tol <= 0.0) tol = default_unitary_tolerance(u.rows());
  const double defect = unitarity_defect(u);
  if (!(defect <= tol)) {
    throw ToleranceError("log_unitary: unitarity defect " +
                         std::to_string(defect) + " exceeds tolerance " +
                         std::to_string(tol));
  }
  // A unitary matrix is normal, so its Schur form is diagonal up to rounding
  // and the Schur vectors are an orthonormal eigenbasis, degenerate or not.
  Eigen::ComplexSchur<ComplexMatrix> schur(u);
  const ComplexMatrix& t = schur.matrixT();
  const ComplexMatrix& z = schur.matrixU();
  Eigen::VectorXd phases(u.rows());
  for (Eigen::Index k = 0; k < u.rows(); ++k) {
    double phi = std::arg(t(k, k));
    if (phi <= -std::numbers::pi) phi += 2.0 * std::numbers::pi;
    phases(k) = phi;
  }
  ComplexMatrix j = z * phases.cast<Complex>().asDiagonal() * z.adjoint();
  return (0.5 * (j + j.adjoint())).eval();
}

ComplexMatrix exp_i_hermitian(const ComplexMatrix& h) {
  require_square(h, "exp_i_hermitian");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(h);
  if (eig.info() != Eigen::Success) {
    throw ToleranceError("exp_i_hermitian: eigendecomposition failed");
  }
  const Eigen::VectorXd& lambda = eig.eigenvalues();
  Eigen::VectorXcd phases(lambda.size());
  for (Eigen::Index k = 0; k < lambda.size(); ++k) {
    phases(k) = std::polar(1.0, lambda(k));
  }
  const ComplexMatrix& v = eig.eigenvectors();
  return v * phases.asDiagonal() * v.adjoint();
}

LiftedOperator lift_generator(const ComplexMatrix& generator, int photons,
                              const LiftOptions& options) {
  require_square(generator, "lift_generator");
  const int modes = static_cast<int>(generator.rows());
  if (photons < 0) throw InvalidArgument("lift: photon number must be >= 0");
  const std::uint64_t dim = dimension(modes, photons);
  if (dim > options.dim_cap) {
    throw CapExceeded("lift: subspace dimension " + std::to_string(dim) +
                      " exceeds cap " + std::to_string(options.dim_cap));
  }
  FockBasis basis(modes, photons);
  if (photons == 0) {
    // The vacuum is fixed by every lift.
    return {std::move(basis), ComplexMatrix::Identity(1, 1)};
  }
  ComplexMatrix lifted = exp_i_hermitian(js_generator(generator, basis));
  const double defect = unitarity_defect(lifted);
  if (defect > 1e-9 * static_cast<double>(dim)) {
    throw ToleranceError("lift: lifted operator lost unitarity (defect " +
                         std::to_string(defect) + ")");
  }
  return {std::move(basis), std::move(lifted)};
}

LiftedOperator lift_unitary(const ComplexMatrix& u, int photons,
                            const LiftOptions& options) {
  require_square(u, "lift_unitary");
  if (photons < 0) throw InvalidArgument("lift: photon number must be >= 0");
  // Check the cap before paying for the logarithm.
  const std::uint64_t dim = dimension(static_cast<int>(u.rows()), photons);
  if (dim > options.dim_cap) {
    throw CapExceeded("lift: subspace dimension " + std::to_string(dim) +
                      " exceeds cap " + std::to_string(options.dim_cap));
  }
  return lift_generator(log_unitary(u, options.unitary_tol), photons, options);
}

Complex permanent(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw InvalidArgument("permanent: matrix must be square");
  }
  const int n = static_cast<int>(m.rows());
  if (n == 0) return 1.0;
  if (n > 30) throw CapExceeded("permanent: n > 30 is out of reach");

  // per(A) = (-1)^n sum_{S subset of columns} (-1)^|S| prod_i sum_{j in S} A_ij
  // Subsets are visited in Gray-code order so each step adds or removes one
  // column from the running row sums.
  std::vector<Complex> row_sums(static_cast<std::size_t>(n), Complex(0.0));
  Complex total(0.0);
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::uint64_t gray = 0;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const int flipped = std::countr_zero(k);
    const std::uint64_t next = k ^ (k >> 1);
    const double sign_col = (next & (std::uint64_t{1} << flipped)) ? 1.0 : -1.0;
    gray = next;
    Complex prod(1.0);
    for (int i = 0; i < n; ++i) {
      row_sums[static_cast<std::size_t>(i)] += sign_col * m(i, flipped);
      prod *= row_sums[static_cast<std::size_t>(i)];
    }
    const int size = std::popcount(gray);
    total += (size % 2 == 0) ? prod : -prod;
  }
  return (n % 2 == 0) ? total : -total;
}

Complex permanent_amplitude(const ComplexMatrix& u, const OccupationVector& out,
                            const OccupationVector& in) {
  require_square(u, "permanent_amplitude");
  const auto modes = static_cast<std::size_t>(u.rows());
  if (out.modes() != modes || in.modes() != modes) {
    throw InvalidArgument("permanent_amplitude: occupation vectors must have " +
                          std::to_string(modes) + " modes");
  }
  const int n = in.total();
  if (out.total() != n) {
    throw InvalidArgument("permanent_amplitude: photon numbers differ (" +
                          std::to_string(out.total()) + " vs " +
                          std::to_string(n) + ")");
  }
  if (n > 12) {
    throw CapExceeded("permanent_amplitude: oracle limited to 12 photons");
  }

  std::vector<int> rows;
  std::vector<int> cols;
  double norm = 1.0;
  for (std::size_t i = 0; i < modes; ++i) {
    for (int k = 0; k < out[i]; ++k) rows.push_back(static_cast<int>(i));
    for (int k = 0; k < in[i]; ++k) cols.push_back(static_cast<int>(i));
    norm *= std::tgamma(out[i] + 1.0) * std::tgamma(in[i] + 1.0);
  }
  ComplexMatrix sub(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      sub(r, c) = u(rows[static_cast<std::size_t>(r)],
                    cols[static_cast<std::size_t>(c)]);
    }
  }
  return permanent(sub) / std::sqrt(norm);
}

Eigen::Matrix2cd pauli(int k) {
  using namespace std::complex_literals;
  Eigen::Matrix2cd s;
  switch (k) {
    case 1:
      s << 0.0, 1.0, 1.0, 0.0;
      break;
    case 2:
      s << 0.0, -1.0i, 1.0i, 0.0;
      break;
    case 3:
      s << 1.0, 0.0, 0.0, -1.0;
      break;
    default:
      throw InvalidArgument("pauli: index must be 1, 2 or 3");
  }
  return s;
}

Su2Generators su2_fixtures(int photons) {
  if (photons < 0) throw InvalidArgument("su2_fixtures: photons must be >= 0");
  FockBasis basis(2, photons);
  const ComplexMatrix half1 = 0.5 * pauli(1);
  const ComplexMatrix half2 = 0.5 * pauli(2);
  const ComplexMatrix half3 = 0.5 * pauli(3);
  return {js_generator(half1, basis), js_generator(half2, basis),
          js_generator(half3, basis),
          js_generator(ComplexMatrix::Identity(2, 2), basis)};
}

}  // namespace lopc
