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

#include "lopc/mesh.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <utility>

#include "lopc/errors.hpp"

namespace lopc {

namespace {

constexpr double kPi = std::numbers::pi;

struct ModesVisitor {
  std::vector<int> operator()(const PhaseShifter& ps) const {
    return {ps.mode};
  }
  std::vector<int> operator()(const BeamSplitter& bs) const {
    return {bs.first, bs.second};
  }
};

void validate_element(const OpticalElement& element, int modes) {
  if (const auto* ps = std::get_if<PhaseShifter>(&element)) {
    if (ps->mode < 0 || ps->mode >= modes) {
      throw InvalidArgument("phase shifter mode " + std::to_string(ps->mode) +
                            " outside [0, " + std::to_string(modes) + ")");
    }
    if (!std::isfinite(ps->phi)) {
      throw InvalidArgument("phase shifter angle must be finite");
    }
    return;
  }
  const auto& bs = std::get<BeamSplitter>(element);
  if (bs.first < 0 || bs.second >= modes || bs.first >= bs.second) {
    throw InvalidArgument("beam splitter modes (" + std::to_string(bs.first) +
                          ", " + std::to_string(bs.second) +
                          ") must satisfy 0 <= first < second < " +
                          std::to_string(modes));
  }
  if (!std::isfinite(bs.theta) || !std::isfinite(bs.phi_tau) ||
      !std::isfinite(bs.phi_rho) || !std::isfinite(bs.phi_0)) {
    throw InvalidArgument("beam splitter angles must be finite");
  }
}

// Left-multiplies rows of `m` by the element's block.
void apply_rows(const OpticalElement& element, ComplexMatrix& m) {
  if (const auto* ps = std::get_if<PhaseShifter>(&element)) {
    m.row(ps->mode) *= std::polar(1.0, ps->phi);
    return;
  }
  const auto& bs = std::get<BeamSplitter>(element);
  const Eigen::Matrix2cd b =
      bs_matrix(bs.theta, bs.phi_tau, bs.phi_rho, bs.phi_0);
  const Eigen::RowVectorXcd top = m.row(bs.first);
  const Eigen::RowVectorXcd bottom = m.row(bs.second);
  m.row(bs.first) = b(0, 0) * top + b(0, 1) * bottom;
  m.row(bs.second) = b(1, 0) * top + b(1, 1) * bottom;
}

}  // namespace

double wrap_phase(double angle) {
  double r = std::remainder(angle, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

Eigen::Matrix2cd bs_matrix(double theta, double phi_tau, double phi_rho,
                           double phi_0) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Eigen::Matrix2cd b;
  b << std::polar(c, phi_tau), std::polar(s, phi_rho),
      -std::polar(s, -phi_rho), std::polar(c, -phi_tau);
  return std::polar(1.0, phi_0) * b;
}

Eigen::Matrix2cd euler_su2(double alpha, double beta, double gamma) {
  auto rz = [](double angle) {
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    m(0, 0) = std::polar(1.0, -angle / 2.0);
    m(1, 1) = std::polar(1.0, angle / 2.0);
    return m;
  };
  Eigen::Matrix2cd ry;
  const double c = std::cos(beta / 2.0);
  const double s = std::sin(beta / 2.0);
  ry << c, -s, s, c;
  return rz(gamma) * ry * rz(alpha);
}

ComplexMatrix element_matrix(const OpticalElement& element) {
  if (const auto* ps = std::get_if<PhaseShifter>(&element)) {
    ComplexMatrix m(1, 1);
    m(0, 0) = std::polar(1.0, ps->phi);
    return m;
  }
  const auto& bs = std::get<BeamSplitter>(element);
  return bs_matrix(bs.theta, bs.phi_tau, bs.phi_rho, bs.phi_0);
}

std::vector<int> element_modes(const OpticalElement& element) {
  return std::visit(ModesVisitor{}, element);
}

BeamSplitter fit_beam_splitter(int first, int second,
                               const Eigen::Matrix2cd& block) {
  // Below this magnitude a cos/sin coefficient counts as vanished and its
  // phase is set to zero.
  constexpr double kVanished = 1e-12;
  const Complex det = block(0, 0) * block(1, 1) - block(0, 1) * block(1, 0);
  BeamSplitter bs;
  bs.first = first;
  bs.second = second;
  bs.phi_0 = wrap_phase(std::arg(det)) / 2.0;
  const Eigen::Matrix2cd special = block * std::polar(1.0, -bs.phi_0);
  const double c = std::abs(special(0, 0));
  const double s = std::abs(special(0, 1));
  bs.theta = std::atan2(s, c);
  bs.phi_tau = c > kVanished ? wrap_phase(std::arg(special(0, 0))) : 0.0;
  bs.phi_rho = s > kVanished ? wrap_phase(std::arg(special(0, 1))) : 0.0;
  return bs;
}

ComplexMatrix embed(const OpticalElement& element, int modes) {
  if (modes < 1) throw InvalidArgument("embed: modes must be >= 1");
  validate_element(element, modes);
  ComplexMatrix m = ComplexMatrix::Identity(modes, modes);
  apply_rows(element, m);
  return m;
}

bool is_exchange(const OpticalElement& element, double tol) {
  const auto* bs = std::get_if<BeamSplitter>(&element);
  return bs != nullptr && std::abs(bs->theta - kPi / 2.0) <= tol;
}

Netlist::Netlist(int modes, std::vector<OpticalElement> elements,
                 std::vector<double> final_phases)
    : modes_(modes),
      elements_(std::move(elements)),
      final_phases_(std::move(final_phases)) {
  if (modes_ < 1) throw InvalidArgument("netlist needs at least one mode");
  for (const auto& e : elements_) validate_element(e, modes_);
  if (final_phases_.empty()) {
    final_phases_.assign(static_cast<std::size_t>(modes_), 0.0);
  }
  if (final_phases_.size() != static_cast<std::size_t>(modes_)) {
    throw InvalidArgument("netlist has " + std::to_string(modes_) +
                          " modes but " +
                          std::to_string(final_phases_.size()) +
                          " final phases");
  }
  for (double phi : final_phases_) {
    if (!std::isfinite(phi)) {
      throw InvalidArgument("final phases must be finite");
    }
  }
}

std::size_t Netlist::beam_splitter_count() const {
  std::size_t count = 0;
  for (const auto& e : elements_) {
    if (std::holds_alternative<BeamSplitter>(e)) ++count;
  }
  return count;
}

ComplexMatrix total_matrix(const Netlist& netlist) {
  ComplexMatrix m = ComplexMatrix::Identity(netlist.modes(), netlist.modes());
  for (const auto& e : netlist.elements()) apply_rows(e, m);
  for (int k = 0; k < netlist.modes(); ++k) {
    const double phi = netlist.final_phases()[static_cast<std::size_t>(k)];
    if (phi != 0.0) m.row(k) *= std::polar(1.0, phi);
  }
  return m;
}

std::vector<PhaseShifter> phase_shifters(const Netlist& netlist,
                                         double zero_tol) {
  std::vector<PhaseShifter> out;
  for (const auto& e : netlist.elements()) {
    if (const auto* ps = std::get_if<PhaseShifter>(&e)) out.push_back(*ps);
  }
  for (int k = 0; k < netlist.modes(); ++k) {
    const double phi = netlist.final_phases()[static_cast<std::size_t>(k)];
    if (std::abs(phi) > zero_tol) out.push_back({k, phi});
  }
  return out;
}

std::size_t component_count(const Netlist& netlist, double zero_tol) {
  std::size_t count = netlist.elements().size();
  for (double phi : netlist.final_phases()) {
    if (std::abs(phi) > zero_tol) ++count;
  }
  return count;
}

Netlist reck_decompose(const ComplexMatrix& u,
                       const DecomposeOptions& options) {
  if (u.rows() != u.cols() || u.rows() == 0) {
    throw InvalidArgument("reck_decompose: expected a nonempty square matrix");
  }
  const int n = static_cast<int>(u.rows());
  const double unitary_tol = options.unitary_tol > 0.0
                                 ? options.unitary_tol
                                 : default_unitary_tolerance(n);
  const double residual_tol =
      options.residual_tol > 0.0 ? options.residual_tol : 1e-9 * n;
  const double defect = unitarity_defect(u);
  if (!(defect <= unitary_tol)) {
    throw ToleranceError("reck_decompose: unitarity defect " +
                         std::to_string(defect) + " exceeds tolerance " +
                         std::to_string(unitary_tol));
  }

  struct Step {
    int first;
    int second;
    Eigen::Matrix2cd block;
  };
  std::vector<Step> steps;
  ComplexMatrix w = u;

  // w * T_1 * ... * T_m = D, hence u = D * T_m^dag * ... * T_1^dag and the
  // element applied k-th is T_k^dag.
  for (int r = 0; r + 1 < n; ++r) {
    for (int c = n - 1; c > r; --c) {
      const Complex q = w(r, c);
      if (std::abs(q) <= options.prune_tol) continue;
      const Complex p = w(r, r);
      const double rho = std::hypot(std::abs(p), std::abs(q));
      // [p q] * t = [rho 0]
      Eigen::Matrix2cd t;
      t << std::conj(p) / rho, -q / rho, std::conj(q) / rho, p / rho;
      const Eigen::VectorXcd col_r = w.col(r);
      const Eigen::VectorXcd col_c = w.col(c);
      w.col(r) = t(0, 0) * col_r + t(1, 0) * col_c;
      w.col(c) = t(0, 1) * col_r + t(1, 1) * col_c;
      w(r, c) = 0.0;
      steps.push_back({r, c, t.adjoint()});
    }
  }

  double residual = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) residual = std::max(residual, std::abs(w(i, j)));
    }
  }
  if (!(residual <= residual_tol)) {
    throw ToleranceError("reck_decompose: residual off-diagonal magnitude " +
                         std::to_string(residual) + " exceeds tolerance " +
                         std::to_string(residual_tol));
  }

  std::vector<double> final_phases(static_cast<std::size_t>(n), 0.0);
  for (int k = 0; k < n; ++k) {
    const double phi = wrap_phase(std::arg(w(k, k)));
    if (std::abs(phi) <= options.prune_tol) continue;
    // Diagonal phases commute with every later element not touching mode k,
    // so they fold into the output row of the last element that does.
    std::optional<std::size_t> last;
    for (std::size_t s = 0; s < steps.size(); ++s) {
      if (steps[s].first == k || steps[s].second == k) last = s;
    }
    if (last) {
      Step& step = steps[*last];
      step.block.row(step.first == k ? 0 : 1) *= std::polar(1.0, phi);
    } else {
      final_phases[static_cast<std::size_t>(k)] = phi;
    }
  }

  std::vector<OpticalElement> elements;
  elements.reserve(steps.size());
  for (const Step& step : steps) {
    BeamSplitter bs = fit_beam_splitter(step.first, step.second, step.block);
    const Eigen::Matrix2cd fitted =
        bs_matrix(bs.theta, bs.phi_tau, bs.phi_rho, bs.phi_0);
    if ((fitted - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() <=
        options.prune_tol) {
      continue;
    }
    elements.emplace_back(bs);
  }
  return Netlist(n, std::move(elements), std::move(final_phases));
}

}  // namespace lopc
