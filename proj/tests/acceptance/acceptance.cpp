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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes within its tolerance and time limit.

#include <Eigen/Eigenvalues>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "lopc/circuits.hpp"
#include "lopc/fock.hpp"
#include "lopc/liftops.hpp"
#include "lopc/mesh.hpp"
#include "lopc/simulate.hpp"
#include "support/testing.hpp"

namespace {

using namespace lopc;
using testing::haar_unitary;
using testing::kPi;
using testing::Rng;

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  const char* id;
  const char* title;
  double time_limit_s;
  std::function<Verdict()> check;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

const double kR = 1 / std::sqrt(2.0);

Verdict ac1_cnot_truth_table() {
  Verdict v;
  const LogicalCircuit c(2, {Gate::cnot(0, 1)});
  const std::uint64_t image[] = {0, 1, 3, 2};
  double worst = 0;
  for (std::uint64_t i = 0; i < 4; ++i) {
    const auto r = run_logical(c, i);
    const double p = r.probabilities[r.basis().index_of(spmq_encode(image[i], 2))];
    worst = std::max(worst, std::abs(p - 1));
    v.require(std::abs(p - 1) <= 1e-10,
              "|" + binary_label(i, 2) + "> -> |" + binary_label(image[i], 2) +
                  "> with p=" + fmt(p));
  }
  const Netlist net = compile(c);
  v.require(net.elements().size() == 1,
            "compile emitted " + std::to_string(net.elements().size()) +
                " elements");
  if (v.ok) v.detail = "max |p-1| = " + fmt(worst) + ", 1 element";
  return v;
}

Verdict ac2_bell() {
  Verdict v;
  const LogicalCircuit c(2, {Gate::h(0), Gate::cnot(0, 1)});
  const Netlist net = compile(c);
  const double patterns[4][4] = {
      {kR, 0, 0, kR}, {0, kR, kR, 0}, {kR, 0, 0, -kR}, {0, kR, -kR, 0}};
  double worst_amp = 0;
  double worst_back = 0;
  for (int i = 0; i < 4; ++i) {
    const auto r = run(net, spmq_encode(i, 2));
    for (int m = 0; m < 4; ++m) {
      const double e = std::abs(r.state.amplitudes()(m) - Complex(patterns[i][m], 0));
      worst_amp = std::max(worst_amp, e);
    }
    const auto back = run(net, r.state, Direction::Adjoint);
    const double p = back.probabilities[static_cast<std::size_t>(i)];
    worst_back = std::max(worst_back, std::abs(p - 1));
  }
  v.require(worst_amp <= 1e-9, "amplitude error " + fmt(worst_amp));
  v.require(worst_back <= 1e-9, "adjoint |p-1| = " + fmt(worst_back));
  if (v.ok) {
    v.detail = "amplitude error " + fmt(worst_amp) + ", adjoint |p-1| " +
               fmt(worst_back);
  }
  return v;
}

Verdict ac3_cphase_swap() {
  Verdict v;
  const LogicalCircuit cp(2, {Gate::cphase(0, 1, kPi)});
  const Netlist n1 = compile(cp);
  const auto ps = phase_shifters(n1);
  v.require(ps.size() == 1 && n1.beam_splitter_count() == 0,
            "cPHASE netlist has " + std::to_string(ps.size()) + " PS and " +
                std::to_string(n1.beam_splitter_count()) + " BS");
  if (ps.size() == 1) {
    v.require(std::abs(std::abs(wrap_phase(ps[0].phi)) - kPi) <= 1e-12,
              "cPHASE PS angle " + fmt(ps[0].phi));
  }
  const double e1 = max_abs_diff(total_matrix(n1), circuit_matrix(cp));
  v.require(e1 <= 1e-12, "cPHASE reconstruction " + fmt(e1));

  const LogicalCircuit sw(2, {Gate::swap(0, 1)});
  const Netlist n2 = compile(sw);
  v.require(component_count(n2) == 1 && n2.elements().size() == 1 &&
                is_exchange(n2.elements()[0]),
            "SWAP netlist is not a single exchange");
  const double e2 = max_abs_diff(total_matrix(n2), circuit_matrix(sw));
  v.require(e2 <= 1e-12, "SWAP reconstruction " + fmt(e2));
  if (v.ok) {
    v.detail = "PS(pi) on mode " + std::to_string(ps[0].mode) +
               ", exchange on modes (1,2); errors " + fmt(e1) + ", " + fmt(e2);
  }
  return v;
}

Verdict ac4_mesh_roundtrip() {
  Verdict v;
  Rng rng(4004);
  double worst_ratio = 0;
  for (int n : {2, 4, 8, 16}) {
    for (int t = 0; t < 100; ++t) {
      const ComplexMatrix u = haar_unitary(n, rng);
      const Netlist net = reck_decompose(u);
      const double e = max_abs_diff(total_matrix(net), u);
      worst_ratio = std::max(worst_ratio, e / n);
      v.require(e <= 1e-9 * n, "N=" + std::to_string(n) + " error " + fmt(e));
      v.require(net.beam_splitter_count() <= std::size_t(n * (n - 1) / 2),
                "N=" + std::to_string(n) + " uses " +
                    std::to_string(net.beam_splitter_count()) + " BS");
    }
  }
  if (v.ok) v.detail = "400 unitaries, max error/N = " + fmt(worst_ratio);
  return v;
}

Verdict ac5_one_photon_block() {
  Verdict v;
  Rng rng(5005);
  const int sizes[] = {2, 3, 4, 8};
  double worst = 0;
  for (int t = 0; t < 200; ++t) {
    const ComplexMatrix u = haar_unitary(sizes[t % 4], rng);
    worst = std::max(worst, max_abs_diff(lift_unitary(u, 1).matrix, u));
  }
  v.require(worst <= 1e-9, "max deviation " + fmt(worst));
  if (v.ok) v.detail = "200 unitaries, max deviation " + fmt(worst);
  return v;
}

Verdict ac6_permanent_oracle() {
  Verdict v;
  Rng rng(6006);
  double worst = 0;
  int entries = 0;
  for (int modes = 1; modes <= 4; ++modes) {
    for (int n = 0; n <= 3; ++n) {
      for (int t = 0; t < 5; ++t) {
        const ComplexMatrix u = haar_unitary(modes, rng);
        const auto lifted = lift_unitary(u, n);
        const FockBasis& b = lifted.basis;
        for (std::size_t r = 0; r < b.size(); ++r) {
          for (std::size_t c = 0; c < b.size(); ++c) {
            const std::vector<int> out(b[r].occupations().begin(),
                                       b[r].occupations().end());
            const std::vector<int> in(b[c].occupations().begin(),
                                      b[c].occupations().end());
            worst = std::max(worst,
                             std::abs(lifted.matrix(r, c) -
                                      testing::oracle::amplitude(u, out, in)));
            ++entries;
          }
        }
      }
    }
  }
  v.require(worst <= 1e-8, "max amplitude error " + fmt(worst));
  ComplexMatrix bs(2, 2);
  bs << kR, kR, kR, -kR;
  const auto hom = lift_unitary(bs, 2);
  const std::size_t i11 = hom.basis.index_of({1, 1});
  const double null = std::abs(hom.matrix(i11, i11));
  v.require(null <= 1e-10, "Hong-Ou-Mandel amplitude " + fmt(null));
  if (v.ok) {
    v.detail = std::to_string(entries) + " amplitudes, max error " + fmt(worst) +
               "; HOM |<11|U|11>| = " + fmt(null);
  }
  return v;
}

Verdict ac7_homomorphism_branch() {
  Verdict v;
  Rng rng(7007);
  double worst_hom = 0;
  double worst_branch = 0;
  for (int t = 0; t < 50; ++t) {
    const int modes = 2 + t % 3;
    const int n = 1 + t % 3;
    const ComplexMatrix u1 = haar_unitary(modes, rng);
    const ComplexMatrix u2 = haar_unitary(modes, rng);
    const ComplexMatrix prod = u1 * u2;
    const ComplexMatrix l1 = lift_unitary(u1, n).matrix;
    const ComplexMatrix lp = l1 * lift_unitary(u2, n).matrix;
    worst_hom = std::max(worst_hom, max_abs_diff(lift_unitary(prod, n).matrix, lp));

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(log_unitary(u1));
    Eigen::VectorXd w = es.eigenvalues();
    w(t % modes) += 2 * kPi;
    const ComplexMatrix shifted = es.eigenvectors() *
                                  w.cast<Complex>().asDiagonal() *
                                  es.eigenvectors().adjoint();
    worst_branch = std::max(
        worst_branch, max_abs_diff(lift_generator(shifted, n).matrix, l1));
  }
  v.require(worst_hom <= 1e-8, "homomorphism error " + fmt(worst_hom));
  v.require(worst_branch <= 1e-8, "branch shift error " + fmt(worst_branch));
  if (v.ok) {
    v.detail = "50 pairs, homomorphism " + fmt(worst_hom) + ", branch " +
               fmt(worst_branch);
  }
  return v;
}

Verdict ac8_su2() {
  Verdict v;
  const Complex i(0, 1);
  double worst = 0;
  for (int n = 0; n <= 4; ++n) {
    const auto g = su2_fixtures(n);
    const ComplexMatrix* j[] = {&g.j1, &g.j2, &g.j3};
    for (int a = 0; a < 3; ++a) {
      const ComplexMatrix& x = *j[a];
      const ComplexMatrix& y = *j[(a + 1) % 3];
      const ComplexMatrix& z = *j[(a + 2) % 3];
      const ComplexMatrix comm = x * y - y * x;
      const ComplexMatrix iz = i * z;
      worst = std::max(worst, max_abs_diff(comm, iz));
      const ComplexMatrix with_n = x * g.number - g.number * x;
      worst = std::max(worst, with_n.cwiseAbs().maxCoeff());
    }
    const ComplexMatrix casimir = g.j1 * g.j1 + g.j2 * g.j2 + g.j3 * g.j3;
    const double h = n / 2.0;
    worst = std::max(worst, max_abs_diff(casimir, h * (h + 1) *
                                                      ComplexMatrix::Identity(
                                                          n + 1, n + 1)));
  }
  v.require(worst <= 1e-10, "max residual " + fmt(worst));
  if (v.ok) v.detail = "n = 0..4, max residual " + fmt(worst);
  return v;
}

Verdict ac9_dimension() {
  Verdict v;
  for (int n = 0; n <= 20; ++n) {
    v.require(dimension(2, n) == std::uint64_t(n + 1),
              "dimension(2," + std::to_string(n) + ")");
    v.require(dimension(3, n) == std::uint64_t((n + 1) * (n + 2) / 2),
              "dimension(3," + std::to_string(n) + ")");
  }
  if (v.ok) v.detail = "n = 0..20 exact";
  return v;
}

Verdict ac10_leakage() {
  Verdict v;
  const Netlist bs(4, {BeamSplitter{1, 2, kPi / 4, 0, 0, 0}});
  const double leak = leakage_demo(1, 1, bs, 1, 0);
  const double none = leakage_demo(1, 1, Netlist(4), 1, 0);
  v.require(std::abs(leak - 1) <= 1e-9, "cross-register leakage " + fmt(leak));
  v.require(std::abs(none) <= 1e-9, "identity leakage " + fmt(none));
  if (v.ok) {
    v.detail = "balanced BS leakage " + fmt(leak) + ", identity " + fmt(none);
  }
  return v;
}

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"AC1", "cNOT truth table", 1.0, ac1_cnot_truth_table},
      {"AC2", "Bell generation and analysis", 1.0, ac2_bell},
      {"AC3", "cPHASE and SWAP netlists", 1.0, ac3_cphase_swap},
      {"AC4", "mesh roundtrip", 30.0, ac4_mesh_roundtrip},
      {"AC5", "one-photon block identity", 10.0, ac5_one_photon_block},
      {"AC6", "lift vs permanent oracle", 30.0, ac6_permanent_oracle},
      {"AC7", "homomorphism and branch independence", 30.0,
       ac7_homomorphism_branch},
      {"AC8", "su(2) fixtures", 1.0, ac8_su2},
      {"AC9", "dimension formulas", 1.0, ac9_dimension},
      {"AC10", "leakage demo", 1.0, ac10_leakage},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    if (v.ok && secs >= c.time_limit_s) {
      v.ok = false;
      v.detail = "too slow: " + fmt(secs) + " s";
    }
    if (!v.ok) ++failures;
    std::printf("%-4s %s  %s: %s [%.3f s, limit %g s]\n", c.id,
                v.ok ? "PASS" : "FAIL", c.title, v.detail.c_str(), secs,
                c.time_limit_s);
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(std::size(criteria)) - failures,
              std::size(criteria));
  return failures == 0 ? 0 : 1;
}
