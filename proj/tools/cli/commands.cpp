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

#include "cli/commands.hpp"

#include <algorithm>
#include <exception>
#include <fstream>
#include <functional>
#include <limits>
#include <ostream>

#include "CLI11.hpp"
#include "lopc/errors.hpp"
#include "lopc/json_io.hpp"

namespace lopc::cli {

namespace {

int emit(const CliConfig& config, const std::string& data, std::ostream& out,
         std::ostream& err) {
  if (config.output.empty()) {
    out << data << '\n';
    return kOk;
  }
  std::ofstream file(config.output, std::ios::binary | std::ios::trunc);
  file << data << '\n';
  file.close();
  if (!file) {
    err << "error: cannot write " << config.output << '\n';
    return kInputError;
  }
  return kOk;
}

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const ToleranceError& e) {
    err << "error: " << e.what() << '\n';
    return kToleranceFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

bool is_power_of_two(int n) { return n >= 2 && (n & (n - 1)) == 0; }

int qubits_for(int modes) {
  int k = 0;
  while ((1 << k) < modes) ++k;
  return k;
}

// "2 (1-based 3, |10>)"
std::string logical_label(std::uint64_t index, int qubits) {
  return std::to_string(index) + " (1-based " + std::to_string(index + 1) +
         ", |" + binary_label(index, qubits) + ">)";
}

}  // namespace

int cmd_compile(const CliConfig& config, const std::string& circuit_path,
                std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const LogicalCircuit circuit =
        circuit_from_json(read_text_file(circuit_path));
    const int k = circuit.qubits();
    if (k > 30 || (std::uint64_t{1} << k) > config.dim_cap) {
      throw CapExceeded("circuit over " + std::to_string(k) +
                        " qubits needs more modes than the dimension cap " +
                        std::to_string(config.dim_cap));
    }
    const int modes = 1 << k;
    CompileOptions options;
    options.decompose.residual_tol = config.tolerance * modes;
    const ComplexMatrix target = circuit_matrix(circuit, options.circuit);
    const Netlist netlist = compile(circuit, options);
    const double error = max_abs_diff(total_matrix(netlist), target);
    err << "modes: " << modes << '\n'
        << "elements: " << netlist.elements().size() << '\n'
        << "beam splitters: " << netlist.beam_splitter_count() << '\n'
        << "reconstruction error: " << canonical_number(error) << '\n';
    if (error > config.tolerance * modes) {
      throw ToleranceError("reconstruction error " + canonical_number(error) +
                           " exceeds " +
                           canonical_number(config.tolerance * modes));
    }
    return emit(config, to_json(netlist), out, err);
  });
}

int cmd_simulate(const CliConfig& config, const std::string& netlist_path,
                 const std::string& input, Direction direction,
                 std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Netlist netlist = netlist_from_json(read_text_file(netlist_path));
    const OccupationVector in = parse_occupation(input);
    SimulationOptions options;
    options.dim_cap = config.dim_cap;
    options.photon_cap = config.photon_cap;
    const SimulationResult result = run(netlist, in, direction, options);

    const bool logical = is_power_of_two(netlist.modes()) && in.total() == 1;
    const int k = qubits_for(netlist.modes());
    err << "direction: "
        << (direction == Direction::Forward ? "forward" : "adjoint") << '\n'
        << "dimension: " << result.basis().size() << '\n';
    if (logical) {
      err << "logical input: " << logical_label(spmq_decode(in), k) << '\n';
    }
    for (std::size_t i = 0; i < result.basis().size(); ++i) {
      const double p = result.probabilities[i];
      if (p <= config.tolerance) continue;
      err << "  " << result.basis()[i].to_string()
          << "  p=" << canonical_number(p);
      if (logical) {
        err << "  logical " << logical_label(spmq_decode(result.basis()[i]), k);
      }
      err << '\n';
    }
    return emit(config, to_json(result), out, err);
  });
}

int cmd_lift(const CliConfig& config, const std::string& matrix_path,
             int photons, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ComplexMatrix u = matrix_from_json(read_text_file(matrix_path));
    if (photons > config.photon_cap) {
      throw CapExceeded(std::to_string(photons) +
                        " photons exceeds the photon cap " +
                        std::to_string(config.photon_cap));
    }
    if (u.rows() != u.cols()) {
      throw InvalidArgument("lift needs a square matrix");
    }
    const double defect = unitarity_defect(u);
    if (defect > config.tolerance) {
      throw ToleranceError("input is not unitary: defect " +
                           canonical_number(defect) + " exceeds " +
                           canonical_number(config.tolerance));
    }
    LiftOptions options;
    options.dim_cap = config.dim_cap;
    options.unitary_tol = config.tolerance;
    const LiftedOperator lifted = lift_unitary(u, photons, options);
    err << "modes: " << u.rows() << '\n'
        << "photons: " << photons << '\n'
        << "dimension: " << lifted.basis.size() << '\n';
    return emit(config, to_json(lifted.matrix), out, err);
  });
}

int cmd_verify(const CliConfig& config, const std::string& netlist_path,
               const std::string& matrix_path, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    const Netlist netlist = netlist_from_json(read_text_file(netlist_path));
    const ComplexMatrix u = matrix_from_json(read_text_file(matrix_path));
    if (u.rows() != netlist.modes() || u.cols() != netlist.modes()) {
      err << "error: netlist has " << netlist.modes() << " modes, matrix is "
          << u.rows() << "x" << u.cols() << '\n';
      return static_cast<int>(kCapExceeded);
    }
    const double error = max_abs_diff(total_matrix(netlist), u);
    const bool ok = error <= config.tolerance;
    err << "max abs error: " << canonical_number(error) << '\n'
        << (ok ? "match" : "mismatch") << '\n';
    const std::string data = "{\"max_abs_error\":" + canonical_number(error) +
                             ",\"tolerance\":" +
                             canonical_number(config.tolerance) +
                             ",\"within_tolerance\":" +
                             (ok ? "true" : "false") + "}";
    const int status = emit(config, data, out, err);
    if (status != kOk) return status;
    return ok ? static_cast<int>(kOk) : static_cast<int>(kMismatch);
  });
}

int cmd_basis(const CliConfig& config, int modes, int photons,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (photons > config.photon_cap) {
      throw CapExceeded(std::to_string(photons) +
                        " photons exceeds the photon cap " +
                        std::to_string(config.photon_cap));
    }
    const std::uint64_t dim = dimension(modes, photons);
    if (dim > config.dim_cap) {
      throw CapExceeded("dimension " + std::to_string(dim) +
                        " exceeds the cap " + std::to_string(config.dim_cap));
    }
    const FockBasis basis = enumerate_basis(modes, photons);
    err << "dimension: " << basis.size() << '\n';
    return emit(config, to_json(basis), out, err);
  });
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Linear-optical circuit compiler and Fock-space simulator",
               "lopc"};
  app.require_subcommand(1);

  CliConfig config;
  app.add_option("--tol", config.tolerance, "Numerical tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--dim-cap", config.dim_cap, "Largest Fock subspace")
      ->check(CLI::Range(std::uint64_t{1},
                         std::numeric_limits<std::uint64_t>::max()))
      ->capture_default_str();
  app.add_option("--photon-cap", config.photon_cap, "Largest photon number")
      ->check(CLI::Range(1, std::numeric_limits<int>::max()))
      ->capture_default_str();
  app.add_option("--output,-o", config.output, "Write data here, not stdout");

  std::string first_path;
  std::string second_path;
  std::string input;
  std::string direction = "forward";
  int photons = 0;
  int modes = 0;

  auto* compile_cmd =
      app.add_subcommand("compile", "Compile a circuit JSON to a netlist");
  compile_cmd->add_option("circuit", first_path, "Circuit JSON")->required();

  auto* simulate_cmd =
      app.add_subcommand("simulate", "Propagate a Fock state through a netlist");
  simulate_cmd->add_option("netlist", first_path, "Netlist JSON")->required();
  simulate_cmd
      ->add_option("input", input, "Occupations, e.g. 1000 or 1,0,12")
      ->required();
  simulate_cmd->add_option("--direction", direction, "forward or adjoint")
      ->check(CLI::IsMember({"forward", "adjoint"}))
      ->capture_default_str();

  auto* lift_cmd =
      app.add_subcommand("lift", "Lift a mode unitary to n photons");
  lift_cmd->add_option("matrix", first_path, "Matrix JSON")->required();
  lift_cmd->add_option("--photons,-n", photons, "Photon number")
      ->required()
      ->check(CLI::NonNegativeNumber);

  auto* verify_cmd =
      app.add_subcommand("verify", "Compare a netlist with a matrix");
  verify_cmd->add_option("netlist", first_path, "Netlist JSON")->required();
  verify_cmd->add_option("matrix", second_path, "Matrix JSON")->required();

  auto* basis_cmd =
      app.add_subcommand("basis", "Print the n-photon basis in canonical order");
  basis_cmd->add_option("--modes,-m", modes, "Number of modes")
      ->required()
      ->check(CLI::PositiveNumber);
  basis_cmd->add_option("--photons,-n", photons, "Photon number")
      ->required()
      ->check(CLI::NonNegativeNumber);

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  if (compile_cmd->parsed()) return cmd_compile(config, first_path, out, err);
  if (simulate_cmd->parsed()) {
    return cmd_simulate(
        config, first_path, input,
        direction == "adjoint" ? Direction::Adjoint : Direction::Forward, out,
        err);
  }
  if (lift_cmd->parsed()) return cmd_lift(config, first_path, photons, out, err);
  if (verify_cmd->parsed()) {
    return cmd_verify(config, first_path, second_path, out, err);
  }
  return cmd_basis(config, modes, photons, out, err);
}

}  // namespace lopc::cli
