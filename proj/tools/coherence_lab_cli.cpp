// Copyright 2026 The coherence-lab Authors
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

// coherence-lab: command-line front end for the coherence library.
//
// Exit codes: 0 success, 2 validation failure, 3 classifier disagreement,
// 1 anything else.

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "coherence_lab/bipartite.hpp"
#include "coherence_lab/certificate.hpp"
#include "coherence_lab/channels.hpp"
#include "coherence_lab/coherence.hpp"
#include "coherence_lab/errors.hpp"
#include "coherence_lab/matrix_file.hpp"
#include "coherence_lab/states.hpp"

namespace cl = coherence_lab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitOther = 1;
constexpr int kExitValidation = 2;
constexpr int kExitDisagreement = 3;

double default_tolerance() {
  if (const char* env = std::getenv("COHERENCE_LAB_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && std::isfinite(v) && v > 0.0) return v;
    std::cerr << "warning: ignoring invalid COHERENCE_LAB_TOL=" << env << "\n";
  }
  return cl::kDefaultTol;
}

struct Options {
  double tol = cl::kDefaultTol;
  std::uint64_t seed = 0;
  bool json = false;
  std::string out;
};

void emit(const cl::Certificate& cert, const Options& opt) {
  std::cout << (opt.json ? cert.to_json() : cert.to_text());
}

cl::DensityMatrix load_state(const std::string& path, const Options& opt, cl::Certificate& cert) {
  const cl::MatrixFile file = cl::read_matrix_file(path);
  if (file.kind != cl::MatrixKind::State) {
    throw cl::ParseError(path + ": expected kind \"state\", got \"" +
                         std::string(cl::to_string(file.kind)) + "\"");
  }
  cert.add_input(path);
  return cl::DensityMatrix(file.matrices.front(), opt.tol);
}

void write_state(const std::string& path, const cl::DensityMatrix& rho, std::string comment) {
  cl::write_matrix_file(path, cl::MatrixFile::state(rho.matrix(), std::move(comment)));
}

void record_mcs(cl::Certificate& cert, const cl::CoherenceReport& report) {
  cert.set("is_mcs", report.is_mcs);
  if (report.witness_phases) cert.set("witness_phases", *report.witness_phases);
}

void cmd_coherence(const std::string& path, const std::string& measure, const Options& opt) {
  cl::Certificate cert("coherence", opt.tol);
  const cl::DensityMatrix rho = load_state(path, opt, cert);
  const cl::CoherenceReport report = cl::is_mcs(rho);
  const double d = static_cast<double>(rho.dim());
  cert.set("dim", static_cast<long long>(rho.dim()));
  cert.set("measure", measure);
  if (measure == "l1") {
    cert.set("value", cl::c_l1(rho));
    cert.set("max_possible", d - 1.0);
  } else {
    cert.set("value", report.value);
    cert.set("max_possible", report.max_possible);
  }
  record_mcs(cert, report);
  emit(cert, opt);
}

void record_superadd(cl::Certificate& cert, const cl::SuperAdditivityReport& r) {
  cert.set("c_ab", r.c_ab);
  cert.set("c_a", r.c_a);
  cert.set("c_b", r.c_b);
  cert.set("gap", r.gap);
  cert.set("equality", r.equality);
  cert.set("product_distance", r.product_distance);
  cert.set("is_product", r.is_product);
}

void cmd_superadd(const std::string& path, std::size_t d_a, std::size_t d_b, const Options& opt) {
  cl::Certificate cert("superadd", opt.tol);
  const cl::DensityMatrix rho = load_state(path, opt, cert);
  cert.set("d_a", static_cast<long long>(d_a));
  cert.set("d_b", static_cast<long long>(d_b));
  record_superadd(cert, cl::superadditivity_report(rho, d_a, d_b));
  emit(cert, opt);
}

void cmd_counterexample(double theta, const Options& opt) {
  cl::Certificate cert("counterexample", opt.tol);
  const auto [rho, report] = cl::counterexample_23(theta);
  cert.set("theta", theta);
  record_superadd(cert, report);
  const auto [rho_a, rho_b] = cl::reduced_states(rho, 2, 3);
  cert.set("rho_a_is_mcs", cl::is_mcs(rho_a).is_mcs);
  cert.set("rho_b_is_mcs", cl::is_mcs(rho_b).is_mcs);
  cert.add_witness("rho_a", rho_a.matrix());
  cert.add_witness("rho_b", rho_b.matrix());
  if (!opt.out.empty()) {
    write_state(opt.out, rho, "2x3 uniform-modulus state with phases k*theta, theta = " +
                                  std::to_string(theta));
    cert.set("state_file", opt.out);
  }
  emit(cert, opt);
}

void cmd_entangled_mcs(std::size_t d, const Options& opt) {
  cl::Certificate cert("entangled-mcs", opt.tol);
  const cl::DensityMatrix rho = cl::make_mcs_max_entangled(d);
  const auto [rho_a, rho_b] = cl::reduced_states(rho, d, d);
  const double distance =
      cl::frobenius_distance(rho_a.matrix(), cl::DensityMatrix::maximally_mixed(d).matrix());
  const cl::CoherenceReport report = cl::is_mcs(rho);
  cert.set("d", static_cast<long long>(d));
  cert.set("c_re", report.value);
  cert.set("max_possible", report.max_possible);
  cert.set("is_mcs", report.is_mcs);
  cert.set("rho_a_distance_to_maximally_mixed", distance);
  cert.set("maximally_entangled", distance <= opt.tol);
  cert.set("phases", cl::max_entangled_phases(d).normalized().values());
  if (!opt.out.empty()) {
    write_state(opt.out, rho, "maximally coherent and maximally entangled state, d = " +
                                  std::to_string(d));
    cert.set("state_file", opt.out);
  }
  emit(cert, opt);
}

void cmd_identity_decomp(std::size_t d, const Options& opt) {
  cl::Certificate cert("identity-decomp", opt.tol);
  const auto states = cl::identity_mcs_decomposition(d);
  cl::ComplexMatrix sum(d, d);
  bool all_mcs = true;
  for (const auto& phi : states) {
    sum += phi.projector();
    all_mcs = all_mcs && cl::is_mcs(cl::DensityMatrix(phi)).is_mcs;
  }
  const double residual = cl::frobenius_distance(sum, cl::ComplexMatrix::identity(d));
  cert.set("d", static_cast<long long>(d));
  cert.set("states", static_cast<long long>(states.size()));
  cert.set("all_mcs", all_mcs);
  cert.set("identity_residual", residual);
  if (!opt.out.empty()) {
    nlohmann::ordered_json files = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < states.size(); ++k) {
      const std::string path = opt.out + "_" + std::to_string(k + 1) + ".json";
      write_state(path, cl::DensityMatrix(states[k]),
                  "identity decomposition component " + std::to_string(k + 1) + " of " +
                      std::to_string(d));
      files.push_back(path);
    }
    cert.set_raw("state_files", std::move(files));
  }
  emit(cert, opt);
}

void cmd_channel(const std::string& path, bool classify, std::size_t samples, const Options& opt) {
  cl::Certificate cert("channel", opt.tol);
  const cl::MatrixFile file = cl::read_matrix_file(path);
  if (file.kind != cl::MatrixKind::KrausSet) {
    throw cl::ParseError(path + ": expected kind \"kraus-set\", got \"" +
                         std::string(cl::to_string(file.kind)) + "\"");
  }
  cert.add_input(path);
  const cl::KrausChannel ch(file.matrices, opt.tol);
  cert.set("dim", static_cast<long long>(ch.dim()));
  cert.set("kraus_operators", static_cast<long long>(ch.size()));

  if (!classify) {
    const cl::IncoherenceVerdict verdict = cl::is_incoherent(ch);
    cert.set("incoherent", verdict.incoherent);
    cert.set("unital", cl::is_unital(ch));
    emit(cert, opt);
    return;
  }

  cert.set("samples", static_cast<long long>(samples));
  cert.set("seed", static_cast<long long>(opt.seed));
  const cl::ChannelClassification c = cl::classify_mcs_preservation(ch, samples, opt.seed);
  cert.set("incoherent", c.incoherent);
  cert.set("unital", c.unital);
  cert.set("preserves_mcs", c.preserves_mcs);
  cert.set("probes", static_cast<long long>(c.probes));
  cert.set("probes_preserved", static_cast<long long>(c.probes_preserved));
  if (!c.incoherence.violations.empty()) {
    nlohmann::ordered_json v = nlohmann::ordered_json::array();
    for (const auto& col : c.incoherence.violations) {
      v.push_back({{"kraus", col.kraus_index + 1}, {"column", col.column + 1},
                   {"nonzeros", col.nonzeros}});
    }
    cert.set_raw("incoherence_violations", std::move(v));
  }
  if (c.factors) {
    nlohmann::ordered_json fs = nlohmann::ordered_json::array();
    for (const auto& f : *c.factors) {
      nlohmann::ordered_json perm = nlohmann::ordered_json::array();
      for (std::size_t p : f.perm) perm.push_back(p + 1);
      nlohmann::ordered_json phases = nlohmann::ordered_json::array();
      for (const auto& z : f.phases) phases.push_back(cl::round15(std::arg(z)));
      fs.push_back({{"scale", cl::round15(f.scale)}, {"perm", perm}, {"phase_args", phases}});
    }
    cert.set_raw("factors", std::move(fs));
  }
  if (c.witness) {
    cert.set("witness_probe_phases", c.witness->probe_phases);
    cert.set("witness_coherence_drop", c.witness->coherence_drop);
    cert.add_witness("input", c.witness->input.matrix());
    cert.add_witness("output", c.witness->output.matrix());
  }
  emit(cert, opt);
}

void cmd_mcs_make(const std::vector<double>& theta, const Options& opt) {
  cl::Certificate cert("mcs-make", opt.tol);
  const cl::DensityMatrix rho = cl::make_mcs(theta, theta.size());
  const cl::CoherenceReport report = cl::is_mcs(rho);
  cert.set("d", static_cast<long long>(theta.size()));
  cert.set("theta", theta);
  cert.set("c_re", report.value);
  cert.set("max_possible", report.max_possible);
  record_mcs(cert, report);
  if (!opt.out.empty()) {
    write_state(opt.out, rho, "maximally coherent state diag(e^{i theta}) |psi_d>");
    cert.set("state_file", opt.out);
  } else {
    cert.add_witness("state", rho.matrix());
  }
  emit(cert, opt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coherence-lab: relative-entropy coherence, maximally coherent states and "
               "MCS-preserving channels"};
  app.require_subcommand(1);

  Options opt;
  opt.tol = default_tolerance();
  app.add_option("--tol", opt.tol, "Validation tolerance (default 1e-9, env COHERENCE_LAB_TOL)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "Seed for randomised checks");
  app.add_flag("--json", opt.json, "Print the certificate as JSON");
  app.add_option("--out", opt.out, "Output state file (or file prefix for identity-decomp)");
  app.fallthrough();

  std::string state_path;
  std::string measure = "re";
  auto* coherence = app.add_subcommand("coherence", "Coherence of a state file");
  coherence->add_option("state", state_path, "State file")->required();
  coherence->add_option("--measure", measure, "re or l1")->check(CLI::IsMember({"re", "l1"}));

  std::size_t d_a = 0;
  std::size_t d_b = 0;
  auto* superadd = app.add_subcommand("superadd", "Super-additivity report for a bipartite state");
  superadd->add_option("state", state_path, "State file")->required();
  superadd->add_option("--da", d_a, "Dimension of subsystem A")->required()->check(CLI::PositiveNumber);
  superadd->add_option("--db", d_b, "Dimension of subsystem B")->required()->check(CLI::PositiveNumber);

  double theta = std::numbers::pi / 3.0;
  auto* counterexample = app.add_subcommand("counterexample", "2x3 equal-gap state");
  counterexample->add_option("--theta", theta, "Phase step in (0, 2pi)");

  std::size_t d = 2;
  auto* entangled = app.add_subcommand("entangled-mcs", "Maximally coherent, maximally entangled state");
  entangled->add_option("--d", d, "Local dimension (>= 2)")->required();

  auto* identity = app.add_subcommand("identity-decomp", "Identity as a sum of d maximally coherent states");
  identity->add_option("--d", d, "Dimension (>= 1)")->required();

  std::string kraus_path;
  bool classify = false;
  std::size_t samples = 50;
  auto* channel = app.add_subcommand("channel", "Incoherence / unitality / MCS preservation of a Kraus set");
  channel->add_option("kraus", kraus_path, "Kraus-set file")->required();
  channel->add_flag("--classify", classify, "Run the MCS-preservation classifier");
  channel->add_option("--samples", samples, "Monte-Carlo probes")->check(CLI::PositiveNumber);

  std::vector<double> phases;
  auto* mcs_make = app.add_subcommand("mcs-make", "Build diag(e^{i theta})|psi_d> from a phase vector");
  mcs_make->add_option("--theta", phases, "Phases theta_1..theta_d (space or comma separated)")
      ->required()
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitOther;
  }

  try {
    if (*coherence) cmd_coherence(state_path, measure, opt);
    if (*superadd) cmd_superadd(state_path, d_a, d_b, opt);
    if (*counterexample) cmd_counterexample(theta, opt);
    if (*entangled) cmd_entangled_mcs(d, opt);
    if (*identity) cmd_identity_decomp(d, opt);
    if (*channel) cmd_channel(kraus_path, classify, samples, opt);
    if (*mcs_make) cmd_mcs_make(phases, opt);
  } catch (const cl::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const cl::ClassifierDisagreement& e) {
    std::cerr << "classifier disagreement: " << e.what() << "\n";
    return kExitDisagreement;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOther;
  }
  return kExitOk;
}
