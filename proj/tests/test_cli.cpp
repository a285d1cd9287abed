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

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <json.hpp>
#include <numbers>
#include <string>
#include <sys/wait.h>

namespace {

const std::string kCli = COHERENCE_LAB_CLI;
const std::string kFixtures = FIXTURE_DIR;

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " \"" + kCli + "\" " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json verdicts(const std::string& args) {
  const Run r = run("--json " + args);
  INFO(r.out);
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out).at("verdicts");
}

std::string fixture(const std::string& name) { return "\"" + kFixtures + "/" + name + "\""; }

}  // namespace

TEST_CASE("coherence of fixture states") {
  auto v = verdicts("coherence " + fixture("uniform-4.json"));
  CHECK(v["value"].get<double>() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(v["is_mcs"] == true);
  CHECK(v["witness_phases"].size() == 4);

  v = verdicts("coherence " + fixture("diag-state.json"));
  CHECK(std::abs(v["value"].get<double>()) < 1e-12);
  CHECK(v["is_mcs"] == false);

  v = verdicts("coherence " + fixture("perturbed-mcs.json"));
  CHECK(v["is_mcs"] == false);
  CHECK(v["value"].get<double>() < 2.0);

  v = verdicts("coherence " + fixture("uniform-4.json") + " --measure l1");
  CHECK(v["value"].get<double>() == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("superadd on product, entangled and ramp states") {
  auto v = verdicts("superadd " + fixture("plus-plus.json") + " --da 2 --db 2");
  CHECK(v["equality"] == true);
  CHECK(v["is_product"] == true);

  v = verdicts("superadd " + fixture("bell.json") + " --da 2 --db 2");
  CHECK(v["gap"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(v["is_product"] == false);

  v = verdicts("superadd " + fixture("ramp-2x3.json") + " --da 2 --db 3");
  CHECK(v["equality"] == true);
  CHECK(v["is_product"] == true);
}

TEST_CASE("counterexample reports its reduced states") {
  const Run r = run("--json counterexample --theta 1.0471975512");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["verdicts"]["gap"].get<double>()) < 1e-9);
  CHECK(j["verdicts"]["rho_a_is_mcs"] == true);
  CHECK(j["witnesses"].contains("rho_a"));
  CHECK(j["witnesses"].contains("rho_b"));
  CHECK(run("counterexample --theta 0").code == 1);
}

TEST_CASE("entangled-mcs and identity-decomp") {
  auto v = verdicts("entangled-mcs --d 3");
  CHECK(v["maximally_entangled"] == true);
  CHECK(v["is_mcs"] == true);
  const double tau = 2.0 * std::numbers::pi;
  CHECK(v["phases"][4].get<double>() == doctest::Approx(2.0 * tau / 3.0).epsilon(1e-12));

  const auto prefix = std::filesystem::temp_directory_path() / "coherence_lab_cli_idd";
  v = verdicts("identity-decomp --d 3 --out \"" + prefix.string() + "\"");
  CHECK(v["all_mcs"] == true);
  CHECK(v["identity_residual"].get<double>() < 1e-12);
  for (int k = 1; k <= 3; ++k) {
    const std::string file = prefix.string() + "_" + std::to_string(k) + ".json";
    CHECK(std::filesystem::exists(file));
    CHECK(verdicts("coherence \"" + file + "\"")["is_mcs"] == true);
    std::filesystem::remove(file);
  }
}

TEST_CASE("channel classification") {
  auto v = verdicts("channel " + fixture("perm-diag-unitary.json") + " --classify");
  CHECK(v["incoherent"] == true);
  CHECK(v["preserves_mcs"] == true);
  CHECK(v["probes_preserved"] == v["probes"]);

  const Run r = run("--json channel " + fixture("dephasing-3.json") + " --classify");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdicts"]["preserves_mcs"] == false);
  CHECK(j["verdicts"]["witness_coherence_drop"].get<double>() > 1.0);
  CHECK(j["witnesses"].contains("input"));

  v = verdicts("channel " + fixture("two-perm-mix.json") + " --classify");
  CHECK(v["incoherent"] == true);
  CHECK(v["preserves_mcs"] == false);

  v = verdicts("channel " + fixture("hadamard.json") + " --classify");
  CHECK(v["incoherent"] == false);
  CHECK(v["preserves_mcs"] == false);
}

TEST_CASE("exit codes") {
  CHECK(run("coherence " + fixture("non-hermitian.json")).code == 2);
  CHECK(run("channel " + fixture("leaky.json")).code == 2);
  CHECK(run("coherence " + fixture("no-such-file.json")).code == 1);
  CHECK(run("coherence " + fixture("dephasing-3.json")).code == 1);
  CHECK(run("superadd " + fixture("bell.json") + " --da 3 --db 2").code == 1);
  CHECK(run("no-such-command").code != 0);

  const auto bad = std::filesystem::temp_directory_path() / "coherence_lab_bad.json";
  std::FILE* f = std::fopen(bad.c_str(), "w");
  std::fputs("{ not json", f);
  std::fclose(f);
  CHECK(run("coherence \"" + bad.string() + "\"").code == 1);
  std::filesystem::remove(bad);
}

TEST_CASE("output is reproducible for a fixed seed") {
  const std::string args = "channel " + fixture("two-perm-mix.json") + " --classify --samples 30 --seed 7";
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run("--json " + args).out == run("--json " + args).out);
}

TEST_CASE("tolerance comes from the environment unless given") {
  CHECK(verdicts("coherence " + fixture("uniform-4.json")).size() > 0);
  const Run env = run("--json coherence " + fixture("uniform-4.json"), "COHERENCE_LAB_TOL=1e-6");
  REQUIRE(env.code == 0);
  CHECK(nlohmann::json::parse(env.out)["tol"].get<double>() == 1e-6);
  const Run flag = run("--json --tol 1e-4 coherence " + fixture("uniform-4.json"), "COHERENCE_LAB_TOL=1e-6");
  REQUIRE(flag.code == 0);
  CHECK(nlohmann::json::parse(flag.out)["tol"].get<double>() == 1e-4);
}

TEST_CASE("mcs-make writes a file that reads back as maximally coherent") {
  const auto out = std::filesystem::temp_directory_path() / "coherence_lab_mcs.json";
  auto v = verdicts("mcs-make --theta 0,1.5,-2,3 --out \"" + out.string() + "\"");
  CHECK(v["is_mcs"] == true);
  v = verdicts("coherence \"" + out.string() + "\"");
  CHECK(v["is_mcs"] == true);
  CHECK(v["value"].get<double>() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(v["witness_phases"][1].get<double>() == doctest::Approx(1.5).epsilon(1e-9));
  std::filesystem::remove(out);
}
