// Copyright (c) 2026 the hohlov authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end checks against the built binary (path in $HOHLOV_CLI, set by
// the test harness).

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "hohlov/io.hpp"

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

const char* cli_path() {
  const char* path = std::getenv("HOHLOV_CLI");
  REQUIRE_MESSAGE(path != nullptr, "HOHLOV_CLI must point at the built binary");
  return path;
}

CliResult run_cli(const std::string& args) {
  const std::string command = std::string("'") + cli_path() + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::filesystem::path write_temp_series(const hohlov::TruncatedSeries& s,
                                        const std::string& name) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << hohlov::series_to_json(s).dump(2) << "\n";
  return path;
}

}  // namespace

TEST_CASE("phi subcommand emits the Libera multipliers") {
  const CliResult r = run_cli("phi --a 1 --b 2 --c 3 --n 5");
  CHECK(r.exit_code == 0);
  const auto j = hohlov::json::parse(r.out);
  REQUIRE(j["phi"].size() == 5);
  for (int n = 1; n <= 5; ++n) {
    CHECK(j["phi"][n - 1].get<double>() == doctest::Approx(2.0 / (n + 1.0)).epsilon(1e-12));
  }
}

TEST_CASE("bound subcommand reproduces the unit-multiplier values") {
  const CliResult r =
      run_cli("bound --class s --lambda 0 --beta 0 --m 2 --gamma 1,0 --a 1 --b 1 --c 1");
  CHECK(r.exit_code == 0);
  const auto j = hohlov::json::parse(r.out);
  CHECK(j["a2"]["bound"].get<double>() == doctest::Approx(0.816497).epsilon(1e-5));
  CHECK(j["a3"]["bound"].get<double>() == doctest::Approx(0.666667).epsilon(1e-5));
}

TEST_CASE("bound --corollary agrees with the plain evaluator at the matching lambda") {
  const std::string common = " --beta 0.3 --m 3 --gamma 0.5,0.5 --a 1 --b 2 --c 3";
  const auto plain = run_cli("bound --class k --lambda 1" + common);
  const auto special = run_cli("bound --class k --lambda 1" + common + " --corollary k1");
  CHECK(plain.exit_code == 0);
  CHECK(special.exit_code == 0);
  const auto jp = hohlov::json::parse(plain.out);
  const auto js = hohlov::json::parse(special.out);
  for (int i = 0; i < 2; ++i) {
    CHECK(jp["a2"]["branches"][i].get<double>() ==
          doctest::Approx(js["a2"]["branches"][i].get<double>()).epsilon(1e-12));
  }
  for (int i = 0; i < 3; ++i) {
    CHECK(jp["a3"]["branches"][i].get<double>() ==
          doctest::Approx(js["a3"]["branches"][i].get<double>()).epsilon(1e-12));
  }
  CHECK(jp["a2"]["bound"].get<double>() ==
        doctest::Approx(js["a2"]["bound"].get<double>()).epsilon(1e-12));
}

TEST_CASE("apply with identity parameters is a byte-stable fixed point") {
  hohlov::TruncatedSeries s(5);
  s.set(1, 1.0);
  s.set(2, {0.25, -0.75});
  s.set(3, {0.0, 0.125});
  const auto path = write_temp_series(s, "hohlov_cli_identity.json");
  const std::string flags = " --a 2 --b 1 --c 2 --order 5";
  const CliResult once = run_cli("apply --op hohlov --input '" + path.string() + "'" + flags);
  CHECK(once.exit_code == 0);

  const auto path2 = std::filesystem::temp_directory_path() / "hohlov_cli_identity2.json";
  std::ofstream(path2) << once.out;
  const CliResult twice = run_cli("apply --op hohlov --input '" + path2.string() + "'" + flags);
  CHECK(twice.exit_code == 0);
  CHECK(once.out == twice.out);
  std::filesystem::remove(path);
  std::filesystem::remove(path2);
}

TEST_CASE("revert emits the closed-form cubic inverse") {
  hohlov::TruncatedSeries s(3);
  s.set(1, 1.0);
  s.set(2, 0.5);
  s.set(3, 0.25);
  const auto path = write_temp_series(s, "hohlov_cli_revert.json");
  const CliResult r = run_cli("revert --input '" + path.string() + "'");
  CHECK(r.exit_code == 0);
  const auto back = hohlov::series_from_json(hohlov::json::parse(r.out));
  CHECK(std::abs(back[2] - hohlov::cplx{-0.5}) < 1e-14);
  CHECK(std::abs(back[3] - hohlov::cplx{0.25}) < 1e-14);
  std::filesystem::remove(path);
}

TEST_CASE("verify is byte-deterministic for a fixed seed") {
  const std::string args =
      "verify --class s --lambda 0 --beta 0 --m 2 --gamma 1,0 --a 1 --b 1 --c 1 "
      "--samples 10000 --seed 42";
  const CliResult first = run_cli(args);
  const CliResult second = run_cli(args);
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);
  const auto j = hohlov::json::parse(first.out);
  CHECK(j["tightness"]["a2"].get<double>() > 0.99);
  CHECK(j["tightness"]["a2"].get<double>() <= 1.0 + 1e-9);
}

TEST_CASE("transform emits the expansion coefficients") {
  hohlov::TruncatedSeries s(6);
  s.set(1, 1.0);
  s.set(2, 0.4);
  s.set(3, -0.1);
  const auto path = write_temp_series(s, "hohlov_cli_transform.json");
  const CliResult r = run_cli(
      "transform --class s --input '" + path.string() +
      "' --gamma 2,0 --lambda 0 --beta 0 --m 2 --a 1 --b 1 --c 1");
  CHECK(r.exit_code == 0);
  const auto t = hohlov::series_from_json(hohlov::json::parse(r.out));
  // 1 + (f' - 1)/gamma for the identity operator at lambda 0.
  CHECK(std::abs(t[0] - hohlov::cplx{1.0}) == 0.0);
  CHECK(std::abs(t[1] - hohlov::cplx{0.4}) < 1e-14);      // 2 a2 / gamma
  CHECK(std::abs(t[2] - hohlov::cplx{-0.15}) < 1e-14);    // 3 a3 / gamma

  const CliResult inv = run_cli(
      "transform --class s --inverse --input '" + path.string() +
      "' --gamma 2,0 --lambda 0 --beta 0 --m 2 --a 1 --b 1 --c 1");
  CHECK(inv.exit_code == 0);
  const auto g = hohlov::series_from_json(hohlov::json::parse(inv.out));
  CHECK(std::abs(g[1] - hohlov::cplx{-0.4}) < 1e-14);     // -2 a2 / gamma
  std::filesystem::remove(path);
}

TEST_CASE("membership reports per-radius verdicts") {
  hohlov::TruncatedSeries s(8);
  s.set(1, 1.0);
  s.set(2, 1.2);
  const auto path = write_temp_series(s, "hohlov_cli_membership.json");
  const CliResult r = run_cli(
      "membership --class s --input '" + path.string() +
      "' --gamma 1,0 --lambda 0 --beta 0 --m 2 --a 1 --b 1 --c 1 --radii 0.99 --grid 4096");
  CHECK(r.exit_code == 0);
  const auto j = hohlov::json::parse(r.out);
  CHECK(j["pass"] == false);
  CHECK(j["direct"][0].get<double>() > j["threshold"].get<double>());
  std::filesystem::remove(path);
}

TEST_CASE("sweep emits one CSV row per step") {
  const CliResult r = run_cli(
      "sweep --class s --vary lambda --from 0 --to 1 --steps 5 --gamma 1,0 --lambda 0 "
      "--beta 0 --m 2 --a 1 --b 2 --c 3");
  CHECK(r.exit_code == 0);
  int lines = 0;
  for (char ch : r.out) lines += ch == '\n';
  CHECK(lines == 6);  // header + 5 rows
  CHECK(r.out.rfind("lambda,a2_branch1,", 0) == 0);
}

TEST_CASE("validation failures exit 2, computation failures exit 1") {
  CHECK(run_cli("bound --class x --lambda 0 --beta 0 --m 2 --gamma 1,0 --a 1 --b 1 --c 1")
            .exit_code == 2);
  CHECK(run_cli("bound --class s --lambda 0 --beta 0 --m 2 --gamma 0,0 --a 1 --b 1 --c 1")
            .exit_code == 2);
  CHECK(run_cli("bound --class s --lambda 0 --beta 1.5 --m 2 --gamma 1,0 --a 1 --b 1 --c 1")
            .exit_code == 2);
  CHECK(run_cli("verify --class s --lambda 0 --beta 0 --m 2 --gamma 1,0 --a 1 --b 1 --c 1 "
                "--samples 10 --seed 1")
            .exit_code == 2);
  CHECK(run_cli("revert --input /nonexistent.json").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
  // Multiplier overflow is a computation error.
  CHECK(run_cli("phi --a 1e300 --b 1e300 --c 1 --n 3").exit_code == 1);
}
