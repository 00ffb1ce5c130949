// Copyright 2026 The dqc1-lab Authors
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


#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

using Catch::Matchers::WithinAbs;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string &args) {
  const std::string command = std::string(DQC1_LAB_BINARY) + " " + args + " 2>/dev/null";
  FILE *pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int raw = pclose(pipe);
  return Run{WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::vector<std::vector<std::string>> parse_csv(const std::string &text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream cell_stream(line);
    std::string cell;
    while (std::getline(cell_stream, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("reproduce --json emits one JSON document whose status matches the exit code") {
  const Run r = run("reproduce --json");
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_object());
  CHECK(j["command"] == "reproduce");
  CHECK(j["checks"].size() >= 9);
  for (const auto &c : j["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("computed"));
    CHECK(c.contains("expected"));
    CHECK(c.contains("tolerance"));
    CHECK(c.contains("pass"));
    CHECK(c.contains("note"));
  }
  CHECK(r.status == (j["all_pass"].get<bool>() ? 0 : 1));
}

TEST_CASE("reproduce with a perturbed state fails more checks") {
  const auto baseline = nlohmann::json::parse(run("reproduce --json").out);
  const Run r = run("reproduce --json --perturb 1e-3");
  CHECK(r.status == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["failures"].get<int>() > baseline["failures"].get<int>());
}

TEST_CASE("reproduce prints a table before the JSON by default") {
  const Run r = run("reproduce");
  CHECK(r.out.rfind("PASS ", 0) == 0);
  CHECK(r.out.find("checks passed") != std::string::npos);
  CHECK(r.out.find("\n{") != std::string::npos);
}

TEST_CASE("sweep mult-negativity") {
  const Run r = run("sweep --quantity mult-negativity --start 0 --end 1 --steps 101");
  REQUIRE(r.status == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 102);
  CHECK(rows[0] == std::vector<std::string>{"alpha", "quantity", "value", "closed_form", "abs_error"});
  const auto &last = rows.back();
  CHECK(last[0] == "1");
  CHECK_THAT(std::stod(last[2]), WithinAbs(1.25, 1e-9));
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(std::stod(rows[i][4]) <= 1e-9);
}

TEST_CASE("sweep discord at alpha 0") {
  const Run r = run("sweep --quantity discord --start 0 --end 0 --steps 2");
  REQUIRE(r.status == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == std::vector<std::string>{"alpha", "quantity", "value"});
  for (std::size_t i = 1; i < 3; ++i) CHECK_THAT(std::stod(rows[i][2]), WithinAbs(0.0, 1e-9));
}

TEST_CASE("sweep activated-negativity reports the identity-strategy value") {
  const Run r = run("sweep --quantity activated-negativity --start 0 --end 1 --steps 11");
  REQUIRE(r.status == 0);
  const auto rows = parse_csv(r.out);
  REQUIRE(rows.size() == 12);
  const auto &row = rows[9];
  CHECK_THAT(std::stod(row[0]), WithinAbs(0.8, 1e-15));
  CHECK_THAT(std::stod(row[2]), WithinAbs(1.8, 1e-9));
  CHECK_THAT(std::stod(row[3]), WithinAbs(1.3, 1e-15));
}

TEST_CASE("sweep output is byte-stable and --out writes the same bytes") {
  const std::string args = "sweep --quantity separability --start 0 --end 1 --steps 21";
  const Run a = run(args), b = run(args);
  CHECK(a.out == b.out);
  const auto path = std::filesystem::temp_directory_path() / "dqc1_lab_sweep_test.csv";
  REQUIRE(run(args + " --out " + path.string()).status == 0);
  std::ifstream in(path, std::ios::binary);
  const std::string written((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(written == a.out);
  std::filesystem::remove(path);
}

TEST_CASE("sweep usage errors exit with status 2") {
  CHECK(run("sweep --quantity nonsense --start 0 --end 1 --steps 3").status == 2);
  CHECK(run("sweep --quantity discord --start 0.5 --end 0.2 --steps 3").status == 2);
  CHECK(run("sweep --quantity discord --start 0 --end 1 --steps 1").status == 2);
  CHECK(run("sweep --start 0 --end 1 --steps 3").status == 2);
  CHECK(run("").status == 2);
}

TEST_CASE("trace-estimate") {
  const Run r = run("trace-estimate --n 2 --alpha 1 --shots 100000 --seed 5 --json");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["exact"]["x"] == 0.5);
  CHECK(j["implied_normalized_trace"]["exact_re"] == 0.5);
  const double dev = std::abs(j["sampled"]["x"].get<double>() - 0.5);
  CHECK(dev <= 6.0 * j["std_error"]["x"].get<double>());

  const Run zero = run("trace-estimate --n 2 --alpha 0 --shots 100 --seed 1 --json");
  CHECK(zero.status == 2);
  const auto z = nlohmann::json::parse(zero.out);
  CHECK(z["exact"]["x"] == 0.0);
  CHECK(z["implied_normalized_trace"].is_null());
  CHECK(z["error"].get<std::string>().find("unestimable at alpha=0") != std::string::npos);

  CHECK(run("trace-estimate --n 6 --alpha 1 --shots 10 --seed 1").status == 2);
  CHECK(run("trace-estimate --n 2 --alpha 1 --shots 10 --seed 1").status == 0);
}

TEST_CASE("separability") {
  const auto sep = nlohmann::json::parse(run("separability --alpha 0.5 --json").out);
  CHECK(sep["status"] == "FullySeparable");
  CHECK(sep.contains("decomposition"));
  const auto npt = nlohmann::json::parse(run("separability --alpha 0.9 --json").out);
  CHECK(npt["status"] == "NptEntangled");
  CHECK_THAT(npt["witness"]["eigenvalue"].get<double>(), WithinAbs(-0.1, 1e-12));
  CHECK(run("separability --alpha 0.3").status == 0);
}

TEST_CASE("activate") {
  const Run r = run("activate --alpha 0.5 --strategies 10 --seed 3 --json");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["strategies"].size() == 11);
  CHECK(j["strategies"][0]["kind"] == "identity");
  CHECK_THAT(j["identity"].get<double>(), WithinAbs(1.5, 1e-9));
  CHECK(j["min"].get<double>() > 1.0);
  CHECK(run("activate --alpha 0.5 --strategies 10 --seed 3 --json").out == r.out);
}
