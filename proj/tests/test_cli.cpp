// Copyright 2026 The fldrank Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "fldrank/cli.hpp"
#include "oracles.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = fldrank::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string kite() { return (oracle::data_dir() / "kite.edges").string(); }

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    for (std::string c; std::getline(ls, c, ',');) cells.push_back(c);
    rows.push_back(cells);
  }
  return rows;
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "fldrank_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("rank writes the rank table") {
  auto r = call({"rank", "--input", kite(), "--measure", "fld"});
  REQUIRE(r.code == 0);
  auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 11);
  CHECK(rows[0] == std::vector<std::string>{"rank", "node", "score", "undefined"});
  CHECK(rows[1][0] == "1");
  CHECK(rows[1][1] == "4");
  CHECK(rows[10][1] == "10");

  auto dc = csv_rows(call({"rank", "--input", kite(), "--measure", "dc"}).out);
  CHECK(dc[1][1] == "7");
  CHECK(dc[1][2] == "6.000000");
}

TEST_CASE("rank on an empty graph prints only the header") {
  auto path = scratch("empty.edges");
  std::ofstream(path) << "# nothing here\n";
  auto r = call({"rank", "--input", path.string(), "--measure", "bc"});
  CHECK(r.code == 0);
  CHECK(r.out == "rank,node,score,undefined\n");
}

TEST_CASE("undefined nodes are flagged and listed last") {
  auto path = scratch("isolated.edges");
  std::ofstream(path) << "a b\nb c\nz z\n";
  auto r = call({"rank", "--input", path.string(), "--measure", "cc"});
  REQUIRE(r.code == 0);
  auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[4][1] == "z");
  CHECK(rows[4][3] == "1");
  CHECK(r.err.find("self-loop") != std::string::npos);
}

TEST_CASE("si with lambda 1 follows BFS layers") {
  auto r = call({"si", "--input", kite(), "--seeds", "7", "--lambda", "1"});
  REQUIRE(r.code == 0);
  auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == std::vector<std::string>{"t", "mean_F", "std_F"});
  const char* expect[] = {"1.000000", "7.000000", "8.000000", "9.000000", "10.000000"};
  for (int t = 0; t < 5; ++t) {
    CHECK(rows[t + 1][0] == std::to_string(t));
    CHECK(rows[t + 1][1] == expect[t]);
    CHECK(rows[t + 1][2] == "0.000000");
  }
}

TEST_CASE("si with lambda 0 stays at the seed count") {
  auto r = call({"si", "--input", kite(), "--seeds", "1,2", "--lambda", "0", "--max-steps", "5"});
  REQUIRE(r.code == 0);
  auto rows = csv_rows(r.out);
  REQUIRE(rows.size() >= 2);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i][1] == "2.000000");
}

TEST_CASE("si from top-ranked seeds and beta") {
  auto r = call({"si", "--input", kite(), "--top", "3", "--measure", "fld", "--beta", "1",
                 "--replicates", "20"});
  REQUIRE(r.code == 0);
  auto rows = csv_rows(r.out);
  CHECK(rows[1][1] == "3.000000");
  auto manifest = nlohmann::json::parse(r.err);
  CHECK(manifest["parameters"]["lambda"].get<double>() == 0.5);
  CHECK(manifest["parameters"]["resolved_seeds"] == nlohmann::json({"4", "5", "7"}));
}

TEST_CASE("tau sweep rows") {
  auto r = call({"tau", "--input", kite(), "--measure", "fld", "--lambda-range", "0.1:0.1:0.1",
                 "--replicates", "10"});
  REQUIRE(r.code == 0);
  auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == std::vector<std::string>{"lambda", "tau", "n_c", "n_d"});
  CHECK(rows[1][0] == "0.100000");
  const double tau = std::stod(rows[1][1]);
  CHECK(tau >= -1.0);
  CHECK(tau <= 1.0);

  auto full = call({"tau", "--input", kite(), "--measure", "ld", "--replicates", "5"});
  CHECK(csv_rows(full.out).size() == 11);
}

TEST_CASE("compare overlap matrix") {
  auto r = call({"compare", "--input", kite(), "--measures", "fld,cc", "--k", "3"});
  REQUIRE(r.code == 0);
  auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == std::vector<std::string>{"measure_a", "measure_b", "k", "overlap"});
  CHECK(rows[1] == std::vector<std::string>{"fld", "fld", "3", "3"});
  CHECK(rows[4] == std::vector<std::string>{"cc", "cc", "3", "3"});

  auto all = call({"compare", "--input", kite(), "--k", "10"});
  CHECK(csv_rows(all.out).size() == 37);
}

TEST_CASE("json output mirrors csv columns") {
  auto r = call({"rank", "--input", kite(), "--measure", "dc", "--output", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 10);
  CHECK(j[0]["rank"] == 1);
  CHECK(j[0]["node"] == "7");
  CHECK(j[0]["score"].get<double>() == 6.0);
  CHECK(j[0]["undefined"] == false);
}

TEST_CASE("manifest replay reproduces the output") {
  auto out = scratch("si.csv");
  auto r = call({"si", "--input", kite(), "--seeds", "1", "--lambda", "0.3", "--replicates", "25",
                 "--rng-seed", "9", "--out", out.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  auto manifest_path = out.string() + ".manifest.json";
  auto manifest = nlohmann::json::parse(slurp(manifest_path));
  CHECK(manifest["command"] == "si");
  CHECK(manifest["input"]["fnv1a64"].get<std::string>().size() == 16);
  CHECK(manifest["parameters"]["rng_seed"] == 9);

  auto again = call({"replay", "--from", manifest_path});
  REQUIRE(again.code == 0);
  CHECK(again.out == slurp(out));
}

TEST_CASE("replay refuses a changed input") {
  auto input = scratch("mutable.edges");
  std::ofstream(input) << "a b\nb c\n";
  auto manifest = scratch("mutable.json");
  REQUIRE(call({"rank", "--input", input.string(), "--measure", "dc", "--manifest",
                manifest.string()})
              .code == 0);
  std::ofstream(input) << "a b\nb c\nc d\n";
  auto r = call({"replay", "--from", manifest.string()});
  CHECK(r.code == fldrank::cli::kFailure);
  CHECK(r.err.find("changed") != std::string::npos);
}

TEST_CASE("error exit codes") {
  using namespace fldrank::cli;
  CHECK(call({}).code == kUsage);
  CHECK(call({"rank", "--input", kite()}).code == kUsage);
  CHECK(call({"rank", "--input", kite(), "--measure", "pagerank"}).code == kUsage);
  CHECK(call({"rank", "--input", "/no/such/file", "--measure", "dc"}).code == kIoError);
  CHECK(call({"si", "--input", kite(), "--seeds", "1"}).code == kUsage);
  CHECK(call({"si", "--input", kite(), "--seeds", "1", "--lambda", "0.1", "--beta", "2"}).code ==
        kUsage);
  CHECK(call({"si", "--input", kite(), "--seeds", "1", "--lambda", "1.5"}).code == kUsage);
  CHECK(call({"tau", "--input", kite(), "--measure", "dc", "--lambda-range", "0.2:0.1:0.01"}).code ==
        kUsage);
  CHECK(call({"compare", "--input", kite(), "--k", "11"}).code == kUsage);

  auto missing = call({"si", "--input", kite(), "--seeds", "1,42", "--lambda", "0.1"});
  CHECK(missing.code == kUsage);
  CHECK(missing.err.find("'42'") != std::string::npos);

  auto bad = scratch("bad.edges");
  std::ofstream(bad) << "a b\nc\n";
  auto parse = call({"rank", "--input", bad.string(), "--measure", "dc"});
  CHECK(parse.code == kParseError);
  CHECK(parse.err.find("line 2") != std::string::npos);
}

TEST_CASE("help and version exit cleanly") {
  CHECK(call({"--help"}).code == 0);
  auto v = call({"--version"});
  CHECK(v.code == 0);
  CHECK(v.out.find(fldrank::cli::kVersion) != std::string::npos);
}
