// Copyright 2026 The hfib Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "json.hpp"

#include "hfib/cli.hpp"
#include "hfib/errors.hpp"
#include "hfib/faults.hpp"
#include "hfib/hspec.hpp"

namespace hfib {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) out.push_back(cell);
  return out;
}

TEST(HSpecTest, ParsesGrammarVariants) {
  EXPECT_EQ(parse_poly("x"), QPoly::x());
  EXPECT_EQ(parse_poly("-x^2 + 3/4x - 2"),
            QPoly(std::vector<Rational>{Rational(-2), Rational(3, 4), Rational(-1)}));
  EXPECT_EQ(parse_poly("2x^3-2x^3"), QPoly());
  EXPECT_EQ(parse_poly("0"), QPoly());
  EXPECT_EQ(parse_poly("5x^0"), QPoly(5));
}

TEST(HSpecTest, ErrorsNameTheToken) {
  for (const char* bad : {"", "x^", "2/0x", "3y", "x+", "1//2", "x^-1", "++x"}) {
    try {
      parse_poly(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const ParseError& e) {
      EXPECT_NE(std::string(e.what()).find("position"), std::string::npos) << e.what();
    }
  }
}

TEST(HSpecTest, FormatExamples) {
  EXPECT_EQ(format_poly(parse_poly("3-x+1/2x^2")), "1/2x^2-x+3");
  EXPECT_EQ(format_poly(QPoly()), "0");
  EXPECT_EQ(format_poly(parse_poly("-1")), "-1");
  EXPECT_EQ(format_poly(parse_poly("x^4-2/3x")), "x^4-2/3x");
}

TEST(HSpecTest, RoundTripProperty) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Rational> coeffs(rng() % 8);
    for (auto& c : coeffs) {
      c = rng() % 3 == 0 ? Rational() : Rational(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 9) + 1);
    }
    const QPoly p(coeffs);
    const std::string text = format_poly(p);
    EXPECT_EQ(parse_poly(text), p) << text;
    EXPECT_EQ(format_poly(parse_poly(text)), text);
  }
}

TEST(CliSeqTest, RealSequences) {
  const CliRun golden = run({"seq", "--h", "1", "--n", "5"});
  EXPECT_EQ(golden.code, kExitOk);
  EXPECT_EQ(golden.out, "n,F\n0,0\n1,1\n2,1\n3,2\n4,3\n5,5\n");
  const CliRun poly = run({"seq", "--h", "x", "--n", "4"});
  EXPECT_EQ(lines(poly.out).back(), "4,x^3+2x");
}

TEST(CliSeqTest, AlgebraRows) {
  const CliRun quat = run({"seq", "--h", "1", "--n", "2", "--algebra", "quaternion"});
  EXPECT_EQ(quat.code, kExitOk);
  const auto rows = lines(quat.out);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], "n,e0,e1,e2,e3");
  EXPECT_EQ(rows[1], "0,0,1,1,2");
  EXPECT_EQ(rows[3], "2,1,2,3,5");
}

TEST(CliSeqTest, CsvAndJsonCarryTheSameData) {
  for (std::vector<std::string> extra : {std::vector<std::string>{}, {"--algebra", "octonion"}}) {
    std::vector<std::string> args{"seq", "--h", "1/2x^2-3", "--n", "9"};
    args.insert(args.end(), extra.begin(), extra.end());
    const CliRun csv = run(args);
    args.insert(args.end(), {"--format", "json"});
    const CliRun json = run(args);
    ASSERT_EQ(csv.code, kExitOk);
    ASSERT_EQ(json.code, kExitOk);
    const auto doc = nlohmann::json::parse(json.out);
    const auto rows = lines(csv.out);
    ASSERT_EQ(rows.size(), doc["rows"].size() + 1);
    for (std::size_t i = 0; i < doc["rows"].size(); ++i) {
      const auto& row = doc["rows"][i];
      std::vector<std::string> cells{std::to_string(row["n"].get<int>())};
      if (row.contains("value")) {
        cells.push_back(row["value"]);
      } else {
        for (const auto& c : row["coords"]) cells.push_back(c);
      }
      EXPECT_EQ(split(rows[i + 1]), cells);
    }
  }
}

TEST(CliSeqTest, UsageErrors) {
  const CliRun bad_poly = run({"seq", "--h", "x^^2", "--n", "3"});
  EXPECT_EQ(bad_poly.code, kExitUsage);
  EXPECT_NE(bad_poly.err.find("'^'"), std::string::npos) << bad_poly.err;
  EXPECT_EQ(run({"seq", "--h", "x", "--n", "-1"}).code, kExitUsage);
  EXPECT_EQ(run({"seq", "--n", "3"}).code, kExitUsage);
  EXPECT_EQ(run({"seq", "--h", "x", "--n", "3", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(run({"seq", "--h", "x", "--n", "3", "--algebra", "sedenion"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(CliVerifyTest, SmallRunPasses) {
  const CliRun r = run({"verify", "--seed", "42", "--nmax", "3"});
  EXPECT_EQ(r.code, kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["seed"], 42);
  EXPECT_EQ(doc["summary"]["fail"], 0);
}

TEST(CliVerifyTest, WritesReportFile) {
  const auto path = std::filesystem::temp_directory_path() / "hfib_cli_report.json";
  const CliRun r = run({"verify", "--seed", "5", "--nmax", "2", "--hcount", "3", "--report", path.string()});
  EXPECT_EQ(r.code, kExitOk);
  std::ifstream file(path);
  const auto doc = nlohmann::json::parse(file);
  EXPECT_EQ(doc["seed"], 5);
  EXPECT_NE(r.out.find("fail: 0"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(CliVerifyTest, CorruptedAlgebraFileFails) {
  const CliRun r = run({"verify", "--nmax", "4", "--hcount", "2", "--algebra", "data/corrupted_quaternion.json"});
  EXPECT_EQ(r.code, kExitCheckFailed);
  EXPECT_NE(r.err.find("witness"), std::string::npos);
  EXPECT_EQ(run({"verify", "--nmax", "4", "--hcount", "2", "--algebra", "data/non_unital.json"}).code,
            kExitCheckFailed);
  EXPECT_EQ(run({"verify", "--nmax", "4", "--hcount", "2", "--algebra", "data/custom_quaternion.json"}).code,
            kExitOk);
}

TEST(CliVerifyTest, ExitCodesUnderFaultInjection) {
  for (const Fault f : all_faults()) {
    const CliRun r = run({"verify", "--nmax", "5", "--hcount", "2", "--fault", std::string(fault_name(f))});
    EXPECT_EQ(r.code, kExitCheckFailed) << fault_name(f);
  }
}

TEST(CliVerifyTest, BadArguments) {
  EXPECT_EQ(run({"verify", "--seed", "abc"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--nmax", "-2"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--fault", "no_such_fault"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--algebra", "data/malformed.json"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--algebra", "data/missing.json"}).code, kExitUsage);
}

TEST(CliGenfunTest, Examples) {
  const CliRun zero = run({"genfun", "--h", "1", "--N", "0"});
  EXPECT_EQ(zero.code, kExitOk);
  EXPECT_NE(zero.out.find("numerator t^0: 0\n"), std::string::npos);
  EXPECT_NE(zero.out.find("verified"), std::string::npos);
  const CliRun pell = run({"genfun", "--h", "2", "--N", "8"});
  const auto rows = lines(pell.out);
  const char* expected[] = {"0", "1", "2", "5", "12", "29", "70", "169", "408"};
  for (int k = 0; k <= 8; ++k) EXPECT_EQ(rows[k], "t^" + std::to_string(k) + ": " + expected[k]);
  const CliRun cplx = run({"genfun", "--h", "x", "--N", "10", "--algebra", "complex"});
  EXPECT_EQ(cplx.code, kExitOk);
  EXPECT_EQ(lines(cplx.out).back(), "verified");
  EXPECT_NE(cplx.out.find("numerator t^0: (0, 1)"), std::string::npos);
  EXPECT_EQ(run({"genfun", "--h", "x", "--N", "-1"}).code, kExitUsage);
}

TEST(CliAlgebraTest, Examples) {
  const CliRun quat = run({"algebra", "quaternion"});
  EXPECT_EQ(quat.code, kExitOk);
  EXPECT_NE(quat.out.find("e1*e2 = e3\n"), std::string::npos);
  EXPECT_NE(quat.out.find("associative=yes commutative=no"), std::string::npos);
  EXPECT_NE(run({"algebra", "octonion"}).out.find("associative=no"), std::string::npos);
  EXPECT_NE(run({"algebra", "dual"}).out.find("e1*e1 = 0\n"), std::string::npos);
}

TEST(CliAlgebraTest, Files) {
  EXPECT_EQ(run({"algebra", "data/non_unital.json"}).code, kExitCheckFailed);
  EXPECT_EQ(run({"algebra", "data/malformed.json"}).code, kExitUsage);
  const CliRun corrupted = run({"algebra", "data/corrupted_quaternion.json", "--check"});
  EXPECT_EQ(corrupted.code, kExitCheckFailed);
  EXPECT_NE(corrupted.out.find("reference=differs"), std::string::npos);
  EXPECT_EQ(run({"algebra", "data/custom_quaternion.json", "--check"}).code, kExitOk);
}

}  // namespace
}  // namespace hfib
