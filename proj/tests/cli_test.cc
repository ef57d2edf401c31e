// Copyright 2026 The hcore Authors
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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "hcore/cli.h"

namespace hcore {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path Temp(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("hcore_cli_test_" + name);
}

std::string Slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

TEST(CliTest, LpValueAndDuals) {
  const Result r = Invoke({"lp", "--girth", "6", "--lambda", "1", "--sense", "max"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("status = Optimal"), std::string::npos);
  EXPECT_NE(r.out.find("value = 113/458"), std::string::npos);
  EXPECT_NE(r.out.find("Lambda_0 = 35/2748"), std::string::npos);
}

TEST(CliTest, Evidence) {
  const Result r = Invoke({"evidence"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("0.43307"), std::string::npos);
  EXPECT_NE(r.out.find("5/14"), std::string::npos);
  EXPECT_NE(r.out.find("4/13"), std::string::npos);
}

TEST(CliTest, IndpolyAndOccupancy) {
  Result r = Invoke({"indpoly", "petersen"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("deg 4: 1/1 10/1 30/1 30/1 5/1"), std::string::npos);
  EXPECT_NE(r.out.find("P(1) = 76\n"), std::string::npos);
  r = Invoke({"occupancy", "heawood", "--lambda", "1"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("113/458"), std::string::npos);
}

TEST(CliTest, ConfigsCountsAndDump) {
  Result r = Invoke({"configs", "--girth", "5"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("46 configurations"), std::string::npos);
  const auto path = Temp("dump.txt");
  r = Invoke({"configs", "--girth", "6", "--dump", path.string()});
  EXPECT_EQ(r.code, kExitPass);
  std::istringstream lines(Slurp(path));
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    ++n;
    EXPECT_NE(line.find("\tz=deg "), std::string::npos);
  }
  EXPECT_EQ(n, 10);
  std::filesystem::remove(path);
}

TEST(CliTest, CertifyCaseAndUserCertificate) {
  const auto path = Temp("cert.txt");
  Result r = Invoke({"certify", "--case", "petersen-i2", "--write-cert", path.string()});
  EXPECT_EQ(r.code, kExitPass) << r.out << r.err;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  r = Invoke({"certify", "--cert", path.string(), "--threads", "2"});
  EXPECT_EQ(r.code, kExitPass) << r.out << r.err;
  std::filesystem::remove(path);
}

TEST(CliTest, FailingCertificateExitsOne) {
  const auto good = Temp("good.txt");
  ASSERT_EQ(Invoke({"certify", "--case", "heawood-g6", "--write-cert", good.string()}).code,
            kExitPass);
  // Flip the sign of the Λ_2 numerator.
  std::istringstream in(Slurp(good));
  std::ostringstream bad_text;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("lambda2_num ", 0) == 0) {
      std::istringstream parts(line);
      std::string word, out;
      while (parts >> word) {
        if (word.find('/') != std::string::npos) {
          word = word[0] == '-' ? word.substr(1) : "-" + word;
          if (word == "-0/1") word = "0/1";
        }
        out += (out.empty() ? "" : " ") + word;
      }
      line = out;
    }
    bad_text << line << "\n";
  }
  const auto bad = Temp("bad.txt");
  std::ofstream(bad) << bad_text.str();
  const Result r = Invoke({"certify", "--cert", bad.string()});
  EXPECT_EQ(r.code, kExitFail) << r.out << r.err;
  std::filesystem::remove(good);
  std::filesystem::remove(bad);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(Invoke({}).code, kExitUsage);
  EXPECT_EQ(Invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"lp", "--girth", "7", "--lambda", "1", "--sense", "max"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"lp", "--girth", "6", "--lambda", "abc", "--sense", "max"}).code,
            kExitUsage);
  EXPECT_EQ(Invoke({"lp", "--girth", "6", "--lambda", "0", "--sense", "max"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"lp", "--girth", "6", "--lambda", "1", "--sense", "up"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"indpoly", "dodecahedron"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"certify"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"certify", "--case", "nope"}).code, kExitUsage);
}

TEST(CliTest, Deterministic) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"configs", "--girth", "4"},
        std::vector<std::string>{"lp", "--girth", "4", "--lambda", "1/2", "--sense", "min"},
        std::vector<std::string>{"crosscheck", "gp72", "--lambda", "3/2"}}) {
    EXPECT_EQ(Invoke(args).out, Invoke(args).out);
  }
  const auto a = Temp("a.json"), b = Temp("b.json");
  Invoke({"certify", "--case", "heawood-g5", "--threads", "1", "--json", a.string()});
  Invoke({"certify", "--case", "heawood-g5", "--threads", "4", "--json", b.string()});
  EXPECT_EQ(Slurp(a), Slurp(b));
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST(CliTest, JsonOutput) {
  const auto path = Temp("lp.json");
  ASSERT_EQ(Invoke({"lp", "--girth", "6", "--lambda", "1", "--sense", "max", "--json",
                 path.string()})
                .code,
            kExitPass);
  const auto j = nlohmann::json::parse(Slurp(path));
  EXPECT_EQ(j.at("value").get<std::string>(), "113/458");
  std::filesystem::remove(path);
}

TEST(CliTest, GraphFromFile) {
  const auto path = Temp("c5.txt");
  std::ofstream(path) << "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n";
  const Result r = Invoke({"indpoly", path.string()});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("deg 2: 1/1 5/1 5/1"), std::string::npos);
  EXPECT_EQ(resolve_graph(path.string()).n(), 5);
  std::filesystem::remove(path);
  EXPECT_EQ(resolve_graph("petersen").n(), 10);
}

TEST(CrosscheckTest, NamedGraphs) {
  for (const char* name : {"petersen", "heawood", "gp72"}) {
    const CrosscheckResult r = crosscheck(resolve_graph(name), mpq_class(2, 3));
    EXPECT_TRUE(r.ok()) << name;
    EXPECT_EQ(r.total_probability, 1);
    EXPECT_EQ(r.alpha_from_views, r.alpha_from_graph);
  }
  EXPECT_EQ(crosscheck(resolve_graph("petersen"), 1).support_size, 1);
  EXPECT_EQ(crosscheck(resolve_graph("heawood"), 1).support_size, 4);
}

TEST(SpotCheckTest, Listed) {
  const auto checks = lp_spot_checks();
  EXPECT_FALSE(checks.empty());
  for (const auto& c : checks) {
    EXPECT_GT(c.lambda, 0);
    EXPECT_TRUE(c.graph == "heawood" || c.graph == "petersen");
  }
}

TEST(FormatTest, SignificantDigits) {
  EXPECT_EQ(FormatSignificant(0.4330733340286331, 5), "0.43307");
  EXPECT_EQ(FormatSignificant(1.845934, 6), "1.84593");
  EXPECT_EQ(FormatSignificant(2.0, 3), "2");
}

}  // namespace
}  // namespace hcore
