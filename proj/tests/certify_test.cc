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

#include <array>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "hcore/certify.h"
#include "hcore/localview.h"
#include "oracles.h"

namespace hcore {
namespace {

// target - α_C + Σ Λ_t (γ^v_t - γ^u_t), negated for a min certificate.
RatFunc OracleSlack(const Configuration& c, const DualCertificate& cert) {
  const ConfigFunctions f = config_functions(c);
  RatFunc s = cert.target_alpha - f.alpha;
  for (int t = 0; t < 3; ++t) s += cert.lambdas[t] * (f.gamma_v[t] - f.gamma_u[t]);
  return cert.sense == Sense::kMax ? s : RatFunc() - s;
}

const DualCertificate& Cert(const std::string& name) {
  static const auto* all = new std::map<std::string, DualCertificate>(builtin_certificates());
  return all->at(name);
}

const VerificationReport& Report(const std::string& name) {
  static auto* cache = new std::map<std::string, VerificationReport>();
  auto it = cache->find(name);
  if (it == cache->end()) it = cache->emplace(name, verify_case(name)).first;
  return it->second;
}

TEST(BuiltinTest, Names) {
  EXPECT_EQ(builtin_certificate_names().size(), 6u);
  EXPECT_EQ(builtin_certificates().size(), 6u);
  EXPECT_THROW(builtin_certificate("heawood-g7"), CertificateError);
}

TEST(BuiltinTest, EveryCasePasses) {
  for (const std::string& name : builtin_certificate_names()) {
    const VerificationReport& r = Report(name);
    EXPECT_TRUE(r.pass()) << ReportText(r);
    EXPECT_EQ(r.failures(), 0) << name;
    EXPECT_TRUE(r.factors_ok) << name;
    EXPECT_TRUE(r.denominators_covered) << name;
    EXPECT_EQ(r.verdicts.size(), enumerate_configurations(Cert(name).girth_class).size());
  }
}

TEST(BuiltinTest, TightSetsAreTheZeroSlackViews) {
  for (const std::string& name : builtin_certificate_names()) {
    const DualCertificate& cert = Cert(name);
    std::vector<std::string> zero;
    for (const auto& c : enumerate_configurations(cert.girth_class)) {
      if (OracleSlack(c, cert).is_zero()) zero.push_back(c.canon_key);
    }
    EXPECT_EQ(Report(name).tight, zero) << name;
    std::set<std::string> expected;
    for (const auto& e : cert.expected_tight) expected.insert(e.config.canon_key);
    EXPECT_EQ(std::set<std::string>(zero.begin(), zero.end()), expected) << name;
  }
}

TEST(BuiltinTest, DistinctTightCounts) {
  EXPECT_EQ(Report("heawood-g6").tight.size(), 4u);
  EXPECT_EQ(Report("heawood-g5").tight.size(), 5u);
  EXPECT_EQ(Report("petersen-i1").tight.size(), 3u);
  EXPECT_EQ(Report("petersen-i2").tight.size(), 3u);
  EXPECT_EQ(Report("petersen-i3").tight.size(), 3u);
  EXPECT_EQ(Report("petersen-i4").tight.size(), 6u);
}

TEST(BuiltinTest, Ranks) {
  EXPECT_EQ(Report("heawood-g6").rank, 4);
  EXPECT_EQ(Report("petersen-i4").rank, 4);
  EXPECT_EQ(Report("petersen-i1").rank, 3);
}

TEST(BuiltinTest, SlackMatchesOracle) {
  for (const std::string& name : builtin_certificate_names()) {
    const DualCertificate& cert = Cert(name);
    for (const auto& c : enumerate_configurations(cert.girth_class)) {
      ASSERT_EQ(slack(c, cert), OracleSlack(c, cert)) << name << " " << c.canon_key;
    }
  }
}

TEST(BuiltinTest, SlackNonnegativeAtSamples) {
  for (const std::string& name : builtin_certificate_names()) {
    const DualCertificate& cert = Cert(name);
    for (const auto& c : enumerate_configurations(cert.girth_class)) {
      const RatFunc s = OracleSlack(c, cert);
      for (const mpq_class& x : cert.samples) {
        EXPECT_GE(s.Eval(Scalar(x)).sign(), 0) << name << " " << c.canon_key;
      }
    }
  }
}

TEST(HeawoodTest, ScaledSlackTable) {
  const DualCertificate& cert = Cert("heawood-g6");
  const auto table = oracle::FmaxTable();
  for (const auto& c : enumerate_configurations(GirthClass::kG6)) {
    const auto cv = c.CVector();
    int hits = 0;
    for (const auto& e : table) {
      if (e.c != cv) continue;
      ++hits;
      EXPECT_EQ(scaled_slack(c, cert), e.f) << c.Label();
    }
    EXPECT_EQ(hits, 1) << c.Label();
  }
}

TEST(HeawoodTest, PrintedDenominatorFails) {
  DualCertificate cert = Cert("heawood-g6");
  const auto printed = heawood_as_printed();
  cert.lambdas = printed;
  const VerificationReport r = verify_certificate(cert);
  EXPECT_FALSE(r.pass());
  EXPECT_GT(r.failures(), 0);
  // The two versions agree at λ = 1 only.
  const auto stored = Cert("heawood-g6").lambdas;
  for (int t = 0; t < 3; ++t) {
    EXPECT_EQ(printed[t].Eval(Scalar(1)), stored[t].Eval(Scalar(1)));
    EXPECT_NE(printed[t].Eval(Scalar(2)), stored[t].Eval(Scalar(2)));
    EXPECT_EQ(printed[t] * RatFunc(Poly({1, 2}), Poly({2, 1})), stored[t]);
  }
}

TEST(HeawoodTest, DerivedFromThreeTightViews) {
  const RatFunc target = Cert("heawood-g6").target_alpha;
  const auto want = Cert("heawood-g6").lambdas;
  const std::vector<Configuration> tight = {
      g6_configuration(0, 0, 0), g6_configuration(0, 0, 1), g6_configuration(1, 1, 1)};
  EXPECT_EQ(derive_dual_from_tight(GirthClass::kG6, tight, target), want);
  const std::vector<Configuration> permuted = {tight[2], tight[0], tight[1]};
  EXPECT_EQ(derive_dual_from_tight(GirthClass::kG6, permuted, target), want);
  // The fourth tight view gives the same multipliers.
  const std::vector<Configuration> other = {
      g6_configuration(0, 0, 0), g6_configuration(1, 1, 1), g6_configuration(2, 2, 2)};
  EXPECT_EQ(derive_dual_from_tight(GirthClass::kG6, other, target), want);
}

TEST(HeawoodTest, SingularSystemThrows) {
  const RatFunc target = Cert("heawood-g6").target_alpha;
  const Configuration a = g6_configuration(0, 0, 0);
  EXPECT_THROW(derive_dual_from_tight(GirthClass::kG6, {a, a, g6_configuration(1, 1, 1)},
                                      target),
               CertificateError);
}

TEST(PetersenTest, PrintedIntervalOneSignFails) {
  DualCertificate cert = Cert("petersen-i1");
  cert.lambdas = petersen_i1_as_printed();
  EXPECT_FALSE(verify_certificate(cert).pass());
}

TEST(PetersenTest, IntervalOneDerivedFromTightViews) {
  const DualCertificate& cert = Cert("petersen-i1");
  std::vector<Configuration> tight;
  for (const auto& e : cert.expected_tight) tight.push_back(e.config);
  ASSERT_EQ(tight.size(), 3u);
  // The Petersen view contributes 0 = 0, so the three views leave Λ_0
  // free. With Λ_0 = 0 the other two fix Λ_1, Λ_2 by Cramer's rule.
  EXPECT_THROW(derive_dual_from_tight(GirthClass::kG4, tight, cert.target_alpha),
               CertificateError);
  EXPECT_TRUE(cert.lambdas[0].is_zero());
  std::array<std::array<RatFunc, 3>, 2> m;
  const std::array<int, 2> pick = {0, 2};
  for (int k = 0; k < 2; ++k) {
    const ConfigFunctions f = config_functions(tight[pick[k]]);
    m[k][0] = f.gamma_v[1] - f.gamma_u[1];
    m[k][1] = f.gamma_v[2] - f.gamma_u[2];
    m[k][2] = f.alpha - cert.target_alpha;
  }
  const RatFunc det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  ASSERT_FALSE(det.is_zero());
  EXPECT_EQ((m[0][2] * m[1][1] - m[0][1] * m[1][2]) / det, cert.lambdas[1]);
  EXPECT_EQ((m[0][0] * m[1][2] - m[0][2] * m[1][0]) / det, cert.lambdas[2]);
}

TEST(PositivityTest, FactorsCertified) {
  for (const std::string& name : builtin_certificate_names()) {
    for (const FactorCheck& f : Report(name).factor_checks) {
      EXPECT_TRUE(f.verdict.certified()) << name << " " << f.factor;
    }
    EXPECT_EQ(Report(name).max_polya_k, 0) << name;
  }
}

TEST(PositivityTest, ZeroSlackVerdicts) {
  const DualCertificate& cert = Cert("heawood-g6");
  EXPECT_EQ(verify_config(g6_configuration(2, 2, 2), cert).kind, Verdict::Kind::kZero);
  EXPECT_EQ(verify_config(g6_configuration(0, 0, 2), cert).kind,
            Verdict::Kind::kNonnegCoeffs);
}

TEST(FormatTest, RoundTrip) {
  for (const std::string& name : builtin_certificate_names()) {
    const DualCertificate& cert = Cert(name);
    const std::string text = write_certificate(cert);
    const DualCertificate back = parse_certificate(text);
    EXPECT_EQ(back.girth_class, cert.girth_class) << name;
    EXPECT_EQ(back.sense, cert.sense);
    EXPECT_EQ(back.target_alpha, cert.target_alpha);
    for (int t = 0; t < 3; ++t) EXPECT_EQ(back.lambdas[t], cert.lambdas[t]) << name << t;
    EXPECT_EQ(back.lo, cert.lo);
    EXPECT_EQ(back.hi.has_value(), cert.hi.has_value());
    if (cert.hi) {
      EXPECT_EQ(*back.hi, *cert.hi);
    }
    EXPECT_EQ(back.substitution.has_value(), cert.substitution.has_value());
    EXPECT_EQ(back.positive_denominator_factors, cert.positive_denominator_factors);
    EXPECT_EQ(back.scaling.has_value(), cert.scaling.has_value());
    EXPECT_EQ(back.samples, cert.samples);
    EXPECT_EQ(write_certificate(back), text);
  }
}

TEST(FormatTest, LoadedCertificateVerifies) {
  const auto path = std::filesystem::temp_directory_path() / "hcore_cert_test.txt";
  {
    std::ofstream f(path);
    f << "# written by a test\n" << write_certificate(Cert("petersen-i2"));
  }
  const DualCertificate loaded = load_certificate(path.string());
  std::filesystem::remove(path);
  const VerificationReport r = verify_certificate(loaded);
  EXPECT_EQ(r.failures(), 0);
  EXPECT_EQ(r.tight, Report("petersen-i2").tight);
}

TEST(FormatTest, Malformed) {
  EXPECT_THROW(parse_certificate("girth 7\n"), CertificateError);
  EXPECT_THROW(parse_certificate("girth 6\nsense max\n"), CertificateError);
  EXPECT_THROW(parse_certificate("bogus line\n"), CertificateError);
  EXPECT_THROW(load_certificate("/nonexistent/cert.txt"), CertificateError);
}

}  // namespace
}  // namespace hcore
