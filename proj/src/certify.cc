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

#include "hcore/certify.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

namespace hcore {
namespace {

// Per-certificate data shared by all configurations: the common
// denominator of the multipliers as a product of the asserted-positive
// factors, and the cofactors Dc / den(Λ_t).
struct Prepared {
  Poly common;
  std::array<Poly, 3> cofactor;
  bool covered = true;
  std::string uncovered;
};

Prepared Prepare(const DualCertificate& cert) {
  Prepared p;
  const auto& factors = cert.positive_denominator_factors;
  std::vector<int> exponent(factors.size(), 0);
  for (const RatFunc& l : cert.lambdas) {
    if (l.is_zero()) continue;
    Poly rest = l.den();
    for (size_t i = 0; i < factors.size(); ++i) {
      if (factors[i].degree() < 1) continue;
      int e = 0;
      while (rest.degree() >= factors[i].degree()) {
        auto [q, r] = poly_divmod(rest, factors[i]);
        if (!r.is_zero()) break;
        rest = q;
        ++e;
      }
      exponent[i] = std::max(exponent[i], e);
    }
    if (rest.degree() > 0) {
      p.covered = false;
      p.uncovered = rest.ToString();
    }
  }
  p.common = Poly::Constant(1);
  for (size_t i = 0; i < factors.size(); ++i) {
    p.common *= factors[i].Pow(exponent[i]);
  }
  for (int t = 0; t < 3; ++t) {
    const RatFunc& l = cert.lambdas[t];
    if (!l.is_zero() && p.covered) p.cofactor[t] = poly_div_exact(p.common, l.den());
  }
  return p;
}

Positivity CheckOnInterval(const Poly& f, const DualCertificate& cert,
                           int polya_limit) {
  if (!cert.substitution) return nonneg_on_halfline(f, polya_limit);
  const auto& [a, b] = *cert.substitution;
  return nonneg_on_halfline(mobius_substitute(f, a, b).num, polya_limit);
}

Poly SignNumerator(const Configuration& c, const DualCertificate& cert,
                   const Prepared& prep) {
  if (cert.scaling) return scaled_slack(c, cert);
  if (!prep.covered) {
    throw CertificateError("denominator factor not covered: " + prep.uncovered);
  }
  const ConfigFunctions f = config_functions(c);
  const Poly& nt = cert.target_alpha.num();
  const Poly& dt = cert.target_alpha.den();
  const Scalar three(3);
  // Slack (max sense) times 3 Z D_T Dc.
  Poly num = three * (nt * f.z * prep.common) - three * (f.z_plus * dt * prep.common);
  Poly dual_part;
  for (int t = 0; t < 3; ++t) {
    const RatFunc& l = cert.lambdas[t];
    if (l.is_zero()) continue;
    dual_part += l.num() * prep.cofactor[t] * (three * f.gv_num[t] - f.gu_num[t]);
  }
  num += dt * dual_part;
  if (cert.sense == Sense::kMin) num = -num;
  if (!cert.substitution) return num;
  const auto& [a, b] = *cert.substitution;
  return mobius_substitute(num, a, b).num;
}

Verdict FromPositivity(const Positivity& p) {
  switch (p.kind) {
    case Positivity::Kind::kIdenticallyZero:
      return {Verdict::Kind::kZero, 0, ""};
    case Positivity::Kind::kNonnegCoeffs:
      return {Verdict::Kind::kNonnegCoeffs, 0, ""};
    case Positivity::Kind::kPolyaPositive:
      return {Verdict::Kind::kPolyaPositive, p.k, ""};
    case Positivity::Kind::kIndeterminate:
      break;
  }
  return {Verdict::Kind::kFail, 0, "not certified nonnegative"};
}

Verdict VerifyPrepared(const Configuration& c, const DualCertificate& cert,
                       const Prepared& prep, int polya_limit) {
  try {
    return FromPositivity(nonneg_on_halfline(SignNumerator(c, cert, prep), polya_limit));
  } catch (const NotDivisible& e) {
    return {Verdict::Kind::kFail, 0, std::string("NotDivisible: ") + e.what()};
  } catch (const CertificateError& e) {
    return {Verdict::Kind::kFail, 0, e.what()};
  }
}

}  // namespace

std::string Verdict::ToString() const {
  switch (kind) {
    case Kind::kZero:
      return "Zero";
    case Kind::kNonnegCoeffs:
      return "NonnegCoeffs";
    case Kind::kPolyaPositive:
      return "PolyaPositive(" + std::to_string(k) + ")";
    case Kind::kFail:
      return "FAIL";
  }
  return "?";
}

RatFunc slack(const Configuration& c, const DualCertificate& cert) {
  const ConfigFunctions f = config_functions(c);
  RatFunc s = cert.target_alpha - f.alpha;
  for (int t = 0; t < 3; ++t) {
    if (cert.lambdas[t].is_zero()) continue;
    s += cert.lambdas[t] * (f.gamma_v[t] - f.gamma_u[t]);
  }
  return cert.sense == Sense::kMax ? s : -s;
}

Poly scaled_slack(const Configuration& c, const DualCertificate& cert) {
  if (!cert.scaling) {
    throw CertificateError(cert.name + " has no scaling polynomial");
  }
  const RatFunc s = slack(c, cert);
  const Poly z = config_functions(c).z;
  return poly_div_exact(*cert.scaling * z * s.num(), s.den());
}

Poly sign_numerator(const Configuration& c, const DualCertificate& cert) {
  return SignNumerator(c, cert, Prepare(cert));
}

Verdict verify_config(const Configuration& c, const DualCertificate& cert,
                      int polya_limit) {
  return VerifyPrepared(c, cert, Prepare(cert), polya_limit);
}

int VerificationReport::failures() const {
  return static_cast<int>(std::count_if(
      verdicts.begin(), verdicts.end(),
      [](const ConfigVerdict& v) { return !v.verdict.ok(); }));
}

bool VerificationReport::pass() const {
  return failures() == 0 && tight_match && factors_ok && denominators_covered;
}

VerificationReport verify_certificate(const DualCertificate& cert,
                                      int polya_limit, int threads) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.name = cert.name;
  const Prepared prep = Prepare(cert);
  rep.denominators_covered = prep.covered;

  rep.factors_ok = true;
  std::vector<Poly> to_check = cert.positive_denominator_factors;
  auto add = [&](const Poly& f) {
    if (std::find(to_check.begin(), to_check.end(), f) == to_check.end()) {
      to_check.push_back(f);
    }
  };
  add(cert.target_alpha.den());
  if (cert.scaling) add(*cert.scaling);
  for (const Poly& f : to_check) {
    const Positivity p = CheckOnInterval(f, cert, polya_limit);
    // A positive factor must not vanish identically.
    const bool ok = p.certified() && p.kind != Positivity::Kind::kIdenticallyZero;
    rep.factors_ok = rep.factors_ok && ok;
    rep.factor_checks.push_back({f.Serialize(), p});
  }

  const std::vector<Configuration> configs =
      enumerate_configurations(cert.girth_class);
  rep.verdicts.resize(configs.size());
  int workers = threads > 0 ? threads
                            : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, static_cast<int>(configs.size()));
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next++; i < configs.size(); i = next++) {
      rep.verdicts[i] = {configs[i], VerifyPrepared(configs[i], cert, prep, polya_limit)};
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  std::vector<int> tight_cols;
  for (size_t i = 0; i < configs.size(); ++i) {
    const Verdict& v = rep.verdicts[i].verdict;
    rep.max_polya_k = std::max(rep.max_polya_k, v.k);
    if (v.kind == Verdict::Kind::kZero) {
      rep.tight.push_back(configs[i].canon_key);
      tight_cols.push_back(static_cast<int>(i));
    }
  }
  std::set<std::string> expected;
  for (const auto& e : cert.expected_tight) {
    expected.insert(e.config.canon_key);
    rep.expected_labels.push_back(e.label);
  }
  for (const auto& c : configs) {
    if (expected.count(c.canon_key)) rep.expected_tight.push_back(c.canon_key);
  }
  // Without expectation data (user certificates) there is nothing to match.
  rep.tight_match = expected.empty() ||
                    (rep.expected_tight.size() == expected.size() &&
                     rep.tight == rep.expected_tight);

  if (!cert.samples.empty() && !tight_cols.empty()) {
    rep.rank_lambda = cert.samples.front();
    const LPProblem lp = build_lp(configs, rep.rank_lambda, cert.sense);
    rep.rank = constraint_rank(lp, tight_cols);
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

VerificationReport verify_case(const std::string& name, int polya_limit,
                               int threads) {
  return verify_certificate(builtin_certificate(name), polya_limit, threads);
}

std::string ReportText(const VerificationReport& r) {
  std::ostringstream out;
  out << "case " << r.name << ": " << (r.pass() ? "PASS" : "FAIL") << "\n";
  out << "  configurations: " << r.verdicts.size()
      << ", failures: " << r.failures() << ", max Polya exponent: " << r.max_polya_k
      << "\n";
  out << "  denominators covered by positive factors: "
      << (r.denominators_covered ? "yes" : "no") << "\n";
  for (const auto& f : r.factor_checks) {
    out << "  factor " << f.factor << " -> " << f.verdict.ToString() << "\n";
  }
  for (const auto& v : r.verdicts) {
    out << "  " << v.config.canon_key << " " << v.verdict.ToString();
    if (!v.verdict.detail.empty()) out << " (" << v.verdict.detail << ")";
    out << "\n";
  }
  out << "  tight set (" << r.tight.size() << "):";
  for (const auto& k : r.tight) out << " " << k;
  out << "\n  expected (" << r.expected_tight.size() << " distinct from "
      << r.expected_labels.size() << " named):";
  for (const auto& k : r.expected_tight) out << " " << k;
  out << "\n  tight set matches expectation: " << (r.tight_match ? "yes" : "no")
      << "\n";
  if (r.rank > 0) {
    out << "  constraint rank of tight set at lambda=" << RationalToString(r.rank_lambda)
        << ": " << r.rank << "\n";
  }
  out << "  right endpoint covered by continuity of the slack\n";
  return out.str();
}

std::array<RatFunc, 3> derive_dual_from_tight(
    GirthClass cls, const std::vector<Configuration>& tight,
    const RatFunc& target_alpha) {
  if (tight.size() != 3) {
    throw CertificateError("derive_dual_from_tight needs three configurations");
  }
  std::array<std::array<RatFunc, 4>, 3> m;
  for (int k = 0; k < 3; ++k) {
    Configuration c = tight[k];
    c.girth_class = cls;
    const ConfigFunctions f = config_functions(c);
    for (int t = 0; t < 3; ++t) m[k][t] = f.gamma_v[t] - f.gamma_u[t];
    m[k][3] = f.alpha - target_alpha;
  }
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    while (piv < 3 && m[piv][col].is_zero()) ++piv;
    if (piv == 3) throw CertificateError("singular tight system");
    std::swap(m[piv], m[col]);
    for (int r = 0; r < 3; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const RatFunc f = m[r][col] / m[col][col];
      for (int j = col; j < 4; ++j) m[r][j] -= f * m[col][j];
    }
  }
  std::array<RatFunc, 3> out;
  for (int t = 0; t < 3; ++t) out[t] = m[t][3] / m[t][t];
  return out;
}

namespace {

std::string ScalarText(const Scalar& s) {
  return s.is_rational() && s.field() == Scalar::Field::kQ ? RationalToString(s.a())
                                                           : s.ToString();
}

}  // namespace

DualCertificate parse_certificate(const std::string& text) {
  DualCertificate cert;
  cert.name = "user";
  std::istringstream in(text);
  std::string line;
  bool have_girth = false;
  bool have_sense = false;
  bool have_interval = false;
  bool have_target = false;
  std::optional<Poly> target_num, target_den;
  std::array<std::optional<Poly>, 3> lnum, lden;
  int lineno = 0;
  auto fail = [&](const std::string& why) {
    throw CertificateError("certificate line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    std::string rest;
    std::getline(ls, rest);
    const auto rs = rest.find_first_not_of(' ');
    rest = rs == std::string::npos ? "" : rest.substr(rs);
    std::istringstream rsin(rest);
    try {
      if (key == "name") {
        cert.name = rest;
      } else if (key == "girth") {
        int g = 0;
        if (!(rsin >> g)) fail("bad girth");
        cert.girth_class = ParseGirthClass(g);
        have_girth = true;
      } else if (key == "sense") {
        if (rest == "min") {
          cert.sense = Sense::kMin;
        } else if (rest == "max") {
          cert.sense = Sense::kMax;
        } else {
          fail("sense must be min or max");
        }
        have_sense = true;
      } else if (key == "interval") {
        std::string a, b;
        if (!(rsin >> a >> b)) fail("interval needs two endpoints");
        cert.lo = Scalar::Parse(a);
        if (b == "inf") {
          cert.hi.reset();
        } else {
          cert.hi = Scalar::Parse(b);
        }
        have_interval = true;
      } else if (key == "substitution") {
        std::string a, b;
        if (!(rsin >> a)) fail("substitution needs 'none' or two scalars");
        if (a == "none") {
          cert.substitution.reset();
        } else {
          if (!(rsin >> b)) fail("substitution needs two scalars");
          cert.substitution = std::make_pair(Scalar::Parse(a), Scalar::Parse(b));
        }
      } else if (key == "target_num") {
        target_num = Poly::Parse(rest);
      } else if (key == "target_den") {
        target_den = Poly::Parse(rest);
      } else if (key.size() == 11 && key.rfind("lambda", 0) == 0 &&
                 key[6] >= '0' && key[6] <= '2' &&
                 (key.substr(7) == "_num" || key.substr(7) == "_den")) {
        const int t = key[6] - '0';
        (key.substr(7) == "_num" ? lnum[t] : lden[t]) = Poly::Parse(rest);
      } else if (key == "factor") {
        cert.positive_denominator_factors.push_back(Poly::Parse(rest));
      } else if (key == "scaling") {
        cert.scaling = Poly::Parse(rest);
      } else if (key == "sample") {
        cert.samples.push_back(ParseRational(rest));
      } else {
        fail("unknown key '" + key + "'");
      }
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    } catch (const ConfigError& e) {
      fail(e.what());
    }
  }
  if (!have_girth || !have_sense || !have_interval) {
    throw CertificateError("certificate needs girth, sense and interval");
  }
  if (target_num && target_den) {
    if (target_den->is_zero()) throw CertificateError("zero target denominator");
    cert.target_alpha = RatFunc(*target_num, *target_den, false);
    have_target = true;
  }
  if (!have_target) throw CertificateError("certificate needs target_num and target_den");
  for (int t = 0; t < 3; ++t) {
    if (!lnum[t]) throw CertificateError("missing lambda" + std::to_string(t) + "_num");
    const Poly den = lden[t] ? *lden[t] : Poly::Constant(1);
    if (den.is_zero()) throw CertificateError("zero multiplier denominator");
    cert.lambdas[t] = RatFunc(*lnum[t], den, false);
  }
  if (cert.hi && !(cert.lo < *cert.hi)) throw CertificateError("interval needs a < b");
  return cert;
}

DualCertificate load_certificate(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw CertificateError("cannot open certificate " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_certificate(ss.str());
}

std::string write_certificate(const DualCertificate& cert) {
  std::ostringstream out;
  out << "name " << cert.name << "\n";
  out << "girth " << static_cast<int>(cert.girth_class) << "\n";
  out << "sense " << (cert.sense == Sense::kMax ? "max" : "min") << "\n";
  out << "interval " << ScalarText(cert.lo) << " "
      << (cert.hi ? ScalarText(*cert.hi) : "inf") << "\n";
  out << "substitution ";
  if (cert.substitution) {
    out << ScalarText(cert.substitution->first) << " "
        << ScalarText(cert.substitution->second) << "\n";
  } else {
    out << "none\n";
  }
  out << "target_num " << cert.target_alpha.num().Serialize() << "\n";
  out << "target_den " << cert.target_alpha.den().Serialize() << "\n";
  for (int t = 0; t < 3; ++t) {
    out << "lambda" << t << "_num " << cert.lambdas[t].num().Serialize() << "\n";
    out << "lambda" << t << "_den " << cert.lambdas[t].den().Serialize() << "\n";
  }
  for (const Poly& f : cert.positive_denominator_factors) {
    out << "factor " << f.Serialize() << "\n";
  }
  if (cert.scaling) out << "scaling " << cert.scaling->Serialize() << "\n";
  for (const auto& s : cert.samples) out << "sample " << RationalToString(s) << "\n";
  return out.str();
}

}  // namespace hcore
