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

#ifndef HCORE_CERTIFY_H_
#define HCORE_CERTIFY_H_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hcore/localview.h"
#include "hcore/lp.h"
#include "hcore/poly.h"
#include "hcore/ratfunc.h"

namespace hcore {

class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A named expected tight configuration.
struct ExpectedConfig {
  std::string label;
  Configuration config;
};

struct DualCertificate {
  std::string name;
  GirthClass girth_class = GirthClass::kG6;
  Sense sense = Sense::kMax;
  RatFunc target_alpha;
  // Λ_0, Λ_1, Λ_2 with denominators kept as given.
  std::array<RatFunc, 3> lambdas;
  Scalar lo;
  std::optional<Scalar> hi;  // nullopt = infinity
  // Möbius substitution λ = (a + b t)/(1 + t).
  std::optional<std::pair<Scalar, Scalar>> substitution;
  std::vector<Poly> positive_denominator_factors;
  // When set, verdicts come from scaling * Z(C) * slack, which must be a
  // polynomial in λ.
  std::optional<Poly> scaling;
  std::vector<ExpectedConfig> expected_tight;
  // Rational points inside the interval; the first is used for the rank.
  std::vector<mpq_class> samples;
};

// heawood-g6, heawood-g5, petersen-i1 .. petersen-i4.
std::map<std::string, DualCertificate> builtin_certificates();
DualCertificate builtin_certificate(const std::string& name);
std::vector<std::string> builtin_certificate_names();

// Heawood multipliers with the 1+2λ denominator factor as printed; the
// stored ones use 2+λ.
std::array<RatFunc, 3> heawood_as_printed();

// Interval-1 multipliers with the printed overall sign, for comparison
// with the stored (sign-corrected) ones.
std::array<RatFunc, 3> petersen_i1_as_printed();

RatFunc slack(const Configuration& c, const DualCertificate& cert);
// scaling * Z(C) * slack; throws NotDivisible if that is not a polynomial.
Poly scaled_slack(const Configuration& c, const DualCertificate& cert);

struct Verdict {
  enum class Kind { kZero, kNonnegCoeffs, kPolyaPositive, kFail };
  Kind kind = Kind::kFail;
  int k = 0;
  std::string detail;

  bool ok() const { return kind != Kind::kFail; }
  std::string ToString() const;
};

// The polynomial whose sign decides the slack on the interval: for scaled
// certificates scaled_slack(), otherwise the slack numerator over the
// factored common denominator 3 Z(C) D_target Π factors, pushed through the
// Möbius substitution when one is set.
Poly sign_numerator(const Configuration& c, const DualCertificate& cert);

Verdict verify_config(const Configuration& c, const DualCertificate& cert,
                      int polya_limit = kDefaultPolyaLimit);

struct FactorCheck {
  std::string factor;  // serialised polynomial in λ
  Positivity verdict;
};

struct ConfigVerdict {
  Configuration config;
  Verdict verdict;
};

struct VerificationReport {
  std::string name;
  std::vector<ConfigVerdict> verdicts;
  std::vector<std::string> tight;           // canon keys, canonical order
  std::vector<std::string> expected_tight;  // distinct canon keys
  std::vector<std::string> expected_labels;
  bool tight_match = false;
  std::vector<FactorCheck> factor_checks;
  bool factors_ok = false;
  bool denominators_covered = false;
  int rank = 0;
  mpq_class rank_lambda;
  int max_polya_k = 0;
  double seconds = 0;

  int failures() const;
  bool pass() const;
};

// Verifies every configuration of the certificate's class, in canonical
// order. threads <= 0 means hardware concurrency.
VerificationReport verify_certificate(const DualCertificate& cert,
                                      int polya_limit = kDefaultPolyaLimit,
                                      int threads = 0);
VerificationReport verify_case(const std::string& name,
                               int polya_limit = kDefaultPolyaLimit,
                               int threads = 0);

std::string ReportText(const VerificationReport& r);

// Solves Σ_t Λ_t (γ^v_t - γ^u_t)(C) = α_C - target for the three given
// configurations. Throws CertificateError when the system is singular.
std::array<RatFunc, 3> derive_dual_from_tight(
    GirthClass cls, const std::vector<Configuration>& tight,
    const RatFunc& target_alpha);

// Text format:
//   name <text>          (optional)
//   girth 4|5|6
//   sense min|max
//   interval a b|inf
//   substitution a b|none
//   target_num <poly>     target_den <poly>
//   lambda0_num <poly>    lambda0_den <poly>   (likewise lambda1, lambda2)
//   factor <poly>         (repeatable)
//   scaling <poly>        (optional)
//   sample p/q            (repeatable)
// <poly> uses the "deg k: ..." serialisation; '#' starts a comment line.
DualCertificate parse_certificate(const std::string& text);
DualCertificate load_certificate(const std::string& path);
std::string write_certificate(const DualCertificate& cert);

}  // namespace hcore

#endif  // HCORE_CERTIFY_H_
