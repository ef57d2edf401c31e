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

#ifndef HCORE_POLY_H_
#define HCORE_POLY_H_

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hcore/scalar.h"

namespace hcore {

inline constexpr std::string_view kLambda = "λ";
inline constexpr std::string_view kT = "t";

class NotDivisible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dense univariate polynomial, coefficients in ascending degree. Trailing
// zeros are always stripped, so the zero polynomial has no coefficients.
class Poly {
 public:
  explicit Poly(std::string_view var = kLambda) : var_(var) {}
  Poly(std::vector<Scalar> coeffs, std::string_view var = kLambda);
  // Integer coefficients, ascending.
  Poly(std::initializer_list<long> coeffs, std::string_view var = kLambda);

  static Poly Constant(const Scalar& c, std::string_view var = kLambda);
  static Poly Monomial(const Scalar& c, int k, std::string_view var = kLambda);
  static Poly X(std::string_view var = kLambda) { return Monomial(1, 1, var); }

  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  const std::string& var() const { return var_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  // Coefficient of x^k, zero beyond the degree.
  Scalar operator[](int k) const;
  const Scalar& leading() const;
  // Lowest k with a nonzero coefficient; -1 for zero.
  int valuation() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Scalar& c);
  friend Poly operator+(Poly p, const Poly& q) { return p += q; }
  friend Poly operator-(Poly p, const Poly& q) { return p -= q; }
  friend Poly operator*(Poly p, const Poly& q) { return p *= q; }
  friend Poly operator*(Poly p, const Scalar& c) { return p *= c; }
  friend Poly operator*(const Scalar& c, Poly p) { return p *= c; }
  friend bool operator==(const Poly& p, const Poly& q) {
    return p.coeffs_ == q.coeffs_;
  }

  Poly Pow(int e) const;
  Scalar Eval(const Scalar& x) const;
  Poly Derivative() const;
  // Same coefficients, new variable label.
  Poly Rename(std::string_view var) const { return Poly(coeffs_, var); }
  // Divides every coefficient by the leading one.
  Poly Monic() const;
  bool is_rational() const;

  // "deg k: c0 c1 ... ck"; the zero polynomial is "deg -1:".
  std::string Serialize() const;
  static Poly Parse(std::string_view line, std::string_view var = kLambda);
  // Human-readable, e.g. "1+10λ+30λ^2".
  std::string ToString() const;

 private:
  void Normalize();
  void CheckVar(const Poly& o) const;

  std::vector<Scalar> coeffs_;
  std::string var_;
};

Poly poly_arith(const Poly& p, const Poly& q, char op);

// Quotient and remainder of polynomial long division.
std::pair<Poly, Poly> poly_divmod(const Poly& p, const Poly& q);

// r with p = q r. Throws NotDivisible on a nonzero remainder.
Poly poly_div_exact(const Poly& p, const Poly& q);

Scalar poly_eval(const Poly& p, const Scalar& x);
Poly poly_derivative(const Poly& p);

// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(const Poly& p, const Poly& q);

struct MobiusResult {
  Poly num;  // in t
  int den_power = 0;
};

// N(t) with p((a + b t)/(1 + t)) = N(t)/(1 + t)^deg(p).
MobiusResult mobius_substitute(const Poly& p, const Scalar& a,
                               const Scalar& b);

struct Positivity {
  enum class Kind { kIdenticallyZero, kNonnegCoeffs, kPolyaPositive,
                    kIndeterminate };
  Kind kind = Kind::kIndeterminate;
  int k = 0;  // Polya exponent for kPolyaPositive

  bool certified() const { return kind != Kind::kIndeterminate; }
  std::string ToString() const;
};

inline constexpr int kDefaultPolyaLimit = 64;

// Certifies p >= 0 on (0, inf) by coefficient signs, then by the coefficient
// signs of (1+t)^k p for k = 1..max_k.
Positivity nonneg_on_halfline(const Poly& p, int max_k = kDefaultPolyaLimit);

}  // namespace hcore

#endif  // HCORE_POLY_H_
