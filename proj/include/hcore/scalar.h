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

#ifndef HCORE_SCALAR_H_
#define HCORE_SCALAR_H_

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <string_view>

namespace hcore {

// Element a + b*sqrt(15) of Q or Q(sqrt 15). A value tagged kQ always has
// b == 0; mixing the two fields promotes to kQ15.
class Scalar {
 public:
  enum class Field { kQ, kQ15 };

  Scalar() = default;
  Scalar(long v) : a_(v) {}  // NOLINT(runtime/explicit)
  Scalar(const mpq_class& v) : a_(v) { a_.canonicalize(); }  // NOLINT
  Scalar(long num, long den);

  // Always tagged kQ15, even when b == 0.
  static Scalar Quadratic(const mpq_class& a, const mpq_class& b);
  static Scalar Sqrt15() { return Quadratic(0, 1); }

  const mpq_class& a() const { return a_; }
  const mpq_class& b() const { return b_; }
  Field field() const { return field_; }
  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  // Exact sign; see scalar_sign().
  int sign() const;

  // Value as a rational. Throws std::domain_error if b != 0.
  const mpq_class& rational() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  // Equality is by value; the field tag is not compared.
  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator<(const Scalar& x, const Scalar& y) {
    return (x - y).sign() < 0;
  }

  // "p/q" or "p/q+r/s*sqrt15".
  std::string ToString() const;
  static Scalar Parse(std::string_view text);

  double ToDouble() const;

 private:
  mpq_class a_{0};
  mpq_class b_{0};
  Field field_ = Field::kQ;
};

int scalar_sign(const Scalar& x);

std::ostream& operator<<(std::ostream& os, const Scalar& x);

// Parses "p" or "p/q" into a canonical rational. Throws std::invalid_argument.
mpq_class ParseRational(std::string_view text);
std::string RationalToString(const mpq_class& q);

}  // namespace hcore

#endif  // HCORE_SCALAR_H_
