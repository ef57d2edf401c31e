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

#include "hcore/scalar.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hcore {
namespace {

constexpr long kRadicand = 15;

Scalar::Field Join(Scalar::Field x, Scalar::Field y) {
  return (x == Scalar::Field::kQ15 || y == Scalar::Field::kQ15)
             ? Scalar::Field::kQ15
             : Scalar::Field::kQ;
}

}  // namespace

Scalar::Scalar(long num, long den) : a_(num, den) {
  if (den == 0) throw std::domain_error("zero denominator");
  a_.canonicalize();
}

Scalar Scalar::Quadratic(const mpq_class& a, const mpq_class& b) {
  Scalar s(a);
  s.b_ = b;
  s.b_.canonicalize();
  s.field_ = Field::kQ15;
  return s;
}

int Scalar::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the larger of a^2 and 15 b^2 wins. They cannot be equal
  // because 15 is not a rational square.
  const mpq_class a2 = a_ * a_;
  const mpq_class b2 = kRadicand * b_ * b_;
  return a2 > b2 ? sa : sb;
}

const mpq_class& Scalar::rational() const {
  if (b_ != 0) throw std::domain_error("scalar is not rational: " + ToString());
  return a_;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  a_ += o.a_;
  b_ += o.b_;
  field_ = Join(field_, o.field_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  field_ = Join(field_, o.field_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (b_ == 0 && o.b_ == 0) {
    a_ *= o.a_;
  } else {
    mpq_class a = a_ * o.a_ + kRadicand * b_ * o.b_;
    mpq_class b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
  }
  field_ = Join(field_, o.field_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero scalar");
  if (o.b_ == 0) {
    a_ /= o.a_;
    b_ /= o.a_;
  } else {
    // 1/(c + d r) = (c - d r)/(c^2 - 15 d^2).
    const mpq_class norm = o.a_ * o.a_ - kRadicand * o.b_ * o.b_;
    *this *= Quadratic(o.a_ / norm, -o.b_ / norm);
  }
  field_ = Join(field_, o.field_);
  return *this;
}

std::string RationalToString(const mpq_class& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class ParseRational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  mpq_class q;
  const std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      q = mpq_class(mpz_class(s, 10));
    } else {
      mpz_class num(s.substr(0, slash), 10);
      mpz_class den(s.substr(slash + 1), 10);
      if (den == 0) throw std::invalid_argument("zero denominator");
      q = mpq_class(num, den);
    }
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad rational '" + s + "'");
  }
  q.canonicalize();
  return q;
}

std::string Scalar::ToString() const {
  std::string s = RationalToString(a_);
  if (field_ == Field::kQ15 || b_ != 0) {
    s += sgn(b_) < 0 ? "-" : "+";
    s += RationalToString(abs(b_)) + "*sqrt15";
  }
  return s;
}

Scalar Scalar::Parse(std::string_view text) {
  const std::string_view suffix = "*sqrt15";
  if (text.size() <= suffix.size() ||
      text.substr(text.size() - suffix.size()) != suffix) {
    return Scalar(ParseRational(text));
  }
  const std::string_view body = text.substr(0, text.size() - suffix.size());
  // The separator is the last '+' or '-' that is not a leading sign.
  size_t split = std::string_view::npos;
  for (size_t i = body.size(); i-- > 1;) {
    if (body[i] == '+' || body[i] == '-') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) {
    throw std::invalid_argument("bad quadratic scalar '" + std::string(text) +
                                "'");
  }
  const mpq_class a = ParseRational(body.substr(0, split));
  std::string_view bs = body.substr(split + 1);
  mpq_class b = ParseRational(bs);
  if (body[split] == '-') b = -b;
  return Quadratic(a, b);
}

double Scalar::ToDouble() const {
  return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(kRadicand));
}

int scalar_sign(const Scalar& x) { return x.sign(); }

std::ostream& operator<<(std::ostream& os, const Scalar& x) {
  return os << x.ToString();
}

}  // namespace hcore
