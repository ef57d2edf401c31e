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

#include "hcore/ratfunc.h"

#include <stdexcept>

namespace hcore {

RatFunc::RatFunc(Poly num)
    : num_(std::move(num)), den_(Poly::Constant(1, num_.var())),
      reduced_(true) {}

RatFunc::RatFunc(Poly num, Poly den, bool reduce)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  if (num_.is_zero()) num_ = Poly(den_.var());
  if (reduce) *this = ratfunc_reduce(*this);
}

RatFunc ratfunc_reduce(const RatFunc& r) {
  RatFunc out = r;
  if (r.num_.is_zero()) {
    out.den_ = Poly::Constant(1, r.den_.var());
  } else {
    const Poly g = poly_gcd(r.num_, r.den_);
    out.num_ = poly_div_exact(r.num_, g);
    out.den_ = poly_div_exact(r.den_, g);
  }
  // Leading coefficient of the denominator becomes 1; in particular positive.
  const Scalar lc = out.den_.leading();
  const Scalar inv = Scalar(1) / lc;
  out.num_ *= inv;
  out.den_ *= inv;
  out.reduced_ = true;
  return out;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& x, const RatFunc& y) {
  if (x.den_ == y.den_) return RatFunc(x.num_ + y.num_, x.den_);
  return RatFunc(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

RatFunc operator-(const RatFunc& x, const RatFunc& y) { return x + (-y); }

RatFunc operator*(const RatFunc& x, const RatFunc& y) {
  return RatFunc(x.num_ * y.num_, x.den_ * y.den_);
}

RatFunc operator/(const RatFunc& x, const RatFunc& y) {
  if (y.is_zero()) throw std::domain_error("rational function division by 0");
  return RatFunc(x.num_ * y.den_, x.den_ * y.num_);
}

bool operator==(const RatFunc& x, const RatFunc& y) {
  return x.num_ * y.den_ == y.num_ * x.den_;
}

Scalar RatFunc::Eval(const Scalar& x) const {
  const Scalar d = den_.Eval(x);
  if (d.is_zero()) throw std::domain_error("rational function pole");
  return num_.Eval(x) / d;
}

std::string RatFunc::ToString() const {
  if (den_.degree() == 0 && den_[0] == Scalar(1)) return num_.ToString();
  return "(" + num_.ToString() + ")/(" + den_.ToString() + ")";
}

}  // namespace hcore
