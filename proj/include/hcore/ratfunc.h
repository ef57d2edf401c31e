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

#ifndef HCORE_RATFUNC_H_
#define HCORE_RATFUNC_H_

#include <string>

#include "hcore/poly.h"

namespace hcore {

class RatFunc {
 public:
  RatFunc() : num_(), den_(Poly::Constant(1)) {}
  explicit RatFunc(Poly num);
  // Reduces unless told otherwise.
  RatFunc(Poly num, Poly den, bool reduce = true);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool reduced() const { return reduced_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& x, const RatFunc& y);
  friend RatFunc operator-(const RatFunc& x, const RatFunc& y);
  friend RatFunc operator*(const RatFunc& x, const RatFunc& y);
  friend RatFunc operator/(const RatFunc& x, const RatFunc& y);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  // Equality as functions (cross multiplication), reduced or not.
  friend bool operator==(const RatFunc& x, const RatFunc& y);

  // Throws std::domain_error at a pole.
  Scalar Eval(const Scalar& x) const;
  std::string ToString() const;

 private:
  friend RatFunc ratfunc_reduce(const RatFunc& r);

  Poly num_;
  Poly den_;
  bool reduced_ = false;
};

RatFunc ratfunc_reduce(const RatFunc& r);

}  // namespace hcore

#endif  // HCORE_RATFUNC_H_
