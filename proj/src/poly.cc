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

#include "hcore/poly.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>

namespace hcore {

Poly::Poly(std::vector<Scalar> coeffs, std::string_view var)
    : coeffs_(std::move(coeffs)), var_(var) {
  Normalize();
}

Poly::Poly(std::initializer_list<long> coeffs, std::string_view var)
    : var_(var) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  Normalize();
}

Poly Poly::Constant(const Scalar& c, std::string_view var) {
  return Poly(std::vector<Scalar>{c}, var);
}

Poly Poly::Monomial(const Scalar& c, int k, std::string_view var) {
  std::vector<Scalar> v(k + 1);
  v[k] = c;
  return Poly(std::move(v), var);
}

void Poly::Normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Poly::CheckVar(const Poly& o) const {
  if (var_ != o.var_) {
    throw std::invalid_argument("polynomial variable mismatch: " + var_ +
                                " vs " + o.var_);
  }
}

Scalar Poly::operator[](int k) const {
  if (k < 0 || k > degree()) return Scalar();
  return coeffs_[k];
}

const Scalar& Poly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading() of zero polynomial");
  return coeffs_.back();
}

int Poly::valuation() const {
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return static_cast<int>(i);
  }
  return -1;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  CheckVar(o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  Normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  CheckVar(o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  Normalize();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  CheckVar(o);
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Scalar> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) {
      r[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  coeffs_ = std::move(r);
  Normalize();
  return *this;
}

Poly& Poly::operator*=(const Scalar& c) {
  for (auto& x : coeffs_) x *= c;
  Normalize();
  return *this;
}

Poly Poly::Pow(int e) const {
  Poly r = Constant(1, var_);
  Poly base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return r;
}

Scalar Poly::Eval(const Scalar& x) const {
  Scalar r;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    r *= x;
    r += *it;
  }
  return r;
}

Poly Poly::Derivative() const {
  std::vector<Scalar> d;
  for (size_t i = 1; i < coeffs_.size(); ++i) {
    d.push_back(coeffs_[i] * Scalar(static_cast<long>(i)));
  }
  return Poly(std::move(d), var_);
}

Poly Poly::Monic() const {
  if (is_zero()) return *this;
  Poly r = *this;
  const Scalar lc = leading();
  for (auto& c : r.coeffs_) c /= lc;
  return r;
}

bool Poly::is_rational() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Scalar& c) { return c.is_rational(); });
}

std::string Poly::Serialize() const {
  std::string s = "deg " + std::to_string(degree()) + ":";
  for (const auto& c : coeffs_) s += " " + c.ToString();
  return s;
}

Poly Poly::Parse(std::string_view line, std::string_view var) {
  std::istringstream in{std::string(line)};
  std::string word;
  int deg = 0;
  if (!(in >> word) || word != "deg" || !(in >> word) || word.empty() ||
      word.back() != ':') {
    throw std::invalid_argument("bad polynomial line: " + std::string(line));
  }
  word.pop_back();
  try {
    deg = std::stoi(word);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad degree in: " + std::string(line));
  }
  std::vector<Scalar> coeffs;
  while (in >> word) coeffs.push_back(Scalar::Parse(word));
  if (static_cast<int>(coeffs.size()) != deg + 1) {
    throw std::invalid_argument("coefficient count does not match degree: " +
                                std::string(line));
  }
  Poly p(std::move(coeffs), var);
  if (p.degree() != deg) {
    throw std::invalid_argument("leading coefficient is zero: " +
                                std::string(line));
  }
  return p;
}

std::string Poly::ToString() const {
  if (is_zero()) return "0";
  std::string s;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Scalar& c = coeffs_[i];
    if (c.is_zero()) continue;
    std::string cs;
    if (c.is_rational()) {
      const mpq_class& q = c.a();
      const bool unit = abs(q) == 1 && i > 0;
      if (!s.empty() && sgn(q) > 0) cs += "+";
      if (sgn(q) < 0) cs += "-";
      if (!unit) {
        cs += q.get_den() == 1 ? mpz_class(abs(q.get_num())).get_str()
                               : "(" + RationalToString(mpq_class(abs(q))) + ")";
      }
    } else {
      if (!s.empty()) cs += "+";
      cs += "(" + c.ToString() + ")";
    }
    if (i >= 1) cs += var_;
    if (i >= 2) cs += "^" + std::to_string(i);
    s += cs;
  }
  return s;
}

Poly poly_arith(const Poly& p, const Poly& q, char op) {
  switch (op) {
    case '+':
      return p + q;
    case '-':
      return p - q;
    case '*':
      return p * q;
    default:
      throw std::invalid_argument(std::string("unknown polynomial op ") + op);
  }
}

std::pair<Poly, Poly> poly_divmod(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw std::domain_error("polynomial division by zero");
  if (p.var() != q.var() && !p.is_zero()) {
    throw std::invalid_argument("polynomial variable mismatch");
  }
  std::vector<Scalar> rem = p.coeffs();
  const int dq = q.degree();
  const int dp = p.degree();
  if (dp < dq) return {Poly(q.var()), p};
  std::vector<Scalar> quot(dp - dq + 1);
  const Scalar lc = q.leading();
  for (int k = dp - dq; k >= 0; --k) {
    const Scalar c = rem[k + dq] / lc;
    quot[k] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= dq; ++j) rem[k + j] -= c * q.coeffs()[j];
  }
  return {Poly(std::move(quot), q.var()), Poly(std::move(rem), q.var())};
}

Poly poly_div_exact(const Poly& p, const Poly& q) {
  auto [quot, rem] = poly_divmod(p, q);
  if (!rem.is_zero()) {
    throw NotDivisible("polynomial division leaves remainder " +
                       rem.ToString());
  }
  return quot;
}

Scalar poly_eval(const Poly& p, const Scalar& x) { return p.Eval(x); }

Poly poly_derivative(const Poly& p) { return p.Derivative(); }

Poly poly_gcd(const Poly& p, const Poly& q) {
  Poly a = p;
  Poly b = q;
  while (!b.is_zero()) {
    Poly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = r.Monic();
  }
  return a.Monic();
}

MobiusResult mobius_substitute(const Poly& p, const Scalar& a,
                               const Scalar& b) {
  MobiusResult out{Poly(kT), 0};
  if (p.is_zero()) return out;
  const int d = p.degree();
  const Poly num = Poly(std::vector<Scalar>{a, b}, kT);
  const Poly one_plus_t = Poly({1, 1}, kT);
  std::vector<Poly> num_pow{Poly::Constant(1, kT)};
  std::vector<Poly> den_pow{Poly::Constant(1, kT)};
  for (int i = 1; i <= d; ++i) {
    num_pow.push_back(num_pow.back() * num);
    den_pow.push_back(den_pow.back() * one_plus_t);
  }
  for (int i = 0; i <= d; ++i) {
    if (p.coeffs()[i].is_zero()) continue;
    out.num += p.coeffs()[i] * (num_pow[i] * den_pow[d - i]);
  }
  out.den_power = d;
  return out;
}

std::string Positivity::ToString() const {
  switch (kind) {
    case Kind::kIdenticallyZero:
      return "Zero";
    case Kind::kNonnegCoeffs:
      return "NonnegCoeffs";
    case Kind::kPolyaPositive:
      return "PolyaPositive(" + std::to_string(k) + ")";
    case Kind::kIndeterminate:
      return "Indeterminate";
  }
  return "?";
}

namespace {

bool AllNonneg(const std::vector<Scalar>& c) {
  return std::all_of(c.begin(), c.end(),
                     [](const Scalar& x) { return x.sign() >= 0; });
}

}  // namespace

Positivity nonneg_on_halfline(const Poly& p, int max_k) {
  using Kind = Positivity::Kind;
  if (p.is_zero()) return {Kind::kIdenticallyZero, 0};
  std::vector<Scalar> c = p.coeffs();
  if (AllNonneg(c)) return {Kind::kNonnegCoeffs, 0};
  // A negative leading or lowest coefficient means p < 0 near infinity or
  // near zero, so no multiplier can help.
  if (p.leading().sign() < 0 || p[p.valuation()].sign() < 0) {
    return {Kind::kIndeterminate, 0};
  }
  for (int k = 1; k <= max_k; ++k) {
    c.emplace_back();
    for (size_t i = c.size() - 1; i > 0; --i) c[i] += c[i - 1];
    if (AllNonneg(c)) return {Kind::kPolyaPositive, k};
  }
  return {Kind::kIndeterminate, 0};
}

}  // namespace hcore
