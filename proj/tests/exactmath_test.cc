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

#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "hcore/poly.h"
#include "hcore/ratfunc.h"
#include "hcore/scalar.h"

namespace hcore {
namespace {

const Poly kPetersen = {1, 10, 30, 30, 5};
const Poly kHeawood = {1, 14, 70, 154, 147, 56, 14, 2};

Scalar Root15Over5() { return Scalar::Quadratic(0, mpq_class(1, 5)); }

TEST(ScalarTest, SignOfZero) { EXPECT_EQ(scalar_sign(Scalar(0)), 0); }

TEST(ScalarTest, SignOfMixedSigns) {
  EXPECT_EQ(scalar_sign(Scalar::Quadratic(-7, 2)), 1);
  EXPECT_EQ(scalar_sign(Scalar::Quadratic(8, -2)), 1);  // 64 > 60
  EXPECT_EQ(scalar_sign(Scalar::Quadratic(-8, 2)), -1);
  EXPECT_EQ(scalar_sign(Scalar(11, 20)), 1);
}

TEST(ScalarTest, SqrtSquaresToFifteen) {
  const Scalar r = Scalar::Sqrt15();
  EXPECT_EQ(r * r, Scalar(15));
  EXPECT_EQ(Root15Over5() * Root15Over5(), Scalar(3, 5));
}

TEST(ScalarTest, FieldTagPropagates) {
  const Scalar q(3, 4);
  EXPECT_TRUE(q.is_rational());
  const Scalar s = q + Scalar::Sqrt15();
  EXPECT_FALSE(s.is_rational());
  EXPECT_EQ((s - Scalar::Sqrt15()).a(), q.a());
  EXPECT_EQ((s - Scalar::Sqrt15()).b(), 0);
}

TEST(ScalarTest, DivisionInverts) {
  const Scalar x = Scalar::Quadratic(mpq_class(2, 3), mpq_class(-5, 7));
  const Scalar y = Scalar::Quadratic(mpq_class(1, 9), 4);
  EXPECT_EQ((x / y) * y, x);
}

TEST(ScalarTest, ParseRoundTrip) {
  for (const Scalar& x : {Scalar(0), Scalar(-3, 16), Root15Over5(),
                          Scalar::Quadratic(mpq_class(11, 20), mpq_class(-1, 3))}) {
    EXPECT_EQ(Scalar::Parse(x.ToString()), x) << x.ToString();
  }
  EXPECT_EQ(Scalar(-3, 16).ToString(), "-3/16");
  EXPECT_EQ(Root15Over5().ToString(), "0/1+1/5*sqrt15");
}

TEST(ScalarTest, RationalRejectsIrrational) {
  EXPECT_THROW(Root15Over5().rational(), std::exception);
}

// Floating oracle away from zero.
TEST(ScalarTest, SignMatchesFloatingOracle) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-400, 400), den(1, 40);
  int checked = 0;
  for (int i = 0; i < 5000; ++i) {
    const mpq_class a(num(rng), den(rng)), b(num(rng), den(rng));
    const double v = a.get_d() + b.get_d() * std::sqrt(15.0);
    if (std::fabs(v) < 1e-6) continue;
    ASSERT_EQ(scalar_sign(Scalar::Quadratic(a, b)), v > 0 ? 1 : -1)
        << a << " " << b;
    ++checked;
  }
  EXPECT_GT(checked, 4900);
}

TEST(PolyTest, ArithmeticExamples) {
  const Poly x1 = {1, 1};
  EXPECT_EQ(poly_arith(x1, x1, '*'), Poly({1, 2, 1}));
  EXPECT_TRUE(poly_arith(kPetersen, kPetersen, '-').is_zero());
  EXPECT_EQ(Poly::X() * Poly({1, 6, 9, 2}), Poly({0, 1, 6, 9, 2}));
  EXPECT_EQ(Poly().degree(), -1);
}

TEST(PolyTest, VariableMismatchThrows) {
  EXPECT_ANY_THROW(Poly({1, 1}) + Poly({1, 1}, kT));
}

TEST(PolyTest, ExactDivision) {
  EXPECT_EQ(poly_div_exact(Poly({-1, 0, 1}), Poly({-1, 1})), Poly({1, 1}));
  EXPECT_EQ(poly_div_exact(kPetersen, Poly({1})), kPetersen);
  EXPECT_EQ(poly_div_exact(Poly({0, 1, 6, 9, 2}), Poly::X()), Poly({1, 6, 9, 2}));
  EXPECT_THROW(poly_div_exact(Poly({1, 0, 1}), Poly({-1, 1})), NotDivisible);
}

TEST(PolyTest, EvalAndDerivative) {
  EXPECT_EQ(poly_eval(kHeawood, Scalar(1)), Scalar(458));
  EXPECT_EQ(poly_eval(kPetersen, Scalar(1)), Scalar(76));
  EXPECT_EQ(poly_derivative(kPetersen), Poly({10, 60, 90, 20}));
}

TEST(PolyTest, SerializeRoundTrip) {
  const Poly p({Scalar(1, 2), Scalar(0), Scalar::Quadratic(mpq_class(-3, 4), 2)});
  EXPECT_EQ(Poly::Parse(p.Serialize()), p);
  EXPECT_EQ(Poly().Serialize(), "deg -1:");
  EXPECT_EQ(Poly({1, 2}).Serialize(), "deg 1: 1/1 2/1");
}

TEST(PolyTest, GcdIsMonic) {
  const Poly a = Poly({-1, 1}) * Poly({2, 1});
  const Poly b = Scalar(3) * Poly({-1, 1}) * Poly({5, 1});
  EXPECT_EQ(poly_gcd(a, b), Poly({-1, 1}));
}

std::vector<Poly> RandomPolys(int count, unsigned seed, bool quadratic) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> deg(0, 6), c(-9, 9), d(1, 5);
  std::vector<Poly> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<Scalar> cs;
    const int n = deg(rng) + 1;
    for (int i = 0; i < n; ++i) {
      mpq_class a(c(rng), d(rng));
      mpq_class b = quadratic ? mpq_class(c(rng), d(rng)) : mpq_class(0);
      cs.push_back(Scalar::Quadratic(a, b));
    }
    Poly p(cs);
    if (!p.is_zero()) out.push_back(p);
  }
  return out;
}

TEST(PolyTest, DivExactInvertsMultiplication) {
  const auto ps = RandomPolys(40, 1, false);
  const auto qs = RandomPolys(40, 2, true);
  for (size_t i = 0; i < ps.size(); ++i) {
    EXPECT_EQ(poly_div_exact(ps[i] * qs[i], qs[i]), ps[i]);
  }
}

TEST(PolyTest, DivmodReconstructs) {
  const auto ps = RandomPolys(30, 3, true);
  const auto qs = RandomPolys(30, 4, false);
  for (size_t i = 0; i < ps.size(); ++i) {
    const auto [q, r] = poly_divmod(ps[i], qs[i]);
    EXPECT_EQ(q * qs[i] + r, ps[i]);
    EXPECT_LT(r.degree(), qs[i].degree());
  }
}

TEST(MobiusTest, IntervalExamples) {
  const MobiusResult r1 = mobius_substitute(Poly::X(), Scalar(0), Scalar(3, 16));
  EXPECT_EQ(r1.num, Poly({Scalar(0), Scalar(3, 16)}, kT));
  EXPECT_EQ(r1.den_power, 1);
  const MobiusResult r4 = mobius_substitute(Poly::X(), Root15Over5(), Scalar(1));
  EXPECT_EQ(r4.num, Poly({Root15Over5(), Scalar(1)}, kT));
  const MobiusResult c = mobius_substitute(Poly({7}), Scalar(1), Scalar(2));
  EXPECT_EQ(c.num, Poly({7}, kT));
  EXPECT_EQ(c.den_power, 0);
}

// N(t) = p(λ(t)) (1+t)^deg p at sample t.
TEST(MobiusTest, MatchesPointEvaluation) {
  const auto ps = RandomPolys(20, 5, true);
  for (const Poly& p : ps) {
    const MobiusResult m = mobius_substitute(p, Scalar(11, 20), Root15Over5());
    for (int k = 0; k < 4; ++k) {
      const Scalar t(k, 3);
      const Scalar lam = (Scalar(11, 20) + Root15Over5() * t) / (Scalar(1) + t);
      Scalar scale(1);
      for (int i = 0; i < m.den_power; ++i) scale *= Scalar(1) + t;
      EXPECT_EQ(m.num.Eval(t), p.Eval(lam) * scale);
    }
  }
}

TEST(MobiusTest, MultiplicativeUpToDenominatorPowers) {
  const auto ps = RandomPolys(15, 6, false);
  const auto qs = RandomPolys(15, 8, false);
  const Scalar a(3, 16), b(11, 20);
  for (size_t i = 0; i < ps.size(); ++i) {
    const MobiusResult mp = mobius_substitute(ps[i], a, b);
    const MobiusResult mq = mobius_substitute(qs[i], a, b);
    const MobiusResult mpq = mobius_substitute(ps[i] * qs[i], a, b);
    EXPECT_EQ(mpq.num, mp.num * mq.num);
    EXPECT_EQ(mpq.den_power, mp.den_power + mq.den_power);
  }
}

TEST(PositivityTest, Examples) {
  EXPECT_EQ(nonneg_on_halfline(Poly()).kind, Positivity::Kind::kIdenticallyZero);
  const Poly f = Poly::Monomial(1, 6) * Poly({3, 20, 41, 30, 11, 2});
  EXPECT_EQ(nonneg_on_halfline(f).kind, Positivity::Kind::kNonnegCoeffs);
  EXPECT_EQ(nonneg_on_halfline(Poly({-1, 1})).kind, Positivity::Kind::kIndeterminate);
}

TEST(PositivityTest, PolyaFindsMultiplier) {
  // 1 - t + t^2 has no real roots; (1+t)^1 gives 1 + t^3.
  const Positivity p = nonneg_on_halfline(Poly({1, -1, 1}, kT));
  EXPECT_EQ(p.kind, Positivity::Kind::kPolyaPositive);
  EXPECT_EQ(p.k, 1);
  // A deeper dip needs a larger exponent.
  const Positivity q = nonneg_on_halfline(Poly({10, -19, 10}, kT));
  EXPECT_EQ(q.kind, Positivity::Kind::kPolyaPositive);
  EXPECT_GT(q.k, 1);
  EXPECT_FALSE(nonneg_on_halfline(Poly({10, -19, 10}, kT), 1).certified());
}

// Polynomials with a positive rational root are never certified.
TEST(PositivityTest, NeverCertifiesPositiveRoot) {
  const auto qs = RandomPolys(30, 9, false);
  std::mt19937 rng(10);
  std::uniform_int_distribution<int> c(1, 30);
  for (const Poly& q : qs) {
    const Poly root_factor({Scalar(-c(rng), c(rng)), Scalar(1)});
    const Poly p = q * q * root_factor;
    EXPECT_FALSE(nonneg_on_halfline(p, 20).certified()) << p.ToString();
  }
}

TEST(RatFuncTest, Reduce) {
  const RatFunc r = ratfunc_reduce(RatFunc(Poly({-1, 0, 1}), Poly({-1, 1}), false));
  EXPECT_EQ(r.num(), Poly({1, 1}));
  EXPECT_EQ(r.den(), Poly({1}));
  const RatFunc h = ratfunc_reduce(RatFunc(Poly({0, 2}), Poly({4}), false));
  EXPECT_EQ(h.num(), Poly({Scalar(0), Scalar(1, 2)}));
  EXPECT_EQ(h.den(), Poly({1}));
  EXPECT_TRUE(h.reduced());
}

// Euclid over plain rationals, independent of poly_gcd.
int GcdDegree(std::vector<mpq_class> a, std::vector<mpq_class> b) {
  auto trim = [](std::vector<mpq_class>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    while (a.size() >= b.size()) {
      const mpq_class f = a.back() / b.back();
      const size_t shift = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

TEST(RatFuncTest, HeawoodOccupancyAlreadyReduced) {
  const std::vector<mpq_class> num = {0, 1, 10, 33, 42, 20, 6, 1};
  const std::vector<mpq_class> den = {1, 14, 70, 154, 147, 56, 14, 2};
  EXPECT_EQ(GcdDegree(num, den), 0);
  const RatFunc r(Poly({0, 1, 10, 33, 42, 20, 6, 1}), kHeawood);
  EXPECT_EQ(r.den().degree(), 7);
}

TEST(RatFuncTest, ArithmeticAndEquality) {
  const RatFunc a(Poly({1}), Poly({1, 1}));
  const RatFunc b(Poly({1}), Poly({2, 1}));
  const RatFunc sum = a + b;
  EXPECT_EQ(sum, RatFunc(Poly({3, 2}), Poly({2, 3, 1})));
  EXPECT_EQ(sum - b, a);
  EXPECT_EQ((a / b) * b, a);
  EXPECT_EQ(sum.Eval(Scalar(1)), Scalar(5, 6));
}

}  // namespace
}  // namespace hcore
