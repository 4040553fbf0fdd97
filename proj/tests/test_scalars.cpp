// Copyright 2026 The hfib Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include <gtest/gtest.h>

#include "hfib/errors.hpp"
#include "hfib/gauss_rational.hpp"
#include "hfib/hspec.hpp"
#include "hfib/poly.hpp"
#include "hfib/quad_ext.hpp"
#include "hfib/rational.hpp"

namespace hfib {
namespace {

QPoly P(const char* text) { return parse_poly(text); }

QPoly random_poly(std::mt19937_64& rng, std::size_t max_degree) {
  std::vector<Rational> coeffs(rng() % (max_degree + 1) + 1);
  for (auto& c : coeffs) {
    c = Rational(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 4) + 1);
  }
  return QPoly(coeffs);
}

TEST(RationalTest, ParsesAndNormalizes) {
  EXPECT_EQ(Rational::parse("6/4"), Rational(3, 2));
  EXPECT_EQ(Rational::parse("-3"), Rational(-3));
  EXPECT_EQ(Rational::parse("-3/6").to_string(), "-1/2");
  EXPECT_THROW(Rational::parse("3/-6"), ParseError);
  EXPECT_THROW(Rational::parse("1/0"), ParseError);
  EXPECT_THROW(Rational::parse("1.5"), ParseError);
}

TEST(RationalTest, Arithmetic) {
  const Rational a(1, 3), b(-5, 6);
  EXPECT_EQ(a + b, Rational(-1, 2));
  EXPECT_EQ(a * b, Rational(-5, 18));
  EXPECT_EQ(a / b, Rational(-2, 5));
  EXPECT_THROW(a / Rational(), DivisorZero);
  EXPECT_LT(b, a);
  EXPECT_EQ(b.abs(), Rational(5, 6));
}

TEST(BinomialTest, SmallValues) {
  EXPECT_EQ(binomial(3, 0), 1);
  EXPECT_EQ(binomial(2, 1), 2);
  EXPECT_EQ(binomial(2, 3), 0);
}

TEST(BinomialTest, MatchesPascalTriangle) {
  std::vector<std::vector<mpz_class>> pascal{{1}};
  for (unsigned n = 1; n <= 40; ++n) {
    std::vector<mpz_class> row(n + 1, 1);
    for (unsigned k = 1; k < n; ++k) row[k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
    pascal.push_back(row);
  }
  EXPECT_EQ(pascal[30][15], 155117520);
  for (unsigned n = 0; n <= 40; ++n) {
    for (unsigned k = 0; k <= n; ++k) EXPECT_EQ(binomial(n, k), pascal[n][k]) << n << "," << k;
  }
}

TEST(GaussRationalTest, FieldOperations) {
  const GaussRational i = GaussRational::i();
  EXPECT_EQ(i * i, GaussRational(Rational(-1)));
  const GaussRational z(Rational(3), Rational(-4));
  EXPECT_EQ(z * z.conj(), GaussRational(Rational(25)));
  EXPECT_EQ((z / z), GaussRational(Rational(1)));
}

TEST(PolyTest, AdditionExamples) {
  EXPECT_EQ(P("x+1") + P("-x+2"), P("3"));
  EXPECT_EQ(QPoly() + P("x^2-x"), P("x^2-x"));
  EXPECT_EQ(P("x^2") + P("x"), P("x^2+x"));
  EXPECT_TRUE((P("x+1") - P("x+1")).is_zero());
  EXPECT_FALSE((P("x+1") - P("x+1")).degree());
}

TEST(PolyTest, MultiplicationExamples) {
  EXPECT_EQ(P("x+1") * P("x-1"), P("x^2-1"));
  EXPECT_TRUE((P("3x^2+1/2") * QPoly()).is_zero());
  EXPECT_EQ(P("x+2") * P("x+3"), P("x^2+5x+6"));
}

TEST(PolyTest, EvalExamples) {
  EXPECT_EQ(eval(P("x^2+1"), Rational(2)), Rational(5));
  EXPECT_EQ(eval(P("7x^3-2x+5/3"), Rational(0)), Rational(5, 3));
  EXPECT_EQ(eval(P("x^3+2x"), Rational(1, 2)), Rational(9, 8));
}

TEST(PolyTest, DerivativeExamples) {
  EXPECT_EQ(derivative(P("x^3")), P("3x^2"));
  EXPECT_TRUE(derivative(P("7/2")).is_zero());
  EXPECT_EQ(derivative(P("x^4+2x^2")), P("4x^3+4x"));
  EXPECT_EQ(nth_derivative(P("x^4+2x^2"), 2), P("12x^2+4"));
}

TEST(PolyTest, ComposeExamples) {
  EXPECT_EQ(compose(P("x^2+1"), P("x+1")), P("x^2+2x+2"));
  EXPECT_EQ(compose(P("1/2x^3-x"), QPoly::x()), P("1/2x^3-x"));
  EXPECT_EQ(compose(P("x^3"), P("2x")), P("8x^3"));
}

TEST(PolyTest, DivexactExamples) {
  EXPECT_EQ(divexact(P("x^2-1"), P("x-1")), P("x+1"));
  EXPECT_THROW(divexact(P("x^2+1"), P("x")), NotDivisible);
  EXPECT_TRUE(divexact(QPoly(), P("x+3")).is_zero());
  EXPECT_THROW(divexact(P("x"), QPoly()), DivisorZero);
}

TEST(PolyTest, RingAxiomsOnRandomPolys) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const QPoly a = random_poly(rng, 6), b = random_poly(rng, 6), c = random_poly(rng, 6);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b - b, a);
    if (!b.is_zero()) EXPECT_EQ(divexact(a * b, b), a);
    const Rational t(static_cast<long>(rng() % 11) - 5, 3);
    EXPECT_EQ(eval(a * b + c, t), eval(a, t) * eval(b, t) + eval(c, t));
    EXPECT_EQ(eval(compose(a, b), t), eval(a, eval(b, t)));
  }
}

TEST(PolyTest, CanonicalFormIsUnique) {
  const QPoly a = P("2/4x^2+6/3");
  EXPECT_EQ(a, P("1/2x^2+2"));
  EXPECT_EQ(a.denominator(), 2);
  EXPECT_EQ(a.coeff(2), Rational(1, 2));
  EXPECT_EQ(a.coeff(7), Rational());
}

TEST(GaussPolyTest, MixedScalars) {
  const GaussPoly p(std::vector<GaussRational>{GaussRational::i(), GaussRational(Rational(1))});
  EXPECT_EQ(p * p, GaussPoly(std::vector<GaussRational>{GaussRational(Rational(-1)),
                                                        GaussRational(Rational(), Rational(2)),
                                                        GaussRational(Rational(1))}));
}

class QuadExtTest : public ::testing::Test {
 protected:
  QuadRoots roots_h(const char* h) { return quad_roots(P(h)); }
};

TEST_F(QuadExtTest, GoldenRoots) {
  const QuadRoots r = roots_h("1");
  EXPECT_EQ(r.alpha.a(), P("1/2"));
  EXPECT_EQ(r.alpha.b(), P("1/2"));
  EXPECT_EQ(*r.alpha.modulus(), P("5"));
}

TEST_F(QuadExtTest, VietaRelations) {
  for (const char* h : {"1", "x", "x^2+3", "5/3x^4-4/3x^3+2/3x^2-5x+1/2"}) {
    const QuadRoots r = roots_h(h);
    EXPECT_EQ(r.alpha + r.beta, QuadExt(P(h), QPoly(), r.alpha.modulus()));
    EXPECT_EQ(r.alpha * r.beta, QuadExt(QPoly(-1), QPoly(), r.alpha.modulus()));
    EXPECT_EQ(r.alpha.s() * r.alpha.s(),
              QuadExt(P(h) * P(h) + QPoly(4), QPoly(), r.alpha.modulus()));
    EXPECT_EQ(r.alpha * r.alpha, QuadExt((P(h) * P(h) + QPoly(2)) * Rational(1, 2),
                                         P(h) * Rational(1, 2), r.alpha.modulus()));
  }
}

TEST_F(QuadExtTest, Powers) {
  const QuadRoots r = roots_h("x");
  EXPECT_EQ(pow(r.alpha, 0), r.alpha.one());
  EXPECT_EQ(pow(r.alpha, 2), r.alpha * r.alpha);
  for (unsigned n = 0; n < 12; ++n) {
    const QuadExt expected = (n % 2 == 0) ? r.alpha.one() : -r.alpha.one();
    EXPECT_EQ(pow(r.alpha * r.beta, n), expected);
  }
}

TEST_F(QuadExtTest, ExactDivisionByS) {
  const QuadRoots r = roots_h("x");
  const QPoly h = P("x");
  EXPECT_EQ(divexact_by_s(r.alpha - r.beta), r.alpha.one());
  EXPECT_EQ(divexact_by_s(pow(r.alpha, 3) - pow(r.beta, 3)),
            QuadExt(h * h + QPoly(1), QPoly(), r.alpha.modulus()));
  EXPECT_EQ(divexact_by_s(pow(r.alpha, 2) - pow(r.beta, 2)), QuadExt(h, QPoly(), r.alpha.modulus()));
  EXPECT_THROW(divexact_by_s(r.alpha.one()), NotDivisible);
}

TEST_F(QuadExtTest, MismatchedModuliRejected) {
  const QuadRoots a = roots_h("1"), b = roots_h("2");
  EXPECT_THROW((void)(a.alpha + b.alpha), ModulusMismatch);
  EXPECT_THROW((void)(a.alpha == b.alpha), ModulusMismatch);
}

TEST_F(QuadExtTest, RingAxiomsOnRandomElements) {
  std::mt19937_64 rng(11);
  const QPoly h = P("x^2-1/3x+2");
  const auto m = QuadExt::make_modulus(h);
  for (int trial = 0; trial < 50; ++trial) {
    const QuadExt u(random_poly(rng, 4), random_poly(rng, 4), m);
    const QuadExt v(random_poly(rng, 4), random_poly(rng, 4), m);
    const QuadExt w(random_poly(rng, 4), random_poly(rng, 4), m);
    EXPECT_EQ(u * v, v * u);
    EXPECT_EQ((u * v) * w, u * (v * w));
    EXPECT_EQ(u * (v + w), u * v + u * w);
    EXPECT_EQ(pow(u, 5), u * u * u * u * u);
    EXPECT_EQ(divexact_by_s(u * u.s()), u);
  }
}

}  // namespace
}  // namespace hfib
