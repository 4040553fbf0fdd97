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

#include <memory>
#include <random>

#include <gtest/gtest.h>

#include "hfib/algebra.hpp"
#include "hfib/algebra_json.hpp"
#include "hfib/errors.hpp"
#include "hfib/hspec.hpp"

namespace hfib {
namespace {

using RElt = AlgElement<Rational>;

TablePtr share(AlgebraTable t) { return std::make_shared<const AlgebraTable>(std::move(t)); }

RElt e(const TablePtr& t, std::size_t i) { return RElt::basis(t, i, Rational(), Rational(1)); }

RElt random_element(const TablePtr& t, std::mt19937_64& rng) {
  std::vector<Rational> coords(t->dim());
  for (auto& c : coords) c = Rational(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 3) + 1);
  return RElt(t, coords);
}

TEST(AlgebraTest, HamiltonRelations) {
  const TablePtr h = share(builtin("quaternion"));
  EXPECT_EQ(alg_mul(e(h, 1), e(h, 2)), e(h, 3));
  EXPECT_EQ(alg_mul(e(h, 2), e(h, 1)), -e(h, 3));
  EXPECT_EQ(alg_mul(e(h, 2), e(h, 3)), e(h, 1));
  EXPECT_EQ(alg_mul(e(h, 3), e(h, 1)), e(h, 2));
  for (std::size_t i = 1; i < 4; ++i) EXPECT_EQ(alg_mul(e(h, i), e(h, i)), -e(h, 0));
}

TEST(AlgebraTest, QuaternionMatchesCayleyDicksonOracle) {
  for (auto [a, b] : {std::pair{-1L, -1L}, {2L, -3L}, {1L, 1L}, {-5L, 7L}}) {
    const AlgebraTable direct = quaternion_table(a, b);
    const AlgebraTable doubled = cayley_dickson_double(binarion_table("c", a), b, direct.name());
    EXPECT_EQ(direct, doubled) << a << "," << b;
  }
}

TEST(AlgebraTest, GeneralizedQuaternionSquares) {
  const TablePtr h = share(builtin("quaternion:2,-3"));
  EXPECT_EQ(alg_mul(e(h, 1), e(h, 1)), alg_scale(Rational(2), e(h, 0)));
  EXPECT_EQ(alg_mul(e(h, 2), e(h, 2)), alg_scale(Rational(-3), e(h, 0)));
  EXPECT_EQ(alg_mul(e(h, 3), e(h, 3)), alg_scale(Rational(6), e(h, 0)));
}

TEST(AlgebraTest, TwoDimensionalAlgebras) {
  const TablePtr c = share(builtin("complex"));
  const TablePtr sc = share(builtin("split_complex"));
  const TablePtr d = share(builtin("dual"));
  EXPECT_EQ(alg_mul(e(c, 1), e(c, 1)), -e(c, 0));
  EXPECT_EQ(alg_mul(e(sc, 1), e(sc, 1)), e(sc, 0));
  EXPECT_EQ(alg_mul(e(d, 1), e(d, 1)), RElt(d, {Rational(), Rational()}));
}

TEST(AlgebraTest, ValidatorFlags) {
  const ValidationReport q = validate(builtin("quaternion"));
  EXPECT_TRUE(q.unital);
  EXPECT_TRUE(q.associative);
  EXPECT_FALSE(q.commutative);
  const ValidationReport o = validate(builtin("octonion"));
  EXPECT_FALSE(o.associative);
  EXPECT_FALSE(o.commutative);
  for (const char* name : {"real", "complex", "split_complex", "dual"}) {
    const ValidationReport r = validate(builtin(name));
    EXPECT_TRUE(r.associative && r.commutative) << name;
  }
}

TEST(AlgebraTest, NonUnitalTableRejected) {
  const AlgebraTable bad = builtin("quaternion").with_constant(0, 1, 1, 0).with_constant(0, 1, 0, 1);
  EXPECT_TRUE(unit_law_violation(bad));
  EXPECT_THROW(validate(bad), NotUnital);
}

TEST(AlgebraTest, OctonionNonassociativeWitness) {
  const TablePtr o = share(builtin("octonion"));
  EXPECT_NE(alg_mul(alg_mul(e(o, 1), e(o, 2)), e(o, 4)), alg_mul(e(o, 1), alg_mul(e(o, 2), e(o, 4))));
}

TEST(AlgebraTest, OctonionIsAlternative) {
  const TablePtr o = share(builtin("octonion"));
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const RElt x = random_element(o, rng), y = random_element(o, rng);
    EXPECT_EQ(alg_mul(alg_mul(x, x), y), alg_mul(x, alg_mul(x, y)));
    EXPECT_EQ(alg_mul(alg_mul(y, x), x), alg_mul(y, alg_mul(x, x)));
  }
}

TEST(AlgebraTest, UnitAndLinearity) {
  const TablePtr o = share(builtin("octonion"));
  std::mt19937_64 rng(5);
  const RElt one = e(o, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const RElt u = random_element(o, rng), v = random_element(o, rng), w = random_element(o, rng);
    EXPECT_EQ(alg_mul(u, one), u);
    EXPECT_EQ(alg_mul(one, u), u);
    EXPECT_EQ(alg_mul(u, v + w), alg_mul(u, v) + alg_mul(u, w));
    EXPECT_EQ(alg_mul(alg_scale(Rational(3, 2), u), v), alg_scale(Rational(3, 2), alg_mul(u, v)));
  }
}

TEST(AlgebraTest, ElementArithmetic) {
  const TablePtr h = share(builtin("quaternion"));
  const RElt u(h, {0, 1, 1, 2});
  EXPECT_EQ(alg_scale(Rational(2), u), RElt(h, {0, 2, 2, 4}));
  EXPECT_EQ(u + RElt(h, {0, 0, 0, 0}), u);
  const TablePtr c = share(builtin("complex"));
  EXPECT_THROW((void)(e(h, 0) + e(c, 0)), TableMismatch);
  EXPECT_THROW(RElt(h, {1, 2}), TableMismatch);
}

TEST(AlgebraTest, EmbedAndProject) {
  const TablePtr h = share(builtin("quaternion"));
  const auto m = QuadExt::make_modulus(parse_poly("x"));
  const AlgElement<QPoly> u(h, {parse_poly("0"), parse_poly("1"), parse_poly("x"), parse_poly("x^2+1")});
  const auto lifted = alg_embed(u, m);
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_EQ(lifted[k].a(), u[k]);
    EXPECT_TRUE(lifted[k].b().is_zero());
  }
  EXPECT_EQ(alg_project(lifted), u);
  std::vector<QuadExt> with_s(4, QuadExt(m));
  with_s[2] = QuadExt(QPoly(), QPoly(1), m);
  EXPECT_FALSE(alg_project(AlgElement<QuadExt>(h, with_s)));
  const AlgElement<QPoly> zero(h, std::vector<QPoly>(4));
  EXPECT_EQ(alg_project(alg_embed(zero, m)), zero);
}

TEST(AlgebraTest, UnknownBuiltin) {
  EXPECT_THROW(builtin("sedenion"), UnknownKind);
  EXPECT_THROW(builtin("quaternion:1"), UnknownKind);
}

TEST(AlgebraJsonTest, RoundTrip) {
  for (const char* name : {"real", "complex", "split_complex", "dual", "quaternion",
                           "quaternion:2,-3", "octonion", "octonion:1,-1,1/2"}) {
    const AlgebraTable t = builtin(name);
    EXPECT_EQ(parse_algebra_json(algebra_to_json(t).dump()), t) << name;
  }
}

TEST(AlgebraJsonTest, AcceptsRationalStrings) {
  const AlgebraTable t = parse_algebra_json(
      R"({"name": "halfsplit", "dim": 2, "table": [[[1, 0], [0, 1]], [[0, 1], ["1/2", 0]]]})");
  EXPECT_EQ(t.c(1, 1, 0), Rational(1, 2));
}

TEST(AlgebraJsonTest, MalformedInputs) {
  EXPECT_THROW(parse_algebra_json("{"), ParseError);
  EXPECT_THROW(parse_algebra_json(R"({"name": "a", "dim": 2, "table": [[[1]]]})"), ParseError);
  EXPECT_THROW(parse_algebra_json(R"({"name": "a", "dim": 1, "table": [[["x"]]]})"), ParseError);
  EXPECT_THROW(load_algebra_file("data/malformed.json"), ParseError);
}

TEST(AlgebraJsonTest, FilesFromDisk) {
  EXPECT_EQ(load_algebra_file("data/custom_quaternion.json").name(), "my_quaternion");
  EXPECT_TRUE(unit_law_violation(load_algebra_file("data/non_unital.json")));
  EXPECT_NE(resolve_algebra("data/corrupted_quaternion.json"), builtin("quaternion"));
  EXPECT_EQ(resolve_algebra("quaternion"), builtin("quaternion"));
}

}  // namespace
}  // namespace hfib
