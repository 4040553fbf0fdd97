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

#include <utility>

#include "hfib/poly.hpp"

namespace hfib {

Poly<Rational>::Poly(const Rational& constant) {
  if (!constant.is_zero()) {
    num_.push_back(constant.num());
    den_ = constant.den();
  }
}

Poly<Rational>::Poly(const std::vector<Rational>& coeffs) {
  mpz_class common = 1;
  for (const auto& c : coeffs) {
    if (!c.is_zero()) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.den().get_mpz_t());
  }
  num_.resize(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    mpz_divexact(num_[i].get_mpz_t(), common.get_mpz_t(), coeffs[i].den().get_mpz_t());
    num_[i] *= coeffs[i].num();
  }
  den_ = std::move(common);
  normalize();
}

Poly<Rational> Poly<Rational>::from_integers(std::vector<mpz_class> numerators, mpz_class den) {
  if (den == 0) throw DivisorZero("polynomial with zero denominator");
  Poly p;
  p.num_ = std::move(numerators);
  p.den_ = std::move(den);
  if (p.den_ < 0) {
    p.den_ = -p.den_;
    for (auto& c : p.num_) c = -c;
  }
  p.normalize();
  return p;
}

Poly<Rational> Poly<Rational>::monomial(const Rational& c, std::size_t k) {
  if (c.is_zero()) return Poly();
  Poly p;
  p.num_.resize(k + 1);
  p.num_[k] = c.num();
  p.den_ = c.den();
  return p;
}

Rational Poly<Rational>::coeff(std::size_t i) const {
  if (i >= num_.size()) return Rational();
  return Rational(num_[i], den_);
}

std::vector<Rational> Poly<Rational>::coefficients() const {
  std::vector<Rational> out;
  out.reserve(num_.size());
  for (std::size_t i = 0; i < num_.size(); ++i) out.push_back(coeff(i));
  return out;
}

void Poly<Rational>::normalize() {
  while (!num_.empty() && sgn(num_.back()) == 0) num_.pop_back();
  if (num_.empty()) {
    den_ = 1;
    return;
  }
  if (den_ == 1) return;
  mpz_class g = den_;
  for (const auto& c : num_) {
    if (sgn(c) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

Poly<Rational> Poly<Rational>::operator-() const {
  Poly out = *this;
  for (auto& c : out.num_) mpz_neg(c.get_mpz_t(), c.get_mpz_t());
  return out;
}

Poly<Rational>& Poly<Rational>::add_scaled(const Poly& o, int sign) {
  if (o.is_zero()) return *this;
  if (num_.size() < o.num_.size()) num_.resize(o.num_.size());
  if (den_ == o.den_) {
    for (std::size_t i = 0; i < o.num_.size(); ++i) {
      if (sign > 0) {
        mpz_add(num_[i].get_mpz_t(), num_[i].get_mpz_t(), o.num_[i].get_mpz_t());
      } else {
        mpz_sub(num_[i].get_mpz_t(), num_[i].get_mpz_t(), o.num_[i].get_mpz_t());
      }
    }
  } else {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), den_.get_mpz_t(), o.den_.get_mpz_t());
    mpz_class mine, theirs;
    mpz_divexact(mine.get_mpz_t(), o.den_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(theirs.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    if (mine != 1) {
      for (auto& c : num_) mpz_mul(c.get_mpz_t(), c.get_mpz_t(), mine.get_mpz_t());
    }
    for (std::size_t i = 0; i < o.num_.size(); ++i) {
      if (sign > 0) {
        mpz_addmul(num_[i].get_mpz_t(), o.num_[i].get_mpz_t(), theirs.get_mpz_t());
      } else {
        mpz_submul(num_[i].get_mpz_t(), o.num_[i].get_mpz_t(), theirs.get_mpz_t());
      }
    }
    den_ *= mine;
  }
  normalize();
  return *this;
}

Poly<Rational>& Poly<Rational>::operator+=(const Poly& o) { return add_scaled(o, +1); }
Poly<Rational>& Poly<Rational>::operator-=(const Poly& o) { return add_scaled(o, -1); }

Poly<Rational> operator*(const Poly<Rational>& a, const Poly<Rational>& b) {
  Poly<Rational> out;
  if (a.is_zero() || b.is_zero()) return out;
  out.num_.resize(a.num_.size() + b.num_.size() - 1);
  for (std::size_t i = 0; i < a.num_.size(); ++i) {
    const mpz_srcptr ai = a.num_[i].get_mpz_t();
    if (mpz_sgn(ai) == 0) continue;
    for (std::size_t j = 0; j < b.num_.size(); ++j) {
      mpz_addmul(out.num_[i + j].get_mpz_t(), ai, b.num_[j].get_mpz_t());
    }
  }
  out.den_ = a.den_ * b.den_;
  out.normalize();
  return out;
}

Poly<Rational>& Poly<Rational>::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly<Rational>& Poly<Rational>::operator*=(const Rational& c) {
  if (c.is_zero()) {
    num_.clear();
    den_ = 1;
    return *this;
  }
  if (c.num() != 1) {
    for (auto& x : num_) x *= c.num();
  }
  den_ *= c.den();
  normalize();
  return *this;
}

}  // namespace hfib
