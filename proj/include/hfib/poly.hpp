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

#ifndef HFIB_POLY_HPP_
#define HFIB_POLY_HPP_

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "hfib/errors.hpp"
#include "hfib/gauss_rational.hpp"
#include "hfib/rational.hpp"

namespace hfib {

// Dense univariate polynomial, constant term first. The zero polynomial has
// no coefficients and no degree (degree() is nullopt).
template <class R>
class Poly {
 public:
  using Scalar = R;

  Poly() = default;
  Poly(R constant) : coeffs_{std::move(constant)} { normalize(); }  // NOLINT
  explicit Poly(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  static Poly monomial(R c, std::size_t k) {
    std::vector<R> coeffs(k + 1);
    coeffs[k] = std::move(c);
    return Poly(std::move(coeffs));
  }
  static Poly x() { return monomial(R(1), 1); }

  std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }
  R coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : R(); }
  const std::vector<R>& coefficients() const { return coeffs_; }

  Poly operator-() const {
    Poly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }
  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
  }
  Poly& operator*=(const Poly& o) {
    if (is_zero() || o.is_zero()) {
      coeffs_.clear();
      return *this;
    }
    std::vector<R> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
        out[i + j] += coeffs_[i] * o.coeffs_[j];
      }
    }
    coeffs_ = std::move(out);
    normalize();
    return *this;
  }
  Poly& operator*=(const R& c) {
    for (auto& x : coeffs_) x *= c;
    normalize();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const R& c) { return a *= c; }
  friend Poly operator*(const R& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<R> coeffs_;
};

// Polynomial over Q stored as an integer numerator vector over one positive
// common denominator. Canonical: no trailing zeros, gcd(content, den) = 1,
// zero is {} / 1. The representation is unique, so equality is structural.
template <>
class Poly<Rational> {
 public:
  using Scalar = Rational;

  Poly() = default;
  Poly(const Rational& constant);  // NOLINT
  Poly(long constant) : Poly(Rational(constant)) {}  // NOLINT
  explicit Poly(const std::vector<Rational>& coeffs);

  // numerators[i] / den is the coefficient of x^i. den must be nonzero.
  static Poly from_integers(std::vector<mpz_class> numerators, mpz_class den = 1);
  static Poly monomial(const Rational& c, std::size_t k);
  static Poly x() { return monomial(Rational(1), 1); }

  std::optional<std::size_t> degree() const {
    if (num_.empty()) return std::nullopt;
    return num_.size() - 1;
  }
  bool is_zero() const { return num_.empty(); }
  std::size_t size() const { return num_.size(); }
  Rational coeff(std::size_t i) const;
  std::vector<Rational> coefficients() const;

  const std::vector<mpz_class>& numerators() const { return num_; }
  const mpz_class& denominator() const { return den_; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.den_ == b.den_ && a.num_ == b.num_;
  }

 private:
  void normalize();
  Poly& add_scaled(const Poly& o, int sign);

  std::vector<mpz_class> num_;
  mpz_class den_ = 1;
};

using QPoly = Poly<Rational>;
using GaussPoly = Poly<GaussRational>;

// Gives p its value in a ring containing the coefficients (Horner).
template <class R, class T>
T eval(const Poly<R>& p, const T& t) {
  T acc{};
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = acc * t + T(p.coeff(i));
  }
  return acc;
}

template <class R>
Poly<R> derivative(const Poly<R>& p) {
  if (p.size() <= 1) return Poly<R>();
  std::vector<R> out(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) {
    out[i - 1] = p.coeff(i) * R(static_cast<long>(i));
  }
  return Poly<R>(std::move(out));
}

template <class R>
Poly<R> nth_derivative(Poly<R> p, std::size_t k) {
  for (std::size_t i = 0; i < k && !p.is_zero(); ++i) p = derivative(p);
  return p;
}

// p(q(x)).
template <class R>
Poly<R> compose(const Poly<R>& p, const Poly<R>& q) {
  Poly<R> acc;
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = acc * q + Poly<R>(p.coeff(i));
  }
  return acc;
}

template <class R>
Poly<R> pow(const Poly<R>& base, unsigned long n) {
  Poly<R> result(R(1));
  Poly<R> b = base;
  while (n > 0) {
    if (n & 1UL) result *= b;
    n >>= 1;
    if (n > 0) b *= b;
  }
  return result;
}

// Returns r with r*q == p, or throws NotDivisible.
template <class R>
Poly<R> divexact(const Poly<R>& p, const Poly<R>& q) {
  if (q.is_zero()) throw DivisorZero("polynomial division by zero");
  if (p.is_zero()) return Poly<R>();
  if (p.size() < q.size()) throw NotDivisible("divisor degree exceeds dividend degree");
  std::vector<R> rem = [&] {
    std::vector<R> v(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) v[i] = p.coeff(i);
    return v;
  }();
  std::vector<R> div(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) div[i] = q.coeff(i);
  const std::size_t dq = q.size() - 1;
  const R& lead = div.back();
  std::vector<R> quot(rem.size() - dq);
  for (std::size_t i = quot.size(); i-- > 0;) {
    if (rem[i + dq].is_zero()) continue;
    R c = rem[i + dq] / lead;
    for (std::size_t j = 0; j <= dq; ++j) {
      if (!div[j].is_zero()) rem[i + j] -= c * div[j];
    }
    quot[i] = std::move(c);
  }
  for (std::size_t i = 0; i < dq; ++i) {
    if (!rem[i].is_zero()) throw NotDivisible("nonzero remainder");
  }
  return Poly<R>(std::move(quot));
}

std::ostream& operator<<(std::ostream& os, const QPoly& p);
std::ostream& operator<<(std::ostream& os, const GaussPoly& p);

}  // namespace hfib

#endif  // HFIB_POLY_HPP_
