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

#ifndef HFIB_GAUSS_RATIONAL_HPP_
#define HFIB_GAUSS_RATIONAL_HPP_

#include <string>

#include "hfib/rational.hpp"

namespace hfib {

// re + im*i with i^2 = -1.
struct GaussRational {
  Rational re;
  Rational im;

  GaussRational() = default;
  GaussRational(long r) : re(r) {}  // NOLINT
  GaussRational(Rational r) : re(std::move(r)) {}  // NOLINT
  GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }
  GaussRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  GaussRational operator-() const { return {-re, -im}; }
  GaussRational& operator+=(const GaussRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  GaussRational& operator/=(const GaussRational& o) {
    const Rational n = o.norm();
    *this *= o.conj();
    re /= n;
    im /= n;
    return *this;
  }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend bool operator==(const GaussRational&, const GaussRational&) = default;

  std::string to_string() const {
    if (im.is_zero()) return re.to_string();
    return "(" + re.to_string() + (im.sign() < 0 ? "" : "+") + im.to_string() + "i)";
  }
};

}  // namespace hfib

#endif  // HFIB_GAUSS_RATIONAL_HPP_
