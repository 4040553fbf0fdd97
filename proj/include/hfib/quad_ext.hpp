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

#ifndef HFIB_QUAD_EXT_HPP_
#define HFIB_QUAD_EXT_HPP_

#include <memory>
#include <string>

#include "hfib/poly.hpp"

namespace hfib {

// Element a(x) + b(x)*s of Q[x][s]/(s^2 - M(x)). The modulus M is shared by
// pointer; elements with unequal moduli refuse to combine (ModulusMismatch).
class QuadExt {
 public:
  using Modulus = std::shared_ptr<const QPoly>;

  explicit QuadExt(Modulus modulus) : modulus_(std::move(modulus)) {}
  QuadExt(QPoly a, QPoly b, Modulus modulus)
      : a_(std::move(a)), b_(std::move(b)), modulus_(std::move(modulus)) {}

  static Modulus make_modulus(const QPoly& h);  // h*h + 4

  const QPoly& a() const { return a_; }
  const QPoly& b() const { return b_; }
  const Modulus& modulus() const { return modulus_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  QuadExt zero() const { return QuadExt(modulus_); }
  QuadExt one() const { return QuadExt(QPoly(1), QPoly(), modulus_); }
  QuadExt s() const { return QuadExt(QPoly(), QPoly(1), modulus_); }

  QuadExt operator-() const { return QuadExt(-a_, -b_, modulus_); }
  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator*=(const QPoly& c);
  QuadExt& operator*=(const Rational& c);

  friend QuadExt operator+(QuadExt u, const QuadExt& v) { return u += v; }
  friend QuadExt operator-(QuadExt u, const QuadExt& v) { return u -= v; }
  friend QuadExt operator*(const QuadExt& u, const QuadExt& v);
  friend QuadExt operator*(QuadExt u, const QPoly& c) { return u *= c; }
  friend QuadExt operator*(const QPoly& c, QuadExt u) { return u *= c; }
  friend QuadExt operator*(QuadExt u, const Rational& c) { return u *= c; }
  friend QuadExt operator*(const Rational& c, QuadExt u) { return u *= c; }

  // Throws ModulusMismatch when the moduli differ.
  friend bool operator==(const QuadExt& u, const QuadExt& v);

 private:
  void require_same_modulus(const QuadExt& o) const;

  QPoly a_;
  QPoly b_;
  Modulus modulus_;
};

// u^n by repeated squaring; u^0 = 1.
QuadExt pow(const QuadExt& u, unsigned long n);

// Returns w with w*s == u: w = b + (a / M)*s. Throws NotDivisible when M does
// not divide the rational part of u.
QuadExt divexact_by_s(const QuadExt& u);

// Roots of v^2 - h v - 1: alpha = (h + s)/2, beta = (h - s)/2 with s^2 = h^2+4.
struct QuadRoots {
  QuadExt alpha;
  QuadExt beta;
};
QuadRoots quad_roots(const QPoly& h);
QuadExt quad_from_alpha(const QPoly& h);
QuadExt quad_from_beta(const QPoly& h);

std::ostream& operator<<(std::ostream& os, const QuadExt& u);

}  // namespace hfib

#endif  // HFIB_QUAD_EXT_HPP_
