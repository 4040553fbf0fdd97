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

#include "hfib/quad_ext.hpp"

#include <ostream>

namespace hfib {

QuadExt::Modulus QuadExt::make_modulus(const QPoly& h) {
  return std::make_shared<const QPoly>(h * h + QPoly(4));
}

void QuadExt::require_same_modulus(const QuadExt& o) const {
  if (modulus_ == o.modulus_) return;
  if (!modulus_ || !o.modulus_ || *modulus_ != *o.modulus_) {
    throw ModulusMismatch("quadratic extension elements have different moduli");
  }
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  require_same_modulus(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  require_same_modulus(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadExt operator*(const QuadExt& u, const QuadExt& v) {
  u.require_same_modulus(v);
  if (u.is_zero() || v.is_zero()) return u.zero();
  if (u.b_.is_zero()) return QuadExt(u.a_ * v.a_, u.a_ * v.b_, u.modulus_);
  if (v.b_.is_zero()) return QuadExt(u.a_ * v.a_, u.b_ * v.a_, u.modulus_);
  // Karatsuba: ad + bc = (a + b)(c + d) - ac - bd.
  QPoly ac = u.a_ * v.a_;
  QPoly bd = u.b_ * v.b_;
  QPoly cross = (u.a_ + u.b_) * (v.a_ + v.b_);
  cross -= ac;
  cross -= bd;
  ac += bd * *u.modulus_;
  return QuadExt(std::move(ac), std::move(cross), u.modulus_);
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  *this = *this * o;
  return *this;
}

QuadExt& QuadExt::operator*=(const QPoly& c) {
  a_ *= c;
  b_ *= c;
  return *this;
}

QuadExt& QuadExt::operator*=(const Rational& c) {
  a_ *= c;
  b_ *= c;
  return *this;
}

bool operator==(const QuadExt& u, const QuadExt& v) {
  u.require_same_modulus(v);
  return u.a_ == v.a_ && u.b_ == v.b_;
}

QuadExt pow(const QuadExt& u, unsigned long n) {
  QuadExt result = u.one();
  QuadExt base = u;
  while (n > 0) {
    if (n & 1UL) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

QuadExt divexact_by_s(const QuadExt& u) {
  // (a + b s) / s = b + (a / M) s, since 1/s = s / M.
  QPoly a_over_m;
  try {
    a_over_m = divexact(u.a(), *u.modulus());
  } catch (const NotDivisible&) {
    throw NotDivisible("rational part is not divisible by the modulus");
  }
  return QuadExt(u.b(), std::move(a_over_m), u.modulus());
}

QuadRoots quad_roots(const QPoly& h) {
  auto modulus = QuadExt::make_modulus(h);
  const Rational half(1, 2);
  QPoly half_h = h * half;
  QPoly half_one(half);
  return QuadRoots{QuadExt(half_h, half_one, modulus), QuadExt(half_h, -half_one, modulus)};
}

QuadExt quad_from_alpha(const QPoly& h) { return quad_roots(h).alpha; }
QuadExt quad_from_beta(const QPoly& h) { return quad_roots(h).beta; }

std::ostream& operator<<(std::ostream& os, const QuadExt& u) {
  return os << "(" << u.a() << ") + (" << u.b() << ")*s";
}

}  // namespace hfib
