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

#ifndef HFIB_ALGEBRA_HPP_
#define HFIB_ALGEBRA_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hfib/errors.hpp"
#include "hfib/quad_ext.hpp"
#include "hfib/rational.hpp"

namespace hfib {

// Structure constants of a finite-dimensional algebra with basis e_0..e_{dim-1}:
// e_i * e_j = sum_k c(i, j, k) e_k. Neither associativity nor commutativity is
// assumed; e_0 is expected to be the unit (see validate()).
class AlgebraTable {
 public:
  struct Term {
    std::size_t i, j, k;
    Rational c;
  };

  // constants is indexed [(i * dim + j) * dim + k].
  AlgebraTable(std::string name, std::size_t dim, std::vector<Rational> constants);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_[(i * dim_ + j) * dim_ + k];
  }
  const std::vector<Rational>& constants() const { return constants_; }
  // Nonzero constants in (i, j, k) order.
  const std::vector<Term>& terms() const { return terms_; }

  // Copy with a different name or with one constant replaced.
  AlgebraTable renamed(std::string name) const;
  AlgebraTable with_constant(std::size_t i, std::size_t j, std::size_t k, Rational value) const;

  friend bool operator==(const AlgebraTable& a, const AlgebraTable& b) {
    return a.dim_ == b.dim_ && a.constants_ == b.constants_;
  }

 private:
  std::string name_;
  std::size_t dim_;
  std::vector<Rational> constants_;
  std::vector<Term> terms_;
};

using TablePtr = std::shared_ptr<const AlgebraTable>;

struct ValidationReport {
  bool unital = true;
  bool associative = true;
  bool commutative = true;
  // First basis triple/pair that breaks each law, when one does.
  std::string associativity_witness;
  std::string commutativity_witness;
};

// Description of the first unit-law violation, if any.
std::optional<std::string> unit_law_violation(const AlgebraTable& table);

// Throws NotUnital; associativity and commutativity are informational.
ValidationReport validate(const AlgebraTable& table);

// Product of basis elements as a coefficient vector.
std::vector<Rational> basis_product(const AlgebraTable& table, std::size_t i, std::size_t j);

// 1-dimensional algebra K itself.
AlgebraTable real_table();
// Two-dimensional K[e]/(e^2 - gamma e_0): complex (-1), split-complex (+1), dual (0).
AlgebraTable binarion_table(std::string name, const Rational& gamma);
AlgebraTable complex_table();
AlgebraTable split_complex_table();
AlgebraTable dual_table();
// Generalized quaternions H(a, b) written out from their defining relations.
AlgebraTable quaternion_table(const Rational& a, const Rational& b);
// Cayley-Dickson double of H(a, b) with parameter c.
AlgebraTable octonion_table(const Rational& a = -1, const Rational& b = -1,
                            const Rational& c = -1);

// (p, q)(r, s) = (pr + gamma s*q, sp + q r*), conjugation negating e_1.. .
// New basis: e_i -> (e_i, 0), e_{dim+i} -> (0, e_i).
AlgebraTable cayley_dickson_double(const AlgebraTable& base, const Rational& gamma,
                                   std::string name);

// Builtin by name: real, complex, split_complex, dual, quaternion,
// quaternion:a,b, octonion, octonion:a,b,c. Throws UnknownKind.
AlgebraTable builtin(std::string_view spec);
std::vector<std::string> builtin_names();

// ---------------------------------------------------------------------------
// Elements

inline Rational zero_like(const Rational&) { return Rational(); }
inline QPoly zero_like(const QPoly&) { return QPoly(); }
inline QuadExt zero_like(const QuadExt& u) { return u.zero(); }

// Coordinate vector over a commutative scalar ring S attached to a table.
template <class S>
class AlgElement {
 public:
  AlgElement(TablePtr table, std::vector<S> coords)
      : table_(std::move(table)), coords_(std::move(coords)) {
    if (coords_.size() != table_->dim()) {
      throw TableMismatch("coordinate count does not match algebra dimension");
    }
  }

  static AlgElement basis(TablePtr table, std::size_t i, const S& zero, const S& one) {
    std::vector<S> coords(table->dim(), zero);
    coords[i] = one;
    return AlgElement(std::move(table), std::move(coords));
  }

  const TablePtr& table() const { return table_; }
  std::size_t dim() const { return coords_.size(); }
  const S& operator[](std::size_t k) const { return coords_[k]; }
  const std::vector<S>& coords() const { return coords_; }

  AlgElement operator-() const {
    AlgElement out = *this;
    for (auto& c : out.coords_) c = -c;
    return out;
  }
  AlgElement& operator+=(const AlgElement& o) {
    require_same_table(o);
    for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += o.coords_[k];
    return *this;
  }
  AlgElement& operator-=(const AlgElement& o) {
    require_same_table(o);
    for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= o.coords_[k];
    return *this;
  }
  // Scalar multiplication by anything S can be multiplied by.
  template <class C>
  AlgElement& scale(const C& c) {
    for (auto& x : coords_) x *= c;
    return *this;
  }

  friend AlgElement operator+(AlgElement u, const AlgElement& v) { return u += v; }
  friend AlgElement operator-(AlgElement u, const AlgElement& v) { return u -= v; }
  friend bool operator==(const AlgElement& u, const AlgElement& v) {
    u.require_same_table(v);
    return u.coords_ == v.coords_;
  }

  void require_same_table(const AlgElement& o) const {
    if (table_ != o.table_ && *table_ != *o.table_) {
      throw TableMismatch("elements belong to different algebras");
    }
  }

 private:
  TablePtr table_;
  std::vector<S> coords_;
};

template <class S, class C>
AlgElement<S> alg_scale(const C& c, AlgElement<S> u) {
  return u.scale(c);
}

// Bilinear extension of the table: out_k = sum_{i,j} u_i v_j c(i, j, k).
template <class S>
AlgElement<S> alg_mul(const AlgElement<S>& u, const AlgElement<S>& v) {
  u.require_same_table(v);
  const AlgebraTable& t = *u.table();
  const std::size_t dim = t.dim();
  std::vector<S> out(dim, zero_like(u[0]));
  std::vector<std::optional<S>> products(dim * dim);
  for (const auto& term : t.terms()) {
    auto& p = products[term.i * dim + term.j];
    if (!p) p = u[term.i] * v[term.j];
    if (term.c.is_one()) {
      out[term.k] += *p;
    } else if (term.c == Rational(-1)) {
      out[term.k] -= *p;
    } else {
      S scaled = *p;
      scaled *= term.c;
      out[term.k] += scaled;
    }
  }
  return AlgElement<S>(u.table(), std::move(out));
}

// Lifts polynomial coordinates p to p + 0*s.
AlgElement<QuadExt> alg_embed(const AlgElement<QPoly>& u, const QuadExt::Modulus& modulus);

// Inverse of alg_embed when every s-part vanishes.
std::optional<AlgElement<QPoly>> alg_project(const AlgElement<QuadExt>& u);

}  // namespace hfib

#endif  // HFIB_ALGEBRA_HPP_
