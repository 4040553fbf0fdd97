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

#include "hfib/algebra.hpp"

#include <sstream>

namespace hfib {

namespace {

std::string basis_name(std::size_t i) { return "e" + std::to_string(i); }

std::vector<Rational> zero_constants(std::size_t dim) {
  return std::vector<Rational>(dim * dim * dim);
}

std::size_t index(std::size_t dim, std::size_t i, std::size_t j, std::size_t k) {
  return (i * dim + j) * dim + k;
}

}  // namespace

AlgebraTable::AlgebraTable(std::string name, std::size_t dim, std::vector<Rational> constants)
    : name_(std::move(name)), dim_(dim), constants_(std::move(constants)) {
  if (dim_ == 0) throw TableMismatch("algebra dimension must be positive");
  if (constants_.size() != dim_ * dim_ * dim_) {
    throw TableMismatch("structure constant count is not dim^3");
  }
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      for (std::size_t k = 0; k < dim_; ++k) {
        const Rational& v = c(i, j, k);
        if (!v.is_zero()) terms_.push_back({i, j, k, v});
      }
    }
  }
}

AlgebraTable AlgebraTable::renamed(std::string name) const {
  return AlgebraTable(std::move(name), dim_, constants_);
}

AlgebraTable AlgebraTable::with_constant(std::size_t i, std::size_t j, std::size_t k,
                                         Rational value) const {
  std::vector<Rational> constants = constants_;
  constants.at(index(dim_, i, j, k)) = std::move(value);
  return AlgebraTable(name_, dim_, std::move(constants));
}

std::vector<Rational> basis_product(const AlgebraTable& table, std::size_t i, std::size_t j) {
  std::vector<Rational> out(table.dim());
  for (std::size_t k = 0; k < table.dim(); ++k) out[k] = table.c(i, j, k);
  return out;
}

std::optional<std::string> unit_law_violation(const AlgebraTable& table) {
  const std::size_t dim = table.dim();
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t k = 0; k < dim; ++k) {
      const Rational expected(j == k ? 1 : 0);
      if (table.c(0, j, k) != expected) {
        return "e0*" + basis_name(j) + " has coefficient " + table.c(0, j, k).to_string() +
               " on " + basis_name(k) + ", expected " + expected.to_string();
      }
      if (table.c(j, 0, k) != expected) {
        return basis_name(j) + "*e0 has coefficient " + table.c(j, 0, k).to_string() + " on " +
               basis_name(k) + ", expected " + expected.to_string();
      }
    }
  }
  return std::nullopt;
}

ValidationReport validate(const AlgebraTable& table) {
  if (auto violation = unit_law_violation(table)) {
    throw NotUnital("algebra '" + table.name() + "' is not unital: " + *violation);
  }
  ValidationReport report;
  const std::size_t dim = table.dim();
  for (std::size_t i = 0; i < dim && report.commutative; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      if (basis_product(table, i, j) != basis_product(table, j, i)) {
        report.commutative = false;
        report.commutativity_witness = basis_name(i) + "*" + basis_name(j) + " != " +
                                       basis_name(j) + "*" + basis_name(i);
        break;
      }
    }
  }
  // (e_i e_j) e_l versus e_i (e_j e_l), expanded through the constants.
  for (std::size_t i = 0; i < dim && report.associative; ++i) {
    for (std::size_t j = 0; j < dim && report.associative; ++j) {
      for (std::size_t l = 0; l < dim && report.associative; ++l) {
        for (std::size_t out = 0; out < dim; ++out) {
          Rational left, right;
          for (std::size_t m = 0; m < dim; ++m) {
            left += table.c(i, j, m) * table.c(m, l, out);
            right += table.c(j, l, m) * table.c(i, m, out);
          }
          if (left != right) {
            report.associative = false;
            report.associativity_witness = "(" + basis_name(i) + basis_name(j) + ")" +
                                           basis_name(l) + " != " + basis_name(i) + "(" +
                                           basis_name(j) + basis_name(l) + ")";
            break;
          }
        }
      }
    }
  }
  return report;
}

AlgebraTable real_table() { return AlgebraTable("real", 1, {Rational(1)}); }

AlgebraTable binarion_table(std::string name, const Rational& gamma) {
  auto constants = zero_constants(2);
  constants[index(2, 0, 0, 0)] = 1;
  constants[index(2, 0, 1, 1)] = 1;
  constants[index(2, 1, 0, 1)] = 1;
  constants[index(2, 1, 1, 0)] = gamma;
  return AlgebraTable(std::move(name), 2, std::move(constants));
}

AlgebraTable complex_table() { return binarion_table("complex", Rational(-1)); }
AlgebraTable split_complex_table() { return binarion_table("split_complex", Rational(1)); }
AlgebraTable dual_table() { return binarion_table("dual", Rational(0)); }

AlgebraTable quaternion_table(const Rational& a, const Rational& b) {
  const std::size_t d = 4;
  auto constants = zero_constants(d);
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, const Rational& v) {
    constants[index(d, i, j, k)] = v;
  };
  for (std::size_t i = 0; i < d; ++i) {
    set(0, i, i, 1);
    set(i, 0, i, 1);
  }
  set(1, 1, 0, a);
  set(2, 2, 0, b);
  set(3, 3, 0, -(a * b));
  set(1, 2, 3, 1);
  set(2, 1, 3, -1);
  set(1, 3, 2, a);
  set(3, 1, 2, -a);
  set(2, 3, 1, -b);
  set(3, 2, 1, b);
  std::string name = (a == Rational(-1) && b == Rational(-1))
                         ? "quaternion"
                         : "quaternion:" + a.to_string() + "," + b.to_string();
  return AlgebraTable(std::move(name), d, std::move(constants));
}

AlgebraTable cayley_dickson_double(const AlgebraTable& base, const Rational& gamma,
                                   std::string name) {
  const std::size_t n = base.dim();
  const std::size_t d = 2 * n;
  auto constants = zero_constants(d);
  auto conj_sign = [](std::size_t i) { return Rational(i == 0 ? 1 : -1); };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        // (e_i, 0)(e_j, 0) = (e_i e_j, 0)
        constants[index(d, i, j, k)] = base.c(i, j, k);
        // (e_i, 0)(0, e_j) = (0, e_j e_i)
        constants[index(d, i, n + j, n + k)] = base.c(j, i, k);
        // (0, e_i)(e_j, 0) = (0, e_i conj(e_j))
        constants[index(d, n + i, j, n + k)] = conj_sign(j) * base.c(i, j, k);
        // (0, e_i)(0, e_j) = (gamma conj(e_j) e_i, 0)
        constants[index(d, n + i, n + j, k)] = gamma * conj_sign(j) * base.c(j, i, k);
      }
    }
  }
  return AlgebraTable(std::move(name), d, std::move(constants));
}

AlgebraTable octonion_table(const Rational& a, const Rational& b, const Rational& c) {
  const Rational minus_one(-1);
  std::string name = (a == minus_one && b == minus_one && c == minus_one)
                         ? "octonion"
                         : "octonion:" + a.to_string() + "," + b.to_string() + "," +
                               c.to_string();
  return cayley_dickson_double(quaternion_table(a, b), c, std::move(name));
}

namespace {

std::vector<Rational> parse_params(std::string_view text, std::string_view spec) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                           : comma - start);
    try {
      out.push_back(Rational::parse(piece));
    } catch (const ParseError&) {
      throw UnknownKind("bad algebra parameters in '" + std::string(spec) + "'");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

AlgebraTable builtin(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view kind = spec.substr(0, colon);
  std::vector<Rational> params;
  if (colon != std::string_view::npos) params = parse_params(spec.substr(colon + 1), spec);

  auto expect_params = [&](std::size_t n) {
    if (!params.empty() && params.size() != n) {
      throw UnknownKind("algebra '" + std::string(kind) + "' takes " + std::to_string(n) +
                        " parameters");
    }
  };
  if (kind == "real" || kind == "complex" || kind == "split_complex" || kind == "dual") {
    expect_params(0);
    if (kind == "real") return real_table();
    if (kind == "complex") return complex_table();
    if (kind == "split_complex") return split_complex_table();
    return dual_table();
  }
  if (kind == "quaternion") {
    expect_params(2);
    if (params.empty()) return quaternion_table(-1, -1);
    return quaternion_table(params[0], params[1]);
  }
  if (kind == "octonion") {
    expect_params(3);
    if (params.empty()) return octonion_table();
    return octonion_table(params[0], params[1], params[2]);
  }
  throw UnknownKind("unknown algebra '" + std::string(spec) + "'");
}

std::vector<std::string> builtin_names() {
  return {"real", "complex", "split_complex", "dual", "quaternion", "quaternion:a,b",
          "octonion", "octonion:a,b,c"};
}

AlgElement<QuadExt> alg_embed(const AlgElement<QPoly>& u, const QuadExt::Modulus& modulus) {
  std::vector<QuadExt> coords;
  coords.reserve(u.dim());
  for (const auto& p : u.coords()) coords.emplace_back(p, QPoly(), modulus);
  return AlgElement<QuadExt>(u.table(), std::move(coords));
}

std::optional<AlgElement<QPoly>> alg_project(const AlgElement<QuadExt>& u) {
  std::vector<QPoly> coords;
  coords.reserve(u.dim());
  for (const auto& q : u.coords()) {
    if (!q.is_rational()) return std::nullopt;
    coords.push_back(q.a());
  }
  return AlgElement<QPoly>(u.table(), std::move(coords));
}

}  // namespace hfib
