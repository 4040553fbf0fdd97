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

#include "hfib/hyperfib.hpp"

#include "hfib/hspec.hpp"

namespace hfib {

namespace {

AlgElement<QuadExt> starred_of(const TablePtr& table, const QuadExt& root) {
  std::vector<QuadExt> coords;
  coords.reserve(table->dim());
  for (std::size_t k = 0; k < table->dim(); ++k) coords.push_back(pow(root, k));
  return AlgElement<QuadExt>(table, std::move(coords));
}

AlgElement<QPoly> zero_element(const TablePtr& table) {
  return AlgElement<QPoly>(table, std::vector<QPoly>(table->dim()));
}

std::string format_quad(const QuadExt& u) {
  if (u.is_rational()) return format_poly(u.a());
  return "(" + format_poly(u.a()) + ")+(" + format_poly(u.b()) + ")s";
}

}  // namespace

HyperContext::HyperContext(std::shared_ptr<FibContext> fib, TablePtr table)
    : fib_(std::move(fib)),
      table_(std::move(table)),
      alpha_star_(starred_of(table_, fib_->roots().alpha)),
      beta_star_(starred_of(table_, fib_->roots().beta)),
      alpha_beta_star_(alg_mul(alpha_star_, beta_star_)),
      beta_alpha_star_(alg_mul(beta_star_, alpha_star_)) {}

const AlgElement<QPoly>& HyperContext::q(std::size_t n) {
  while (q_.size() <= n) {
    const std::size_t m = q_.size();
    std::vector<QPoly> coords;
    coords.reserve(dim());
    for (std::size_t k = 0; k < dim(); ++k) coords.push_back(fib_->fib(m + k));
    q_.emplace_back(table_, std::move(coords));
  }
  return q_[n];
}

AlgElement<QPoly> HyperContext::q_product(std::size_t a, std::size_t b) {
  std::vector<QPoly> out(dim());
  for (const auto& term : table_->terms()) {
    const QPoly& p = fib_->product(a + term.i, b + term.j);
    if (term.c.is_one()) {
      out[term.k] += p;
    } else if (term.c == Rational(-1)) {
      out[term.k] -= p;
    } else {
      out[term.k] += p * term.c;
    }
  }
  return AlgElement<QPoly>(table_, std::move(out));
}

const AlgElement<QuadExt>& HyperContext::catalan_bracket(std::size_t r) {
  auto it = catalan_.find(r);
  if (it != catalan_.end()) return it->second;
  // alpha*beta* (1 - (-1)^r alpha^{2r}) + beta*alpha* (1 - (-1)^r beta^{2r})
  const QuadExt one = fib_->roots().alpha.one();
  const bool odd = r % 2 == 1;
  auto factor = [&](const QuadExt& power) { return odd ? one + power : one - power; };
  AlgElement<QuadExt> left = alpha_beta_star_;
  left.scale(factor(fib_->alpha_power(2 * r)));
  AlgElement<QuadExt> right = beta_alpha_star_;
  right.scale(factor(fib_->beta_power(2 * r)));
  return catalan_.emplace(r, left + right).first->second;
}

const AlgElement<QuadExt>& HyperContext::catalan_printed_bracket(std::size_t r) {
  auto it = catalan_printed_.find(r);
  if (it != catalan_printed_.end()) return it->second;
  // alpha*beta* ((-1)^{r+1} + alpha^2) + beta*alpha* ((-1)^{r+1} + beta^2)
  const QuadExt one = fib_->roots().alpha.one();
  const QuadExt sign = r % 2 == 1 ? one : -one;
  AlgElement<QuadExt> left = alpha_beta_star_;
  left.scale(sign + fib_->alpha_power(2));
  AlgElement<QuadExt> right = beta_alpha_star_;
  right.scale(sign + fib_->beta_power(2));
  return catalan_printed_.emplace(r, left + right).first->second;
}

const AlgElement<QuadExt>& HyperContext::docagne_bracket(std::size_t gap) {
  auto it = docagne_.find(gap);
  if (it != docagne_.end()) return it->second;
  // alpha*beta* alpha^{r-n} - beta*alpha* beta^{r-n}
  AlgElement<QuadExt> left = alpha_beta_star_;
  left.scale(fib_->alpha_power(gap));
  AlgElement<QuadExt> right = beta_alpha_star_;
  right.scale(fib_->beta_power(gap));
  return docagne_.emplace(gap, left - right).first->second;
}

const AlgElement<QPoly>& q(HyperContext& ctx, std::size_t n) { return ctx.q(n); }

std::optional<std::string> element_difference(const AlgElement<QPoly>& lhs,
                                              const AlgElement<QPoly>& rhs) {
  lhs.require_same_table(rhs);
  for (std::size_t k = 0; k < lhs.dim(); ++k) {
    if (auto diff = poly_difference(lhs[k], rhs[k])) {
      return "coordinate e" + std::to_string(k) + ": " + format_poly(lhs[k]) + " vs " +
             format_poly(rhs[k]) + " (" + *diff + ")";
    }
  }
  return std::nullopt;
}

std::optional<std::string> element_difference(const AlgElement<QuadExt>& lhs,
                                              const AlgElement<QuadExt>& rhs) {
  lhs.require_same_table(rhs);
  for (std::size_t k = 0; k < lhs.dim(); ++k) {
    if (!(lhs[k] == rhs[k])) {
      return "coordinate e" + std::to_string(k) + ": " + format_quad(lhs[k]) + " vs " +
             format_quad(rhs[k]);
    }
  }
  return std::nullopt;
}

namespace {

template <class S>
Verdict compare(const AlgElement<S>& lhs, const AlgElement<S>& rhs, const std::string& where) {
  if (auto diff = element_difference(lhs, rhs)) return Verdict::fail(where + ": " + *diff);
  return Verdict::pass();
}

std::string at(const char* name, std::size_t v) { return std::string(name) + "=" + std::to_string(v); }

}  // namespace

Verdict recurrence_check(HyperContext& ctx, std::size_t n) {
  AlgElement<QPoly> rhs = ctx.q(n + 1);
  rhs.scale(ctx.fib().h());
  rhs += ctx.q(n);
  return compare(ctx.q(n + 2), rhs, at("n", n));
}

Verdict partial_sum_check(HyperContext& ctx, std::size_t p) {
  if (ctx.fib().h().is_zero()) throw ZeroH("partial sum identity divides by h");
  if (p == 0) throw DomainError("partial_sum_check is defined for p >= 1");
  AlgElement<QPoly> lhs = zero_element(ctx.table());
  for (std::size_t k = 1; k <= p; ++k) lhs += ctx.q(k);
  lhs.scale(ctx.fib().h());
  const AlgElement<QPoly> rhs = ctx.q(p + 1) + ctx.q(p) - ctx.q(0) - ctx.q(1);
  return compare(lhs, rhs, at("p", p));
}

Verdict binet_check(HyperContext& ctx, std::size_t n) {
  AlgElement<QuadExt> numerator = ctx.alpha_star();
  numerator.scale(ctx.fib().alpha_power(n));
  AlgElement<QuadExt> beta_part = ctx.beta_star();
  beta_part.scale(ctx.fib().beta_power(n));
  numerator -= beta_part;
  std::vector<QuadExt> quotient;
  quotient.reserve(ctx.dim());
  for (std::size_t k = 0; k < ctx.dim(); ++k) {
    try {
      quotient.push_back(divexact_by_s(numerator[k]));
    } catch (const NotDivisible& e) {
      return Verdict::fail(at("n", n) + ": coordinate e" + std::to_string(k) + ": " + e.what());
    }
    if (!quotient.back().is_rational()) {
      return Verdict::fail(at("n", n) + ": coordinate e" + std::to_string(k) +
                           " of the Binet quotient is not rational");
    }
  }
  const AlgElement<QuadExt> binet_side(ctx.table(), std::move(quotient));
  return compare(binet_side, alg_embed(ctx.q(n), ctx.modulus()), at("n", n));
}

Verdict genfun_check(HyperContext& ctx, std::size_t truncation) {
  // (1 - h t - t^2) G(t) = Q_0 + (Q_1 - h Q_0) t through degree N.
  const QPoly& h = ctx.fib().h();
  for (std::size_t n = 0; n <= truncation; ++n) {
    AlgElement<QPoly> coeff = ctx.q(n);
    if (n >= 1) {
      AlgElement<QPoly> shifted = ctx.q(n - 1);
      coeff -= shifted.scale(h);
    }
    if (n >= 2) coeff -= ctx.q(n - 2);
    AlgElement<QPoly> expected = zero_element(ctx.table());
    if (n == 0) expected = ctx.q(0);
    if (n == 1) {
      AlgElement<QPoly> hq0 = ctx.q(0);
      expected = ctx.q(1) - hq0.scale(h);
    }
    Verdict v = compare(coeff, expected, "coefficient of t^" + std::to_string(n));
    if (!v.holds()) return v;
  }
  return Verdict::pass();
}

Verdict CatalanVerdict::combined() const {
  if (!derived.holds()) return derived;
  if (printed_matches) return Verdict::pass();
  return Verdict::flag("printed right-hand side (alpha^2, beta^2) differs from the derived one");
}

CatalanVerdict catalan_check(HyperContext& ctx, std::size_t n, std::size_t r) {
  if (r > n) throw IndexConstraintViolated("Catalan identity needs r <= n");
  AlgElement<QPoly> diff = ctx.q_product(n + r, n - r) - ctx.q_product(n, n);
  AlgElement<QuadExt> lhs = alg_embed(diff, ctx.modulus());
  lhs.scale(*ctx.modulus());

  AlgElement<QuadExt> derived = ctx.catalan_bracket(r);
  if (n % 2 == 1) derived = -derived;
  AlgElement<QuadExt> printed = ctx.catalan_printed_bracket(r);
  if ((n + r + 1) % 2 == 1) printed = -printed;

  CatalanVerdict out;
  out.derived = compare(lhs, derived, at("n", n) + " " + at("r", r));
  out.printed_matches = !element_difference(lhs, printed).has_value();
  return out;
}

Verdict cassini_check(HyperContext& ctx, std::size_t n) {
  if (n == 0) throw DomainError("cassini_check is defined for n >= 1");
  AlgElement<QPoly> diff = ctx.q_product(n + 1, n - 1) - ctx.q_product(n, n);
  AlgElement<QuadExt> lhs = alg_embed(diff, ctx.modulus());
  lhs.scale(*ctx.modulus());
  // alpha*beta* (1 + alpha^2) + beta*alpha* (1 + beta^2), sign (-1)^n
  const QuadExt one = ctx.fib().roots().alpha.one();
  AlgElement<QuadExt> left = ctx.alpha_beta_star();
  left.scale(one + ctx.fib().alpha_power(2));
  AlgElement<QuadExt> right = ctx.beta_alpha_star();
  right.scale(one + ctx.fib().beta_power(2));
  AlgElement<QuadExt> rhs = left + right;
  if (n % 2 == 1) rhs = -rhs;
  return compare(lhs, rhs, at("n", n));
}

Verdict docagne_check(HyperContext& ctx, std::size_t n, std::size_t r) {
  if (r <= n) throw IndexConstraintViolated("d'Ocagne identity needs r > n");
  const AlgElement<QPoly> lhs = ctx.q_product(r, n + 1) - ctx.q_product(r + 1, n);
  const AlgElement<QuadExt>& bracket = ctx.docagne_bracket(r - n);
  std::vector<QuadExt> quotient;
  quotient.reserve(ctx.dim());
  for (std::size_t k = 0; k < ctx.dim(); ++k) {
    QuadExt numerator = n % 2 == 1 ? -bracket[k] : bracket[k];
    try {
      quotient.push_back(divexact_by_s(numerator));
    } catch (const NotDivisible& e) {
      return Verdict::fail(at("n", n) + " " + at("r", r) + ": coordinate e" + std::to_string(k) +
                           ": " + e.what());
    }
  }
  return compare(alg_embed(lhs, ctx.modulus()), AlgElement<QuadExt>(ctx.table(), std::move(quotient)),
                 at("n", n) + " " + at("r", r));
}

}  // namespace hfib
