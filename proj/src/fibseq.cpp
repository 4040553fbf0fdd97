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

#include "hfib/fibseq.hpp"

#include <cmath>
#include <limits>

#include "hfib/hspec.hpp"

namespace hfib {

FibContext::FibContext(QPoly h, FaultPlan faults) : h_(std::move(h)), faults_(faults) {
  fib_.emplace_back();
  fib_.emplace_back(faults_.has(Fault::kWrongInitialValue) ? 2 : 1);
  h_powers_.emplace_back(1);
}

const QPoly& FibContext::fib(std::size_t n) {
  while (fib_.size() <= n) {
    const std::size_t m = fib_.size();
    fib_.push_back(h_ * fib_[m - 1] + fib_[m - 2]);
  }
  return fib_[n];
}

const QPoly& FibContext::h_power(std::size_t k) {
  while (h_powers_.size() <= k) h_powers_.push_back(h_powers_.back() * h_);
  return h_powers_[k];
}

const QPoly& FibContext::product(std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  auto [it, inserted] = products_.try_emplace({i, j});
  if (inserted) it->second = fib(i) * fib(j);
  return it->second;
}

const QuadRoots& FibContext::roots() {
  if (!roots_) {
    roots_ = quad_roots(h_);
    if (faults_.has(Fault::kSwappedRoots)) std::swap(roots_->alpha, roots_->beta);
    alpha_powers_.push_back(roots_->alpha.one());
    beta_powers_.push_back(roots_->beta.one());
  }
  return *roots_;
}

const QuadExt& FibContext::alpha_power(std::size_t k) {
  const QuadExt& alpha = roots().alpha;
  while (alpha_powers_.size() <= k) alpha_powers_.push_back(alpha_powers_.back() * alpha);
  return alpha_powers_[k];
}

const QuadExt& FibContext::beta_power(std::size_t k) {
  const QuadExt& beta = roots().beta;
  while (beta_powers_.size() <= k) beta_powers_.push_back(beta_powers_.back() * beta);
  return beta_powers_[k];
}

const QPoly& fib(FibContext& ctx, std::size_t n) { return ctx.fib(n); }

namespace {

void require_positive(std::size_t n, const char* what) {
  if (n == 0) throw DomainError(std::string(what) + " is defined for n >= 1");
}

}  // namespace

QPoly explicit_binomial(FibContext& ctx, std::size_t n) {
  require_positive(n, "explicit_binomial");
  std::size_t terms = (n - 1) / 2 + 1;
  if (ctx.faults().has(Fault::kBinomialBoundOffByOne)) --terms;
  QPoly sum;
  for (std::size_t k = 0; k < terms; ++k) {
    sum += ctx.h_power(n - 2 * k - 1) * Rational(binomial(n - k - 1, k));
  }
  return sum;
}

QPoly explicit_halving(FibContext& ctx, std::size_t n) {
  require_positive(n, "explicit_halving");
  const QPoly shifted = ctx.h_power(2) + QPoly(4);
  QPoly shifted_power(1);
  QPoly sum;
  for (std::size_t k = 0; k <= (n - 1) / 2; ++k) {
    sum += ctx.h_power(n - 2 * k - 1) * shifted_power * Rational(binomial(n, 2 * k + 1));
    shifted_power *= shifted;
  }
  if (!ctx.faults().has(Fault::kDroppedHalvingFactor)) {
    sum *= Rational(mpz_class(1), mpz_class(1) << static_cast<mp_bitcnt_t>(n - 1));
  }
  return sum;
}

QPoly chebyshev_u(std::size_t m, bool wrong_seed) {
  const QPoly two_t = QPoly::monomial(Rational(2), 1);
  QPoly prev(1);
  if (m == 0) return prev;
  QPoly cur = wrong_seed ? QPoly::x() : two_t;
  for (std::size_t i = 2; i <= m; ++i) {
    QPoly next = two_t * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

QPoly chebyshev_form(FibContext& ctx, std::size_t n) {
  require_positive(n, "chebyshev_form");
  const QPoly u = chebyshev_u(n - 1, ctx.faults().has(Fault::kWrongChebyshevSeed));
  // i^{n-1} U_{n-1}(h / (2i)) = sum_m u_m i^{n-1} (2i)^{-m} h^m over Q(i)[x].
  const GaussRational inv_two_i = GaussRational(1) / GaussRational(Rational(0), Rational(2));
  GaussRational lead(1);
  for (std::size_t i = 0; i + 1 < n; ++i) lead *= GaussRational::i();
  GaussPoly total;
  GaussRational factor = lead;
  for (std::size_t m = 0; m < u.size(); ++m) {
    const Rational um = u.coeff(m);
    if (!um.is_zero()) {
      const QPoly& hm = ctx.h_power(m);
      std::vector<GaussRational> lifted(hm.size());
      const GaussRational scalar = factor * GaussRational(um);
      for (std::size_t k = 0; k < hm.size(); ++k) lifted[k] = scalar * GaussRational(hm.coeff(k));
      total += GaussPoly(std::move(lifted));
    }
    factor *= inv_two_i;
  }
  std::vector<Rational> real(total.size());
  for (std::size_t k = 0; k < total.size(); ++k) {
    const GaussRational& c = total.coefficients()[k];
    if (!c.is_real()) {
      throw NonRealResult("Chebyshev form has imaginary part at x^" + std::to_string(k));
    }
    real[k] = c.re;
  }
  return QPoly(real);
}

QPoly binet(FibContext& ctx, std::size_t n) {
  const QuadRoots& roots = ctx.roots();
  const QuadExt numerator = pow(roots.alpha, n) - pow(roots.beta, n);
  const QuadExt quotient = divexact_by_s(numerator);
  if (!quotient.is_rational()) {
    throw NonRealResult("Binet quotient has a nonzero s-part for n = " + std::to_string(n));
  }
  return quotient.a();
}

QPoly differential_form(FibContext& ctx, std::size_t n) {
  require_positive(n, "differential_form");
  // Work in Q[h] with h as the indeterminate, then substitute h(x).
  QPoly formal;
  for (std::size_t k = 0; k <= (n - 1) / 2; ++k) {
    const QPoly power = QPoly::monomial(Rational(1), n - k - 1);
    formal += nth_derivative(power, k) * Rational(mpz_class(1), factorial(k));
  }
  return compose(formal, ctx.h());
}

std::optional<std::string> poly_difference(const QPoly& lhs, const QPoly& rhs) {
  if (lhs == rhs) return std::nullopt;
  const std::size_t n = std::max(lhs.size(), rhs.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (lhs.coeff(k) != rhs.coeff(k)) {
      return "coefficient of x^" + std::to_string(k) + ": " + lhs.coeff(k).to_string() +
             " vs " + rhs.coeff(k).to_string();
    }
  }
  return std::nullopt;
}

namespace {

Verdict compare(const QPoly& lhs, const QPoly& rhs, const std::string& where) {
  if (auto diff = poly_difference(lhs, rhs)) {
    return Verdict::fail(where + ": lhs " + format_poly(lhs) + " != rhs " + format_poly(rhs) +
                         " (" + *diff + ")");
  }
  return Verdict::pass();
}

}  // namespace

Verdict genfun_check(FibContext& ctx, std::size_t truncation) {
  // (1 - h t - t^2) * sum_{n<=N} F_n t^n must equal t through degree N.
  for (std::size_t n = 0; n <= truncation; ++n) {
    QPoly coeff = ctx.fib(n);
    if (n >= 1) coeff -= ctx.h() * ctx.fib(n - 1);
    if (n >= 2) coeff -= ctx.fib(n - 2);
    const QPoly expected(n == 1 ? 1 : 0);
    if (coeff != expected) {
      return compare(coeff, expected, "coefficient of t^" + std::to_string(n));
    }
  }
  return Verdict::pass();
}

Verdict sum_identity_check(FibContext& ctx, std::size_t n) {
  if (ctx.h().is_zero()) throw ZeroH("summation identity divides by h");
  require_positive(n, "sum_identity_check");
  QPoly sum;
  for (std::size_t k = 1; k <= n; ++k) sum += ctx.fib(k);
  const QPoly lhs = ctx.faults().has(Fault::kDroppedDenominator) ? sum : ctx.h() * sum;
  const QPoly rhs = ctx.fib(n + 1) + ctx.fib(n) - QPoly(1);
  return compare(lhs, rhs, "n=" + std::to_string(n));
}

Verdict catalan_check(FibContext& ctx, std::size_t n, std::size_t r) {
  if (r > n) throw IndexConstraintViolated("Catalan identity needs r <= n");
  const QPoly lhs = ctx.product(n - r, n + r) - ctx.product(n, n);
  // (-1)^{n-r-1}: negative exactly when n - r is even.
  std::size_t exponent = n - r + 1;
  if (ctx.faults().has(Fault::kCatalanSignExponent)) exponent = n - r;
  const QPoly& square = ctx.product(r, r);
  const QPoly rhs = exponent % 2 == 0 ? square : -square;
  return compare(lhs, rhs, "n=" + std::to_string(n) + " r=" + std::to_string(r));
}

Verdict index_shift_check(FibContext& ctx, long a, long b, long c, long d, long r) {
  if (a + b != c + d) throw IndexConstraintViolated("index shift identity needs a+b = c+d");
  if (r < 0 || a < r || b < r || c < r || d < r) {
    throw IndexConstraintViolated("index shift identity needs a, b, c, d >= r >= 0");
  }
  auto diff = [&](long shift) {
    auto u = [&](long i) { return static_cast<std::size_t>(i - shift); };
    return ctx.product(u(a), u(b)) - ctx.product(u(c), u(d));
  };
  const QPoly lhs = diff(0);
  const QPoly shifted = diff(r);
  const QPoly rhs = r % 2 == 0 ? shifted : -shifted;
  return compare(lhs, rhs,
                 "a=" + std::to_string(a) + " b=" + std::to_string(b) + " c=" +
                     std::to_string(c) + " d=" + std::to_string(d) + " r=" + std::to_string(r));
}

RatioLimit ratio_limit(const FibContext& ctx, double x0, std::size_t n) {
  require_positive(n, "ratio_limit");
  double hx = 0.0;
  for (std::size_t k = ctx.h().size(); k-- > 0;) hx = hx * x0 + ctx.h().coeff(k).to_double();
  if (!(hx > 0.0)) {
    throw DomainError("ratio limit needs h(x0) > 0, got " + std::to_string(hx));
  }
  // F_k(x0) by the recurrence, rescaled whenever the values grow large.
  double prev = 0.0;
  double cur = 1.0;
  for (std::size_t k = 1; k <= n; ++k) {
    const double next = hx * cur + prev;
    prev = cur;
    cur = next;
    if (std::abs(cur) > 1e200) {
      prev /= cur;
      cur = 1.0;
    }
  }
  RatioLimit out;
  out.ratio = cur / prev;
  const double root = std::sqrt(hx * hx + 4.0);
  out.alpha = (hx + root) / 2.0;
  out.residual = std::abs(out.ratio - out.alpha);
  // F_{n+1}/F_n - alpha = s beta^n / (alpha^n - beta^n).
  const double beta = (hx - root) / 2.0;
  const double q = std::pow(std::abs(beta / out.alpha), static_cast<double>(n));
  const double eps = std::numeric_limits<double>::epsilon();
  out.bound = root * q / (1.0 - q) + 4.0 * static_cast<double>(n + 1) * eps * out.alpha;
  return out;
}

double ratio_limit_check(const FibContext& ctx, double x0, std::size_t n) {
  return ratio_limit(ctx, x0, n).residual;
}

}  // namespace hfib
