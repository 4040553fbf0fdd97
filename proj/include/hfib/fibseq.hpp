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

#ifndef HFIB_FIBSEQ_HPP_
#define HFIB_FIBSEQ_HPP_

#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hfib/faults.hpp"
#include "hfib/poly.hpp"
#include "hfib/quad_ext.hpp"
#include "hfib/verdict.hpp"

namespace hfib {

// h(x) together with memoized F_{h,0..n}, powers of h, pairwise products
// F_i F_j and powers of the characteristic roots. Single-owner: the caches
// grow on demand and are not synchronized.
class FibContext {
 public:
  explicit FibContext(QPoly h, FaultPlan faults = {});

  const QPoly& h() const { return h_; }
  const FaultPlan& faults() const { return faults_; }

  // F_{h,n}(x) from F_n = h F_{n-1} + F_{n-2}, F_0 = 0, F_1 = 1.
  const QPoly& fib(std::size_t n);
  const QPoly& h_power(std::size_t k);
  const QPoly& product(std::size_t i, std::size_t j);

  // alpha = (h + s)/2, beta = (h - s)/2 sharing the modulus h^2 + 4.
  const QuadRoots& roots();
  const QuadExt::Modulus& modulus() { return roots().alpha.modulus(); }
  const QuadExt& alpha_power(std::size_t k);
  const QuadExt& beta_power(std::size_t k);

 private:
  QPoly h_;
  FaultPlan faults_;
  std::deque<QPoly> fib_;
  std::deque<QPoly> h_powers_;
  std::map<std::pair<std::size_t, std::size_t>, QPoly> products_;
  std::optional<QuadRoots> roots_;
  std::deque<QuadExt> alpha_powers_;
  std::deque<QuadExt> beta_powers_;
};

const QPoly& fib(FibContext& ctx, std::size_t n);

// Closed forms; each must agree with fib() for n >= 1 (binet also at n = 0).
QPoly explicit_binomial(FibContext& ctx, std::size_t n);
QPoly explicit_halving(FibContext& ctx, std::size_t n);
QPoly chebyshev_form(FibContext& ctx, std::size_t n);
QPoly binet(FibContext& ctx, std::size_t n);
QPoly differential_form(FibContext& ctx, std::size_t n);

// U_m(t) from U_m = 2t U_{m-1} - U_{m-2}, U_0 = 1, U_1 = 2t.
QPoly chebyshev_u(std::size_t m, bool wrong_seed = false);

// Exact identity verifiers.
Verdict genfun_check(FibContext& ctx, std::size_t truncation);
Verdict sum_identity_check(FibContext& ctx, std::size_t n);
Verdict catalan_check(FibContext& ctx, std::size_t n, std::size_t r);
Verdict index_shift_check(FibContext& ctx, long a, long b, long c, long d, long r);

struct RatioLimit {
  double ratio;     // F_{n+1}(x0) / F_n(x0)
  double alpha;     // (h(x0) + sqrt(h(x0)^2 + 4)) / 2
  double residual;  // |ratio - alpha|
  double bound;     // s |beta/alpha|^n / (1 - |beta/alpha|^n) plus rounding allowance
};

// The only floating-point operation. Throws DomainError unless h(x0) > 0.
RatioLimit ratio_limit(const FibContext& ctx, double x0, std::size_t n);
double ratio_limit_check(const FibContext& ctx, double x0, std::size_t n);

// Describes the first coefficient where lhs and rhs differ.
std::optional<std::string> poly_difference(const QPoly& lhs, const QPoly& rhs);

}  // namespace hfib

#endif  // HFIB_FIBSEQ_HPP_
