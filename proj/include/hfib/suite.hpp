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

#ifndef HFIB_SUITE_HPP_
#define HFIB_SUITE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hfib/algebra.hpp"
#include "hfib/faults.hpp"
#include "hfib/poly.hpp"
#include "hfib/verdict.hpp"

namespace hfib {

struct CorpusOptions {
  std::size_t h_count = 12;            // includes the fixed h = 1 and h = x
  std::size_t closed_form_n_max = 30;  // closed forms, 1 <= n <= bound
  std::size_t n_max = 20;              // real identities, hyper recurrence/Binet
  std::size_t r_max = 15;              // Catalan, Cassini, d'Ocagne
  std::size_t p_max = 20;              // hyper partial sums
  std::size_t trunc_n = 20;            // generating-function truncation
  std::vector<std::string> algebras = {"complex",    "split_complex",    "dual",
                                       "quaternion", "quaternion:2,-3", "octonion"};

  // Caps every index bound at n (the CLI's --nmax).
  CorpusOptions& cap(std::size_t n);
};

struct Corpus {
  std::uint64_t seed = 0;
  std::vector<QPoly> h_polys;
  std::vector<TablePtr> algebras;
  std::size_t closed_form_n_max = 30;
  std::size_t n_max = 20;
  std::size_t r_max = 15;
  std::size_t p_max = 20;
  std::size_t trunc_n = 20;
  FaultPlan faults;
  std::vector<std::string> families;  // empty: every family
};

// Pure function of (seed, options): h_polys starts with 1 and x, then random
// nonzero h of degree 0..4 with coefficients p/q, p in [-5, 5], q in [1, 3].
Corpus make_corpus(std::uint64_t seed, const CorpusOptions& options = {});

// Enables the faults; table faults are applied to the corpus algebras here.
Corpus with_faults(Corpus corpus, FaultPlan faults);
AlgebraTable apply_table_faults(const AlgebraTable& table, const FaultPlan& faults);

// One concrete identity instance: family name, h, algebra (null for real and
// for algebra-only families) and the family's indices in declared order.
struct Instance {
  std::string family;
  std::optional<QPoly> h;
  TablePtr algebra;
  std::vector<long> indices;
};

std::vector<std::string> family_names();
const std::vector<std::string>& family_index_names(const std::string& family);

// Evaluates one instance on fresh contexts; exceptions become failures.
Verdict evaluate(const Instance& instance, const FaultPlan& faults = {});

// Greedily lowers indices, the degree of h and its coefficient sizes while
// the instance keeps failing. A passing instance is returned unchanged.
Instance shrink(const Instance& instance, const FaultPlan& faults = {});

struct CheckRecord {
  std::string name;
  std::optional<QPoly> h;
  TablePtr algebra;
  std::vector<std::pair<std::string, std::pair<long, long>>> ranges;
  std::size_t instances = 0;
  Outcome outcome = Outcome::kPass;
  std::string detail;
  std::optional<Instance> first_failure;
  std::optional<Instance> witness;  // first_failure after shrinking
  std::vector<long> printed_agrees_r;
  std::vector<long> printed_differs_r;
  double ms = 0.0;
};

struct Report {
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;

  std::size_t count(Outcome o) const;
  bool any_failure() const { return count(Outcome::kFail) > 0; }
};

// Runs every family over the corpus. Tasks (one per h, plus the algebra-only
// checks) execute on up to `threads` workers; record order depends only on
// the corpus.
Report run_all(const Corpus& corpus, unsigned threads = 0);

}  // namespace hfib

#endif  // HFIB_SUITE_HPP_
