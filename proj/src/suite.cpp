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

#include "hfib/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <memory>
#include <random>
#include <thread>

#include "hfib/fibseq.hpp"
#include "hfib/hspec.hpp"
#include "hfib/hyperfib.hpp"

namespace hfib {

CorpusOptions& CorpusOptions::cap(std::size_t n) {
  closed_form_n_max = std::min(closed_form_n_max, n);
  n_max = std::min(n_max, n);
  r_max = std::min(r_max, n);
  p_max = std::min(p_max, n);
  trunc_n = std::min(trunc_n, n);
  return *this;
}

namespace {

constexpr double kRatioPoint = 2.0;
constexpr long kRatioIndex = 40;

// Bounded draws by modulo keep the corpus identical across standard
// libraries (std::uniform_int_distribution is implementation-defined).
long draw(std::mt19937_64& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng() % span);
}

QPoly random_h(std::mt19937_64& rng) {
  const long degree = draw(rng, 0, 4);
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
  for (long k = 0; k <= degree; ++k) {
    long num = draw(rng, -5, 5);
    while (k == degree && num == 0) num = draw(rng, -5, 5);
    coeffs[static_cast<std::size_t>(k)] = Rational(mpz_class(num), mpz_class(draw(rng, 1, 3)));
  }
  return QPoly(coeffs);
}

}  // namespace

Corpus make_corpus(std::uint64_t seed, const CorpusOptions& options) {
  Corpus corpus;
  corpus.seed = seed;
  corpus.closed_form_n_max = options.closed_form_n_max;
  corpus.n_max = options.n_max;
  corpus.r_max = options.r_max;
  corpus.p_max = options.p_max;
  corpus.trunc_n = options.trunc_n;
  std::mt19937_64 rng(seed);
  const std::vector<QPoly> fixed = {QPoly(1), QPoly::x()};
  for (std::size_t i = 0; i < options.h_count; ++i) {
    corpus.h_polys.push_back(i < fixed.size() ? fixed[i] : random_h(rng));
  }
  for (const auto& name : options.algebras) {
    corpus.algebras.push_back(std::make_shared<const AlgebraTable>(builtin(name)));
  }
  return corpus;
}

AlgebraTable apply_table_faults(const AlgebraTable& table, const FaultPlan& faults) {
  AlgebraTable out = table;
  const std::size_t dim = out.dim();
  if (faults.has(Fault::kTransposedConstants)) {
    std::vector<Rational> constants(dim * dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t k = 0; k < dim; ++k) {
          constants[(i * dim + j) * dim + k] = out.c(j, i, k);
        }
      }
    }
    out = AlgebraTable(out.name(), dim, std::move(constants));
  }
  if (faults.has(Fault::kTableSignFlip)) {
    // Negate the first product of two non-unit basis elements, preferring an
    // off-diagonal one (e_1 e_2 = e_3 in the quaternions).
    const AlgebraTable::Term* target = nullptr;
    for (const auto& t : out.terms()) {
      if (t.i == 0 || t.j == 0) continue;
      if (!target || (target->i == target->j && t.i != t.j)) target = &t;
      if (target->i != target->j) break;
    }
    if (target) out = out.with_constant(target->i, target->j, target->k, -target->c);
  }
  if (faults.has(Fault::kWrongUnitRow) && dim >= 2) {
    out = out.with_constant(0, 1, 1, Rational(0)).with_constant(0, 1, 0, Rational(1));
  }
  return out;
}

Corpus with_faults(Corpus corpus, FaultPlan faults) {
  corpus.faults = faults;
  for (auto& table : corpus.algebras) {
    table = std::make_shared<const AlgebraTable>(apply_table_faults(*table, faults));
  }
  return corpus;
}

// ---------------------------------------------------------------------------
// Check families

namespace {

using Indices = std::vector<long>;
using Ranges = std::vector<std::pair<std::string, std::pair<long, long>>>;

enum class Scope { kReal, kAlgebra, kHyper };

// Contexts shared by the checks of one task.
struct Env {
  std::shared_ptr<FibContext> fib;
  std::map<const AlgebraTable*, std::unique_ptr<HyperContext>> hyper;

  HyperContext& hyper_for(const TablePtr& table) {
    auto& slot = hyper[table.get()];
    if (!slot) slot = std::make_unique<HyperContext>(fib, table);
    return *slot;
  }
};

struct Family {
  std::string name;
  Scope scope;
  std::vector<std::string> index_names;
  std::function<Ranges(const Corpus&)> ranges;
  std::function<std::vector<Indices>(const Corpus&, const QPoly*, const AlgebraTable*)> enumerate;
  std::function<bool(const Indices&, const QPoly*)> admissible;
  std::function<Verdict(Env&, const TablePtr&, const Indices&)> eval;
};

std::size_t u(long v) { return static_cast<std::size_t>(v); }

std::vector<Indices> range1(long lo, long hi) {
  std::vector<Indices> out;
  for (long n = lo; n <= hi; ++n) out.push_back({n});
  return out;
}

bool h_positive_at_ratio_point(const QPoly& h) {
  return eval(h, Rational(static_cast<long>(kRatioPoint))).sign() > 0;
}

Family single_index(std::string name, Scope scope, std::string index, long lo,
                    std::function<long(const Corpus&)> hi, bool needs_h,
                    std::function<Verdict(Env&, const TablePtr&, std::size_t)> check) {
  Family f;
  f.name = std::move(name);
  f.scope = scope;
  f.index_names = {index};
  f.ranges = [index, lo, hi](const Corpus& c) { return Ranges{{index, {lo, hi(c)}}}; };
  f.enumerate = [lo, hi](const Corpus& c, const QPoly*, const AlgebraTable*) {
    return range1(lo, hi(c));
  };
  f.admissible = [lo, needs_h](const Indices& idx, const QPoly* h) {
    return idx[0] >= lo && !(needs_h && h && h->is_zero());
  };
  f.eval = [check](Env& env, const TablePtr& t, const Indices& idx) {
    return check(env, t, u(idx[0]));
  };
  return f;
}

Verdict same_poly(const QPoly& got, FibContext& ctx, std::size_t n) {
  const QPoly& expected = ctx.fib(n);
  if (auto diff = poly_difference(got, expected)) {
    return Verdict::fail("n=" + std::to_string(n) + ": closed form " + format_poly(got) +
                         " != recurrence " + format_poly(expected) + " (" + *diff + ")");
  }
  return Verdict::pass();
}

std::vector<Family> make_families() {
  std::vector<Family> fams;
  auto closed = [](const Corpus& c) { return static_cast<long>(c.closed_form_n_max); };
  auto nmax = [](const Corpus& c) { return static_cast<long>(c.n_max); };
  auto rmax = [](const Corpus& c) { return static_cast<long>(c.r_max); };
  auto pmax = [](const Corpus& c) { return static_cast<long>(c.p_max); };
  auto trunc = [](const Corpus& c) { return static_cast<long>(c.trunc_n); };

  using Form = QPoly (*)(FibContext&, std::size_t);
  const std::vector<std::tuple<std::string, Form, long>> forms = {
      {"fib.explicit_binomial", &explicit_binomial, 1},
      {"fib.explicit_halving", &explicit_halving, 1},
      {"fib.chebyshev_form", &chebyshev_form, 1},
      {"fib.binet", &binet, 0},
      {"fib.differential_form", &differential_form, 1},
  };
  for (const auto& [name, form, lo] : forms) {
    Form f = form;
    fams.push_back(single_index(name, Scope::kReal, "n", lo, closed, false,
                                [f](Env& env, const TablePtr&, std::size_t n) {
                                  return same_poly(f(*env.fib, n), *env.fib, n);
                                }));
  }

  {
    Family f = single_index("fib.genfun", Scope::kReal, "N", 1, trunc, false,
                            [](Env& env, const TablePtr&, std::size_t n) {
                              return genfun_check(*env.fib, n);
                            });
    f.ranges = [](const Corpus& c) { return Ranges{{"N", {static_cast<long>(c.trunc_n), static_cast<long>(c.trunc_n)}}}; };
    f.enumerate = [](const Corpus& c, const QPoly*, const AlgebraTable*) {
      return c.trunc_n >= 1 ? std::vector<Indices>{{static_cast<long>(c.trunc_n)}}
                            : std::vector<Indices>{};
    };
    fams.push_back(std::move(f));
  }
  fams.push_back(single_index("fib.sum_identity", Scope::kReal, "n", 1, nmax, true,
                              [](Env& env, const TablePtr&, std::size_t n) {
                                return sum_identity_check(*env.fib, n);
                              }));
  {
    Family f;
    f.name = "fib.catalan";
    f.scope = Scope::kReal;
    f.index_names = {"n", "r"};
    f.ranges = [](const Corpus& c) {
      const long n = static_cast<long>(c.n_max);
      return Ranges{{"n", {0, n}}, {"r", {0, n}}};
    };
    f.enumerate = [](const Corpus& c, const QPoly*, const AlgebraTable*) {
      std::vector<Indices> out;
      for (long n = 0; n <= static_cast<long>(c.n_max); ++n) {
        for (long r = 0; r <= n; ++r) out.push_back({n, r});
      }
      return out;
    };
    f.admissible = [](const Indices& i, const QPoly*) { return i[1] >= 0 && i[1] <= i[0]; };
    f.eval = [](Env& env, const TablePtr&, const Indices& i) {
      return catalan_check(*env.fib, u(i[0]), u(i[1]));
    };
    fams.push_back(std::move(f));
  }
  {
    Family f;
    f.name = "fib.index_shift";
    f.scope = Scope::kReal;
    f.index_names = {"a", "b", "c", "d", "r"};
    f.ranges = [](const Corpus& c) {
      const long n = static_cast<long>(c.n_max);
      return Ranges{{"a", {0, n}}, {"b", {0, n}}, {"c", {0, n}}, {"d", {0, n}}, {"r", {0, n}}};
    };
    // Up to the symmetries a<->b, c<->d and (a,b)<->(c,d): a <= b, c <= d,
    // a < c; the shift r runs up to the smallest index a.
    f.enumerate = [](const Corpus& c, const QPoly*, const AlgebraTable*) {
      std::vector<Indices> out;
      const long n = static_cast<long>(c.n_max);
      for (long a = 0; a <= n; ++a) {
        for (long b = a; b <= n; ++b) {
          for (long cc = a + 1; cc <= n; ++cc) {
            const long d = a + b - cc;
            if (d < cc || d > n) continue;
            for (long r = 0; r <= a; ++r) out.push_back({a, b, cc, d, r});
          }
        }
      }
      return out;
    };
    f.admissible = [](const Indices& i, const QPoly*) {
      const long r = i[4];
      return i[0] + i[1] == i[2] + i[3] && r >= 0 && i[0] >= r && i[1] >= r && i[2] >= r &&
             i[3] >= r;
    };
    f.eval = [](Env& env, const TablePtr&, const Indices& i) {
      return index_shift_check(*env.fib, i[0], i[1], i[2], i[3], i[4]);
    };
    fams.push_back(std::move(f));
  }
  {
    Family f;
    f.name = "fib.ratio_limit";
    f.scope = Scope::kReal;
    f.index_names = {"n"};
    f.ranges = [](const Corpus&) { return Ranges{{"n", {kRatioIndex, kRatioIndex}}}; };
    f.enumerate = [](const Corpus&, const QPoly* h, const AlgebraTable*) {
      if (h && h_positive_at_ratio_point(*h)) return std::vector<Indices>{{kRatioIndex}};
      return std::vector<Indices>{};
    };
    f.admissible = [](const Indices& i, const QPoly* h) {
      return i[0] >= 1 && h && h_positive_at_ratio_point(*h);
    };
    f.eval = [](Env& env, const TablePtr&, const Indices& i) {
      const RatioLimit r = ratio_limit(*env.fib, kRatioPoint, u(i[0]));
      if (r.residual <= r.bound) return Verdict::pass();
      return Verdict::fail("x0=2 n=" + std::to_string(i[0]) + ": residual " +
                           std::to_string(r.residual) + " exceeds bound " +
                           std::to_string(r.bound));
    };
    fams.push_back(std::move(f));
  }

  // Algebra tables on their own.
  {
    Family f;
    f.name = "algebra.unital";
    f.scope = Scope::kAlgebra;
    f.ranges = [](const Corpus&) { return Ranges{}; };
    f.enumerate = [](const Corpus&, const QPoly*, const AlgebraTable*) {
      return std::vector<Indices>{{}};
    };
    f.admissible = [](const Indices&, const QPoly*) { return true; };
    f.eval = [](Env&, const TablePtr& t, const Indices&) {
      if (auto v = unit_law_violation(*t)) return Verdict::fail(*v);
      return Verdict::pass();
    };
    fams.push_back(std::move(f));
  }
  {
    Family f;
    f.name = "algebra.reference";
    f.scope = Scope::kAlgebra;
    f.ranges = [](const Corpus&) { return Ranges{}; };
    // Only tables carrying a builtin name have a reference to compare with.
    f.enumerate = [](const Corpus&, const QPoly*, const AlgebraTable* t) {
      try {
        (void)builtin(t->name());
        return std::vector<Indices>{{}};
      } catch (const UnknownKind&) {
        return std::vector<Indices>{};
      }
    };
    f.admissible = [](const Indices&, const QPoly*) { return true; };
    f.eval = [](Env&, const TablePtr& t, const Indices&) {
      const AlgebraTable reference = builtin(t->name());
      if (reference.dim() != t->dim()) {
        return Verdict::fail("dimension " + std::to_string(t->dim()) + ", reference has " +
                             std::to_string(reference.dim()));
      }
      for (std::size_t i = 0; i < t->dim(); ++i) {
        for (std::size_t j = 0; j < t->dim(); ++j) {
          for (std::size_t k = 0; k < t->dim(); ++k) {
            if (t->c(i, j, k) != reference.c(i, j, k)) {
              return Verdict::fail("e" + std::to_string(i) + "*e" + std::to_string(j) +
                                   " has coefficient " + t->c(i, j, k).to_string() + " on e" +
                                   std::to_string(k) + ", reference " +
                                   reference.c(i, j, k).to_string());
            }
          }
        }
      }
      return Verdict::pass();
    };
    fams.push_back(std::move(f));
  }

  // Elements of the algebra.
  fams.push_back(single_index("hyper.recurrence", Scope::kHyper, "n", 0, nmax, false,
                              [](Env& env, const TablePtr& t, std::size_t n) {
                                return recurrence_check(env.hyper_for(t), n);
                              }));
  fams.push_back(single_index("hyper.partial_sum", Scope::kHyper, "p", 1, pmax, true,
                              [](Env& env, const TablePtr& t, std::size_t p) {
                                return partial_sum_check(env.hyper_for(t), p);
                              }));
  fams.push_back(single_index("hyper.binet", Scope::kHyper, "n", 0, nmax, false,
                              [](Env& env, const TablePtr& t, std::size_t n) {
                                return binet_check(env.hyper_for(t), n);
                              }));
  {
    Family f = single_index("hyper.genfun", Scope::kHyper, "N", 1, trunc, false,
                            [](Env& env, const TablePtr& t, std::size_t n) {
                              return genfun_check(env.hyper_for(t), n);
                            });
    f.ranges = [](const Corpus& c) { return Ranges{{"N", {static_cast<long>(c.trunc_n), static_cast<long>(c.trunc_n)}}}; };
    f.enumerate = [](const Corpus& c, const QPoly*, const AlgebraTable*) {
      return c.trunc_n >= 1 ? std::vector<Indices>{{static_cast<long>(c.trunc_n)}}
                            : std::vector<Indices>{};
    };
    fams.push_back(std::move(f));
  }
  {
    Family f;
    f.name = "hyper.catalan";
    f.scope = Scope::kHyper;
    f.index_names = {"n", "r"};
    f.ranges = [](const Corpus& c) {
      const long n = static_cast<long>(c.r_max);
      return Ranges{{"n", {0, n}}, {"r", {0, n}}};
    };
    f.enumerate = [](const Corpus& c, const QPoly*, const AlgebraTable*) {
      std::vector<Indices> out;
      for (long n = 0; n <= static_cast<long>(c.r_max); ++n) {
        for (long r = 0; r <= n; ++r) out.push_back({n, r});
      }
      return out;
    };
    f.admissible = [](const Indices& i, const QPoly*) { return i[1] >= 0 && i[1] <= i[0]; };
    f.eval = [](Env& env, const TablePtr& t, const Indices& i) {
      return catalan_check(env.hyper_for(t), u(i[0]), u(i[1])).combined();
    };
    fams.push_back(std::move(f));
  }
  fams.push_back(single_index("hyper.cassini", Scope::kHyper, "n", 1, rmax, false,
                              [](Env& env, const TablePtr& t, std::size_t n) {
                                return cassini_check(env.hyper_for(t), n);
                              }));
  {
    Family f;
    f.name = "hyper.docagne";
    f.scope = Scope::kHyper;
    f.index_names = {"n", "r"};
    f.ranges = [](const Corpus& c) {
      const long n = static_cast<long>(c.r_max);
      return Ranges{{"n", {0, std::max(0L, n - 1)}}, {"r", {std::min(1L, n), n}}};
    };
    f.enumerate = [](const Corpus& c, const QPoly*, const AlgebraTable*) {
      std::vector<Indices> out;
      for (long n = 0; n <= static_cast<long>(c.r_max); ++n) {
        for (long r = n + 1; r <= static_cast<long>(c.r_max); ++r) out.push_back({n, r});
      }
      return out;
    };
    f.admissible = [](const Indices& i, const QPoly*) { return i[0] >= 0 && i[1] > i[0]; };
    f.eval = [](Env& env, const TablePtr& t, const Indices& i) {
      return docagne_check(env.hyper_for(t), u(i[0]), u(i[1]));
    };
    fams.push_back(std::move(f));
  }
  return fams;
}

const std::vector<Family>& families() {
  static const std::vector<Family> kFamilies = make_families();
  return kFamilies;
}

const Family& family(const std::string& name) {
  for (const auto& f : families()) {
    if (f.name == name) return f;
  }
  throw UnknownKind("unknown check family '" + name + "'");
}

Verdict guarded(const Family& f, Env& env, const TablePtr& table, const Indices& idx) {
  try {
    return f.eval(env, table, idx);
  } catch (const Error& e) {
    return Verdict::fail(std::string("exception: ") + e.what());
  }
}

}  // namespace

std::vector<std::string> family_names() {
  std::vector<std::string> out;
  for (const auto& f : families()) out.push_back(f.name);
  return out;
}

const std::vector<std::string>& family_index_names(const std::string& name) {
  return family(name).index_names;
}

Verdict evaluate(const Instance& instance, const FaultPlan& faults) {
  const Family& f = family(instance.family);
  Env env;
  env.fib = std::make_shared<FibContext>(instance.h.value_or(QPoly(1)), faults);
  return guarded(f, env, instance.algebra, instance.indices);
}

// ---------------------------------------------------------------------------
// Shrinking

namespace {

std::vector<QPoly> smaller_h(const QPoly& h) {
  std::vector<QPoly> out;
  if (h != QPoly(1)) out.emplace_back(1);
  const std::vector<Rational> coeffs = h.coefficients();
  if (coeffs.size() >= 2) {
    out.emplace_back(std::vector<Rational>(coeffs.begin(), coeffs.end() - 1));
  }
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Rational& c = coeffs[k];
    if (c.is_zero()) continue;
    auto with = [&](Rational v) {
      std::vector<Rational> copy = coeffs;
      copy[k] = std::move(v);
      out.emplace_back(copy);
    };
    if (!c.is_integer()) with(Rational(c.num()));
    if (abs(c.num()) > 1) with(Rational(c.num() - sgn(c.num()), c.den()));
    if (k + 1 < coeffs.size()) with(Rational(0));
  }
  return out;
}

std::vector<Instance> shrink_candidates(const Instance& in, const Family& f) {
  std::vector<Instance> out;
  const std::size_t m = in.indices.size();
  for (std::size_t i = 0; i < m; ++i) {
    Instance c = in;
    --c.indices[i];
    out.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      Instance c = in;
      --c.indices[i];
      --c.indices[j];
      out.push_back(std::move(c));
    }
  }
  if (in.h && f.scope != Scope::kAlgebra) {
    for (auto& h : smaller_h(*in.h)) {
      Instance c = in;
      c.h = std::move(h);
      out.push_back(std::move(c));
    }
  }
  std::erase_if(out, [&](const Instance& c) {
    for (long v : c.indices) {
      if (v < 0) return true;
    }
    if (c.h && c.h->is_zero()) return true;
    return !f.admissible(c.indices, c.h ? &*c.h : nullptr);
  });
  return out;
}

}  // namespace

Instance shrink(const Instance& instance, const FaultPlan& faults) {
  if (evaluate(instance, faults).holds()) return instance;
  const Family& f = family(instance.family);
  Instance current = instance;
  for (int step = 0; step < 10000; ++step) {
    bool improved = false;
    for (auto& candidate : shrink_candidates(current, f)) {
      if (!evaluate(candidate, faults).holds()) {
        current = std::move(candidate);
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  return current;
}

// ---------------------------------------------------------------------------
// Orchestration

std::size_t Report::count(Outcome o) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [o](const CheckRecord& r) { return r.outcome == o; }));
}

namespace {

std::optional<CheckRecord> run_family(const Family& f, const Corpus& corpus, Env& env,
                                      const std::optional<QPoly>& h, const TablePtr& table) {
  const auto instances = f.enumerate(corpus, h ? &*h : nullptr, table.get());
  if (instances.empty()) return std::nullopt;
  const auto start = std::chrono::steady_clock::now();
  CheckRecord rec;
  rec.name = f.name;
  rec.h = h;
  rec.algebra = table;
  rec.ranges = f.ranges(corpus);
  rec.instances = instances.size();
  std::map<long, bool> printed_by_r;
  const bool catalan = f.name == "hyper.catalan";
  std::string first_flag;
  for (const auto& idx : instances) {
    const Verdict v = guarded(f, env, table, idx);
    if (catalan && v.holds()) {
      auto [it, inserted] = printed_by_r.try_emplace(idx[1], true);
      if (v.outcome == Outcome::kFlag) it->second = false;
    }
    if (v.outcome == Outcome::kFail) {
      rec.outcome = Outcome::kFail;
      rec.detail = v.witness;
      rec.first_failure = Instance{f.name, h, table, idx};
      break;
    }
    if (v.outcome == Outcome::kFlag && rec.outcome == Outcome::kPass) {
      rec.outcome = Outcome::kFlag;
      first_flag = v.witness;
    }
  }
  if (rec.outcome == Outcome::kFlag) rec.detail = first_flag;
  for (const auto& [r, agrees] : printed_by_r) {
    (agrees ? rec.printed_agrees_r : rec.printed_differs_r).push_back(r);
  }
  if (rec.first_failure) {
    rec.witness = shrink(*rec.first_failure, corpus.faults);
    const Verdict v = evaluate(*rec.witness, corpus.faults);
    if (!v.holds()) rec.detail = v.witness;
  }
  rec.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

bool selected(const Corpus& corpus, const Family& f) {
  return corpus.families.empty() ||
         std::find(corpus.families.begin(), corpus.families.end(), f.name) != corpus.families.end();
}

std::vector<CheckRecord> run_algebra_task(const Corpus& corpus) {
  std::vector<CheckRecord> out;
  Env env;
  for (const auto& table : corpus.algebras) {
    for (const auto& f : families()) {
      if (f.scope != Scope::kAlgebra || !selected(corpus, f)) continue;
      if (auto rec = run_family(f, corpus, env, std::nullopt, table)) out.push_back(std::move(*rec));
    }
  }
  return out;
}

std::vector<CheckRecord> run_h_task(const Corpus& corpus, const QPoly& h) {
  std::vector<CheckRecord> out;
  Env env;
  env.fib = std::make_shared<FibContext>(h, corpus.faults);
  for (const auto& f : families()) {
    if (f.scope != Scope::kReal || !selected(corpus, f)) continue;
    if (auto rec = run_family(f, corpus, env, h, nullptr)) out.push_back(std::move(*rec));
  }
  for (const auto& table : corpus.algebras) {
    for (const auto& f : families()) {
      if (f.scope != Scope::kHyper || !selected(corpus, f)) continue;
      if (auto rec = run_family(f, corpus, env, h, table)) out.push_back(std::move(*rec));
    }
  }
  return out;
}

}  // namespace

Report run_all(const Corpus& corpus, unsigned threads) {
  for (const auto& name : corpus.families) family(name);
  const std::size_t task_count = corpus.h_polys.size() + 1;
  std::vector<std::vector<CheckRecord>> results(task_count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < task_count; t = next++) {
      results[t] = t == 0 ? run_algebra_task(corpus) : run_h_task(corpus, corpus.h_polys[t - 1]);
    }
  };
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, task_count));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  Report report;
  report.seed = corpus.seed;
  for (auto& chunk : results) {
    for (auto& rec : chunk) report.checks.push_back(std::move(rec));
  }
  return report;
}

}  // namespace hfib
