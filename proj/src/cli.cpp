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

#include "hfib/cli.hpp"

#include <algorithm>
#include <fstream>
#include <memory>

#include "CLI11.hpp"
#include "json.hpp"

#include "hfib/algebra_json.hpp"
#include "hfib/hspec.hpp"
#include "hfib/hyperfib.hpp"
#include "hfib/report.hpp"
#include "hfib/suite.hpp"

namespace hfib {

namespace {

std::string format_combination(const std::vector<Rational>& coeffs) {
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Rational& c = coeffs[k];
    if (c.is_zero()) continue;
    if (c.sign() < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (!c.abs().is_one()) out += c.abs().to_string();
    out += "e" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

std::string format_element(const AlgElement<QPoly>& u) {
  std::string out = "(";
  for (std::size_t k = 0; k < u.dim(); ++k) {
    if (k) out += ", ";
    out += format_poly(u[k]);
  }
  return out + ")";
}

TablePtr table_arg(const std::string& spec) {
  return std::make_shared<const AlgebraTable>(resolve_algebra(spec));
}

struct SeqArgs {
  std::string h;
  long n = 0;
  std::string algebra;
  std::string format = "csv";
};

int cmd_seq(const SeqArgs& a, std::ostream& out) {
  const QPoly h = parse_poly(a.h);
  auto fib = std::make_shared<FibContext>(h);
  const auto n = static_cast<std::size_t>(a.n);
  if (a.algebra.empty()) {
    if (a.format == "json") {
      nlohmann::ordered_json doc;
      doc["h"] = format_poly(h);
      doc["rows"] = nlohmann::ordered_json::array();
      for (std::size_t i = 0; i <= n; ++i) {
        doc["rows"].push_back({{"n", i}, {"value", format_poly(fib->fib(i))}});
      }
      out << doc.dump(2) << "\n";
    } else {
      out << "n,F\n";
      for (std::size_t i = 0; i <= n; ++i) out << i << "," << format_poly(fib->fib(i)) << "\n";
    }
    return kExitOk;
  }
  HyperContext ctx(fib, table_arg(a.algebra));
  if (a.format == "json") {
    nlohmann::ordered_json doc;
    doc["h"] = format_poly(h);
    doc["algebra"] = ctx.table()->name();
    doc["rows"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i <= n; ++i) {
      nlohmann::ordered_json coords = nlohmann::ordered_json::array();
      for (const auto& c : ctx.q(i).coords()) coords.push_back(format_poly(c));
      doc["rows"].push_back({{"n", i}, {"coords", std::move(coords)}});
    }
    out << doc.dump(2) << "\n";
  } else {
    out << "n";
    for (std::size_t k = 0; k < ctx.dim(); ++k) out << ",e" << k;
    out << "\n";
    for (std::size_t i = 0; i <= n; ++i) {
      out << i;
      for (const auto& c : ctx.q(i).coords()) out << "," << format_poly(c);
      out << "\n";
    }
  }
  return kExitOk;
}

struct VerifyArgs {
  std::uint64_t seed = 42;
  std::vector<std::string> algebras;
  long nmax = -1;
  long hcount = -1;
  unsigned threads = 0;
  std::string report;
  std::vector<std::string> faults;
  std::vector<std::string> families;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  CorpusOptions options;
  if (a.nmax >= 0) options.cap(static_cast<std::size_t>(a.nmax));
  if (a.hcount >= 0) options.h_count = static_cast<std::size_t>(a.hcount);
  std::vector<TablePtr> tables;
  for (const auto& spec : a.algebras) tables.push_back(table_arg(spec));
  if (!tables.empty()) options.algebras.clear();
  Corpus corpus = make_corpus(a.seed, options);
  if (!tables.empty()) corpus.algebras = tables;
  corpus.families = a.families;
  FaultPlan faults;
  for (const auto& name : a.faults) {
    auto f = fault_from_name(name);
    if (!f) throw ParseError("unknown fault '" + name + "'");
    faults.set(*f);
  }
  if (!faults.none()) corpus = with_faults(std::move(corpus), faults);

  const Report report = run_all(corpus, a.threads);
  const auto doc = report_to_json(report);
  if (a.report.empty()) {
    out << doc.dump(2) << "\n";
  } else {
    std::ofstream file(a.report);
    if (!file) throw ParseError("cannot write report to '" + a.report + "'");
    file << doc.dump(2) << "\n";
    out << "checks: " << report.checks.size() << "  pass: " << report.count(Outcome::kPass)
        << "  flag: " << report.count(Outcome::kFlag)
        << "  fail: " << report.count(Outcome::kFail) << "\n";
  }
  for (const auto& rec : report.checks) {
    if (rec.outcome != Outcome::kFail) continue;
    err << "FAIL " << rec.name;
    if (rec.h) err << " h=" << format_poly(*rec.h);
    if (rec.algebra) err << " algebra=" << rec.algebra->name();
    if (rec.witness) err << " witness=" << instance_to_json(*rec.witness).dump();
    err << ": " << rec.detail << "\n";
  }
  return report.any_failure() ? kExitCheckFailed : kExitOk;
}

struct GenfunArgs {
  std::string h;
  long truncation = 0;
  std::string algebra;
};

int cmd_genfun(const GenfunArgs& a, std::ostream& out) {
  const QPoly h = parse_poly(a.h);
  auto fib = std::make_shared<FibContext>(h);
  const auto n = static_cast<std::size_t>(a.truncation);
  Verdict verdict;
  if (a.algebra.empty()) {
    for (std::size_t i = 0; i <= n; ++i) out << "t^" << i << ": " << format_poly(fib->fib(i)) << "\n";
    out << "numerator t^0: " << format_poly(fib->fib(0)) << "\n";
    out << "numerator t^1: " << format_poly(fib->fib(1) - h * fib->fib(0)) << "\n";
    verdict = genfun_check(*fib, n);
  } else {
    HyperContext ctx(fib, table_arg(a.algebra));
    for (std::size_t i = 0; i <= n; ++i) out << "t^" << i << ": " << format_element(ctx.q(i)) << "\n";
    AlgElement<QPoly> hq0 = ctx.q(0);
    out << "numerator t^0: " << format_element(ctx.q(0)) << "\n";
    out << "numerator t^1: " << format_element(ctx.q(1) - hq0.scale(h)) << "\n";
    verdict = genfun_check(ctx, n);
  }
  out << "denominator: 1-" << (h == QPoly(1) ? "" : "(" + format_poly(h) + ")") << "t-t^2\n";
  if (verdict.holds()) {
    out << "verified\n";
    return kExitOk;
  }
  out << "failed: " << verdict.witness << "\n";
  return kExitCheckFailed;
}

struct AlgebraArgs {
  std::string spec;
  bool check = false;
};

bool alternative(const AlgebraTable& t) {
  const TablePtr table = std::make_shared<const AlgebraTable>(t);
  const std::size_t dim = t.dim();
  // Alternativity is trilinear-alternating, so basis pairs suffice.
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      auto ei = AlgElement<Rational>::basis(table, i, 0, 1);
      auto ej = AlgElement<Rational>::basis(table, j, 0, 1);
      auto eiej = ei + ej;
      for (std::size_t l = 0; l < dim; ++l) {
        auto el = AlgElement<Rational>::basis(table, l, 0, 1);
        if (!(alg_mul(alg_mul(eiej, eiej), el) == alg_mul(eiej, alg_mul(eiej, el)))) return false;
        if (!(alg_mul(el, alg_mul(eiej, eiej)) == alg_mul(alg_mul(el, eiej), eiej))) return false;
      }
    }
  }
  return true;
}

int cmd_algebra(const AlgebraArgs& a, std::ostream& out) {
  const AlgebraTable table = resolve_algebra(a.spec);
  out << "algebra " << table.name() << " (dim " << table.dim() << ")\n";
  for (std::size_t i = 0; i < table.dim(); ++i) {
    for (std::size_t j = 0; j < table.dim(); ++j) {
      out << "e" << i << "*e" << j << " = " << format_combination(basis_product(table, i, j))
          << "\n";
    }
  }
  if (auto violation = unit_law_violation(table)) {
    out << "unital=no (" << *violation << ")\n";
    return kExitCheckFailed;
  }
  const ValidationReport report = validate(table);
  out << "unital=yes associative=" << (report.associative ? "yes" : "no")
      << " commutative=" << (report.commutative ? "yes" : "no") << "\n";
  if (a.check) {
    if (!report.associative) out << "associativity fails: " << report.associativity_witness << "\n";
    if (!report.commutative) out << "commutativity fails: " << report.commutativity_witness << "\n";
    out << "alternative=" << (alternative(table) ? "yes" : "no") << "\n";
    try {
      const AlgebraTable reference = builtin(table.name());
      const bool same = reference == table;
      out << "reference=" << (same ? "matches" : "differs") << "\n";
      if (!same) return kExitCheckFailed;
    } catch (const UnknownKind&) {
    }
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact h(x)-Fibonacci polynomials over finite-dimensional algebras", "hfib"};
  app.require_subcommand(1);
  // "--h" names the polynomial, so help is long-form only.
  app.set_help_flag("--help", "print this help and exit");

  SeqArgs seq;
  auto* seq_cmd = app.add_subcommand("seq", "Tabulate F_{h,0..n} or their algebra elements");
  seq_cmd->add_option("--h", seq.h, "polynomial h(x), e.g. \"x^2+1/2\"")->required();
  seq_cmd->add_option("--n", seq.n, "last index")->required()->check(CLI::NonNegativeNumber);
  seq_cmd->add_option("--algebra", seq.algebra, "builtin name or JSON file");
  seq_cmd->add_option("--format", seq.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run every identity check over a random corpus");
  verify_cmd->add_option("--seed", verify.seed, "corpus seed");
  verify_cmd->add_option("--algebra", verify.algebras, "algebra(s) replacing the default set");
  verify_cmd->add_option("--nmax", verify.nmax, "cap on every index bound")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--hcount", verify.hcount, "number of h polynomials")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--threads", verify.threads, "worker threads (0: hardware)");
  verify_cmd->add_option("--report", verify.report, "write the JSON report here");
  verify_cmd->add_option("--fault", verify.faults, "inject a named mutation");
  verify_cmd->add_option("--family", verify.families, "run only the named check families");

  GenfunArgs genfun;
  auto* genfun_cmd = app.add_subcommand("genfun", "Truncated generating function and its check");
  genfun_cmd->add_option("--h", genfun.h, "polynomial h(x)")->required();
  genfun_cmd->add_option("--N", genfun.truncation, "truncation degree")
      ->required()
      ->check(CLI::NonNegativeNumber);
  genfun_cmd->add_option("--algebra", genfun.algebra, "builtin name or JSON file");

  AlgebraArgs algebra;
  auto* algebra_cmd = app.add_subcommand("algebra", "Print a multiplication table");
  algebra_cmd->add_option("spec", algebra.spec, "builtin name or JSON file")->required();
  algebra_cmd->add_flag("--check", algebra.check, "also test alternativity and the builtin reference");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "hfib: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*seq_cmd) return cmd_seq(seq, out);
    if (*verify_cmd) return cmd_verify(verify, out, err);
    if (*genfun_cmd) return cmd_genfun(genfun, out);
    if (*algebra_cmd) return cmd_algebra(algebra, out);
  } catch (const ParseError& e) {
    err << "hfib: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnknownKind& e) {
    err << "hfib: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotUnital& e) {
    err << "hfib: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const Error& e) {
    err << "hfib: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace hfib
