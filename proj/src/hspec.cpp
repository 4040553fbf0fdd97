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

#include "hfib/hspec.hpp"

#include <cctype>
#include <map>
#include <ostream>

namespace hfib {

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  QPoly parse() {
    std::map<std::size_t, Rational> terms;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_space();
      int sign = 1;
      if (!at_end() && (peek() == '+' || peek() == '-')) {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail_token("expected '+' or '-'");
      }
      first = false;
      auto [coeff, power] = parse_term();
      if (sign < 0) coeff = -coeff;
      terms[power] += coeff;
      skip_space();
      if (at_end()) break;
    }
    std::vector<Rational> coeffs(terms.empty() ? 0 : terms.rbegin()->first + 1);
    for (auto& [k, c] : terms) coeffs[k] = c;
    return QPoly(coeffs);
  }

 private:
  std::pair<Rational, std::size_t> parse_term() {
    skip_space();
    Rational coeff(1);
    bool has_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      mpz_class num = parse_int();
      mpz_class den = 1;
      skip_space();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_space();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
          fail_token("expected denominator");
        }
        den = parse_int();
        if (den == 0) fail("zero denominator");
      }
      coeff = Rational(num, den);
      has_coeff = true;
    }
    skip_space();
    std::size_t power = 0;
    if (!at_end() && peek() == 'x') {
      ++pos_;
      power = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_space();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
          fail_token("expected exponent");
        }
        const mpz_class e = parse_int();
        if (!e.fits_ulong_p() || e > 100000) fail("exponent too large");
        power = e.get_ui();
      }
    } else if (!has_coeff) {
      fail_token("expected coefficient or 'x'");
    }
    return {coeff, power};
  }

  mpz_class parse_int() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse polynomial '" + std::string(text_) + "': " + what +
                     " at position " + std::to_string(pos_ + 1));
  }
  [[noreturn]] void fail_token(const std::string& what) const {
    if (at_end()) fail(what + ", found end of input");
    fail(what + ", found '" + std::string(1, peek()) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

QPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

std::string format_poly(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = p.size(); k-- > 0;) {
    const Rational c = p.coeff(k);
    if (c.is_zero()) continue;
    if (c.sign() < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    const Rational magnitude = c.abs();
    if (k == 0 || !magnitude.is_one()) out += magnitude.to_string();
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << format_poly(p); }

std::ostream& operator<<(std::ostream& os, const GaussPoly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (std::size_t k = p.size(); k-- > 0;) {
    if (p.coeff(k).is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << p.coeff(k).to_string();
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
  }
  return os;
}

}  // namespace hfib
