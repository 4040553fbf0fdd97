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

#ifndef HFIB_HSPEC_HPP_
#define HFIB_HSPEC_HPP_

#include <string>
#include <string_view>

#include "hfib/poly.hpp"

namespace hfib {

// Textual polynomials in x:
//   polynomial ::= ["+"|"-"] term (("+"|"-") term)*
//   term       ::= coeff | [coeff] "x" | [coeff] "x^" int
//   coeff      ::= int | int "/" int
// Whitespace between tokens is ignored. Throws ParseError naming the
// offending token.
QPoly parse_poly(std::string_view text);

// Descending powers, explicit "^", coefficients as "p/q"; unit coefficients
// on non-constant terms are omitted. Zero prints as "0".
std::string format_poly(const QPoly& p);

}  // namespace hfib

#endif  // HFIB_HSPEC_HPP_
