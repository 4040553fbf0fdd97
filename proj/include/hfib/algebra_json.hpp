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

#ifndef HFIB_ALGEBRA_JSON_HPP_
#define HFIB_ALGEBRA_JSON_HPP_

#include <string>
#include <string_view>

#include "json.hpp"

#include "hfib/algebra.hpp"

namespace hfib {

// { "name": string, "dim": int, "table": dim x dim x dim array whose entries
// are integers or "p/q" strings }, table[i][j][k] being the coefficient of
// e_k in e_i * e_j. Throws ParseError on malformed input; the unit law is
// not checked here (see validate()).
AlgebraTable parse_algebra_json(std::string_view text);
AlgebraTable load_algebra_file(const std::string& path);
nlohmann::ordered_json algebra_to_json(const AlgebraTable& table);

// A readable file path wins over a builtin name.
AlgebraTable resolve_algebra(const std::string& name_or_path);

}  // namespace hfib

#endif  // HFIB_ALGEBRA_JSON_HPP_
