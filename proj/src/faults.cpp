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

#include <array>

#include "hfib/faults.hpp"
#include "hfib/verdict.hpp"

namespace hfib {

namespace {

constexpr std::array<std::string_view, static_cast<std::size_t>(Fault::kCount)> kFaultNames = {
    "wrong_initial_value", "binomial_bound_off_by_one", "dropped_halving_factor",
    "swapped_roots",       "catalan_sign_exponent",     "dropped_denominator",
    "wrong_chebyshev_seed", "table_sign_flip",          "wrong_unit_row",
    "transposed_constants",
};

}  // namespace

std::string_view fault_name(Fault f) { return kFaultNames.at(static_cast<std::size_t>(f)); }

std::optional<Fault> fault_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kFaultNames.size(); ++i) {
    if (kFaultNames[i] == name) return static_cast<Fault>(i);
  }
  return std::nullopt;
}

std::vector<Fault> all_faults() {
  std::vector<Fault> out;
  for (std::size_t i = 0; i < kFaultNames.size(); ++i) out.push_back(static_cast<Fault>(i));
  return out;
}

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::kPass: return "pass";
    case Outcome::kFail: return "fail";
    case Outcome::kFlag: return "flag";
  }
  return "fail";
}

}  // namespace hfib
