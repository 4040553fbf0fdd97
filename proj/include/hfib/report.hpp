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

#ifndef HFIB_REPORT_HPP_
#define HFIB_REPORT_HPP_

#include <string>

#include "json.hpp"

#include "hfib/suite.hpp"

namespace hfib {

// { "seed", "summary", "checks": [ { "name", "params", "verdict", "witness"?, "ms" } ] }
nlohmann::ordered_json report_to_json(const Report& report);
nlohmann::ordered_json instance_to_json(const Instance& instance);

// Removes every "ms" field so two runs can be compared byte for byte.
nlohmann::ordered_json without_timing(nlohmann::ordered_json report);

}  // namespace hfib

#endif  // HFIB_REPORT_HPP_
