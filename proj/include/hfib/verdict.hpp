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

#ifndef HFIB_VERDICT_HPP_
#define HFIB_VERDICT_HPP_

#include <string>
#include <string_view>

namespace hfib {

enum class Outcome { kPass, kFail, kFlag };

std::string_view outcome_name(Outcome o);

// Result of one identity instance. Failures are data, not exceptions; the
// witness names the first differing coefficient or coordinate.
struct Verdict {
  Outcome outcome = Outcome::kPass;
  std::string witness;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string why) { return {Outcome::kFail, std::move(why)}; }
  static Verdict flag(std::string why) { return {Outcome::kFlag, std::move(why)}; }

  bool holds() const { return outcome != Outcome::kFail; }
  bool passed() const { return outcome == Outcome::kPass; }
};

}  // namespace hfib

#endif  // HFIB_VERDICT_HPP_
