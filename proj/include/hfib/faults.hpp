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

#ifndef HFIB_FAULTS_HPP_
#define HFIB_FAULTS_HPP_

#include <bitset>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hfib {

// Single-site mutations used to show the verifiers are not vacuous. The
// first group perturbs computation inside fibseq/hyperfib; the second
// corrupts algebra tables before the suite hands them out.
enum class Fault {
  kWrongInitialValue,      // F_1 = 2
  kBinomialBoundOffByOne,  // closed form drops its last summand
  kDroppedHalvingFactor,   // 2^{1-n} omitted
  kSwappedRoots,           // alpha and beta exchanged
  kCatalanSignExponent,    // (-1)^{n-r} instead of (-1)^{n-r-1}
  kDroppedDenominator,     // summation identity compared without the factor h
  kWrongChebyshevSeed,     // U_1 = t instead of 2t
  kTableSignFlip,          // one e_i e_j entry negated
  kWrongUnitRow,           // e_0 e_1 no longer e_1
  kTransposedConstants,    // c(i, j, k) read as c(j, i, k)
  kCount,
};

class FaultPlan {
 public:
  FaultPlan() = default;
  explicit FaultPlan(Fault f) { set(f); }

  FaultPlan& set(Fault f) {
    bits_.set(static_cast<std::size_t>(f));
    return *this;
  }
  bool has(Fault f) const { return bits_.test(static_cast<std::size_t>(f)); }
  bool none() const { return bits_.none(); }
  friend bool operator==(const FaultPlan&, const FaultPlan&) = default;

 private:
  std::bitset<static_cast<std::size_t>(Fault::kCount)> bits_;
};

std::string_view fault_name(Fault f);
std::optional<Fault> fault_from_name(std::string_view name);
std::vector<Fault> all_faults();

}  // namespace hfib

#endif  // HFIB_FAULTS_HPP_
