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

#include "hfib/report.hpp"

#include "hfib/hspec.hpp"

namespace hfib {

using nlohmann::ordered_json;

ordered_json instance_to_json(const Instance& instance) {
  ordered_json j;
  if (instance.h) j["h"] = format_poly(*instance.h);
  if (instance.algebra) j["algebra"] = instance.algebra->name();
  const auto& names = family_index_names(instance.family);
  for (std::size_t i = 0; i < names.size() && i < instance.indices.size(); ++i) {
    j[names[i]] = instance.indices[i];
  }
  return j;
}

ordered_json report_to_json(const Report& report) {
  ordered_json out;
  out["seed"] = report.seed;
  out["summary"] = {{"pass", report.count(Outcome::kPass)},
                    {"flag", report.count(Outcome::kFlag)},
                    {"fail", report.count(Outcome::kFail)}};
  ordered_json checks = ordered_json::array();
  for (const auto& rec : report.checks) {
    ordered_json c;
    c["name"] = rec.name;
    ordered_json params = ordered_json::object();
    if (rec.h) params["h"] = format_poly(*rec.h);
    if (rec.algebra) params["algebra"] = rec.algebra->name();
    for (const auto& [name, range] : rec.ranges) params[name] = {range.first, range.second};
    params["instances"] = rec.instances;
    c["params"] = std::move(params);
    c["verdict"] = std::string(outcome_name(rec.outcome));
    if (rec.outcome != Outcome::kPass) {
      ordered_json w;
      if (rec.witness) w["params"] = instance_to_json(*rec.witness);
      if (rec.first_failure) w["first_failure"] = instance_to_json(*rec.first_failure);
      w["detail"] = rec.detail;
      if (!rec.printed_differs_r.empty() || !rec.printed_agrees_r.empty()) {
        w["printed_agrees_r"] = rec.printed_agrees_r;
        w["printed_differs_r"] = rec.printed_differs_r;
      }
      c["witness"] = std::move(w);
    }
    c["ms"] = rec.ms;
    checks.push_back(std::move(c));
  }
  out["checks"] = std::move(checks);
  return out;
}

ordered_json without_timing(ordered_json report) {
  if (report.contains("checks")) {
    for (auto& c : report["checks"]) c.erase("ms");
  }
  return report;
}

}  // namespace hfib
