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

#include "hfib/algebra_json.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace hfib {

using nlohmann::json;

namespace {

Rational parse_entry(const json& v, std::size_t i, std::size_t j, std::size_t k) {
  const std::string where = "table[" + std::to_string(i) + "][" + std::to_string(j) + "][" +
                            std::to_string(k) + "]";
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  throw ParseError(where + ": expected an integer or a \"p/q\" string");
}

}  // namespace

AlgebraTable parse_algebra_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed algebra JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("algebra JSON must be an object");
  if (!doc.contains("name") || !doc["name"].is_string()) {
    throw ParseError("algebra JSON needs a string \"name\"");
  }
  if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long>() < 1) {
    throw ParseError("algebra JSON needs a positive integer \"dim\"");
  }
  const auto dim = static_cast<std::size_t>(doc["dim"].get<long>());
  if (!doc.contains("table") || !doc["table"].is_array() || doc["table"].size() != dim) {
    throw ParseError("\"table\" must be an array of " + std::to_string(dim) + " rows");
  }
  std::vector<Rational> constants(dim * dim * dim);
  const json& table = doc["table"];
  for (std::size_t i = 0; i < dim; ++i) {
    if (!table[i].is_array() || table[i].size() != dim) {
      throw ParseError("table[" + std::to_string(i) + "] must have " + std::to_string(dim) +
                       " entries");
    }
    for (std::size_t j = 0; j < dim; ++j) {
      const json& cell = table[i][j];
      if (!cell.is_array() || cell.size() != dim) {
        throw ParseError("table[" + std::to_string(i) + "][" + std::to_string(j) + "] must have " +
                         std::to_string(dim) + " coefficients");
      }
      for (std::size_t k = 0; k < dim; ++k) {
        constants[(i * dim + j) * dim + k] = parse_entry(cell[k], i, j, k);
      }
    }
  }
  return AlgebraTable(doc["name"].get<std::string>(), dim, std::move(constants));
}

AlgebraTable load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read algebra file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_algebra_json(buffer.str());
}

nlohmann::ordered_json algebra_to_json(const AlgebraTable& table) {
  nlohmann::ordered_json out;
  out["name"] = table.name();
  out["dim"] = table.dim();
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < table.dim(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < table.dim(); ++j) {
      nlohmann::ordered_json cell = nlohmann::ordered_json::array();
      for (std::size_t k = 0; k < table.dim(); ++k) {
        const Rational& c = table.c(i, j, k);
        if (c.is_integer() && c.num().fits_slong_p()) {
          cell.push_back(c.num().get_si());
        } else {
          cell.push_back(c.to_string());
        }
      }
      row.push_back(std::move(cell));
    }
    rows.push_back(std::move(row));
  }
  out["table"] = std::move(rows);
  return out;
}

AlgebraTable resolve_algebra(const std::string& name_or_path) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(name_or_path, ec)) return load_algebra_file(name_or_path);
  return builtin(name_or_path);
}

}  // namespace hfib
