/*
 * Copyright 2026 The detident Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace detident::cli {

using Json = nlohmann::ordered_json;

/// One evaluated check: an engine value or an identity residual.
struct CheckRecord {
  std::string check;
  Json operands = Json::object();
  std::string value;  // scalar text
  bool pass = true;
};

/// Output of one CLI invocation. JSON field order is fixed:
/// command, seed (fuzz only), results, summary.
struct RunReport {
  Json command = Json::object();
  std::optional<std::uint64_t> seed;
  std::vector<CheckRecord> results;

  std::size_t failures() const;
  bool passed() const { return failures() == 0; }

  Json to_json() const;
  void write_json(std::ostream& out) const;
  /// One line per record, then a summary line. `prefix` starts every line.
  void write_text(std::ostream& out, const std::string& prefix = "") const;
};

}  // namespace detident::cli
