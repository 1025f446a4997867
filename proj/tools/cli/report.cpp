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

#include "cli/report.hpp"

#include <algorithm>
#include <ostream>

namespace detident::cli {

std::size_t RunReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const CheckRecord& r) { return !r.pass; }));
}

Json RunReport::to_json() const {
  Json doc;
  doc["command"] = command;
  if (seed) doc["seed"] = *seed;
  Json records = Json::array();
  for (const auto& r : results) {
    Json rec;
    rec["check"] = r.check;
    rec["operands"] = r.operands;
    rec["value"] = r.value;
    rec["pass"] = r.pass;
    records.push_back(std::move(rec));
  }
  doc["results"] = std::move(records);
  Json summary;
  summary["checks"] = results.size();
  summary["failures"] = failures();
  summary["pass"] = passed();
  doc["summary"] = std::move(summary);
  return doc;
}

void RunReport::write_json(std::ostream& out) const { out << to_json().dump(2) << '\n'; }

void RunReport::write_text(std::ostream& out, const std::string& prefix) const {
  for (const auto& r : results) {
    out << prefix << r.check;
    if (!r.operands.empty()) out << ' ' << r.operands.dump();
    out << " = " << r.value << ' ' << (r.pass ? "PASS" : "FAIL") << '\n';
  }
  out << prefix << "summary: " << results.size() << " checks, " << failures() << " failures, "
      << (passed() ? "PASS" : "FAIL") << '\n';
}

}  // namespace detident::cli
