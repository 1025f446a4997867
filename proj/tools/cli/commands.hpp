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

#include "cli/report.hpp"
#include "detident/errors.hpp"
#include "detident/matrix.hpp"

namespace detident::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Row/column sweeps are exhaustive up to this matrix order...
inline constexpr std::size_t kExhaustiveMaxOrder = 6;
/// ...pool sweeps (pluecker) while the choice count is at most this...
inline constexpr std::size_t kExhaustiveCap = 4096;
/// ...and otherwise sample this many choices from the seeded stream.
inline constexpr std::size_t kSampledChoices = 256;
/// `det --engine all` skips the Laplace engine above this order.
inline constexpr std::size_t kLaplaceMaxOrder = 8;
/// Largest matrix order the fuzz harness generates.
inline constexpr std::size_t kFuzzMaxSize = 10;

/// Bad flag combination or index selection; maps to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

enum class Engine { laplace, bareiss, dodgson, all };
enum class Identity { jacobi, three_term, generalized, pluecker, all };
enum class PfaffianCheck { none, square, recurrence };

struct VerifyOptions {
  Identity identity = Identity::all;
  std::optional<std::vector<std::size_t>> pair;      // jacobi: i,j
  std::optional<std::vector<std::size_t>> rows;      // three-term / generalized
  std::optional<std::vector<std::size_t>> cols;      // three-term / generalized / pluecker vectors
  std::optional<std::vector<std::size_t>> m_cols;    // pluecker: columns forming M
  std::optional<std::size_t> r;                      // generalized / pluecker
  std::uint64_t seed = 0;                            // sampled sweeps
};

enum class FuzzSelection { jacobi, three_term, generalized, pluecker, engines, pfaffian, embed, all };

struct FuzzOptions {
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  std::size_t size_max = 6;
  std::int64_t entry_bound = 9;
  FuzzSelection selection = FuzzSelection::all;
  unsigned jobs = 0;  // 0: hardware concurrency
};

RunReport cmd_det(const Matrix& a, Engine engine);
RunReport cmd_verify(const Matrix& a, const VerifyOptions& options);
RunReport cmd_pfaffian(const Matrix& a, PfaffianCheck check);
RunReport cmd_embed(const Matrix& a, bool minors);
RunReport cmd_fuzz(const FuzzOptions& options);

int exit_code(const RunReport& report);

/// Full command line (without the program name). Returns the exit code:
/// 0 all checks pass, 1 a check failed, 2 input or usage error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace detident::cli
