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

#include <iosfwd>
#include <string>
#include <string_view>

#include "detident/matrix.hpp"

namespace detident::cli {

enum class MatrixFormat { text, json };

// Text MatrixFile:
//
//   rows cols
//   a11 a12 ... a1c
//   ...
//
// Header integers are positive; each body line holds exactly `cols`
// whitespace-separated scalars. Blank lines and lines starting with '#'
// are ignored. JSON form: {"rows":r,"cols":c,"entries":[[...],...]} where
// entries are scalar strings (integers are also accepted).
//
// Every reader throws ParseError or DimensionError on malformed input.

Matrix read_matrix_text(std::istream& in);
Matrix read_matrix_json(std::string_view text);
/// Detects JSON by a leading '{'.
Matrix read_matrix(std::istream& in);
/// "-" reads standard input.
Matrix read_matrix_file(const std::string& path, std::istream& stdin_stream);

void write_matrix(std::ostream& out, const Matrix& m, MatrixFormat format);
std::string format_matrix(const Matrix& m, MatrixFormat format);

}  // namespace detident::cli
