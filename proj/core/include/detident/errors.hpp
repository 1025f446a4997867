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

#include <stdexcept>

namespace detident {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed scalar or matrix text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Operand sizes do not fit together (non-square, wrong vector length, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A 1-based index falls outside the matrix.
class BoundsError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Row and column selections of different sizes where a square result is needed.
class ShapeError : public Error {
 public:
  using Error::Error;
};

}  // namespace detident
