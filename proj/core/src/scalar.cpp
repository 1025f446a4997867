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

#include "detident/scalar.hpp"

#include <cctype>
#include <ostream>
#include <string>

#include "detident/errors.hpp"

namespace detident {
namespace {

// [-]digits ; returns the digits without sign and the sign flag.
bool split_signed_digits(std::string_view part, bool& negative, std::string_view& digits) {
  negative = false;
  if (!part.empty() && part.front() == '-') {
    negative = true;
    part.remove_prefix(1);
  }
  if (part.empty()) return false;
  for (char ch : part) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  digits = part;
  return true;
}

}  // namespace

Scalar::Scalar(long num, long den) {
  if (den == 0) throw DomainError("scalar with zero denominator");
  value_ = mpq_class(mpz_class(num), mpz_class(den));
  value_.canonicalize();
}

Scalar::Scalar(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Scalar Scalar::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num_text = text.substr(0, slash);
  bool num_negative = false;
  std::string_view num_digits;
  if (!split_signed_digits(num_text, num_negative, num_digits)) {
    throw ParseError("malformed scalar '" + std::string(text) + "'");
  }
  mpz_class num(std::string(num_digits), 10);
  if (num_negative) num = -num;

  mpz_class den = 1;
  if (slash != std::string_view::npos) {
    bool den_negative = false;
    std::string_view den_digits;
    if (!split_signed_digits(text.substr(slash + 1), den_negative, den_digits)) {
      throw ParseError("malformed scalar '" + std::string(text) + "'");
    }
    den = mpz_class(std::string(den_digits), 10);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    if (den_negative) den = -den;
  }

  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(std::move(q));
}

std::string Scalar::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str(10);
  return value_.get_num().get_str(10) + "/" + value_.get_den().get_str(10);
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  value_ += rhs.value_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  out.value_ = -out.value_;
  return out;
}

Scalar parse_scalar(std::string_view text) { return Scalar::parse(text); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace detident
