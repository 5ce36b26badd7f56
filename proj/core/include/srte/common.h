// Copyright 2026 The srte Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SRTE_COMMON_H_
#define SRTE_COMMON_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace srte {

using NodeIndex = int;
using EdgeIndex = int;

// Exact arithmetic used for routing costs, distances and ECMP fractions.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. line() is 1-based, 0 when not line-specific.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

// A precondition on an argument was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A desk-scale guard (path count, node count, subproblem budget) tripped.
class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

// Parses an exact decimal or fraction: "3", "-2.75", "1e3", "1/3".
// Throws InvalidArgument on anything else.
Rational ParseRational(std::string_view text);

// Shortest exact text for `value`: integer, terminating decimal or "p/q".
std::string FormatRational(const Rational& value);

double ToDouble(const Rational& value);

}  // namespace srte

#endif  // SRTE_COMMON_H_
