// Copyright 2026 The wsat Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wsat {

// Base for every error raised by the library. The CLI maps ParseError and
// ParameterError to usage failures and everything else to domain failures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class UndefinedDensityError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  // line 0 means the input has no line structure (JSON documents)
  ParseError(std::size_t line, const std::string& what)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A structure the construction needs (clique, vertex subset) does not exist
// in the host.
class StructureAbsentError : public Error {
 public:
  using Error::Error;
};

// The construction ran but the result failed closure verification.
class ConstructionFailedError : public Error {
 public:
  using Error::Error;
};

// |E(G)| - X_F(G) <= wsat(G,F) <= |E(G)| was violated. Always an engine bug.
class SandwichViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace wsat
