// Copyright 2026 The ddapprox Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ddapprox {

/// A non-finite value reached the complex table.
class NumericDomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// A dense expansion would exceed the configured qubit cap.
class SizeError : public std::length_error {
   public:
    using std::length_error::length_error;
};

/// The state has no probability mass left and cannot be normalized.
class ZeroStateError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A file could not be read or written.
class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed circuit text. `line()` is 1-based.
class ParseError : public std::invalid_argument {
   public:
    ParseError(std::size_t line, const std::string &msg)
        : std::invalid_argument("line " + std::to_string(line) + ": " + msg), line_(line) {
    }

    std::size_t line() const {
        return line_;
    }

   private:
    std::size_t line_;
};

}  // namespace ddapprox
