// Copyright 2026 The fermap Authors.

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <stdexcept>
#include <string>

namespace fermap {

/// Malformed text input. Carries the 1-based line number when known (0 otherwise).
class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, const std::string &what)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

/// Input is well-formed but violates a contract (bad index, bad permutation, bad vector...).
class ValidationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A term acts with X or Y on a qubit that was declared symmetry-fixed.
class SymmetryViolation : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Requested size is beyond what a dense oracle or constructor supports.
class UnsupportedSize : public std::length_error {
  public:
    using std::length_error::length_error;
};

} // namespace fermap
