// Copyright 2026 The graphcanon Authors.
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

#ifndef GRAPHCANON_ERRORS_H_
#define GRAPHCANON_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphcanon {

// Invalid argument to a library operation (out-of-range vertex, bad
// probability, size mismatch, non-bijective map, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed edge-list text. `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// The (n, p) pair lies outside the regime an operation is defined for, e.g.
// np <= ln n when choosing the modulus for the random regime.
class RegimeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Inconsistent experiment or smoothed-model configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace graphcanon

#endif  // GRAPHCANON_ERRORS_H_
