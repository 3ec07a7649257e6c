// Copyright 2026 The GazeVal Authors. All Rights Reserved.
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

#ifndef GAZEVAL_ERRORS_HPP
#define GAZEVAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gazeval {

// Malformed input content: bad CSV rows, schema violations, contract
// violations on data (dimension mismatches, too few observers).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid configuration values (negative thresholds, bad enums, unknown keys).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem failures: missing files, unreadable/unwritable paths.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace gazeval

#endif  // GAZEVAL_ERRORS_HPP
