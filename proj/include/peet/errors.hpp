/*
 * Copyright 2026 The PEET Toolkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace peet {

/// Broad failure classes; the CLI maps them onto exit codes 1, 2 and 3.
enum class ErrorKind { Usage, Data, Numerical };

/// Every toolkit failure carries a stable machine-readable code
/// ("LineCountMismatch", "OutOfOrder", ...) next to the human message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message)
      : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& code() const noexcept { return code_; }

 private:
  ErrorKind kind_;
  std::string code_;
};

inline Error data_error(std::string code, const std::string& message) {
  return Error(ErrorKind::Data, std::move(code), message);
}

inline Error usage_error(std::string code, const std::string& message) {
  return Error(ErrorKind::Usage, std::move(code), message);
}

inline Error numerical_error(std::string code, const std::string& message) {
  return Error(ErrorKind::Numerical, std::move(code), message);
}

}  // namespace peet
