// Copyright 2026 The morphlab Authors
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

#ifndef MORPHLAB_ERROR_HPP_
#define MORPHLAB_ERROR_HPP_

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

namespace morphlab {

/// Broad failure class; the CLI maps each to an exit code.
enum class ErrorKind {
  kValidation,  // exit 2
  kInfeasible,  // exit 3
  kIo,          // exit 4
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what)
      : Error(ErrorKind::kValidation, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorKind::kIo, what) {}
};

/// No inventory entry matches the input at `position` (code-point offset).
class UnknownGrapheme : public ValidationError {
 public:
  UnknownGrapheme(std::string surface, std::size_t position, std::size_t line = 0);
  const std::string& surface() const { return surface_; }
  std::size_t position() const { return position_; }
  std::size_t line() const { return line_; }

 private:
  std::string surface_;
  std::size_t position_;
  std::size_t line_;
};

class DuplicateWord : public ValidationError {
 public:
  DuplicateWord(const std::string& surface, std::size_t line)
      : ValidationError("line " + std::to_string(line) + ": duplicate word '" +
                        surface + "'"),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class MorphMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ConfigError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class WordMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class GroupMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class EmptyCategory : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class MissingWord : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class SyllabificationFailure : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class FitDivergence : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DegenerateFit : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Generation could not find a fresh unique type within the retry budget.
class RetryExhausted : public Error {
 public:
  RetryExhausted(std::string level, std::size_t attempts)
      : Error(ErrorKind::kInfeasible,
              "retry budget exhausted at " + level + " level after " +
                  std::to_string(attempts) + " attempts"),
        level_(std::move(level)) {}
  const std::string& level() const { return level_; }

 private:
  std::string level_;
};

using WarningHandler = std::function<void(const std::string&)>;

/// Emit a non-fatal diagnostic. Defaults to stderr; thread-safe.
void warn(const std::string& message);

/// Replace the warning sink, returning the previous one.
WarningHandler set_warning_handler(WarningHandler handler);

}  // namespace morphlab

#endif  // MORPHLAB_ERROR_HPP_
