/*
 * Copyright 2026 The senrank Authors.
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace senrank {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input data or arguments failed validation. The CLI maps these to exit code 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class MalformedDataError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Malformed input text. Carries the 1-based line number of the offending record.
class ParseError : public MalformedDataError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : MalformedDataError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class DimensionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InsufficientDataError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InvalidArgumentError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Anchor resolution failures.
class InvalidAnchorError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class AnchorNotFoundError : public InvalidAnchorError {
 public:
  using InvalidAnchorError::InvalidAnchorError;
};

class AmbiguousAnchorError : public InvalidAnchorError {
 public:
  using InvalidAnchorError::InvalidAnchorError;
};

class DuplicateAnchorError : public InvalidAnchorError {
 public:
  using InvalidAnchorError::InvalidAnchorError;
};

class OrientationError : public InvalidAnchorError {
 public:
  using InvalidAnchorError::InvalidAnchorError;
};

/// The unlabeled block of the Laplacian could not be factored. The CLI maps this to exit code 3.
class SingularSystemError : public Error {
 public:
  using Error::Error;
};

}  // namespace senrank
