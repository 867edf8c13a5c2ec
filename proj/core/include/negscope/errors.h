// Copyright 2026 The negscope Authors
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

#ifndef NEGSCOPE_ERRORS_H_
#define NEGSCOPE_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace negscope {

// Root of every error the library throws on bad input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller passed an argument outside an operation's domain (k larger than
// the document count, ratios not summing to 100, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Input text does not follow a file format. `line` is 1-based, 0 when the
// error is not tied to a line.
class FormatError : public Error {
 public:
  FormatError(std::size_t line, std::string field, const std::string &message);

  std::size_t line() const { return line_; }
  const std::string &field() const { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

// A record parsed fine but breaks a data-model invariant. `key` identifies the
// record as doc_id/sent_id/[cue indices].
class ValidationError : public Error {
 public:
  ValidationError(std::string key, const std::string &message,
                  std::size_t line = 0);

  const std::string &key() const { return key_; }
  std::size_t line() const { return line_; }

 private:
  std::string key_;
  std::size_t line_;
};

// Several records describing one sentence disagree with each other (token
// sequence, language, source or split).
class ConsistencyError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace negscope

#endif  // NEGSCOPE_ERRORS_H_
