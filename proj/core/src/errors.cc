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

#include "negscope/errors.h"

#include <utility>

namespace negscope {
namespace {

std::string FormatMessage(std::size_t line, const std::string &field,
                          const std::string &message) {
  std::string out;
  if (line > 0) out += "line " + std::to_string(line) + ": ";
  if (!field.empty()) out += "field '" + field + "': ";
  return out + message;
}

std::string ValidationMessage(std::size_t line, const std::string &key,
                              const std::string &message) {
  std::string out;
  if (line > 0) out += "line " + std::to_string(line) + ": ";
  return out + "record " + key + ": " + message;
}

}  // namespace

FormatError::FormatError(std::size_t line, std::string field,
                         const std::string &message)
    : Error(FormatMessage(line, field, message)),
      line_(line),
      field_(std::move(field)) {}

ValidationError::ValidationError(std::string key, const std::string &message,
                                 std::size_t line)
    : Error(ValidationMessage(line, key, message)),
      key_(std::move(key)),
      line_(line) {}

}  // namespace negscope
