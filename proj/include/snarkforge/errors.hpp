// Copyright 2026 The Snarkforge Authors.
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

namespace snarkforge {

// Precondition of an operation does not hold for the given input.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// A quantity the caller asked for is not defined on this input, e.g.
// cyclic edge connectivity of a graph without two disjoint cycles.
class UndefinedError : public DomainError {
 public:
  explicit UndefinedError(const std::string& what) : DomainError(what) {}
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Raised when a count contradicts a proved identity. Seeing one means a bug.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

class IntegrityError : public std::runtime_error {
 public:
  IntegrityError(const std::string& what, long long record_id)
      : std::runtime_error("record " + std::to_string(record_id) + ": " + what),
        record_id_(record_id) {}

  long long record_id() const { return record_id_; }

 private:
  long long record_id_;
};

}  // namespace snarkforge
