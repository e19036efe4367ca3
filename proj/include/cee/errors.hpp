// Copyright 2026 The cee Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CEE_ERRORS_HPP_
#define CEE_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

#include "cee/coord_set.hpp"

namespace cee {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class UnknownCoordinate : public Error {
 public:
  explicit UnknownCoordinate(const std::string& id)
      : Error("unknown coordinate '" + id + "'"), id_(id) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

class UnknownLabel : public Error {
 public:
  using Error::Error;
};

class KernelMissing : public Error {
 public:
  KernelMissing(CoordSet subset, const std::string& rendered)
      : Error("causal kernel missing for subset " + rendered), subset_(subset) {}
  CoordSet subset() const { return subset_; }

 private:
  CoordSet subset_;
};

class BlockCountExceeded : public Error {
 public:
  BlockCountExceeded(std::size_t blocks, std::size_t cap)
      : Error("partition has " + std::to_string(blocks) +
              " blocks, enumeration cap is " + std::to_string(cap)),
        blocks_(blocks),
        cap_(cap) {}
  std::size_t blocks() const { return blocks_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t blocks_;
  std::size_t cap_;
};

class PremiseNotMet : public Error {
 public:
  using Error::Error;
};

class MissingNumericVariable : public Error {
 public:
  using Error::Error;
};

class EmptySubject : public Error {
 public:
  EmptySubject() : Error("subject event is empty") {}
};

class NonBinaryTreatment : public Error {
 public:
  using Error::Error;
};

class CoordinateMismatch : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// Input text that could not be read. Line and column are 1-based; 0 means
// unknown.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0,
                      std::size_t column = 0)
      : Error(format(what, line, column)), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line,
                            std::size_t column) {
    if (line == 0) return what;
    return "line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + what;
  }
  std::size_t line_;
  std::size_t column_;
};

}  // namespace cee

#endif  // CEE_ERRORS_HPP_
