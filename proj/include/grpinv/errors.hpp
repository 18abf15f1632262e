// Copyright 2026 The grpinv Authors
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

#ifndef GRPINV_ERRORS_HPP_
#define GRPINV_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grpinv {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A group specification violates a parameter constraint (e.g. Dihedral(2)).
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class OrderLimitExceeded : public Error {
 public:
  using Error::Error;
};

// A search (lattice enumeration or cover branch-and-bound) ran past its
// configured budget. Never silently truncated.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class TooManySets : public Error {
 public:
  using Error::Error;
};

class InvalidPartition : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace grpinv

#endif  // GRPINV_ERRORS_HPP_
