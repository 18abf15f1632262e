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

#ifndef GRPINV_EXT_NAT_HPP_
#define GRPINV_EXT_NAT_HPP_

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace grpinv {

// Positive integers extended by infinity: the value domain of sigma,
// sigma_c and IC. Infinity absorbs under + and *, and compares above every
// finite value (so inf <= inf holds).
class ExtNat {
 public:
  static constexpr ExtNat finite(std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("ExtNat::finite requires k >= 1");
    return ExtNat(k);
  }
  static constexpr ExtNat infinite() { return ExtNat(kInfinite); }

  constexpr bool is_finite() const { return value_ != kInfinite; }
  constexpr bool is_infinite() const { return value_ == kInfinite; }

  constexpr std::uint64_t value() const {
    if (!is_finite()) throw std::logic_error("ExtNat::value on infinity");
    return value_;
  }

  constexpr auto operator<=>(const ExtNat&) const = default;

  friend constexpr ExtNat operator*(ExtNat a, ExtNat b) {
    if (a.is_infinite() || b.is_infinite()) return infinite();
    return ExtNat(a.value_ * b.value_);
  }
  friend constexpr ExtNat operator+(ExtNat a, ExtNat b) {
    if (a.is_infinite() || b.is_infinite()) return infinite();
    return ExtNat(a.value_ + b.value_);
  }

  std::string to_string() const {
    return is_finite() ? std::to_string(value_) : std::string("infinite");
  }

  friend std::ostream& operator<<(std::ostream& os, const ExtNat& v) {
    return os << v.to_string();
  }

 private:
  static constexpr std::uint64_t kInfinite =
      std::numeric_limits<std::uint64_t>::max();
  constexpr explicit ExtNat(std::uint64_t v) : value_(v) {}
  std::uint64_t value_;
};

}  // namespace grpinv

#endif  // GRPINV_EXT_NAT_HPP_
