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

#ifndef CEE_COORD_SET_HPP_
#define CEE_COORD_SET_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace cee {

// A subset of coordinate positions of a ProductSpace (at most 64).
class CoordSet {
 public:
  static constexpr std::size_t kMaxCoordinates = 64;

  constexpr CoordSet() = default;
  constexpr explicit CoordSet(std::uint64_t bits) : bits_(bits) {}
  CoordSet(std::initializer_list<std::size_t> positions) {
    for (std::size_t p : positions) bits_ |= bit(p);
  }

  // {0, ..., n-1}
  static constexpr CoordSet first(std::size_t n) {
    return CoordSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool contains(std::size_t position) const {
    return (bits_ & bit(position)) != 0;
  }
  constexpr bool subset_of(CoordSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  CoordSet with(std::size_t position) const { return CoordSet(bits_ | bit(position)); }

  std::vector<std::size_t> positions() const {
    std::vector<std::size_t> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    }
    return out;
  }

  friend constexpr CoordSet operator|(CoordSet a, CoordSet b) { return CoordSet(a.bits_ | b.bits_); }
  friend constexpr CoordSet operator&(CoordSet a, CoordSet b) { return CoordSet(a.bits_ & b.bits_); }
  // Set difference.
  friend constexpr CoordSet operator-(CoordSet a, CoordSet b) { return CoordSet(a.bits_ & ~b.bits_); }
  friend constexpr auto operator<=>(CoordSet, CoordSet) = default;

 private:
  static constexpr std::uint64_t bit(std::size_t p) { return std::uint64_t{1} << p; }
  std::uint64_t bits_ = 0;
};

// Every subset of `universe`, in increasing order of bit pattern (so the
// empty set comes first and `universe` last).
std::vector<CoordSet> all_subsets(CoordSet universe);

}  // namespace cee

#endif  // CEE_COORD_SET_HPP_
