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

#ifndef CEE_SPACE_HPP_
#define CEE_SPACE_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cee/coord_set.hpp"
#include "cee/rational.hpp"

namespace cee {

struct Coordinate {
  std::string id;
  std::vector<std::string> labels;
  // Optional numeric value per label, same length as `labels`.
  std::optional<std::vector<Rational>> values;

  friend bool operator==(const Coordinate&, const Coordinate&) = default;
};

// One label index per coordinate, in coordinate order.
struct Outcome {
  std::vector<std::size_t> labels;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

// Finite product outcome space Ω = ×_t Ω_t.
//
// Outcomes are numbered 0..size()-1 in mixed radix with the first declared
// coordinate most significant, so iterating indices walks the cartesian
// product in declared order. The same numbering restricted to a subset S
// numbers Ω_S; `project` maps an outcome index to its Ω_S index.
class ProductSpace {
 public:
  // Throws InvalidArgument when a coordinate has no labels, labels or ids
  // repeat, values have the wrong length, or the outcome count overflows.
  explicit ProductSpace(std::vector<Coordinate> coordinates);

  std::size_t dimension() const { return coordinates_.size(); }
  std::size_t size() const { return size_; }
  CoordSet all() const { return CoordSet::first(dimension()); }

  const Coordinate& coordinate(std::size_t position) const { return coordinates_[position]; }
  const std::vector<Coordinate>& coordinates() const { return coordinates_; }
  std::size_t label_count(std::size_t position) const { return coordinates_[position].labels.size(); }

  // Throws UnknownCoordinate.
  std::size_t position_of(std::string_view id) const;
  CoordSet subset(std::span<const std::string> ids) const;
  // Throws UnknownLabel.
  std::size_t label_index(std::size_t position, std::string_view label) const;

  // Label index of coordinate `position` in outcome `outcome`.
  std::size_t label_of(std::size_t outcome, std::size_t position) const {
    return (outcome / stride_[position]) % label_count(position);
  }

  // |Ω_S|.
  std::size_t subset_size(CoordSet s) const;
  // Index of ω_S in Ω_S.
  std::size_t project(std::size_t outcome, CoordSet s) const;
  // Outcome obtained from `outcome` by replacing its S-coordinates with the
  // sub-outcome `sub_index` of Ω_S.
  std::size_t splice(std::size_t outcome, CoordSet s, std::size_t sub_index) const;
  // Copies the S-coordinates of `source` into `outcome`.
  std::size_t splice_from(std::size_t outcome, CoordSet s, std::size_t source) const;

  std::size_t index_of(const Outcome& outcome) const;
  Outcome outcome(std::size_t index) const;

  // The space ×_{t∈S} Ω_t, coordinates kept in declared order. Outcome
  // index i of the result equals the Ω_S index i used by `project`.
  ProductSpace restricted(CoordSet s) const;

  // "N,Y,0": the outcome's labels joined by commas.
  std::string format(std::size_t outcome) const;
  // Labels of the Ω_S sub-outcome, comma separated ("" for S = ∅).
  std::string format_sub(CoordSet s, std::size_t sub_index) const;
  // "{dan,ins}"
  std::string format_set(CoordSet s) const;

  friend bool operator==(const ProductSpace& a, const ProductSpace& b) {
    return a.coordinates_ == b.coordinates_;
  }

 private:
  std::vector<Coordinate> coordinates_;
  std::vector<std::size_t> stride_;
  std::size_t size_ = 1;
};

using SpacePtr = std::shared_ptr<const ProductSpace>;

inline SpacePtr make_space(std::vector<Coordinate> coordinates) {
  return std::make_shared<const ProductSpace>(std::move(coordinates));
}

// A subset of Ω as a membership vector over outcome indices.
class Event {
 public:
  Event() = default;
  explicit Event(std::size_t outcome_count, bool full = false)
      : members_(outcome_count, full) {}
  static Event of(std::size_t outcome_count, std::span<const std::size_t> outcomes);

  std::size_t universe_size() const { return members_.size(); }
  bool contains(std::size_t outcome) const { return members_[outcome]; }
  void insert(std::size_t outcome) { members_[outcome] = true; }
  void erase(std::size_t outcome) { members_[outcome] = false; }

  std::size_t count() const;
  bool is_empty() const { return count() == 0; }
  bool is_full() const { return count() == members_.size(); }
  std::vector<std::size_t> members() const;
  bool subset_of(const Event& other) const;

  Event operator~() const;
  friend Event operator&(const Event& a, const Event& b);
  friend Event operator|(const Event& a, const Event& b);
  friend bool operator==(const Event&, const Event&) = default;

 private:
  std::vector<bool> members_;
};

// {ω : ω_position ∈ labels}
Event coordinate_event(const ProductSpace& space, std::size_t position,
                       std::span<const std::size_t> labels);
// {ω : ω_S = sub-outcome}
Event cylinder_event(const ProductSpace& space, CoordSet s, std::size_t sub_index);
// A × Ω^∖ for an event A of `space.restricted(s)`.
Event lift_event(const ProductSpace& space, CoordSet s, const Event& small);

// A σ-algebra on a finite Ω, as the partition of Ω into its atoms.
//
// Blocks are sorted by their least outcome index and each block lists its
// outcomes in increasing order, so two partitions describe the same
// σ-algebra iff they compare equal.
class Partition {
 public:
  Partition() = default;
  // Outcomes with equal keys share a block.
  static Partition from_keys(std::span<const std::size_t> keys);
  // Validates disjointness and coverage; throws InvalidArgument.
  static Partition from_blocks(std::size_t outcome_count,
                               std::vector<std::vector<std::size_t>> blocks);
  static Partition trivial(std::size_t outcome_count);
  static Partition discrete(std::size_t outcome_count);

  std::size_t universe_size() const { return block_of_.size(); }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<std::size_t>& block(std::size_t i) const { return blocks_[i]; }
  const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
  std::size_t block_of(std::size_t outcome) const { return block_of_[outcome]; }
  Event block_event(std::size_t i) const;

  // Whether `event` belongs to the σ-algebra, i.e. is a union of blocks.
  bool measurable(const Event& event) const;
  // Every block of *this lies inside a block of `coarser`.
  bool refines(const Partition& coarser) const;

  // The union of the blocks whose bit is set in `mask`.
  Event block_union(std::uint64_t mask) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::size_t> block_of_;
};

// H_S: outcomes agreeing on all coordinates of S share a block.
Partition coordinate_subalgebra(const ProductSpace& space, CoordSet s);

// Coarsest partition in which every generator is a union of blocks.
Partition generated_algebra(const ProductSpace& space, std::span<const Event> generators);

inline constexpr std::size_t kDefaultBlockCap = 16;

// All 2^blocks unions of blocks, starting with ∅ and ending with Ω.
// Throws BlockCountExceeded above `cap` blocks.
std::vector<Event> all_block_unions(const Partition& partition,
                                    std::size_t cap = kDefaultBlockCap);

}  // namespace cee

#endif  // CEE_SPACE_HPP_
