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

#include "cee/space.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "cee/errors.hpp"

namespace cee {

std::vector<CoordSet> all_subsets(CoordSet universe) {
  std::vector<CoordSet> out;
  const std::uint64_t u = universe.bits();
  std::uint64_t s = 0;
  // Enumerates submasks of u in increasing numeric order.
  while (true) {
    out.emplace_back(s);
    if (s == u) break;
    s = (s - u) & u;
  }
  return out;
}

ProductSpace::ProductSpace(std::vector<Coordinate> coordinates)
    : coordinates_(std::move(coordinates)) {
  if (coordinates_.size() > CoordSet::kMaxCoordinates) {
    throw InvalidArgument("too many coordinates");
  }
  std::set<std::string> ids;
  for (const Coordinate& c : coordinates_) {
    if (c.id.empty()) throw InvalidArgument("coordinate with empty id");
    if (!ids.insert(c.id).second) throw InvalidArgument("duplicate coordinate id '" + c.id + "'");
    if (c.labels.empty()) throw InvalidArgument("coordinate '" + c.id + "' has no labels");
    std::set<std::string> labels(c.labels.begin(), c.labels.end());
    if (labels.size() != c.labels.size()) {
      throw InvalidArgument("coordinate '" + c.id + "' repeats a label");
    }
    if (c.values && c.values->size() != c.labels.size()) {
      throw InvalidArgument("coordinate '" + c.id + "' has " +
                            std::to_string(c.values->size()) + " values for " +
                            std::to_string(c.labels.size()) + " labels");
    }
  }
  stride_.assign(coordinates_.size(), 1);
  size_ = 1;
  for (std::size_t i = coordinates_.size(); i-- > 0;) {
    stride_[i] = size_;
    const std::size_t n = coordinates_[i].labels.size();
    if (size_ > std::numeric_limits<std::size_t>::max() / n) {
      throw InvalidArgument("outcome space too large");
    }
    size_ *= n;
  }
}

std::size_t ProductSpace::position_of(std::string_view id) const {
  for (std::size_t i = 0; i < coordinates_.size(); ++i) {
    if (coordinates_[i].id == id) return i;
  }
  throw UnknownCoordinate(std::string(id));
}

CoordSet ProductSpace::subset(std::span<const std::string> ids) const {
  CoordSet s;
  for (const std::string& id : ids) s = s.with(position_of(id));
  return s;
}

std::size_t ProductSpace::label_index(std::size_t position, std::string_view label) const {
  const auto& labels = coordinates_[position].labels;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return i;
  }
  throw UnknownLabel("coordinate '" + coordinates_[position].id + "' has no label '" +
                     std::string(label) + "'");
}

std::size_t ProductSpace::subset_size(CoordSet s) const {
  std::size_t n = 1;
  for (std::size_t p : s.positions()) n *= label_count(p);
  return n;
}

std::size_t ProductSpace::project(std::size_t outcome, CoordSet s) const {
  std::size_t index = 0;
  for (std::size_t p : s.positions()) index = index * label_count(p) + label_of(outcome, p);
  return index;
}

std::size_t ProductSpace::splice(std::size_t outcome, CoordSet s, std::size_t sub_index) const {
  const auto positions = s.positions();
  for (std::size_t k = positions.size(); k-- > 0;) {
    const std::size_t p = positions[k];
    const std::size_t n = label_count(p);
    const std::size_t label = sub_index % n;
    sub_index /= n;
    outcome = outcome - label_of(outcome, p) * stride_[p] + label * stride_[p];
  }
  return outcome;
}

std::size_t ProductSpace::splice_from(std::size_t outcome, CoordSet s, std::size_t source) const {
  for (std::size_t p : s.positions()) {
    outcome = outcome - label_of(outcome, p) * stride_[p] + label_of(source, p) * stride_[p];
  }
  return outcome;
}

std::size_t ProductSpace::index_of(const Outcome& outcome) const {
  if (outcome.labels.size() != dimension()) {
    throw InvalidArgument("outcome has " + std::to_string(outcome.labels.size()) +
                          " labels, space has " + std::to_string(dimension()) +
                          " coordinates");
  }
  std::size_t index = 0;
  for (std::size_t p = 0; p < dimension(); ++p) {
    if (outcome.labels[p] >= label_count(p)) {
      throw InvalidArgument("label index out of range for coordinate '" +
                            coordinates_[p].id + "'");
    }
    index += outcome.labels[p] * stride_[p];
  }
  return index;
}

Outcome ProductSpace::outcome(std::size_t index) const {
  Outcome o;
  o.labels.reserve(dimension());
  for (std::size_t p = 0; p < dimension(); ++p) o.labels.push_back(label_of(index, p));
  return o;
}

ProductSpace ProductSpace::restricted(CoordSet s) const {
  std::vector<Coordinate> kept;
  for (std::size_t p : s.positions()) kept.push_back(coordinates_[p]);
  return ProductSpace(std::move(kept));
}

std::string ProductSpace::format(std::size_t outcome) const {
  return format_sub(all(), project(outcome, all()));
}

std::string ProductSpace::format_sub(CoordSet s, std::size_t sub_index) const {
  const auto positions = s.positions();
  std::vector<std::size_t> labels(positions.size());
  for (std::size_t k = positions.size(); k-- > 0;) {
    const std::size_t n = label_count(positions[k]);
    labels[k] = sub_index % n;
    sub_index /= n;
  }
  std::string out;
  for (std::size_t k = 0; k < positions.size(); ++k) {
    if (k > 0) out += ',';
    out += coordinates_[positions[k]].labels[labels[k]];
  }
  return out;
}

std::string ProductSpace::format_set(CoordSet s) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t p : s.positions()) {
    if (!first) out += ',';
    out += p < dimension() ? coordinates_[p].id : "#" + std::to_string(p);
    first = false;
  }
  return out + "}";
}

Event Event::of(std::size_t outcome_count, std::span<const std::size_t> outcomes) {
  Event e(outcome_count);
  for (std::size_t o : outcomes) {
    if (o >= outcome_count) throw InvalidArgument("outcome index out of range");
    e.insert(o);
  }
  return e;
}

std::size_t Event::count() const {
  return static_cast<std::size_t>(std::count(members_.begin(), members_.end(), true));
}

std::vector<std::size_t> Event::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i]) out.push_back(i);
  }
  return out;
}

bool Event::subset_of(const Event& other) const {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] && !other.members_[i]) return false;
  }
  return true;
}

Event Event::operator~() const {
  Event e(members_.size());
  for (std::size_t i = 0; i < members_.size(); ++i) e.members_[i] = !members_[i];
  return e;
}

Event operator&(const Event& a, const Event& b) {
  if (a.universe_size() != b.universe_size()) throw InvalidArgument("events over different spaces");
  Event e(a.universe_size());
  for (std::size_t i = 0; i < a.members_.size(); ++i) e.members_[i] = a.members_[i] && b.members_[i];
  return e;
}

Event operator|(const Event& a, const Event& b) {
  if (a.universe_size() != b.universe_size()) throw InvalidArgument("events over different spaces");
  Event e(a.universe_size());
  for (std::size_t i = 0; i < a.members_.size(); ++i) e.members_[i] = a.members_[i] || b.members_[i];
  return e;
}

Event coordinate_event(const ProductSpace& space, std::size_t position,
                       std::span<const std::size_t> labels) {
  Event e(space.size());
  for (std::size_t o = 0; o < space.size(); ++o) {
    if (std::find(labels.begin(), labels.end(), space.label_of(o, position)) != labels.end()) {
      e.insert(o);
    }
  }
  return e;
}

Event cylinder_event(const ProductSpace& space, CoordSet s, std::size_t sub_index) {
  Event e(space.size());
  for (std::size_t o = 0; o < space.size(); ++o) {
    if (space.project(o, s) == sub_index) e.insert(o);
  }
  return e;
}

Event lift_event(const ProductSpace& space, CoordSet s, const Event& small) {
  if (small.universe_size() != space.subset_size(s)) {
    throw InvalidArgument("event does not live on the restricted space");
  }
  Event e(space.size());
  for (std::size_t o = 0; o < space.size(); ++o) {
    if (small.contains(space.project(o, s))) e.insert(o);
  }
  return e;
}

Partition Partition::from_keys(std::span<const std::size_t> keys) {
  Partition p;
  p.block_of_.resize(keys.size());
  std::map<std::size_t, std::size_t> block_for_key;
  // Outcomes are visited in increasing order, so blocks are created in order
  // of their least outcome.
  for (std::size_t o = 0; o < keys.size(); ++o) {
    auto [it, inserted] = block_for_key.try_emplace(keys[o], p.blocks_.size());
    if (inserted) p.blocks_.emplace_back();
    p.blocks_[it->second].push_back(o);
    p.block_of_[o] = it->second;
  }
  return p;
}

Partition Partition::from_blocks(std::size_t outcome_count,
                                 std::vector<std::vector<std::size_t>> blocks) {
  std::vector<std::size_t> keys(outcome_count, std::numeric_limits<std::size_t>::max());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw InvalidArgument("partition has an empty block");
    for (std::size_t o : blocks[b]) {
      if (o >= outcome_count) throw InvalidArgument("partition block has an out-of-range outcome");
      if (keys[o] != std::numeric_limits<std::size_t>::max()) {
        throw InvalidArgument("partition blocks overlap");
      }
      keys[o] = b;
    }
  }
  for (std::size_t k : keys) {
    if (k == std::numeric_limits<std::size_t>::max()) {
      throw InvalidArgument("partition blocks do not cover the space");
    }
  }
  return from_keys(keys);
}

Partition Partition::trivial(std::size_t outcome_count) {
  std::vector<std::size_t> keys(outcome_count, 0);
  return from_keys(keys);
}

Partition Partition::discrete(std::size_t outcome_count) {
  std::vector<std::size_t> keys(outcome_count);
  for (std::size_t i = 0; i < outcome_count; ++i) keys[i] = i;
  return from_keys(keys);
}

Event Partition::block_event(std::size_t i) const {
  return Event::of(universe_size(), blocks_[i]);
}

bool Partition::measurable(const Event& event) const {
  if (event.universe_size() != universe_size()) throw InvalidArgument("event over a different space");
  for (const auto& b : blocks_) {
    const bool in = event.contains(b.front());
    for (std::size_t o : b) {
      if (event.contains(o) != in) return false;
    }
  }
  return true;
}

bool Partition::refines(const Partition& coarser) const {
  if (coarser.universe_size() != universe_size()) return false;
  for (const auto& b : blocks_) {
    const std::size_t target = coarser.block_of(b.front());
    for (std::size_t o : b) {
      if (coarser.block_of(o) != target) return false;
    }
  }
  return true;
}

Event Partition::block_union(std::uint64_t mask) const {
  Event e(universe_size());
  for (std::size_t b = 0; b < blocks_.size() && b < 64; ++b) {
    if ((mask >> b) & 1U) {
      for (std::size_t o : blocks_[b]) e.insert(o);
    }
  }
  return e;
}

Partition coordinate_subalgebra(const ProductSpace& space, CoordSet s) {
  if (!s.subset_of(space.all())) throw InvalidArgument("coordinate subset outside the space");
  std::vector<std::size_t> keys(space.size());
  for (std::size_t o = 0; o < space.size(); ++o) keys[o] = space.project(o, s);
  return Partition::from_keys(keys);
}

Partition generated_algebra(const ProductSpace& space, std::span<const Event> generators) {
  // Signature of an outcome: its membership bit in each generator.
  std::vector<std::vector<bool>> signature(space.size());
  for (const Event& g : generators) {
    if (g.universe_size() != space.size()) throw InvalidArgument("generator over a different space");
    for (std::size_t o = 0; o < space.size(); ++o) signature[o].push_back(g.contains(o));
  }
  std::map<std::vector<bool>, std::size_t> ids;
  std::vector<std::size_t> keys(space.size());
  for (std::size_t o = 0; o < space.size(); ++o) {
    keys[o] = ids.try_emplace(signature[o], ids.size()).first->second;
  }
  return Partition::from_keys(keys);
}

std::vector<Event> all_block_unions(const Partition& partition, std::size_t cap) {
  const std::size_t n = partition.block_count();
  if (n > cap || n >= 63) throw BlockCountExceeded(n, cap);
  std::vector<Event> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    out.push_back(partition.block_union(mask));
  }
  return out;
}

}  // namespace cee
