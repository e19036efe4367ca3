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

#include "cee/measure.hpp"

#include <map>

#include "cee/errors.hpp"

namespace cee {

Measure::Measure(SpacePtr space, std::vector<Rational> weights)
    : space_(std::move(space)), weights_(std::move(weights)) {
  if (!space_) throw InvalidArgument("measure without a space");
  if (weights_.size() != space_->size()) {
    throw InvalidArgument("measure has " + std::to_string(weights_.size()) +
                          " weights for " + std::to_string(space_->size()) + " outcomes");
  }
}

Measure Measure::probability(SpacePtr space, std::vector<Rational> weights) {
  Measure m(std::move(space), std::move(weights));
  for (const Rational& w : m.weights_) {
    if (w < 0) throw InvalidArgument("negative weight " + fraction_string(w));
  }
  if (m.total() != 1) {
    throw InvalidArgument("weights sum to " + fraction_string(m.total()) + ", not 1");
  }
  return m;
}

Measure Measure::uniform(SpacePtr space) {
  const std::size_t n = space->size();
  return Measure(std::move(space), std::vector<Rational>(n, Rational(1, n)));
}

Rational Measure::operator()(const Event& event) const {
  if (event.universe_size() != weights_.size()) throw InvalidArgument("event over a different space");
  Rational sum = 0;
  for (std::size_t o = 0; o < weights_.size(); ++o) {
    if (event.contains(o)) sum += weights_[o];
  }
  return sum;
}

Rational Measure::total() const {
  Rational sum = 0;
  for (const Rational& w : weights_) sum += w;
  return sum;
}

bool Measure::is_probability() const {
  for (const Rational& w : weights_) {
    if (w < 0) return false;
  }
  return total() == 1;
}

Measure delta(SpacePtr space, std::size_t outcome) {
  if (outcome >= space->size()) throw InvalidArgument("outcome index out of range");
  std::vector<Rational> w(space->size());
  w[outcome] = 1;
  return Measure(std::move(space), std::move(w));
}

Measure delta(SpacePtr space, const Outcome& outcome) {
  const std::size_t index = space->index_of(outcome);
  return delta(std::move(space), index);
}

std::optional<Measure> condition_on_event(const Measure& p, const Event& g) {
  const Rational mass = p(g);
  if (mass == 0) return std::nullopt;
  std::vector<Rational> w(p.size());
  for (std::size_t o = 0; o < p.size(); ++o) {
    if (g.contains(o)) w[o] = p.weight(o) / mass;
  }
  return Measure(p.space_ptr(), std::move(w));
}

std::optional<Rational> condition_on_algebra(const Measure& p, const Partition& g,
                                             std::size_t outcome, const Event& a) {
  if (g.universe_size() != p.size()) throw InvalidArgument("partition over a different space");
  Rational block_mass = 0;
  Rational joint = 0;
  for (std::size_t o : g.block(g.block_of(outcome))) {
    block_mass += p.weight(o);
    if (a.contains(o)) joint += p.weight(o);
  }
  if (block_mass == 0) return std::nullopt;
  return Rational(joint / block_mass);
}

std::optional<Rational> condition_on_algebra(const Measure& p, const Partition& g,
                                             const Outcome& outcome, const Event& a) {
  return condition_on_algebra(p, g, p.space().index_of(outcome), a);
}

Measure marginal(const Measure& p, CoordSet s) {
  const ProductSpace& space = p.space();
  if (!s.subset_of(space.all())) throw InvalidArgument("coordinate subset outside the space");
  auto small = std::make_shared<const ProductSpace>(space.restricted(s));
  std::vector<Rational> w(small->size());
  for (std::size_t o = 0; o < space.size(); ++o) w[space.project(o, s)] += p.weight(o);
  return Measure(std::move(small), std::move(w));
}

bool mutually_abs_continuous_on(const Measure& p, const Measure& q, const Partition& g) {
  for (std::size_t b = 0; b < g.block_count(); ++b) {
    Rational mp = 0;
    Rational mq = 0;
    for (std::size_t o : g.block(b)) {
      mp += p.weight(o);
      mq += q.weight(o);
    }
    if ((mp == 0) != (mq == 0)) return false;
  }
  return true;
}

bool independent(const Measure& p, const Event& a, const Partition& g) {
  const Rational pa = p(a);
  for (std::size_t b = 0; b < g.block_count(); ++b) {
    Rational pb = 0;
    Rational pab = 0;
    for (std::size_t o : g.block(b)) {
      pb += p.weight(o);
      if (a.contains(o)) pab += p.weight(o);
    }
    if (pab != pa * pb) return false;
  }
  return true;
}

std::optional<bool> cond_independent(const Measure& p, const Event& a, const Partition& g,
                                     const Event& given) {
  auto conditioned = condition_on_event(p, given);
  if (!conditioned) return std::nullopt;
  return independent(*conditioned, a, g);
}

bool cond_independent(const Measure& p, const Event& a, const Partition& g,
                      const Partition& given) {
  for (std::size_t c = 0; c < given.block_count(); ++c) {
    const Event block = given.block_event(c);
    auto conditioned = condition_on_event(p, block);
    if (!conditioned) continue;  // null blocks do not matter almost surely
    if (!independent(*conditioned, a, g)) return false;
  }
  return true;
}

RandomVariable::RandomVariable(SpacePtr space, std::vector<Rational> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (values_.size() != space_->size()) throw InvalidArgument("random variable has the wrong length");
  std::map<Rational, std::size_t> level;
  std::vector<std::size_t> keys(values_.size());
  for (std::size_t o = 0; o < values_.size(); ++o) {
    keys[o] = level.try_emplace(values_[o], level.size()).first->second;
  }
  partition_ = Partition::from_keys(keys);
}

RandomVariable::RandomVariable(SpacePtr space, std::vector<Rational> values, Partition partition)
    : space_(std::move(space)), values_(std::move(values)), partition_(std::move(partition)) {
  if (values_.size() != space_->size() || partition_.universe_size() != space_->size()) {
    throw InvalidArgument("random variable has the wrong length");
  }
  if (!measurable_wrt(partition_)) {
    throw InvalidArgument("random variable is not constant on the blocks of its partition");
  }
}

bool RandomVariable::measurable_wrt(const Partition& g) const {
  if (g.universe_size() != values_.size()) return false;
  for (const auto& block : g.blocks()) {
    for (std::size_t o : block) {
      if (values_[o] != values_[block.front()]) return false;
    }
  }
  return true;
}

RandomVariable coordinate_variable(SpacePtr space, std::size_t position) {
  const Coordinate& c = space->coordinate(position);
  if (!c.values) {
    throw MissingNumericVariable("coordinate '" + c.id + "' has no numeric values");
  }
  std::vector<Rational> values(space->size());
  for (std::size_t o = 0; o < space->size(); ++o) values[o] = (*c.values)[space->label_of(o, position)];
  Partition h = coordinate_subalgebra(*space, CoordSet{position});
  return RandomVariable(std::move(space), std::move(values), std::move(h));
}

std::pair<Rational, Rational> mean_and_variance(const Measure& p, const RandomVariable& x) {
  if (x.values().size() != p.size()) throw InvalidArgument("random variable over a different space");
  Rational mean = 0;
  Rational second = 0;
  for (std::size_t o = 0; o < p.size(); ++o) {
    if (p.weight(o) == 0) continue;
    mean += p.weight(o) * x(o);
    second += p.weight(o) * x(o) * x(o);
  }
  return {mean, Rational(second - mean * mean)};
}

}  // namespace cee
