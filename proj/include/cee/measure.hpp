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

#ifndef CEE_MEASURE_HPP_
#define CEE_MEASURE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cee/rational.hpp"
#include "cee/space.hpp"

namespace cee {

// Exact weights over the outcomes of a ProductSpace.
//
// The plain constructor only checks the shape, so that malformed kernel rows
// can still be represented and reported by validation. Use `probability` to
// enforce nonnegativity and unit mass.
class Measure {
 public:
  Measure(SpacePtr space, std::vector<Rational> weights);
  // Throws InvalidArgument unless all weights are >= 0 and sum to exactly 1.
  static Measure probability(SpacePtr space, std::vector<Rational> weights);
  static Measure uniform(SpacePtr space);

  const ProductSpace& space() const { return *space_; }
  const SpacePtr& space_ptr() const { return space_; }
  std::size_t size() const { return weights_.size(); }

  const Rational& weight(std::size_t outcome) const { return weights_[outcome]; }
  std::span<const Rational> weights() const { return weights_; }

  Rational operator()(const Event& event) const;
  Rational total() const;
  bool is_probability() const;

  friend bool operator==(const Measure& a, const Measure& b) {
    return *a.space_ == *b.space_ && a.weights_ == b.weights_;
  }

 private:
  SpacePtr space_;
  std::vector<Rational> weights_;
};

Measure delta(SpacePtr space, const Outcome& outcome);
Measure delta(SpacePtr space, std::size_t outcome);

// P_G, or nullopt when P(G) = 0.
std::optional<Measure> condition_on_event(const Measure& p, const Event& g);

// P_𝒢(ω̃, A): P conditioned on the block of ω̃. nullopt when that block is
// P-null.
std::optional<Rational> condition_on_algebra(const Measure& p, const Partition& g,
                                             std::size_t outcome, const Event& a);
std::optional<Rational> condition_on_algebra(const Measure& p, const Partition& g,
                                             const Outcome& outcome, const Event& a);

// Pushforward to Ω_S, a measure on p.space().restricted(s).
Measure marginal(const Measure& p, CoordSet s);

// Every block of 𝒢 is null under both measures or positive under both.
bool mutually_abs_continuous_on(const Measure& p, const Measure& q, const Partition& g);

// A ⟂ 𝒢 under P, checked block by block (additivity extends it to unions).
bool independent(const Measure& p, const Event& a, const Partition& g);

// A ⟂ 𝒢 under P_G; nullopt when P(G) = 0.
std::optional<bool> cond_independent(const Measure& p, const Event& a,
                                     const Partition& g, const Event& given);

// A ⟂ 𝒢 given the σ-algebra `given`: on every P-positive block of `given`,
// P_given(A∩B) = P_given(A)·P_given(B) for each block B of 𝒢.
bool cond_independent(const Measure& p, const Event& a, const Partition& g,
                      const Partition& given);

// A real-valued function on Ω, constant on the blocks of its partition.
class RandomVariable {
 public:
  // The partition is the one generated by the level sets of `values`.
  RandomVariable(SpacePtr space, std::vector<Rational> values);
  // Throws InvalidArgument if `values` is not constant on the blocks.
  RandomVariable(SpacePtr space, std::vector<Rational> values, Partition partition);

  const ProductSpace& space() const { return *space_; }
  const Rational& operator()(std::size_t outcome) const { return values_[outcome]; }
  std::span<const Rational> values() const { return values_; }
  const Partition& partition() const { return partition_; }
  // Whether X is 𝒢-measurable: constant on every block of `g`.
  bool measurable_wrt(const Partition& g) const;

 private:
  SpacePtr space_;
  std::vector<Rational> values_;
  Partition partition_;
};

// The numeric value of one coordinate. Throws MissingNumericVariable when the
// coordinate has no values.
RandomVariable coordinate_variable(SpacePtr space, std::size_t position);

// (E[X], E[X²] − E[X]²), population variance.
std::pair<Rational, Rational> mean_and_variance(const Measure& p, const RandomVariable& x);

}  // namespace cee

#endif  // CEE_MEASURE_HPP_
