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

#ifndef CEE_SPACEGEN_HPP_
#define CEE_SPACEGEN_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "cee/causal_space.hpp"
#include "cee/effects.hpp"
#include "cee/measure.hpp"
#include "cee/space.hpp"

namespace cee {

struct GenConfig {
  enum class Mode { kFull, kPartial };

  std::uint64_t seed = 0;
  std::size_t min_coordinates = 1;
  std::size_t max_coordinates = 3;
  std::size_t min_labels = 1;
  std::size_t max_labels = 3;
  Mode mode = Mode::kFull;
  // Raw cell weights are drawn from {0, ..., denominator} before
  // normalization; each cell is zeroed with probability 1/4.
  std::uint32_t denominator = 32;
};

// Throws InvalidArgument when a bound is 0 or min exceeds max.
void check_config(const GenConfig& cfg);

// Deterministic generator state. Uses only integer draws so results are
// identical across standard libraries.
class SpaceRng {
 public:
  explicit SpaceRng(std::uint64_t seed) : engine_(seed) {}
  // Uniform in [lo, hi].
  std::size_t uniform(std::size_t lo, std::size_t hi);
  bool chance(std::size_t numerator, std::size_t denominator);
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// Random rational weights on `support` (outcome indices), normalized; never
// all zero.
Measure random_measure(SpacePtr space, const std::vector<std::size_t>& support,
                       std::uint32_t denominator, SpaceRng& rng);
Measure random_measure(SpacePtr space, std::uint32_t denominator, SpaceRng& rng);

// Coordinates "x0", "x1", ... with labels "0", "1", ... carrying their index
// as numeric value.
SpacePtr random_product_space(const GenConfig& cfg, SpaceRng& rng);

// Valid space with independently drawn P and kernel rows. Full mode carries
// all 2^|T| kernels; partial mode keeps each nonempty subset with
// probability 1/2.
CausalSpace gen_random_space(const GenConfig& cfg);

// K_U(ω,·) = δ_{ω_U} ⊗ μ and P = P_U ⊗ μ, so no outcome has an active U-effect
// on any A ∈ H_{T∖U}. Other kernels are random. U must be nonempty and
// proper; the coordinate count is raised to cover U.
CausalSpace gen_null_effect_space(const GenConfig& cfg, CoordSet u);

// P = ⊗_t p_t and K_S(ω_S,·) = δ_{ω_S} ⊗ ⊗_{t∉S} p_t.
CausalSpace gen_product_space(const GenConfig& cfg);

// Kernels of a discrete causal network where coordinate t draws its label
// from a table indexed by the labels of parents[t] (all parents precede t).
// K_S fixes the S-coordinates and samples the rest in order; P = K_∅.
CausalSpace gen_network_space(SpacePtr space,
                              const std::vector<std::vector<std::size_t>>& parents,
                              std::uint32_t denominator, SpaceRng& rng);

struct MediatedSpace {
  CausalSpace space;
  CoordSet u;  // {x0}
  CoordSet v;  // {x1}
};

// A network with at least three coordinates where x1 depends on x0 and every
// later coordinate depends only on x1 and later ones. After intervening on
// V = {x1}, U = {x0} has no active effect on any A ∈ H_{T∖U}.
MediatedSpace gen_mediated_space(const GenConfig& cfg);

struct DormantExample {
  CausalSpace space;
  CoordSet u;          // {1}
  std::size_t omega;   // (0, 1)
  Event a;             // {ω₁ = ω₂}
};

// Ω₁ = Ω₂ = {0,1}; P uniform on the diagonal; K₁ copies ω₁ into ω₂;
// K₂ = P₁ ⊗ δ_{ω₂}; K₁₂ = δ.
DormantExample gen_dormant_space();

// A random well-formed query on `cs`: subject ω or B, target A or ℱ (at most
// `max_blocks` blocks), conditioning none/G/𝒢, sometimes a V.
EffectQuery gen_random_query(const CausalSpace& cs, SpaceRng& rng,
                             std::size_t max_blocks = 6);

// Literal quantifier expansion of the no/active/dormant definitions, written
// independently of the effect-analysis code paths. Needs the full kernel
// family when `trichotomy`; otherwise returns the active-only verdict.
EffectVerdict oracle_effect_brute(const CausalSpace& cs, const EffectQuery& query,
                                  bool trichotomy = true);

}  // namespace cee

#endif  // CEE_SPACEGEN_HPP_
