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

#include <gtest/gtest.h>

#include "cee/causal_space.hpp"
#include "cee/spacegen.hpp"
#include "suites.hpp"
#include "test_support.hpp"

namespace cee {
namespace {

using testing::small_config;
using testing::sub_space;
using testing::unions_of;

constexpr std::uint64_t kSeeds = 150;

GenConfig config(std::uint64_t seed, GenConfig::Mode mode) {
  GenConfig cfg = small_config(seed);
  cfg.mode = mode;
  return cfg;
}

TEST(CausalSpaceProperties, EmptyInterventionIsTheIdentity) {
  for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
    const CausalSpace cs = gen_random_space(config(seed, GenConfig::Mode::kPartial));
    EXPECT_EQ(intervention_measure(cs, delta_intervention(cs.space(), CoordSet{}, 0)), cs.observational());
  }
}

TEST(CausalSpaceProperties, InterventionMeasureAgreesWithQOnTheTargetAlgebra) {
  for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
    const CausalSpace cs = gen_random_space(config(seed, GenConfig::Mode::kFull));
    const ProductSpace& space = cs.space();
    SpaceRng rng(seed + 17);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << space.dimension()); ++bits) {
      const CoordSet u(bits);
      const InterventionSpec spec{u, random_measure(sub_space(space, u), 10, rng)};
      const Measure after = intervention_measure(cs, spec);
      const std::vector<Rational> oracle = testing::mixture(cs, u, spec.q);
      for (std::size_t o = 0; o < space.size(); ++o) EXPECT_EQ(after.weight(o), oracle[o]) << seed;
      const Partition h_u = coordinate_subalgebra(space, u);
      if (h_u.block_count() > 9) continue;
      for (const Event& b : unions_of(h_u)) {
        Rational q_b = 0;
        for (std::size_t r = 0; r < space.subset_size(u); ++r) {
          if (b.contains(space.splice(0, u, r))) q_b += spec.q.weight(r);
        }
        EXPECT_EQ(after(b), q_b) << seed;
      }
    }
  }
}

TEST(CausalSpaceProperties, IntervenedKernelsAreValid) {
  for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
    const CausalSpace cs = gen_random_space(config(seed, GenConfig::Mode::kFull));
    const ProductSpace& space = cs.space();
    SpaceRng rng(seed + 29);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << space.dimension()); ++bits) {
      const CoordSet u(bits);
      const InterventionSpec spec{u, random_measure(sub_space(space, u), 10, rng)};
      const CausalSpace after = intervene(cs, spec);
      EXPECT_TRUE(validate(after).empty()) << seed;
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << space.dimension()); ++s) {
        const CausalKernel k = intervention_kernel(cs, spec, CoordSet(s));
        EXPECT_TRUE(validate(CausalSpace(after.observational(), {k})).empty()) << seed;
      }
    }
  }
}

TEST(CausalSpaceProperties, SequentialDeltaInterventions) {
  const testing::SuiteResult r = testing::sequential_identity_suite(50000, 100);
  EXPECT_TRUE(r.ok()) << r.first_failure;
  EXPECT_EQ(r.cases, 100u);
}

TEST(CausalSpaceProperties, MarginalizationRoundTrip) {
  for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
    const auto mode = seed % 2 ? GenConfig::Mode::kPartial : GenConfig::Mode::kFull;
    const CausalSpace cs = gen_random_space(config(seed, mode));
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << cs.space().dimension()); ++bits) {
      const CausalSpace small = marginalize(cs, CoordSet(bits));
      EXPECT_TRUE(validate(small).empty()) << seed;
      EXPECT_TRUE(is_marginalization_of(small, cs)) << seed;
      if (mode == GenConfig::Mode::kFull) {
        EXPECT_EQ(small.kernel_subsets().size(), std::size_t{1} << CoordSet(bits).size());
      }
    }
    EXPECT_TRUE(same_on_common_kernels(marginalize(cs, cs.space().all()), cs));
  }
}

TEST(CausalSpaceProperties, MarginalActiveVerdictsAgree) {
  const testing::SuiteResult r = testing::marginal_coherence_suite(60000, 40);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

}  // namespace
}  // namespace cee
