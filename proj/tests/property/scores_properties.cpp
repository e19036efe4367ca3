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

#include <cmath>

#include "cee/effects.hpp"
#include "cee/scores.hpp"
#include "cee/spacegen.hpp"
#include "suites.hpp"
#include "test_support.hpp"

namespace cee {
namespace {

using testing::random_union;
using testing::small_config;
using testing::sub_space;

constexpr std::uint64_t kSeeds = 150;
// Equality of f2 scores computed along different paths.
constexpr double kFloatEquality = 1e-9;

struct Drawn {
  CausalSpace cs;
  SpaceRng rng;
  CoordSet u;
};

Drawn draw(std::uint64_t seed) {
  CausalSpace cs = gen_random_space(small_config(seed));
  SpaceRng rng(seed * 13 + 3);
  const CoordSet u(rng.uniform(1, (std::size_t{1} << cs.space().dimension()) - 1));
  return {std::move(cs), std::move(rng), u};
}

double f2_score(const CausalSpace& cs, const InterventionSpec& spec, const Event& a) {
  return mean_effect_score_event(cs, spec, a, f2()).value[0];
}

TEST(ScoreProperties, F1IsTheExactShift) {
  for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
    Drawn d = draw(seed);
    const ProductSpace& space = d.cs.space();
    const InterventionSpec spec{d.u, random_measure(sub_space(space, d.u), 10, d.rng)};
    const Measure after = intervention_measure(d.cs, spec);
    for (int i = 0; i < 8; ++i) {
      const Event a = random_union(Partition::discrete(space.size()), d.rng);
      const EffectScore s = mean_effect_score_event(d.cs, spec, a, f1());
      ASSERT_TRUE(s.exact.has_value());
      EXPECT_EQ((*s.exact)[0], after(a) - d.cs.observational()(a)) << seed;
      EXPECT_DOUBLE_EQ(s.value[0], (*s.exact)[0].get_d());
    }
  }
}

TEST(ScoreProperties, SwappingTheMeasuresNegates) {
  for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
    Drawn d = draw(seed);
    const ProductSpace& space = d.cs.space();
    const auto d0 = delta_intervention(space, d.u, d.rng.uniform(0, space.size() - 1));
    const auto d1 = delta_intervention(space, d.u, d.rng.uniform(0, space.size() - 1));
    // In the δ₀-world the observational measure is P^{δ₀}, and re-intervening
    // with δ₁ yields P^{δ₁}; the δ₁-world is the mirror image.
    const CausalSpace world0 = intervene(d.cs, d0);
    const CausalSpace world1 = intervene(d.cs, d1);
    for (int i = 0; i < 8; ++i) {
      const Event a = random_union(Partition::discrete(space.size()), d.rng);
      EXPECT_EQ((*mean_effect_score_event(world0, d1, a, f1()).exact)[0],
                -(*mean_effect_score_event(world1, d0, a, f1()).exact)[0])
          << seed;
      EXPECT_NEAR(f2_score(world0, d1, a), -f2_score(world1, d0, a), kFloatEquality) << seed;
    }
  }
}

TEST(ScoreProperties, ComplementNegates) {
  for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
    Drawn d = draw(seed);
    const ProductSpace& space = d.cs.space();
    const InterventionSpec spec{d.u, random_measure(sub_space(space, d.u), 10, d.rng)};
    for (int i = 0; i < 8; ++i) {
      const Event a = random_union(Partition::discrete(space.size()), d.rng);
      EXPECT_EQ((*mean_effect_score_event(d.cs, spec, a, f1()).exact)[0],
                -(*mean_effect_score_event(d.cs, spec, ~a, f1()).exact)[0]);
      EXPECT_NEAR(f2_score(d.cs, spec, a), -f2_score(d.cs, spec, ~a), kFloatEquality) << seed;
    }
  }
}

TEST(ScoreProperties, ZeroEffectCoherence) {
  std::size_t zero_seen = 0;
  for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
    Drawn d = draw(seed);
    const ProductSpace& space = d.cs.space();
    for (int i = 0; i < 8; ++i) {
      const Event a = random_union(Partition::discrete(space.size()), d.rng);
      const InterventionSpec spec{d.u, random_measure(sub_space(space, d.u), 10, d.rng)};
      bool any_active = false;
      for (std::size_t r = 0; r < space.subset_size(d.u); ++r) {
        if (spec.q.weight(r) != 0) any_active = any_active || active_effect(d.cs, d.u, space.splice(0, d.u, r), a);
      }
      if (!any_active) {
        ++zero_seen;
        EXPECT_EQ((*mean_effect_score_event(d.cs, spec, a, f1()).exact)[0], 0) << seed;
        EXPECT_EQ(f2_score(d.cs, spec, a), 0.0) << seed;
      }
      // Converse for δ-measures and strictly increasing f.
      const std::size_t omega = d.rng.uniform(0, space.size() - 1);
      const auto delta = delta_intervention(space, d.u, omega);
      const bool zero = f2_score(d.cs, delta, a) == 0.0;
      EXPECT_EQ(zero, !active_effect(d.cs, d.u, omega, a)) << seed;
    }
  }
  EXPECT_GT(zero_seen, 0u);
}

TEST(ScoreProperties, MaximumDominatesEveryDelta) {
  for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
    Drawn d = draw(seed);
    const ProductSpace& space = d.cs.space();
    const Event b = random_union(coordinate_subalgebra(space, d.u), d.rng);
    if (b.is_empty()) continue;
    const Event a = random_union(Partition::discrete(space.size()), d.rng);
    for (const ScaleFunction& f : {f1(), f2()}) {
      const EffectScore best = max_effect_score_event(d.cs, d.u, b, a, f);
      ASSERT_TRUE(best.argmax.has_value());
      EXPECT_TRUE(b.contains(*best.argmax));
      for (std::size_t o : b.members()) {
        const EffectScore one = mean_effect_score_event(d.cs, delta_intervention(space, d.u, o), a, f);
        EXPECT_GE(best.norm() + kFloatEquality, one.norm()) << seed;
      }
    }
    const Partition target = testing::random_coarsening(Partition::discrete(space.size()), 4, d.rng);
    const EffectScore best = max_effect_score_algebra(d.cs, d.u, b, target, total_variation());
    for (std::size_t o : b.members()) {
      const EffectScore one =
          mean_effect_score_algebra(d.cs, delta_intervention(space, d.u, o), target, total_variation());
      EXPECT_GE(*best.exact, *one.exact) << seed;
    }
  }
}

TEST(ScoreProperties, IncreasingScalesPreserveTheSign) {
  for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
    Drawn d = draw(seed);
    const ProductSpace& space = d.cs.space();
    const InterventionSpec spec{d.u, random_measure(sub_space(space, d.u), 10, d.rng)};
    for (int i = 0; i < 8; ++i) {
      const Event a = random_union(Partition::discrete(space.size()), d.rng);
      const int shift = sgn(intervention_measure(d.cs, spec)(a) - d.cs.observational()(a));
      const double s = f2_score(d.cs, spec, a);
      EXPECT_EQ((s > 0) - (s < 0), shift) << seed;
    }
  }
}

TEST(ScoreProperties, DifferenceFunctionalsVanishOnEqualMeasures) {
  for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
    Drawn d = draw(seed);
    const ProductSpace& space = d.cs.space();
    const Partition target = coordinate_subalgebra(space, CoordSet{0});
    const RandomVariable x = coordinate_variable(d.cs.space_ptr(), 0);
    const Measure m = random_measure(d.cs.space_ptr(), 10, d.rng);
    for (const DifferenceFunctional& f : builtin_difference_functionals()) {
      const auto zero = f(m, m, target, &x);
      ASSERT_EQ(zero.size(), f.dimension());
      for (const Rational& z : zero) EXPECT_EQ(z, 0) << f.id();
      const auto forward = f(m, d.cs.observational(), target, &x);
      const auto backward = f(d.cs.observational(), m, target, &x);
      for (std::size_t i = 0; i < forward.size(); ++i) {
        if (f.id() == "tv") {
          EXPECT_EQ(forward[i], backward[i]);
        } else {
          EXPECT_EQ(forward[i], -backward[i]);
        }
      }
    }
  }
}

TEST(ScoreProperties, MeanDifferenceRecoversTheTreatmentEffect) {
  // Binary treatment x0 feeding an outcome x1 through a random network.
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    SpaceRng rng(seed);
    const SpacePtr space =
        make_space({Coordinate{"w", {"0", "1"}, std::vector<Rational>{0, 1}},
                    Coordinate{"y", {"0", "1", "2"}, std::vector<Rational>{0, 1, 5}}});
    const CausalSpace cs = gen_network_space(space, {{}, {0}}, 12, rng);
    const RandomVariable y = coordinate_variable(space, 1);
    const Rational effect = ate(cs, 0, y);
    Rational expected[2];
    for (std::size_t w = 0; w < 2; ++w) {
      expected[w] = mean_and_variance(cs.kernel(CoordSet{0}).row(w), y).first;
    }
    EXPECT_EQ(effect, expected[1] - expected[0]) << seed;
    ++checked;
  }
  EXPECT_EQ(checked, 60u);
}

}  // namespace
}  // namespace cee
