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

#include <algorithm>

#include "cee/measure.hpp"
#include "cee/spacegen.hpp"
#include "suites.hpp"
#include "test_support.hpp"

namespace cee {
namespace {

using testing::random_coarsening;
using testing::random_union;
using testing::small_config;
using testing::unions_of;

constexpr std::uint64_t kSeeds = 300;

struct Drawn {
  Measure p;
  SpaceRng rng;
  const ProductSpace& space() const { return p.space(); }
};

Drawn draw(std::uint64_t seed) {
  SpaceRng rng(seed);
  SpacePtr space = random_product_space(small_config(seed), rng);
  Measure p = random_measure(space, 12, rng);
  return {std::move(p), std::move(rng)};
}

TEST(MeasureProperties, GeneratedAlgebraIsCanonical) {
  for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
    Drawn d = draw(seed);
    const ProductSpace& space = d.space();
    std::vector<Event> gens;
    for (std::size_t i = 0, n = d.rng.uniform(0, 3); i < n; ++i) {
      gens.push_back(random_union(Partition::discrete(space.size()), d.rng));
    }
    const Partition once = generated_algebra(space, gens);
    std::vector<Event> blocks;
    for (std::size_t b = 0; b < once.block_count(); ++b) blocks.push_back(once.block_event(b));
    EXPECT_EQ(generated_algebra(space, blocks), once) << seed;
    std::vector<Event> shuffled = gens;
    std::reverse(shuffled.begin(), shuffled.end());
    if (shuffled.size() > 1) std::swap(shuffled.front(), shuffled.back());
    EXPECT_EQ(generated_algebra(space, shuffled), once) << seed;
    for (const Event& g : gens) EXPECT_TRUE(once.measurable(g)) << seed;
  }
}

TEST(MeasureProperties, LargerCoordinateSetsRefine) {
  for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
    const Drawn d = draw(seed);
    const ProductSpace& space = d.space();
    const std::uint64_t top = std::uint64_t{1} << space.dimension();
    for (std::uint64_t s = 0; s < top; ++s) {
      for (std::uint64_t t = s; t < top; t = (t + 1) | s) {
        const Partition coarse = coordinate_subalgebra(space, CoordSet(s));
        const Partition fine = coordinate_subalgebra(space, CoordSet(t));
        EXPECT_TRUE(fine.refines(coarse)) << seed;
        for (std::size_t b = 0; b < fine.block_count(); ++b) {
          const std::vector<std::size_t>& block = fine.block(b);
          for (std::size_t o : block) EXPECT_EQ(coarse.block_of(o), coarse.block_of(block.front()));
        }
      }
    }
  }
}

TEST(MeasureProperties, ConditioningComposes) {
  for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
    Drawn d = draw(seed);
    const Measure& p = d.p;
    const std::size_t n = d.space().size();
    EXPECT_EQ(*condition_on_event(p, Event(n, true)), p);
    EXPECT_FALSE(condition_on_event(p, Event(n)).has_value());
    const Event g = random_union(Partition::discrete(n), d.rng);
    const Event inner = g & random_union(Partition::discrete(n), d.rng);
    const auto pg = condition_on_event(p, g);
    if (!pg || p(inner) == 0) continue;
    const auto twice = condition_on_event(*pg, inner);
    ASSERT_TRUE(twice.has_value());
    EXPECT_EQ(*twice, *condition_on_event(p, inner)) << seed;
  }
}

TEST(MeasureProperties, TotalProbability) {
  for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
    Drawn d = draw(seed);
    const Measure& p = d.p;
    const std::size_t n = d.space().size();
    const Partition g = random_coarsening(Partition::discrete(n), 1 + d.rng.uniform(0, 3), d.rng);
    for (int i = 0; i < 4; ++i) {
      const Event a = random_union(Partition::discrete(n), d.rng);
      Rational total = 0;
      for (std::size_t b = 0; b < g.block_count(); ++b) {
        const Event block = g.block_event(b);
        if (p(block) == 0) {
          EXPECT_FALSE(condition_on_algebra(p, g, g.block(b).front(), a).has_value());
          continue;
        }
        total += p(block) * *condition_on_algebra(p, g, g.block(b).front(), a);
      }
      EXPECT_EQ(total, p(a)) << seed;
    }
  }
}

TEST(MeasureProperties, MarginalsCompose) {
  for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
    const Drawn d = draw(seed);
    const ProductSpace& space = d.space();
    const std::uint64_t top = std::uint64_t{1} << space.dimension();
    for (std::uint64_t s = 0; s < top; ++s) {
      const Measure outer = marginal(d.p, CoordSet(s));
      const std::vector<std::size_t> kept = CoordSet(s).positions();
      for (std::uint64_t t = s;; t = (t - 1) & s) {
        // Express T ⊆ S in the coordinates of the S-marginal.
        CoordSet local;
        for (std::size_t i = 0; i < kept.size(); ++i) {
          if (CoordSet(t).contains(kept[i])) local = local | CoordSet{i};
        }
        const Measure twice = marginal(outer, local);
        const Measure direct = marginal(d.p, CoordSet(t));
        ASSERT_EQ(twice.size(), direct.size());
        for (std::size_t i = 0; i < direct.size(); ++i) EXPECT_EQ(twice.weight(i), direct.weight(i)) << seed;
        if (t == 0) break;
      }
    }
  }
}

TEST(MeasureProperties, IndependenceMatchesBruteForce) {
  std::size_t independent_seen = 0;
  for (std::uint64_t seed = 0; seed < kSeeds; ++seed) {
    Drawn d = draw(seed);
    const ProductSpace& space = d.space();
    if (space.dimension() < 2) continue;
    const Partition g = coordinate_subalgebra(space, CoordSet{0});
    if (g.block_count() > 4) continue;
    // Events of the other coordinates are independent of x0 under a product measure.
    const Measure m0 = marginal(d.p, CoordSet{0});
    const Measure rest = marginal(d.p, space.all() - CoordSet{0});
    std::vector<Rational> product(space.size());
    for (std::size_t o = 0; o < space.size(); ++o) {
      product[o] = m0.weight(space.project(o, CoordSet{0})) * rest.weight(space.project(o, space.all() - CoordSet{0}));
    }
    const Measure prod(d.p.space_ptr(), product);
    const Event full(space.size(), true);
    for (int i = 0; i < 6; ++i) {
      const Event a = random_union(Partition::discrete(space.size()), d.rng);
      EXPECT_EQ(independent(d.p, a, g), testing::brute_independent(
                                             std::vector<Rational>(d.p.weights().begin(), d.p.weights().end()),
                                             a, g, full))
          << seed;
      const Event b = random_union(coordinate_subalgebra(space, space.all() - CoordSet{0}), d.rng);
      EXPECT_TRUE(independent(prod, b, g)) << seed;
      EXPECT_EQ(independent(prod, a, g), testing::brute_independent(product, a, g, full)) << seed;
      independent_seen += independent(d.p, a, g);
    }
  }
  EXPECT_GT(independent_seen, 0u);
}

}  // namespace
}  // namespace cee
