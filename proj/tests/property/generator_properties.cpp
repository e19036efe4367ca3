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

#include "cee/document.hpp"
#include "cee/spacegen.hpp"
#include "suites.hpp"

namespace cee {
namespace {

TEST(GeneratorProperties, TenThousandSpacesAreValid) {
  std::size_t invalid = 0;
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    GenConfig cfg = testing::small_config(seed);
    cfg.mode = seed % 2 ? GenConfig::Mode::kPartial : GenConfig::Mode::kFull;
    if (!validate(gen_random_space(cfg)).empty()) ++invalid;
  }
  EXPECT_EQ(invalid, 0u);
}

TEST(GeneratorProperties, DocumentsRoundTrip) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    GenConfig cfg = testing::small_config(seed);
    cfg.mode = seed % 2 ? GenConfig::Mode::kPartial : GenConfig::Mode::kFull;
    const CausalSpace cs = gen_random_space(cfg);
    const std::string text = emit_document(cs);
    const SpaceDocument back = parse_document(text);
    EXPECT_EQ(back.space.observational(), cs.observational()) << seed;
    EXPECT_TRUE(same_on_common_kernels(back.space, cs)) << seed;
    EXPECT_EQ(back.space.kernel_subsets(), cs.kernel_subsets()) << seed;
    EXPECT_EQ(emit_document(back.space), text) << seed;
  }
}

TEST(GeneratorProperties, TamperedDocumentsAreRejected) {
  const testing::SuiteResult r = testing::tamper_suite(90000, 60);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

}  // namespace
}  // namespace cee
