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

#include "cee/errors.hpp"
#include "cee/scores.hpp"
#include "cee/spacegen.hpp"
#include "test_support.hpp"

namespace cee {
namespace {

using testing::event_of;
using testing::q;

constexpr double kPaperRounding = 5e-5;
constexpr double kSeriesAgreement = 1e-12;

class InsuranceScores : public ::testing::Test {
 protected:
  SpaceDocument doc = testing::insurance();
  const CausalSpace& cs = doc.space;
  const ProductSpace& space = cs.space();
  const CoordSet ins{1};
  const Event big = event_of(space, "pay=1000");
  const Partition pay = coordinate_subalgebra(space, CoordSet{2});
  const RandomVariable& x = doc.random_variables.at("pay");

  InterventionSpec do_ins(const char* label) {
    return delta_intervention(space, ins, space.index_of(Outcome{{0, space.label_index(1, label), 0}}));
  }
};

TEST(ScaleFunctions, Anchors) {
  EXPECT_EQ(scale_f1(Rational(0)), Rational(-1, 2));
  EXPECT_EQ(scale_f1(Rational(1)), Rational(1, 2));
  EXPECT_DOUBLE_EQ(scale_f2(0.5), 0.0);
  EXPECT_NEAR(scale_f2(1.0), 0.5, kSeriesAgreement);
  EXPECT_NEAR(scale_f2(0.0), -0.5, kSeriesAgreement);
  EXPECT_EQ(scale_f1(q("0.015")) - scale_f1(q("0.00625")), q("0.00875"));
}

TEST(ScaleFunctions, F2MatchesSeries) {
  EXPECT_NEAR(scale_f2(0.00625), testing::f2_by_series(0.00625), kSeriesAgreement);
  EXPECT_NEAR(scale_f2(0.00625), -0.4932474, 1e-6);
  for (int i = 0; i <= 64; ++i) {
    const double x = i / 64.0;
    EXPECT_NEAR(scale_f2(x), testing::f2_by_series(x), kSeriesAgreement) << x;
  }
}

TEST(ScaleFunctions, DomainIsEnforced) {
  EXPECT_THROW(scale_f1(Rational(-1, 10)), DomainError);
  EXPECT_THROW(scale_f2(1.5), DomainError);
}

TEST(ScaleFunctions, Validation) {
  EXPECT_TRUE(validate_scale_function(f1()).empty());
  EXPECT_TRUE(validate_scale_function(f2()).empty());
  const ScaleFunction steep("cube", [](double x) { return 4 * std::pow(x - 0.5, 3); });
  EXPECT_TRUE(validate_scale_function(steep).empty());
  const ScaleFunction shifted("shifted", [](double x) { return x - 0.4; });
  EXPECT_FALSE(validate_scale_function(shifted).empty());
  const ScaleFunction wavy("wavy", [](double x) { return x - 0.5 + 0.1 * std::sin(20 * x); });
  EXPECT_FALSE(validate_scale_function(wavy).empty());
}

TEST_F(InsuranceScores, MeanScoresOnTheBigClaim) {
  const EffectScore y1 = mean_effect_score_event(cs, do_ins("Y"), big, f1());
  const EffectScore n1 = mean_effect_score_event(cs, do_ins("N"), big, f1());
  ASSERT_TRUE(y1.exact && n1.exact);
  EXPECT_EQ((*y1.exact)[0], q("-0.00625"));
  EXPECT_EQ((*n1.exact)[0], q("0.00875"));

  const double y2 = mean_effect_score_event(cs, do_ins("Y"), big, f2()).value[0];
  const double n2 = mean_effect_score_event(cs, do_ins("N"), big, f2()).value[0];
  EXPECT_NEAR(y2, -0.00675, kPaperRounding);
  EXPECT_NEAR(n2, 0.00942, kPaperRounding);
  EXPECT_NEAR(y2, testing::f2_by_series(0.0) - testing::f2_by_series(0.00625), kSeriesAgreement);
  EXPECT_NEAR(n2, testing::f2_by_series(0.015) - testing::f2_by_series(0.00625), kSeriesAgreement);
}

TEST_F(InsuranceScores, MaximumScorePicksTheLargerMove) {
  const EffectScore s = max_effect_score_event(cs, ins, Event(space.size(), true), big, f1());
  EXPECT_EQ((*s.exact)[0], q("0.00875"));
  ASSERT_TRUE(s.argmax);
  EXPECT_EQ(space.label_of(*s.argmax, 1), 1u);
  EXPECT_FALSE(s.tied);

  const EffectScore only_y = max_effect_score_event(cs, ins, event_of(space, "ins=Y"), big, f1());
  EXPECT_EQ(*only_y.exact, *mean_effect_score_event(cs, do_ins("Y"), big, f1()).exact);

  const EffectScore full = max_effect_score_event(cs, ins, Event(space.size(), true), Event(space.size(), true), f2());
  EXPECT_EQ(full.value[0], 0.0);
  EXPECT_TRUE(full.tied);
}

TEST_F(InsuranceScores, SubjectMustBeAUnionOfInterventionBlocks) {
  EXPECT_THROW(max_effect_score_event(cs, ins, big, big, f1()), InvalidArgument);
  EXPECT_THROW(max_effect_score_event(cs, ins, Event(space.size()), big, f1()), EmptySubject);
}

TEST_F(InsuranceScores, MeanAndVarianceScore) {
  const EffectScore s = mean_effect_score_algebra(cs, do_ins("Y"), pay, mean_and_variance_diff(), &x);
  ASSERT_EQ(s.exact->size(), 2u);
  EXPECT_EQ((*s.exact)[0], q("8.45"));
  EXPECT_EQ((*s.exact)[1], q("-6244.5975"));
  EXPECT_EQ((*mean_effect_score_algebra(cs, do_ins("Y"), pay, mean_diff(), &x).exact)[0], q("8.45"));
  EXPECT_EQ((*mean_effect_score_algebra(cs, do_ins("Y"), pay, variance_diff(), &x).exact)[0],
            q("-6244.5975"));
}

TEST_F(InsuranceScores, MaximumAlgebraScore) {
  const EffectScore s = max_effect_score_algebra(cs, ins, Event(space.size(), true), pay, mean_diff(), &x);
  EXPECT_EQ((*s.exact)[0], q("8.45"));
  EXPECT_EQ(space.label_of(*s.argmax, 1), 0u);
  const EffectScore n = max_effect_score_algebra(cs, ins, event_of(space, "ins=N"), pay, mean_diff(), &x);
  EXPECT_EQ((*n.exact)[0], q("-6.55"));
}

TEST_F(InsuranceScores, EmptyInterventionScoresZero) {
  const auto none = delta_intervention(space, CoordSet{}, 0);
  EXPECT_EQ((*mean_effect_score_event(cs, none, big, f1()).exact)[0], 0);
  const EffectScore v = mean_effect_score_algebra(cs, none, pay, mean_and_variance_diff(), &x);
  EXPECT_EQ(*v.exact, (std::vector<Rational>{0, 0}));
}

TEST_F(InsuranceScores, FunctionalRequirements) {
  EXPECT_THROW(mean_effect_score_algebra(cs, do_ins("Y"), pay, mean_diff(), nullptr),
               MissingNumericVariable);
  EXPECT_THROW(mean_effect_score_algebra(cs, do_ins("Y"), Partition::trivial(space.size()), mean_diff(), &x),
               InvalidArgument);
  EXPECT_NO_THROW(mean_effect_score_algebra(cs, do_ins("Y"), pay, total_variation(), nullptr));
  EXPECT_THROW(difference_functional("median"), InvalidArgument);
  for (const auto& d : builtin_difference_functionals()) {
    const auto zero = d(cs.observational(), cs.observational(), pay, &x);
    EXPECT_EQ(zero.size(), d.dimension());
    for (const auto& z : zero) EXPECT_EQ(z, 0) << d.id();
  }
}

TEST_F(InsuranceScores, TotalVariationOnPay) {
  // Pay masses under do(ins=Y): (0, 1, 0) against (0.48375, 0.51, 0.00625).
  const EffectScore s = mean_effect_score_algebra(cs, do_ins("Y"), pay, total_variation());
  EXPECT_EQ((*s.exact)[0], q("0.49"));
}

TEST(Ate, ToySpaceRecoversOneHalf) {
  const SpaceDocument doc = testing::ate_toy();
  EXPECT_EQ(ate(doc.space, 0, doc.random_variables.at("y")), Rational(1, 2));
}

TEST(Ate, IdenticalArmsGiveZero) {
  const SpaceDocument toy = testing::ate_toy();
  const CausalSpace& cs = toy.space;
  // Both rows of K_W carry the same Y-marginal.
  std::vector<Measure> rows;
  for (std::size_t w = 0; w < 2; ++w) {
    std::vector<Rational> weights(4);
    weights[cs.space().index_of(Outcome{{w, 0}})] = Rational(2, 5);
    weights[cs.space().index_of(Outcome{{w, 1}})] = Rational(3, 5);
    rows.emplace_back(cs.space_ptr(), weights);
  }
  const CausalSpace flat(cs.observational(), {CausalKernel(cs.space_ptr(), CoordSet{0}, rows)});
  EXPECT_EQ(ate(flat, 0, toy.random_variables.at("y")), 0);
}

TEST(Ate, NonBinaryTreatmentIsRejected) {
  const SpaceDocument doc = testing::insurance();
  EXPECT_THROW(ate(doc.space, 0, doc.random_variables.at("pay")), NonBinaryTreatment);
  EXPECT_THROW(ate(doc.space, 1, doc.random_variables.at("pay")), NonBinaryTreatment);
}

}  // namespace
}  // namespace cee
