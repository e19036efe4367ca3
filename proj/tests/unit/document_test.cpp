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
#include "cee/errors.hpp"
#include "test_support.hpp"

namespace cee {
namespace {

constexpr const char* kTiny = R"({
  "coordinates": [{"id": "a", "labels": ["0", "1"]}, {"id": "b", "labels": ["x", "y"]}],
  "observational": {"0,x": "1/2", "1,y": "0.5"},
  "kernels": [{"on": ["a"], "rows": {"0": {"0,x": 1}, "1": {"1,y": "1"}}}]
})";

TEST(Document, ParsesTheTinySpace) {
  const SpaceDocument doc = parse_document(kTiny);
  const ProductSpace& s = doc.space.space();
  EXPECT_EQ(s.size(), 4u);
  EXPECT_EQ(doc.space.observational().weight(s.index_of(Outcome{{1, 1}})), Rational(1, 2));
  EXPECT_EQ(doc.space.observational().weight(s.index_of(Outcome{{0, 1}})), 0);
  EXPECT_TRUE(validate(doc.space).empty());
}

TEST(Document, SyntaxErrorsCarryLineAndColumn) {
  try {
    parse_document("{\n  \"coordinates\": [,]\n}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 19u);
  }
}

TEST(Document, MalformedWeightsAreParseErrors) {
  std::string text = kTiny;
  text.replace(text.find("1/2"), 3, "1/x");
  EXPECT_THROW(parse_document(text), ParseError);
  text = kTiny;
  text.replace(text.find("\"0.5\""), 5, "0.5");
  EXPECT_THROW(parse_document(text), ParseError);
}

TEST(Document, UnknownLabelsAndCoordinatesAreReported) {
  std::string text = kTiny;
  text.replace(text.find("\"1,y\": \"0.5\""), 4, "\"1,z");
  EXPECT_THROW(parse_document(text), ParseError);
  text = kTiny;
  text.replace(text.find("[\"a\"]"), 5, "[\"c\"]");
  EXPECT_THROW(parse_document(text), ParseError);
}

TEST(Document, ReservedCharactersInNames) {
  std::string text = kTiny;
  text.replace(text.find("\"x\", \"y\""), 8, "\"x,\", \"y\"");
  EXPECT_THROW(parse_document(text), ParseError);
}

TEST(Document, EmitIsCanonicalAndRoundTrips) {
  const SpaceDocument doc = testing::insurance();
  const std::string once = emit_document(doc.space);
  const SpaceDocument again = parse_document(once);
  EXPECT_EQ(emit_document(again.space), once);
  EXPECT_TRUE(same_on_common_kernels(doc.space, again.space));
  EXPECT_NE(once.find("\"H,N,1000\": \"0.00125\""), std::string::npos);
}

TEST(Document, NamedObjects) {
  const SpaceDocument doc = testing::insurance();
  const ProductSpace& s = doc.space.space();
  EXPECT_EQ(doc.events.at("big_claim"), parse_event_predicate(s, "pay=1000"));
  EXPECT_EQ(doc.partitions.at("pay"), coordinate_subalgebra(s, CoordSet{2}));
  EXPECT_EQ(doc.measures.at("insured").target, CoordSet{1});
  EXPECT_EQ(doc.random_variables.at("pay")(s.index_of(Outcome{{0, 0, 2}})), 1000);
}

TEST(Document, Predicates) {
  const SpaceDocument doc = testing::insurance();
  const ProductSpace& s = doc.space.space();
  EXPECT_TRUE(parse_event_predicate(s, "*").is_full());
  EXPECT_EQ(parse_event_predicate(s, "dan=N|L").count(), 12u);
  EXPECT_EQ(parse_event_predicate(s, "dan=N|L,ins=Y").count(), 6u);
  EXPECT_EQ(parse_event_predicate(s, "dan=N,ins=Y,pay=0").count(), 1u);
  EXPECT_THROW(parse_event_predicate(s, "dan"), ParseError);
  EXPECT_THROW(parse_event_predicate(s, "dan=Q"), UnknownLabel);
  EXPECT_THROW(parse_event_predicate(s, "risk=N"), UnknownCoordinate);
}

TEST(Document, OutcomeAssignments) {
  const SpaceDocument doc = testing::insurance();
  const ProductSpace& s = doc.space.space();
  EXPECT_EQ(parse_outcome_assignment(s, "ins=N", CoordSet{1}), s.index_of(Outcome{{0, 1, 0}}));
  EXPECT_THROW(parse_outcome_assignment(s, "dan=H", CoordSet{1}), InvalidArgument);
  EXPECT_THROW(parse_outcome_assignment(s, "ins=N,ins=Y", CoordSet{1}), ParseError);
}

TEST(Document, GeneratorAndBlockPartitions) {
  const SpaceDocument doc = parse_document(R"({
    "coordinates": [{"id": "a", "labels": ["0", "1", "2"]}],
    "observational": {"0": "1"},
    "partitions": {
      "g": {"generators": ["a=0"]},
      "b": {"blocks": [["0", "2"], ["1"]]}
    },
    "events": {"e": {"outcomes": ["1"]}},
    "random_variables": {"v": {"values": {"1": "2.5"}}}
  })");
  EXPECT_EQ(doc.partitions.at("g").block_count(), 2u);
  EXPECT_EQ(doc.partitions.at("b").block_of(2), doc.partitions.at("b").block_of(0));
  EXPECT_EQ(doc.events.at("e").count(), 1u);
  EXPECT_EQ(doc.random_variables.at("v")(1), Rational(5, 2));
}

}  // namespace
}  // namespace cee
