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

#ifndef CEE_DOCUMENT_HPP_
#define CEE_DOCUMENT_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "cee/causal_space.hpp"
#include "cee/measure.hpp"
#include "cee/space.hpp"

namespace cee {

// A parsed space document: the causal space plus the named objects declared
// alongside it. The space is not validated on load; call validate().
//
// Layout (JSON):
//   coordinates       [{"id", "labels": [...], "values"?: [...]}]
//   observational     {"l1,l2,...": weight}           sparse; omitted cells are 0
//   kernels           [{"on": [ids], "rows": {"row key": {cell: weight}}}]
//   events            {name: predicate | {"outcomes": [cell, ...]}}
//   partitions        {name: {"coords": [ids]} | {"generators": [event]}
//                             | {"blocks": [[cell, ...], ...]}}
//   random_variables  {name: {"coordinate": id} | {"values": {cell: number}}}
//   measures          {name: {"on": [ids], "weights": {"row key": weight}}}
// Weights and values are strings ("0.09", "1/160", "5e-3") or integers.
struct SpaceDocument {
  CausalSpace space;
  std::map<std::string, Event> events;
  std::map<std::string, Partition> partitions;
  std::map<std::string, RandomVariable> random_variables;
  std::map<std::string, InterventionSpec> measures;
};

// Throws ParseError (with line and column for syntax errors) and the usual
// construction errors for inconsistent content.
SpaceDocument parse_document(std::string_view text);
SpaceDocument load_document(const std::string& path);

// Canonical JSON for coordinates, P and every available kernel except K_∅.
// Cells in outcome order, zero cells omitted, weights in exact form.
std::string emit_document(const CausalSpace& cs);

// Event predicates: "*" (everything), "k=v" (one label), "k=v1|v2" (any of
// several labels) and comma-separated conjunctions of these.
Event parse_event_predicate(const ProductSpace& space, std::string_view text);

// "k=v,..." naming a label for every coordinate in `required`; others default
// to their first label. Returns the outcome index.
std::size_t parse_outcome_assignment(const ProductSpace& space, std::string_view text,
                                     CoordSet required);

// Comma-separated coordinate ids.
CoordSet parse_coordinate_list(const ProductSpace& space, std::string_view text);

// "l1,l2,..." naming one label per coordinate of `s` in declared order.
std::size_t parse_cell(const ProductSpace& space, CoordSet s, std::string_view key);
std::string cell_key(const ProductSpace& space, CoordSet s, std::size_t sub_index);

}  // namespace cee

#endif  // CEE_DOCUMENT_HPP_
