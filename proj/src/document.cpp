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

#include "cee/document.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cee/errors.hpp"

namespace cee {
namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

constexpr std::string_view kReserved = ",=|*:";

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(sep, start);
    out.push_back(text.substr(start, end == std::string_view::npos ? text.npos : end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

void check_name(const std::string& path, const std::string& name) {
  if (name.empty()) fail(path, "empty name");
  for (char c : name) {
    if (kReserved.find(c) != kReserved.npos || std::isspace(static_cast<unsigned char>(c))) {
      fail(path, "'" + name + "' contains a reserved character (one of \",=|*:\" or space)");
    }
  }
}

const json& member(const json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing \"") + key + "\"");
  return *it;
}

void expect(bool ok, const std::string& path, const std::string& what) {
  if (!ok) fail(path, "expected " + what);
}

Rational number(const json& j, const std::string& path) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
      fail(path, e.what());
    }
  }
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Rational(std::to_string(j.get<std::uint64_t>()))
                                  : Rational(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_number_float()) fail(path, "write non-integer numbers as strings to keep them exact");
  fail(path, "expected a number");
}

CoordSet id_list(const ProductSpace& space, const json& j, const std::string& path) {
  expect(j.is_array(), path, "an array of coordinate ids");
  CoordSet s;
  for (std::size_t i = 0; i < j.size(); ++i) {
    expect(j[i].is_string(), path + "[" + std::to_string(i) + "]", "a coordinate id");
    s = s.with(space.position_of(j[i].get<std::string>()));
  }
  return s;
}

std::vector<Rational> sparse_weights(const ProductSpace& space, CoordSet s, const json& j,
                                     const std::string& path) {
  expect(j.is_object(), path, "an object of cell weights");
  std::vector<Rational> w(space.subset_size(s));
  for (const auto& [key, value] : j.items()) {
    const std::string where = path + "." + key;
    std::size_t cell;
    try {
      cell = parse_cell(space, s, key);
    } catch (const Error& e) {
      fail(where, e.what());
    }
    w[cell] = number(value, where);
  }
  return w;
}

SpacePtr parse_coordinates(const json& j) {
  expect(j.is_array() && !j.empty(), "coordinates", "a nonempty array");
  std::vector<Coordinate> coords;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string path = "coordinates[" + std::to_string(i) + "]";
    const json& c = j[i];
    expect(c.is_object(), path, "an object");
    Coordinate coord;
    const json& id = member(c, "id", path);
    expect(id.is_string(), path + ".id", "a string");
    coord.id = id.get<std::string>();
    check_name(path + ".id", coord.id);
    const json& labels = member(c, "labels", path);
    expect(labels.is_array() && !labels.empty(), path + ".labels", "a nonempty array");
    for (const json& l : labels) {
      std::string label = l.is_string() ? l.get<std::string>() : l.dump();
      check_name(path + ".labels", label);
      coord.labels.push_back(std::move(label));
    }
    if (auto v = c.find("values"); v != c.end()) {
      expect(v->is_array(), path + ".values", "an array");
      std::vector<Rational> values;
      for (std::size_t k = 0; k < v->size(); ++k) {
        values.push_back(number((*v)[k], path + ".values[" + std::to_string(k) + "]"));
      }
      coord.values = std::move(values);
    }
    coords.push_back(std::move(coord));
  }
  try {
    return make_space(std::move(coords));
  } catch (const InvalidArgument& e) {
    fail("coordinates", e.what());
  }
}

Event parse_event_value(const ProductSpace& space, const json& j, const std::string& path) {
  try {
    if (j.is_string()) return parse_event_predicate(space, j.get<std::string>());
    expect(j.is_object(), path, "a predicate string or {\"outcomes\": [...]}");
    const json& cells = member(j, "outcomes", path);
    expect(cells.is_array(), path + ".outcomes", "an array of cells");
    Event e(space.size());
    for (const json& c : cells) {
      expect(c.is_string(), path + ".outcomes", "cell strings");
      e.insert(parse_cell(space, space.all(), c.get<std::string>()));
    }
    return e;
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

Partition parse_partition_value(const ProductSpace& space, const json& j, const std::string& path) {
  expect(j.is_object(), path, "an object with coords, generators or blocks");
  try {
    if (auto c = j.find("coords"); c != j.end()) {
      return coordinate_subalgebra(space, id_list(space, *c, path + ".coords"));
    }
    if (auto g = j.find("generators"); g != j.end()) {
      expect(g->is_array(), path + ".generators", "an array of events");
      std::vector<Event> gens;
      for (std::size_t i = 0; i < g->size(); ++i) {
        gens.push_back(parse_event_value(space, (*g)[i], path + ".generators[" + std::to_string(i) + "]"));
      }
      return generated_algebra(space, gens);
    }
    if (auto b = j.find("blocks"); b != j.end()) {
      expect(b->is_array(), path + ".blocks", "an array of cell arrays");
      std::vector<std::vector<std::size_t>> blocks;
      for (const json& block : *b) {
        expect(block.is_array(), path + ".blocks", "arrays of cells");
        std::vector<std::size_t> members;
        for (const json& c : block) {
          expect(c.is_string(), path + ".blocks", "cell strings");
          members.push_back(parse_cell(space, space.all(), c.get<std::string>()));
        }
        blocks.push_back(std::move(members));
      }
      return Partition::from_blocks(space.size(), blocks);
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    fail(path, e.what());
  }
  fail(path, "expected coords, generators or blocks");
}

RandomVariable parse_variable(const SpacePtr& space, const json& j, const std::string& path) {
  expect(j.is_object(), path, "an object with coordinate or values");
  try {
    if (auto c = j.find("coordinate"); c != j.end()) {
      expect(c->is_string(), path + ".coordinate", "a coordinate id");
      return coordinate_variable(space, space->position_of(c->get<std::string>()));
    }
    const json& values = member(j, "values", path);
    return RandomVariable(space, sparse_weights(*space, space->all(), values, path + ".values"));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

// Line and column (1-based) of a byte offset.
std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

std::size_t parse_cell(const ProductSpace& space, CoordSet s, std::string_view key) {
  const auto positions = s.positions();
  const auto parts = s.empty() && trim(key).empty() ? std::vector<std::string_view>{}
                                                    : split(key, ',');
  if (parts.size() != positions.size()) {
    throw InvalidArgument("cell '" + std::string(key) + "' needs " +
                          std::to_string(positions.size()) + " labels " + space.format_set(s));
  }
  std::size_t index = 0;
  for (std::size_t k = 0; k < positions.size(); ++k) {
    index = index * space.label_count(positions[k]) +
            space.label_index(positions[k], trim(parts[k]));
  }
  return index;
}

std::string cell_key(const ProductSpace& space, CoordSet s, std::size_t sub_index) {
  return space.format_sub(s, sub_index);
}

Event parse_event_predicate(const ProductSpace& space, std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty event predicate");
  Event e(space.size(), true);
  if (text == "*") return e;
  for (std::string_view clause : split(text, ',')) {
    clause = trim(clause);
    const std::size_t eq = clause.find('=');
    if (eq == clause.npos) {
      throw ParseError("event clause '" + std::string(clause) + "' is not of the form id=label");
    }
    const std::size_t pos = space.position_of(trim(clause.substr(0, eq)));
    std::vector<bool> allowed(space.label_count(pos), false);
    for (std::string_view label : split(clause.substr(eq + 1), '|')) {
      allowed[space.label_index(pos, trim(label))] = true;
    }
    for (std::size_t o = 0; o < space.size(); ++o) {
      if (!allowed[space.label_of(o, pos)]) e.erase(o);
    }
  }
  return e;
}

std::size_t parse_outcome_assignment(const ProductSpace& space, std::string_view text,
                                     CoordSet required) {
  Outcome o{std::vector<std::size_t>(space.dimension(), 0)};
  CoordSet given;
  text = trim(text);
  if (!text.empty()) {
    for (std::string_view clause : split(text, ',')) {
      clause = trim(clause);
      const std::size_t eq = clause.find('=');
      if (eq == clause.npos) {
        throw ParseError("outcome clause '" + std::string(clause) + "' is not of the form id=label");
      }
      const std::size_t pos = space.position_of(trim(clause.substr(0, eq)));
      if (given.contains(pos)) {
        throw ParseError("coordinate '" + space.coordinate(pos).id + "' assigned twice");
      }
      given = given.with(pos);
      o.labels[pos] = space.label_index(pos, trim(clause.substr(eq + 1)));
    }
  }
  if (!required.subset_of(given)) {
    throw InvalidArgument("outcome must assign " + space.format_set(required - given));
  }
  return space.index_of(o);
}

CoordSet parse_coordinate_list(const ProductSpace& space, std::string_view text) {
  CoordSet s;
  text = trim(text);
  if (text.empty()) return s;
  for (std::string_view id : split(text, ',')) s = s.with(space.position_of(trim(id)));
  return s;
}

SpaceDocument parse_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = locate(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string what = e.what();
    if (auto p = what.find("syntax error"); p != what.npos) what = what.substr(p);
    throw ParseError(what, line, column);
  }
  expect(doc.is_object(), "document", "a JSON object");

  SpacePtr space = parse_coordinates(member(doc, "coordinates", "document"));
  Measure p(space, sparse_weights(*space, space->all(), member(doc, "observational", "document"),
                                  "observational"));

  std::vector<CausalKernel> kernels;
  if (auto ks = doc.find("kernels"); ks != doc.end()) {
    expect(ks->is_array(), "kernels", "an array");
    for (std::size_t i = 0; i < ks->size(); ++i) {
      const std::string path = "kernels[" + std::to_string(i) + "]";
      const json& k = (*ks)[i];
      expect(k.is_object(), path, "an object");
      CoordSet on;
      try {
        on = id_list(*space, member(k, "on", path), path + ".on");
      } catch (const UnknownCoordinate& e) {
        fail(path + ".on", e.what());
      }
      const json& rows = member(k, "rows", path);
      expect(rows.is_object(), path + ".rows", "an object keyed by row");
      std::vector<Measure> measures(space->subset_size(on), Measure(space, std::vector<Rational>(space->size())));
      for (const auto& [key, cells] : rows.items()) {
        const std::string where = path + ".rows." + (key.empty() ? std::string("\"\"") : key);
        std::size_t r;
        try {
          r = parse_cell(*space, on, key);
        } catch (const Error& e) {
          fail(where, e.what());
        }
        measures[r] = Measure(space, sparse_weights(*space, space->all(), cells, where));
      }
      kernels.emplace_back(space, on, std::move(measures));
    }
  }

  std::optional<CausalSpace> cs;
  try {
    cs.emplace(std::move(p), std::move(kernels));
  } catch (const InvalidArgument& e) {
    fail("kernels", e.what());
  }
  SpaceDocument out{std::move(*cs), {}, {}, {}, {}};

  if (auto es = doc.find("events"); es != doc.end()) {
    expect(es->is_object(), "events", "an object");
    for (const auto& [name, value] : es->items()) {
      check_name("events", name);
      out.events.emplace(name, parse_event_value(*space, value, "events." + name));
    }
  }
  if (auto ps = doc.find("partitions"); ps != doc.end()) {
    expect(ps->is_object(), "partitions", "an object");
    for (const auto& [name, value] : ps->items()) {
      check_name("partitions", name);
      out.partitions.emplace(name, parse_partition_value(*space, value, "partitions." + name));
    }
  }
  if (auto rs = doc.find("random_variables"); rs != doc.end()) {
    expect(rs->is_object(), "random_variables", "an object");
    for (const auto& [name, value] : rs->items()) {
      check_name("random_variables", name);
      out.random_variables.emplace(name, parse_variable(space, value, "random_variables." + name));
    }
  }
  if (auto ms = doc.find("measures"); ms != doc.end()) {
    expect(ms->is_object(), "measures", "an object");
    for (const auto& [name, value] : ms->items()) {
      check_name("measures", name);
      const std::string path = "measures." + name;
      expect(value.is_object(), path, "an object with on and weights");
      CoordSet on;
      try {
        on = id_list(*space, member(value, "on", path), path + ".on");
      } catch (const UnknownCoordinate& e) {
        fail(path + ".on", e.what());
      }
      auto small = std::make_shared<const ProductSpace>(space->restricted(on));
      Measure q(small, sparse_weights(*space, on, member(value, "weights", path), path + ".weights"));
      if (!q.is_probability()) fail(path, "weights must be nonnegative and sum to 1");
      out.measures.emplace(name, InterventionSpec{on, std::move(q)});
    }
  }
  return out;
}

SpaceDocument load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

std::string emit_document(const CausalSpace& cs) {
  const ProductSpace& space = cs.space();
  auto sparse = [&](const Measure& m) {
    ordered_json cells = ordered_json::object();
    for (std::size_t o = 0; o < m.size(); ++o) {
      if (m.weight(o) != 0) cells[cell_key(space, space.all(), o)] = exact_string(m.weight(o));
    }
    return cells;
  };

  ordered_json doc;
  ordered_json coords = ordered_json::array();
  for (const Coordinate& c : space.coordinates()) {
    ordered_json jc;
    jc["id"] = c.id;
    jc["labels"] = c.labels;
    if (c.values) {
      ordered_json values = ordered_json::array();
      for (const Rational& v : *c.values) values.push_back(exact_string(v));
      jc["values"] = std::move(values);
    }
    coords.push_back(std::move(jc));
  }
  doc["coordinates"] = std::move(coords);
  doc["observational"] = sparse(cs.observational());

  ordered_json kernels = ordered_json::array();
  for (CoordSet s : cs.kernel_subsets()) {
    if (s.empty()) continue;
    const CausalKernel& k = cs.kernel(s);
    ordered_json jk;
    ordered_json on = ordered_json::array();
    for (std::size_t p : s.positions()) on.push_back(space.coordinate(p).id);
    jk["on"] = std::move(on);
    ordered_json rows = ordered_json::object();
    for (std::size_t r = 0; r < k.row_count(); ++r) rows[cell_key(space, s, r)] = sparse(k.row(r));
    jk["rows"] = std::move(rows);
    kernels.push_back(std::move(jk));
  }
  doc["kernels"] = std::move(kernels);
  return doc.dump(2) + "\n";
}

}  // namespace cee
