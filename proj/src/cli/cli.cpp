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

#include "cee/cli.hpp"

#include <cstdlib>
#include <optional>

#include <CLI11.hpp>

#include "cee/causal_space.hpp"
#include "cee/document.hpp"
#include "cee/effects.hpp"
#include "cee/errors.hpp"
#include "cee/scores.hpp"
#include "cee/spacegen.hpp"
#include "report.hpp"

namespace cee::cli {
namespace {

// Signals an early exit with a specific code after output was written.
struct Exit {
  int code;
};

struct Options {
  std::string file;
  std::string format = "text";
  std::string u;
  std::optional<std::string> v;
  std::optional<std::string> omega;
  std::optional<std::string> subject;
  std::optional<std::string> event;
  std::optional<std::string> given;
  std::optional<std::string> sigma;
  std::optional<std::string> q;
  std::string scale = "f1";
  std::optional<std::string> diff;
  std::optional<std::string> rv;
  bool max = false;
  bool active = false;
  std::string coords;
  bool require_full = false;
  std::uint64_t seed = 0;
  std::string kind = "random";
  std::size_t max_coordinates = 3;
  std::size_t max_labels = 3;
  std::string mode = "full";
};

std::size_t block_cap() {
  const char* env = std::getenv("CEE_BLOCK_CAP");
  if (env == nullptr || *env == '\0') return kDefaultBlockCap;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v == 0 || v > 62) {
    throw InvalidArgument(std::string("CEE_BLOCK_CAP must be an integer in [1, 62], got '") + env + "'");
  }
  return v;
}

void emit(const Options& o, const Report& report, std::ostream& out) {
  out << (o.format == "json" ? render_json(report) : render_text(report));
}

Report violations_report(const CausalSpace& cs, const std::vector<Violation>& vs) {
  Report list = Report::array();
  for (const Violation& v : vs) {
    Report item;
    item["kind"] = to_string(v.kind);
    if (v.kernel) item["kernel"] = cs.space().format_set(*v.kernel);
    if (v.row && v.kernel) item["row"] = cs.space().format_sub(*v.kernel, *v.row);
    if (v.outcome) item["outcome"] = cs.space().format(*v.outcome);
    item["value"] = rational_field(v.value);
    item["message"] = v.message;
    list.push_back(std::move(item));
  }
  return list;
}

// Analysis commands refuse spaces that break the axioms.
void require_valid(const Options& o, const CausalSpace& cs, std::ostream& err) {
  const auto vs = validate(cs);
  if (vs.empty()) return;
  Report r;
  r["error"] = "space violates the causal-space axioms";
  r["violations"] = violations_report(cs, vs);
  err << (o.format == "json" ? render_json(r) : render_text(r));
  throw Exit{kInvalidSpace};
}

Event resolve_event(const SpaceDocument& doc, const std::string& text) {
  if (auto it = doc.events.find(text); it != doc.events.end()) return it->second;
  return parse_event_predicate(doc.space.space(), text);
}

// A partition name, "coords:<ids>", or nullopt if neither.
std::optional<Partition> try_partition(const SpaceDocument& doc, const std::string& text) {
  if (auto it = doc.partitions.find(text); it != doc.partitions.end()) return it->second;
  if (text.rfind("coords:", 0) == 0) {
    return coordinate_subalgebra(doc.space.space(),
                                 parse_coordinate_list(doc.space.space(), text.substr(7)));
  }
  return std::nullopt;
}

Partition resolve_partition(const SpaceDocument& doc, const std::string& text) {
  if (auto p = try_partition(doc, text)) return *p;
  throw InvalidArgument("unknown partition '" + text + "' (use a declared name or coords:<ids>)");
}

InterventionSpec resolve_q(const SpaceDocument& doc, CoordSet u, const std::string& text) {
  const ProductSpace& space = doc.space.space();
  if (text == "uniform") return uniform_intervention(space, u);
  if (text.rfind("delta:", 0) == 0) {
    return delta_intervention(space, u, parse_outcome_assignment(space, text.substr(6), u));
  }
  if (auto it = doc.measures.find(text); it != doc.measures.end()) {
    if (it->second.target != u) {
      throw InvalidArgument("measure '" + text + "' lives on " + space.format_set(it->second.target) +
                            ", not on U = " + space.format_set(u));
    }
    return it->second;
  }
  throw InvalidArgument("unknown intervention measure '" + text +
                        "' (use delta:k=v, uniform or a declared name)");
}

std::string describe_q(const ProductSpace& space, const InterventionSpec& spec) {
  std::string out;
  const ProductSpace& small = spec.q.space();
  for (std::size_t i = 0; i < spec.q.size(); ++i) {
    if (spec.q.weight(i) == 0) continue;
    if (!out.empty()) out += ", ";
    out += "(" + small.format(i) + "): " + exact_string(spec.q.weight(i));
  }
  return space.format_set(spec.target) + " <- {" + out + "}";
}

Report query_echo(const Options& o, const ProductSpace& space, CoordSet u) {
  Report q;
  q["U"] = space.format_set(u);
  if (o.v) q["V"] = space.format_set(parse_coordinate_list(space, *o.v));
  if (o.omega) q["omega"] = *o.omega;
  if (o.subject) q["subject"] = *o.subject;
  if (o.event) q["event"] = *o.event;
  if (o.sigma) q["sigma"] = *o.sigma;
  if (o.given) q["given"] = *o.given;
  return q;
}

int cmd_validate(const Options& o, std::ostream& out) {
  const SpaceDocument doc = load_document(o.file);
  const auto vs = validate(doc.space);
  Report r;
  r["command"] = "validate";
  r["file"] = o.file;
  r["coordinates"] = doc.space.space().format_set(doc.space.space().all());
  r["outcomes"] = doc.space.space().size();
  Report kernels = Report::array();
  for (CoordSet s : doc.space.kernel_subsets()) kernels.push_back(doc.space.space().format_set(s));
  r["kernels"] = std::move(kernels);
  r["valid"] = vs.empty();
  r["violations"] = violations_report(doc.space, vs);
  emit(o, r, out);
  return vs.empty() ? kOk : kInvalidSpace;
}

int cmd_intervene(const Options& o, std::ostream& out, std::ostream& err) {
  const SpaceDocument doc = load_document(o.file);
  require_valid(o, doc.space, err);
  const CoordSet u = parse_coordinate_list(doc.space.space(), o.u);
  if (!o.q) throw InvalidArgument("intervene needs --Q");
  const CausalSpace after = intervene(doc.space, resolve_q(doc, u, *o.q));
  out << emit_document(after);
  return kOk;
}

int cmd_marginalize(const Options& o, std::ostream& out, std::ostream& err) {
  const SpaceDocument doc = load_document(o.file);
  require_valid(o, doc.space, err);
  const CoordSet keep = parse_coordinate_list(doc.space.space(), o.coords);
  out << emit_document(marginalize(doc.space, keep, o.require_full));
  return kOk;
}

int cmd_effect(const Options& o, bool trichotomy, std::ostream& out, std::ostream& err) {
  const SpaceDocument doc = load_document(o.file);
  const CausalSpace& cs = doc.space;
  const ProductSpace& space = cs.space();
  require_valid(o, cs, err);

  EffectQuery q;
  q.u = parse_coordinate_list(space, o.u);
  if (o.v) q.v = parse_coordinate_list(space, *o.v);
  if (o.omega.has_value() == o.subject.has_value()) {
    throw InvalidArgument("give exactly one of --omega and --subject");
  }
  if (o.omega) {
    q.subject = parse_outcome_assignment(space, *o.omega, q.u);
  } else {
    q.subject = resolve_event(doc, *o.subject);
  }
  if (o.event.has_value() == o.sigma.has_value()) {
    throw InvalidArgument("give exactly one of --event and --sigma");
  }
  if (o.event) {
    q.target = resolve_event(doc, *o.event);
  } else {
    q.target = resolve_partition(doc, *o.sigma);
  }
  if (o.given) {
    if (auto p = try_partition(doc, *o.given)) {
      q.given = *p;
    } else {
      q.given = resolve_event(doc, *o.given);
    }
  }

  const EffectVerdict verdict =
      trichotomy ? evaluate(cs, q, block_cap()) : evaluate_active(cs, q, block_cap());

  Report r;
  r["command"] = trichotomy ? "classify" : "effect";
  r["query"] = query_echo(o, space, q.u);
  r["verdict"] = to_string(verdict.tag);
  if (verdict.reason) r["reason"] = to_string(*verdict.reason);

  // The compared quantities for a single outcome and a single event.
  const auto* omega = std::get_if<std::size_t>(&q.subject);
  const auto* a = std::get_if<Event>(&q.target);
  if (omega && a && !q.v) {
    const Measure& row = cs.kernel(q.u).row_at(*omega);
    const Measure& p = cs.observational();
    Report cmp;
    if (const auto* g = std::get_if<Event>(&q.given)) {
      auto conditional = [&](const Measure& m) -> Report {
        const Rational mg = m(*g);
        if (mg == 0) return "undefined";
        return rational_field(m(*a & *g) / mg);
      };
      cmp["kernel_given"] = conditional(row);
      cmp["observational_given"] = conditional(p);
    } else if (std::holds_alternative<std::monostate>(q.given)) {
      cmp["kernel"] = rational_field(row(*a));
      cmp["observational"] = rational_field(p(*a));
    }
    if (!cmp.empty()) r["compared"] = std::move(cmp);
  }
  emit(o, r, out);
  return verdict.is(EffectVerdict::Tag::kUndetermined) ? kUndetermined : kOk;
}

const RandomVariable* resolve_rv(const SpaceDocument& doc, const std::optional<std::string>& name,
                                 std::optional<RandomVariable>& storage) {
  if (!name) return nullptr;
  if (auto it = doc.random_variables.find(*name); it != doc.random_variables.end()) return &it->second;
  if (name->rfind("coordinate:", 0) == 0) {
    storage = coordinate_variable(doc.space.space_ptr(), doc.space.space().position_of(name->substr(11)));
    return &*storage;
  }
  throw InvalidArgument("unknown random variable '" + *name + "' (use a declared name or coordinate:<id>)");
}

int cmd_score(const Options& o, std::ostream& out, std::ostream& err) {
  const SpaceDocument doc = load_document(o.file);
  const CausalSpace& cs = doc.space;
  const ProductSpace& space = cs.space();
  require_valid(o, cs, err);
  const CoordSet u = parse_coordinate_list(space, o.u);
  if (o.event.has_value() == o.sigma.has_value()) {
    throw InvalidArgument("give exactly one of --event and --sigma");
  }
  if (o.max == o.q.has_value()) throw InvalidArgument("give exactly one of --max and --Q");

  Report r;
  r["command"] = "score";
  Report echo = query_echo(o, space, u);
  std::optional<InterventionSpec> spec;
  if (o.q) {
    spec = resolve_q(doc, u, *o.q);
    echo["Q"] = describe_q(space, *spec);
  }
  r["query"] = std::move(echo);
  r["kind"] = o.max ? "maximum" : "mean";
  const Event b = o.subject ? resolve_event(doc, *o.subject) : Event(space.size(), true);

  EffectScore score;
  if (o.event) {
    const ScaleFunction f = o.scale == "f2" ? f2() : f1();
    if (o.scale != "f1" && o.scale != "f2") throw InvalidArgument("--scale must be f1 or f2");
    const Event a = resolve_event(doc, *o.event);
    r["scale"] = f.id();
    score = o.max ? max_effect_score_event(cs, u, b, a, f) : mean_effect_score_event(cs, *spec, a, f);
    if (spec) r["intervened_probability"] = rational_field(intervention_measure(cs, *spec)(a));
    r["observational_probability"] = rational_field(cs.observational()(a));
  } else {
    const DifferenceFunctional d = difference_functional(o.diff.value_or("mean"));
    const Partition f = resolve_partition(doc, *o.sigma);
    std::optional<RandomVariable> storage;
    const RandomVariable* x = resolve_rv(doc, o.rv, storage);
    r["functional"] = d.id();
    score = o.max ? max_effect_score_algebra(cs, u, b, f, d, x)
                  : mean_effect_score_algebra(cs, *spec, f, d, x);
  }

  if (score.exact) {
    r["score"] = score.exact->size() == 1 ? rational_field(score.exact->front())
                                          : rational_vector(*score.exact);
  } else {
    Report values = Report::array();
    for (double v : score.value) values.push_back(real_field(v));
    r["score"] = score.value.size() == 1 ? values.front() : values;
  }
  if (score.argmax) {
    r["argmax"] = space.format_set(u) + " = (" +
                  space.format_sub(u, space.project(*score.argmax, u)) + ")";
    r["tied"] = score.tied;
  }
  emit(o, r, out);
  return kOk;
}

int cmd_gen(const Options& o, std::ostream& out) {
  GenConfig cfg;
  cfg.seed = o.seed;
  cfg.max_coordinates = o.max_coordinates;
  cfg.max_labels = o.max_labels;
  cfg.min_coordinates = std::min<std::size_t>(cfg.min_coordinates, cfg.max_coordinates);
  cfg.min_labels = std::min<std::size_t>(cfg.min_labels, cfg.max_labels);
  if (o.mode == "partial") {
    cfg.mode = GenConfig::Mode::kPartial;
  } else if (o.mode != "full") {
    throw InvalidArgument("--mode must be full or partial");
  }
  check_config(cfg);
  if (o.kind == "random") {
    out << emit_document(gen_random_space(cfg));
  } else if (o.kind == "null") {
    // Coordinates are x0, x1, ...; U is read by position from those ids.
    CoordSet u;
    for (const auto& id : CLI::detail::split(o.u, ',')) {
      if (id.size() < 2 || id[0] != 'x') throw InvalidArgument("null spaces take -U x<k>,...");
      u = u.with(std::stoul(id.substr(1)));
    }
    out << emit_document(gen_null_effect_space(cfg, u));
  } else if (o.kind == "product") {
    out << emit_document(gen_product_space(cfg));
  } else if (o.kind == "mediated") {
    out << emit_document(gen_mediated_space(cfg).space);
  } else if (o.kind == "dormant") {
    out << emit_document(gen_dormant_space().space);
  } else {
    throw InvalidArgument("--kind must be random, null, product, mediated or dormant");
  }
  return kOk;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("file", o.file, "space document (JSON)")->required();
  sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
}

void add_query(CLI::App* sub, Options& o) {
  sub->add_option("-U", o.u, "intervened coordinates, comma-separated");
  sub->add_option("-V", o.v, "coordinates intervened beforehand");
  sub->add_option("--omega", o.omega, "outcome as k=v,...");
  sub->add_option("--subject", o.subject, "subject event B");
  sub->add_option("--event", o.event, "target event A");
  sub->add_option("--sigma", o.sigma, "target partition");
  sub->add_option("--given", o.given, "conditioning event or partition");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Causal effects on finite causal spaces", "cee"};
  app.require_subcommand(1);
  Options o;

  auto* validate_cmd = app.add_subcommand("validate", "check the causal-space axioms");
  add_common(validate_cmd, o);

  auto* intervene_cmd = app.add_subcommand("intervene", "emit the intervened space");
  add_common(intervene_cmd, o);
  intervene_cmd->add_option("-U", o.u, "intervened coordinates");
  intervene_cmd->add_option("--Q", o.q, "delta:k=v,..., uniform or a declared measure")->required();

  auto* marginalize_cmd = app.add_subcommand("marginalize", "emit the marginal space");
  add_common(marginalize_cmd, o);
  marginalize_cmd->add_option("--coords", o.coords, "coordinates to keep")->required();
  marginalize_cmd->add_flag("--require-full", o.require_full, "fail when a kernel is absent");

  auto* effect_cmd = app.add_subcommand("effect", "active-effect verdict");
  add_common(effect_cmd, o);
  add_query(effect_cmd, o);
  effect_cmd->add_flag("--active", o.active, "active effect (the default)");

  auto* classify_cmd = app.add_subcommand("classify", "NoEffect / Active / Dormant verdict");
  add_common(classify_cmd, o);
  add_query(classify_cmd, o);

  auto* score_cmd = app.add_subcommand("score", "mean or maximum effect score");
  add_common(score_cmd, o);
  score_cmd->add_option("-U", o.u, "intervened coordinates");
  score_cmd->add_option("--Q", o.q, "delta:k=v,..., uniform or a declared measure");
  score_cmd->add_flag("--max", o.max, "maximum score over the rows reachable from --subject");
  score_cmd->add_option("--subject", o.subject, "subject event B for --max (default: all)");
  score_cmd->add_option("--event", o.event, "target event A");
  score_cmd->add_option("--sigma", o.sigma, "target partition");
  score_cmd->add_option("--scale", o.scale, "f1 or f2");
  score_cmd->add_option("--diff", o.diff, "mean, var, tv or mean+var");
  score_cmd->add_option("--rv", o.rv, "random variable name or coordinate:<id>");

  auto* gen_cmd = app.add_subcommand("gen", "emit a generated space");
  gen_cmd->add_option("--seed", o.seed, "generator seed");
  gen_cmd->add_option("--kind", o.kind, "random, null, product, mediated or dormant");
  gen_cmd->add_option("--coords", o.max_coordinates, "maximum coordinate count");
  gen_cmd->add_option("--labels", o.max_labels, "maximum labels per coordinate");
  gen_cmd->add_option("--mode", o.mode, "full or partial kernel family");
  gen_cmd->add_option("-U", o.u, "U for --kind null (ids x<k>)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(o, out);
    if (intervene_cmd->parsed()) return cmd_intervene(o, out, err);
    if (marginalize_cmd->parsed()) return cmd_marginalize(o, out, err);
    if (effect_cmd->parsed()) return cmd_effect(o, false, out, err);
    if (classify_cmd->parsed()) return cmd_effect(o, true, out, err);
    if (score_cmd->parsed()) return cmd_score(o, out, err);
    if (gen_cmd->parsed()) return cmd_gen(o, out);
  } catch (const Exit& e) {
    return e.code;
  } catch (const KernelMissing& e) {
    err << "error: " << e.what() << "\n";
    return kKernelMissing;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace cee::cli
