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

#include "cee/effects.hpp"

#include <set>

#include "cee/errors.hpp"

namespace cee {
namespace {

using Tag = EffectVerdict::Tag;
using Reason = EffectVerdict::Reason;

void check_subset(const CausalSpace& cs, CoordSet s, const char* role) {
  if (!s.subset_of(cs.space().all())) {
    throw InvalidArgument(std::string(role) + " is not a subset of the coordinates");
  }
}

void check_event(const CausalSpace& cs, const Event& e) {
  if (e.universe_size() != cs.space().size()) throw InvalidArgument("event over a different space");
}

void check_outcome(const CausalSpace& cs, std::size_t omega) {
  if (omega >= cs.space().size()) throw InvalidArgument("outcome index out of range");
}

void require_full_family(const CausalSpace& cs) {
  for (CoordSet s : all_subsets(cs.space().all())) {
    if (!cs.has_kernel(s)) throw_kernel_missing(cs.space(), s);
  }
}

// One outcome of B per distinct ω_U; every verdict depends on ω only through
// ω_U.
std::vector<std::size_t> representatives(const CausalSpace& cs, CoordSet u, const Event& b) {
  check_event(cs, b);
  std::set<std::size_t> seen;
  std::vector<std::size_t> out;
  for (std::size_t o : b.members()) {
    if (seen.insert(cs.space().project(o, u)).second) out.push_back(o);
  }
  if (out.empty()) throw EmptySubject();
  return out;
}

// a/b == c/d for b, d > 0.
bool ratios_equal(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  return a * d == c * b;
}

// Compares μ_G(A) and ν_G(A). Undetermined when G is null under either.
EffectVerdict compare_given_event(const Measure& mu, const Measure& nu, const Event& a,
                                  const Event& g) {
  const Rational mg = mu(g);
  const Rational ng = nu(g);
  if (mg == 0 || ng == 0) return EffectVerdict::undetermined(Reason::kZeroMeasureConditioning);
  const Event ag = a & g;
  return ratios_equal(mu(ag), mg, nu(ag), ng) ? EffectVerdict::no_effect()
                                              : EffectVerdict::active();
}

// Compares μ_𝒢(·,A) and ν_𝒢(·,A) almost surely. Undetermined unless the two
// measures are mutually absolutely continuous on 𝒢.
EffectVerdict compare_given_algebra(const Measure& mu, const Measure& nu, const Event& a,
                                    const Partition& g) {
  if (g.universe_size() != mu.size()) throw InvalidArgument("partition over a different space");
  if (!mutually_abs_continuous_on(mu, nu, g)) {
    return EffectVerdict::undetermined(Reason::kNotMutuallyAbsCont);
  }
  for (const auto& block : g.blocks()) {
    Rational mb = 0, nb = 0, mab = 0, nab = 0;
    for (std::size_t o : block) {
      mb += mu.weight(o);
      nb += nu.weight(o);
      if (a.contains(o)) {
        mab += mu.weight(o);
        nab += nu.weight(o);
      }
    }
    if (mb == 0) continue;
    if (!ratios_equal(mab, mb, nab, nb)) return EffectVerdict::active();
  }
  return EffectVerdict::no_effect();
}

template <typename PerOutcome>
EffectVerdict over_subject(const CausalSpace& cs, CoordSet u, const Event& b, PerOutcome f) {
  EffectVerdict out = EffectVerdict::no_effect();
  for (std::size_t o : representatives(cs, u, b)) {
    out = combine(out, f(o));
    if (out.is(Tag::kActive)) break;
  }
  return out;
}

// Walks every (S, ω') pair of the no-effect definitions: for each S ⊆ T the
// coordinates `replaced(S)` of ω are overwritten by each ω' and `compare` is
// called with the spliced outcome. Stops early when `compare` returns true.
template <typename Replaced, typename Compare>
bool any_splice(const CausalSpace& cs, std::size_t omega, Replaced replaced, Compare compare) {
  const ProductSpace& space = cs.space();
  for (CoordSet s : all_subsets(space.all())) {
    const CoordSet r = replaced(s);
    for (std::size_t w = 0; w < space.subset_size(r); ++w) {
      if (compare(s, space.splice(omega, r, w))) return true;
    }
  }
  return false;
}

// Trichotomy scan for the conditional variants: Undetermined if any premise
// fails, else Dormant if any comparison differs, else NoEffect.
template <typename Compare>
EffectVerdict conditional_scan(const CausalSpace& cs, CoordSet u, std::size_t omega,
                               Compare compare_measures) {
  std::optional<EffectVerdict> undetermined;
  bool differs = false;
  any_splice(cs, omega, [u](CoordSet s) { return s - u; },
             [&](CoordSet s, std::size_t spliced) {
               const Measure& with_u = cs.kernel(s).row_at(spliced);
               const Measure& without_u = cs.kernel(s - u).row_at(spliced);
               const EffectVerdict v = compare_measures(with_u, without_u);
               if (v.is(Tag::kUndetermined)) {
                 undetermined = v;
                 return true;
               }
               if (v.is(Tag::kActive)) differs = true;
               return false;
             });
  if (undetermined) return *undetermined;
  return differs ? EffectVerdict::dormant() : EffectVerdict::no_effect();
}

void check_post_kernels(const CausalSpace& cs, CoordSet u, CoordSet v) {
  const CoordSet u_only = u - v;
  for (CoordSet s : all_subsets(cs.space().all())) {
    const CoordSet joint = s | v;
    if (!cs.has_kernel(joint)) throw_kernel_missing(cs.space(), joint);
    if (!cs.has_kernel(joint - u_only)) throw_kernel_missing(cs.space(), joint - u_only);
  }
}

}  // namespace

const char* to_string(EffectVerdict::Tag tag) {
  switch (tag) {
    case Tag::kNoEffect: return "NoEffect";
    case Tag::kActive: return "Active";
    case Tag::kDormant: return "Dormant";
    case Tag::kUndetermined: return "Undetermined";
  }
  return "?";
}

const char* to_string(EffectVerdict::Reason reason) {
  switch (reason) {
    case Reason::kZeroMeasureConditioning: return "ZeroMeasureConditioning";
    case Reason::kNotMutuallyAbsCont: return "NotMutuallyAbsCont";
    case Reason::kKernelMissing: return "KernelMissing";
  }
  return "?";
}

std::string to_string(const EffectVerdict& verdict) {
  std::string out = to_string(verdict.tag);
  if (verdict.reason) out += std::string("(") + to_string(*verdict.reason) + ")";
  return out;
}

EffectVerdict combine(const EffectVerdict& a, const EffectVerdict& b) {
  auto rank = [](Tag t) {
    switch (t) {
      case Tag::kActive: return 3;
      case Tag::kUndetermined: return 2;
      case Tag::kDormant: return 1;
      case Tag::kNoEffect: return 0;
    }
    return 0;
  };
  return rank(b.tag) > rank(a.tag) ? b : a;
}

bool active_effect(const CausalSpace& cs, CoordSet u, std::size_t omega, const Event& a) {
  check_subset(cs, u, "U");
  check_outcome(cs, omega);
  check_event(cs, a);
  return cs.kernel(u)(omega, a) != cs.observational()(a);
}

bool active_effect_event(const CausalSpace& cs, CoordSet u, const Event& b, const Event& a) {
  check_subset(cs, u, "U");
  const Rational pa = cs.observational()(a);
  const CausalKernel& k = cs.kernel(u);
  for (std::size_t o : representatives(cs, u, b)) {
    if (k(o, a) != pa) return true;
  }
  return false;
}

bool active_effect_on_algebra(const CausalSpace& cs, CoordSet u, std::size_t omega,
                              const Partition& f, std::size_t cap) {
  check_outcome(cs, omega);
  Event b(cs.space().size());
  b.insert(omega);
  return active_effect_on_algebra(cs, u, b, f, cap);
}

bool active_effect_on_algebra(const CausalSpace& cs, CoordSet u, const Event& b,
                              const Partition& f, std::size_t cap) {
  check_subset(cs, u, "U");
  const CausalKernel& k = cs.kernel(u);
  const auto reps = representatives(cs, u, b);
  for (const Event& a : all_block_unions(f, cap)) {
    const Rational pa = cs.observational()(a);
    for (std::size_t o : reps) {
      if (k(o, a) != pa) return true;
    }
  }
  return false;
}

bool has_causal_effect(const CausalSpace& cs, CoordSet u, std::size_t omega, const Event& a) {
  check_subset(cs, u, "U");
  check_outcome(cs, omega);
  check_event(cs, a);
  require_full_family(cs);
  return any_splice(cs, omega, [u](CoordSet s) { return s - u; },
                    [&](CoordSet s, std::size_t spliced) {
                      return cs.kernel(s)(spliced, a) != cs.kernel(s - u)(spliced, a);
                    });
}

EffectVerdict classify(const CausalSpace& cs, CoordSet u, std::size_t omega, const Event& a) {
  if (!has_causal_effect(cs, u, omega, a)) return EffectVerdict::no_effect();
  return active_effect(cs, u, omega, a) ? EffectVerdict::active() : EffectVerdict::dormant();
}

EffectVerdict classify(const CausalSpace& cs, CoordSet u, const Event& b, const Event& a) {
  return over_subject(cs, u, b, [&](std::size_t o) { return classify(cs, u, o, a); });
}

EffectVerdict conditional_active_effect_event(const CausalSpace& cs, CoordSet u,
                                              std::size_t omega, const Event& a,
                                              const Event& g) {
  check_subset(cs, u, "U");
  check_outcome(cs, omega);
  check_event(cs, a);
  check_event(cs, g);
  return compare_given_event(cs.kernel(u).row_at(omega), cs.observational(), a, g);
}

EffectVerdict conditional_active_effect_event(const CausalSpace& cs, CoordSet u,
                                              const Event& b, const Event& a,
                                              const Event& g) {
  return over_subject(cs, u, b, [&](std::size_t o) {
    return conditional_active_effect_event(cs, u, o, a, g);
  });
}

EffectVerdict conditional_active_effect_algebra(const CausalSpace& cs, CoordSet u,
                                                std::size_t omega, const Event& a,
                                                const Partition& g) {
  check_subset(cs, u, "U");
  check_outcome(cs, omega);
  check_event(cs, a);
  return compare_given_algebra(cs.kernel(u).row_at(omega), cs.observational(), a, g);
}

EffectVerdict conditional_active_effect_algebra(const CausalSpace& cs, CoordSet u,
                                                const Event& b, const Event& a,
                                                const Partition& g) {
  return over_subject(cs, u, b, [&](std::size_t o) {
    return conditional_active_effect_algebra(cs, u, o, a, g);
  });
}

EffectVerdict conditional_classify_event(const CausalSpace& cs, CoordSet u,
                                         std::size_t omega, const Event& a,
                                         const Event& g) {
  require_full_family(cs);
  const EffectVerdict active = conditional_active_effect_event(cs, u, omega, a, g);
  if (!active.is(Tag::kNoEffect)) return active;
  return conditional_scan(cs, u, omega, [&](const Measure& with_u, const Measure& without_u) {
    return compare_given_event(with_u, without_u, a, g);
  });
}

EffectVerdict conditional_classify_event(const CausalSpace& cs, CoordSet u, const Event& b,
                                         const Event& a, const Event& g) {
  return over_subject(cs, u, b, [&](std::size_t o) {
    return conditional_classify_event(cs, u, o, a, g);
  });
}

EffectVerdict conditional_classify_algebra(const CausalSpace& cs, CoordSet u,
                                           std::size_t omega, const Event& a,
                                           const Partition& g) {
  require_full_family(cs);
  const EffectVerdict active = conditional_active_effect_algebra(cs, u, omega, a, g);
  if (!active.is(Tag::kNoEffect)) return active;
  return conditional_scan(cs, u, omega, [&](const Measure& with_u, const Measure& without_u) {
    return compare_given_algebra(with_u, without_u, a, g);
  });
}

EffectVerdict conditional_classify_algebra(const CausalSpace& cs, CoordSet u, const Event& b,
                                           const Event& a, const Partition& g) {
  return over_subject(cs, u, b, [&](std::size_t o) {
    return conditional_classify_algebra(cs, u, o, a, g);
  });
}

bool post_intervention_active_effect(const CausalSpace& cs, CoordSet u, CoordSet v,
                                     std::size_t omega, const Event& a) {
  check_subset(cs, u, "U");
  check_subset(cs, v, "V");
  check_outcome(cs, omega);
  check_event(cs, a);
  const ProductSpace& space = cs.space();
  const CausalKernel& joint = cs.kernel(u | v);
  const CausalKernel& after_v = cs.kernel(v);
  const CoordSet free = v - u;
  for (std::size_t w = 0; w < space.subset_size(free); ++w) {
    const std::size_t spliced = space.splice(omega, free, w);
    if (joint(spliced, a) != after_v(spliced, a)) return true;
  }
  return false;
}

bool post_intervention_active_effect(const CausalSpace& cs, CoordSet u, CoordSet v,
                                     const Event& b, const Event& a) {
  for (std::size_t o : representatives(cs, u, b)) {
    if (post_intervention_active_effect(cs, u, v, o, a)) return true;
  }
  return false;
}

EffectVerdict post_intervention_classify(const CausalSpace& cs, CoordSet u, CoordSet v,
                                         std::size_t omega, const Event& a) {
  check_subset(cs, u, "U");
  check_subset(cs, v, "V");
  check_post_kernels(cs, u, v);
  if (post_intervention_active_effect(cs, u, v, omega, a)) return EffectVerdict::active();
  const CoordSet u_only = u - v;
  const bool differs = any_splice(
      cs, omega, [&](CoordSet s) { return (s | v) - u_only; },
      [&](CoordSet s, std::size_t spliced) {
        const CoordSet joint = s | v;
        return cs.kernel(joint)(spliced, a) != cs.kernel(joint - u_only)(spliced, a);
      });
  return differs ? EffectVerdict::dormant() : EffectVerdict::no_effect();
}

EffectVerdict post_intervention_classify(const CausalSpace& cs, CoordSet u, CoordSet v,
                                         const Event& b, const Event& a) {
  return over_subject(cs, u, b, [&](std::size_t o) {
    return post_intervention_classify(cs, u, v, o, a);
  });
}

void check_query(const CausalSpace& cs, const EffectQuery& query) {
  check_subset(cs, query.u, "U");
  if (query.v) check_subset(cs, *query.v, "V");
  if (query.v && !std::holds_alternative<std::monostate>(query.given)) {
    throw InvalidArgument("post-intervention queries cannot also be conditional");
  }
  if (const auto* omega = std::get_if<std::size_t>(&query.subject)) check_outcome(cs, *omega);
  if (const auto* b = std::get_if<Event>(&query.subject)) check_event(cs, *b);
  if (const auto* a = std::get_if<Event>(&query.target)) check_event(cs, *a);
  if (const auto* f = std::get_if<Partition>(&query.target)) {
    if (f->universe_size() != cs.space().size()) throw InvalidArgument("partition over a different space");
  }
  if (const auto* g = std::get_if<Event>(&query.given)) check_event(cs, *g);
  if (const auto* g = std::get_if<Partition>(&query.given)) {
    if (g->universe_size() != cs.space().size()) throw InvalidArgument("partition over a different space");
  }
}

namespace {

EffectVerdict single_verdict(const CausalSpace& cs, const EffectQuery& q, std::size_t omega,
                             const Event& a, bool trichotomy) {
  if (q.v) {
    if (trichotomy) return post_intervention_classify(cs, q.u, *q.v, omega, a);
    return post_intervention_active_effect(cs, q.u, *q.v, omega, a) ? EffectVerdict::active()
                                                                    : EffectVerdict::no_effect();
  }
  if (const auto* g = std::get_if<Event>(&q.given)) {
    return trichotomy ? conditional_classify_event(cs, q.u, omega, a, *g)
                      : conditional_active_effect_event(cs, q.u, omega, a, *g);
  }
  if (const auto* g = std::get_if<Partition>(&q.given)) {
    return trichotomy ? conditional_classify_algebra(cs, q.u, omega, a, *g)
                      : conditional_active_effect_algebra(cs, q.u, omega, a, *g);
  }
  if (trichotomy) return classify(cs, q.u, omega, a);
  return active_effect(cs, q.u, omega, a) ? EffectVerdict::active() : EffectVerdict::no_effect();
}

EffectVerdict dispatch(const CausalSpace& cs, const EffectQuery& query, std::size_t cap,
                       bool trichotomy) {
  check_query(cs, query);
  std::vector<std::size_t> subjects;
  if (const auto* omega = std::get_if<std::size_t>(&query.subject)) {
    subjects.push_back(*omega);
  } else {
    subjects = representatives(cs, query.u, std::get<Event>(query.subject));
  }
  std::vector<Event> targets;
  if (const auto* a = std::get_if<Event>(&query.target)) {
    targets.push_back(*a);
  } else {
    targets = all_block_unions(std::get<Partition>(query.target), cap);
  }
  EffectVerdict out = EffectVerdict::no_effect();
  for (const Event& a : targets) {
    for (std::size_t o : subjects) {
      out = combine(out, single_verdict(cs, query, o, a, trichotomy));
      if (out.is(Tag::kActive)) return out;
    }
  }
  return out;
}

}  // namespace

EffectVerdict evaluate_active(const CausalSpace& cs, const EffectQuery& query, std::size_t cap) {
  return dispatch(cs, query, cap, false);
}

EffectVerdict evaluate(const CausalSpace& cs, const EffectQuery& query, std::size_t cap) {
  return dispatch(cs, query, cap, true);
}

bool check_lemma1(const CausalSpace& cs, CoordSet u, const Event& a, const Measure& q) {
  check_subset(cs, u, "U");
  check_event(cs, a);
  const CausalKernel& k = cs.kernel(u);
  const Rational pa = cs.observational()(a);
  for (std::size_t r = 0; r < k.row_count(); ++r) {
    if (k.row(r)(a) != pa) {
      throw PremiseNotMet("outcome with " + cs.space().format_set(u) + " = (" +
                          cs.space().format_sub(u, r) + ") has an active effect");
    }
  }
  const Measure after = intervention_measure(cs, {u, q});
  return independent(after, a, coordinate_subalgebra(cs.space(), u));
}

namespace {

template <typename PerRow>
void require_all_rows(const CausalSpace& cs, CoordSet u, PerRow verdict) {
  const ProductSpace& space = cs.space();
  for (std::size_t r = 0; r < space.subset_size(u); ++r) {
    const std::size_t omega = space.splice(0, u, r);
    const EffectVerdict v = verdict(omega);
    if (!v.is(Tag::kNoEffect)) {
      throw PremiseNotMet("outcome with " + space.format_set(u) + " = (" +
                          space.format_sub(u, r) + ") is " + to_string(v));
    }
  }
}

}  // namespace

bool check_prop2(const CausalSpace& cs, CoordSet u, const Event& a, const Event& g,
                 const Measure& q) {
  require_all_rows(cs, u, [&](std::size_t o) {
    return conditional_active_effect_event(cs, u, o, a, g);
  });
  const Measure after = intervention_measure(cs, {u, q});
  return cond_independent(after, a, coordinate_subalgebra(cs.space(), u), g).value_or(false);
}

bool check_prop2(const CausalSpace& cs, CoordSet u, const Event& a, const Partition& g,
                 const Measure& q) {
  require_all_rows(cs, u, [&](std::size_t o) {
    return conditional_active_effect_algebra(cs, u, o, a, g);
  });
  const Measure after = intervention_measure(cs, {u, q});
  return cond_independent(after, a, coordinate_subalgebra(cs.space(), u), g);
}

namespace {

// Pushes a measure on Ω_joint to Ω_part for part ⊆ joint.
Measure push_q(const ProductSpace& space, CoordSet joint, const Measure& q, CoordSet part) {
  auto small = std::make_shared<const ProductSpace>(space.restricted(part));
  std::vector<Rational> w(small->size());
  for (std::size_t j = 0; j < q.size(); ++j) {
    w[space.project(space.splice(0, joint, j), part)] += q.weight(j);
  }
  return Measure(std::move(small), std::move(w));
}

}  // namespace

Prop3Result check_prop3(const CausalSpace& cs, CoordSet u, CoordSet v, std::size_t omega,
                        const Event& a, const Measure& q) {
  check_subset(cs, u, "U");
  check_subset(cs, v, "V");
  check_outcome(cs, omega);
  const ProductSpace& space = cs.space();
  const CoordSet joint = u | v;
  if (!(q.space() == space.restricted(joint))) {
    throw InvalidArgument("Q must live on the U ∪ V coordinates");
  }
  const CoordSet shared = u & v;
  const std::size_t key = space.project(omega, shared);
  for (std::size_t o = 0; o < space.size(); ++o) {
    if (space.project(o, shared) != key) continue;
    if (post_intervention_active_effect(cs, u, v, o, a)) {
      throw PremiseNotMet("outcome (" + space.format(o) +
                          ") has an active effect after intervening on " + space.format_set(v));
    }
  }

  Prop3Result result;
  if (shared.empty()) {
    const CausalSpace after_v = intervene(cs, {v, push_q(space, joint, q, v)});
    result.disjoint_part = after_v.kernel(u)(omega, a) == after_v.observational()(a);
  }
  const CausalSpace after_u = intervene(cs, {u, push_q(space, joint, q, u)});
  result.reintervened_part = !post_intervention_active_effect(after_u, u, v, omega, a);
  return result;
}

}  // namespace cee
