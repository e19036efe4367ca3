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

// Brute-force verdicts by literal quantifier expansion. Deliberately shares no
// helpers with effects.cpp: outcomes are rebuilt label by label, conditional
// probabilities are formed by division, and subsets are enumerated directly.

#include "cee/errors.hpp"
#include "cee/spacegen.hpp"

namespace cee {
namespace {

using Tag = EffectVerdict::Tag;
using Reason = EffectVerdict::Reason;

struct Brute {
  const CausalSpace& cs;
  const ProductSpace& space;

  Rational mass(const Measure& m, const Event& e) const {
    Rational sum = 0;
    for (std::size_t o = 0; o < space.size(); ++o) {
      if (e.contains(o)) sum += m.weight(o);
    }
    return sum;
  }

  const Measure& row(std::uint64_t subset, std::size_t outcome) const {
    return cs.kernel(CoordSet(subset)).row_at(outcome);
  }

  // ω with the coordinates in `replace` taken from x.
  std::size_t overwrite(std::size_t omega, std::uint64_t replace, std::size_t x) const {
    Outcome a = space.outcome(omega);
    const Outcome b = space.outcome(x);
    for (std::size_t t = 0; t < space.dimension(); ++t) {
      if ((replace >> t) & 1U) a.labels[t] = b.labels[t];
    }
    return space.index_of(a);
  }

  std::uint64_t full() const { return (std::uint64_t{1} << space.dimension()) - 1; }

  bool differs_plain(const Measure& m1, const Measure& m2, const Event& a) const {
    return mass(m1, a) != mass(m2, a);
  }

  // nullopt when undefined.
  std::optional<bool> differs_given_event(const Measure& m1, const Measure& m2, const Event& a,
                                          const Event& g) const {
    const Rational g1 = mass(m1, g);
    const Rational g2 = mass(m2, g);
    if (g1 == 0 || g2 == 0) return std::nullopt;
    const Event ag = a & g;
    return Rational(mass(m1, ag) / g1) != Rational(mass(m2, ag) / g2);
  }

  std::optional<bool> differs_given_algebra(const Measure& m1, const Measure& m2,
                                            const Event& a, const Partition& g) const {
    for (std::size_t i = 0; i < g.block_count(); ++i) {
      const Event b = g.block_event(i);
      if ((mass(m1, b) == 0) != (mass(m2, b) == 0)) return std::nullopt;
    }
    for (std::size_t i = 0; i < g.block_count(); ++i) {
      const Event b = g.block_event(i);
      const Rational b1 = mass(m1, b);
      if (b1 == 0) continue;
      if (Rational(mass(m1, a & b) / b1) != Rational(mass(m2, a & b) / mass(m2, b))) return true;
    }
    return false;
  }
};

EffectVerdict verdict(const Brute& br, const EffectQuery& q, std::size_t omega, const Event& a,
                      bool trichotomy) {
  const std::uint64_t u = q.u.bits();
  const std::uint64_t full = br.full();
  const Measure& p = br.cs.observational();

  if (q.v) {
    const std::uint64_t v = q.v->bits();
    bool active = false;
    for (std::size_t x = 0; x < br.space.size() && !active; ++x) {
      const std::size_t o = br.overwrite(omega, v & ~u, x);
      active = br.differs_plain(br.row(u | v, o), br.row(v, o), a);
    }
    if (active) return EffectVerdict::active();
    if (!trichotomy) return EffectVerdict::no_effect();
    for (std::uint64_t s = 0; s <= full; ++s) {
      if ((s & ~full) != 0) continue;
      const std::uint64_t j = s | v;
      const std::uint64_t w = j & ~(u & ~v);
      for (std::size_t x = 0; x < br.space.size(); ++x) {
        const std::size_t o = br.overwrite(omega, w, x);
        if (br.differs_plain(br.row(j, o), br.row(w, o), a)) return EffectVerdict::dormant();
      }
    }
    return EffectVerdict::no_effect();
  }

  // Active part.
  std::optional<bool> active;
  Reason undefined_reason = Reason::kZeroMeasureConditioning;
  const Event* g_event = std::get_if<Event>(&q.given);
  const Partition* g_algebra = std::get_if<Partition>(&q.given);
  auto compare = [&](const Measure& m1, const Measure& m2) -> std::optional<bool> {
    if (g_event) return br.differs_given_event(m1, m2, a, *g_event);
    if (g_algebra) return br.differs_given_algebra(m1, m2, a, *g_algebra);
    return br.differs_plain(m1, m2, a);
  };
  if (g_algebra) undefined_reason = Reason::kNotMutuallyAbsCont;

  active = compare(br.row(u, omega), p);
  if (!active) return EffectVerdict::undetermined(undefined_reason);
  if (*active) return EffectVerdict::active();
  if (!trichotomy) return EffectVerdict::no_effect();

  bool undefined = false;
  bool differs = false;
  for (std::uint64_t s = 0; s <= full; ++s) {
    const std::uint64_t free = s & ~u;
    for (std::size_t x = 0; x < br.space.size(); ++x) {
      const std::size_t o = br.overwrite(omega, free, x);
      const std::optional<bool> d = compare(br.row(s, o), br.row(free, o));
      if (!d) {
        undefined = true;
      } else if (*d) {
        differs = true;
      }
    }
  }
  if (undefined) return EffectVerdict::undetermined(undefined_reason);
  return differs ? EffectVerdict::dormant() : EffectVerdict::no_effect();
}

int rank(Tag t) {
  switch (t) {
    case Tag::kActive: return 3;
    case Tag::kUndetermined: return 2;
    case Tag::kDormant: return 1;
    case Tag::kNoEffect: return 0;
  }
  return 0;
}

}  // namespace

EffectVerdict oracle_effect_brute(const CausalSpace& cs, const EffectQuery& query,
                                  bool trichotomy) {
  const Brute br{cs, cs.space()};
  if (trichotomy) {
    for (std::uint64_t s = 0; s <= br.full(); ++s) {
      if (!cs.has_kernel(CoordSet(s))) throw KernelMissing(CoordSet(s), cs.space().format_set(CoordSet(s)));
    }
  }

  std::vector<std::size_t> subjects;
  if (const auto* omega = std::get_if<std::size_t>(&query.subject)) {
    subjects.push_back(*omega);
  } else {
    const Event& b = std::get<Event>(query.subject);
    for (std::size_t o = 0; o < br.space.size(); ++o) {
      if (b.contains(o)) subjects.push_back(o);
    }
    if (subjects.empty()) throw EmptySubject();
  }

  std::vector<Event> targets;
  if (const auto* a = std::get_if<Event>(&query.target)) {
    targets.push_back(*a);
  } else {
    const Partition& f = std::get<Partition>(query.target);
    if (f.block_count() > kDefaultBlockCap) throw BlockCountExceeded(f.block_count(), kDefaultBlockCap);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f.block_count()); ++mask) {
      Event e(br.space.size());
      for (std::size_t i = 0; i < f.block_count(); ++i) {
        if ((mask >> i) & 1U) {
          for (std::size_t o : f.block(i)) e.insert(o);
        }
      }
      targets.push_back(std::move(e));
    }
  }

  EffectVerdict out = EffectVerdict::no_effect();
  for (const Event& a : targets) {
    for (std::size_t o : subjects) {
      const EffectVerdict v = verdict(br, query, o, a, trichotomy);
      if (rank(v.tag) > rank(out.tag)) out = v;
    }
  }
  return out;
}

}  // namespace cee
