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

#ifndef CEE_EFFECTS_HPP_
#define CEE_EFFECTS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <variant>

#include "cee/causal_space.hpp"
#include "cee/coord_set.hpp"
#include "cee/measure.hpp"
#include "cee/space.hpp"

namespace cee {

// Outcomes are passed as indices into the space (see ProductSpace::index_of).
// Every verdict depends on the outcome only through its U-coordinates.

struct EffectVerdict {
  enum class Tag { kNoEffect, kActive, kDormant, kUndetermined };
  enum class Reason { kZeroMeasureConditioning, kNotMutuallyAbsCont, kKernelMissing };

  Tag tag = Tag::kNoEffect;
  std::optional<Reason> reason;   // set iff tag == kUndetermined
  std::optional<CoordSet> missing;  // for kKernelMissing

  static EffectVerdict no_effect() { return {Tag::kNoEffect, std::nullopt, std::nullopt}; }
  static EffectVerdict active() { return {Tag::kActive, std::nullopt, std::nullopt}; }
  static EffectVerdict dormant() { return {Tag::kDormant, std::nullopt, std::nullopt}; }
  static EffectVerdict undetermined(Reason reason, std::optional<CoordSet> missing = std::nullopt) {
    return {Tag::kUndetermined, reason, missing};
  }

  bool is(Tag t) const { return tag == t; }
  friend bool operator==(const EffectVerdict&, const EffectVerdict&) = default;
};

const char* to_string(EffectVerdict::Tag tag);
const char* to_string(EffectVerdict::Reason reason);
std::string to_string(const EffectVerdict& verdict);

// Verdict of a set of subjects (ω ∈ B) or targets (A ∈ ℱ): Active if any is
// Active, else Undetermined if any is, else Dormant if any is, else NoEffect.
EffectVerdict combine(const EffectVerdict& a, const EffectVerdict& b);

// ---- Active effect: K_U(ω, A) vs P(A) --------------------------------------

bool active_effect(const CausalSpace& cs, CoordSet u, std::size_t omega, const Event& a);
bool active_effect_event(const CausalSpace& cs, CoordSet u, const Event& b, const Event& a);
// Some union of blocks of ℱ is actively affected. Throws BlockCountExceeded.
bool active_effect_on_algebra(const CausalSpace& cs, CoordSet u, std::size_t omega,
                              const Partition& f, std::size_t cap = kDefaultBlockCap);
bool active_effect_on_algebra(const CausalSpace& cs, CoordSet u, const Event& b,
                              const Partition& f, std::size_t cap = kDefaultBlockCap);

// ---- Trichotomy -------------------------------------------------------------

// True unless K_S((ω_{S∩U}, ω'_{S∖U}), A) = K_{S∖U}(ω'_{S∖U}, A) for every
// S ⊆ T and every ω'_{S∖U}. Needs the full kernel family.
bool has_causal_effect(const CausalSpace& cs, CoordSet u, std::size_t omega, const Event& a);

EffectVerdict classify(const CausalSpace& cs, CoordSet u, std::size_t omega, const Event& a);
EffectVerdict classify(const CausalSpace& cs, CoordSet u, const Event& b, const Event& a);

// ---- Conditioning on an event G ---------------------------------------------

// Undetermined unless P(G) > 0 and K_U(ω, G) > 0; then Active iff
// K_U(ω,·)_G(A) ≠ P_G(A).
EffectVerdict conditional_active_effect_event(const CausalSpace& cs, CoordSet u,
                                              std::size_t omega, const Event& a,
                                              const Event& g);
EffectVerdict conditional_active_effect_event(const CausalSpace& cs, CoordSet u,
                                              const Event& b, const Event& a,
                                              const Event& g);

// ---- Conditioning on a σ-algebra 𝒢 ------------------------------------------

// Undetermined unless P and K_U(ω,·) are mutually absolutely continuous on 𝒢;
// then NoEffect iff the two conditional probabilities of A agree on every
// positive block.
EffectVerdict conditional_active_effect_algebra(const CausalSpace& cs, CoordSet u,
                                                std::size_t omega, const Event& a,
                                                const Partition& g);
EffectVerdict conditional_active_effect_algebra(const CausalSpace& cs, CoordSet u,
                                                const Event& b, const Event& a,
                                                const Partition& g);

EffectVerdict conditional_classify_event(const CausalSpace& cs, CoordSet u,
                                         std::size_t omega, const Event& a,
                                         const Event& g);
EffectVerdict conditional_classify_event(const CausalSpace& cs, CoordSet u,
                                         const Event& b, const Event& a, const Event& g);
EffectVerdict conditional_classify_algebra(const CausalSpace& cs, CoordSet u,
                                           std::size_t omega, const Event& a,
                                           const Partition& g);
EffectVerdict conditional_classify_algebra(const CausalSpace& cs, CoordSet u,
                                           const Event& b, const Event& a,
                                           const Partition& g);

// ---- After intervening on H_V -------------------------------------------------

// False iff K_{U∪V}((ω_U, ω'_{V∖U}), A) = K_V((ω_{U∩V}, ω'_{V∖U}), A) for all
// ω'_{V∖U}.
bool post_intervention_active_effect(const CausalSpace& cs, CoordSet u, CoordSet v,
                                     std::size_t omega, const Event& a);
bool post_intervention_active_effect(const CausalSpace& cs, CoordSet u, CoordSet v,
                                     const Event& b, const Event& a);

EffectVerdict post_intervention_classify(const CausalSpace& cs, CoordSet u, CoordSet v,
                                         std::size_t omega, const Event& a);
EffectVerdict post_intervention_classify(const CausalSpace& cs, CoordSet u, CoordSet v,
                                         const Event& b, const Event& a);

// ---- Query dispatch -------------------------------------------------------------

struct EffectQuery {
  CoordSet u;
  std::optional<CoordSet> v;                        // post-intervention
  std::variant<std::size_t, Event> subject;         // ω or B
  std::variant<Event, Partition> target;            // A or ℱ
  std::variant<std::monostate, Event, Partition> given;  // none, G or 𝒢
};

// Throws InvalidArgument when both `v` and `given` are set, or U/V are not
// subsets of T.
void check_query(const CausalSpace& cs, const EffectQuery& query);

// Active-only verdict (NoEffect, Active or Undetermined).
EffectVerdict evaluate_active(const CausalSpace& cs, const EffectQuery& query,
                              std::size_t cap = kDefaultBlockCap);
// No/active/dormant verdict; needs the full kernel family.
EffectVerdict evaluate(const CausalSpace& cs, const EffectQuery& query,
                       std::size_t cap = kDefaultBlockCap);

// ---- Executable forms of the independence results --------------------------------

// Premise: no ω has an active U-effect on A (else PremiseNotMet). Returns
// whether A and H_U are independent under P^{do(U,Q)}.
bool check_lemma1(const CausalSpace& cs, CoordSet u, const Event& a, const Measure& q);

// Premise: every ω has a determined NoEffect conditional active verdict given
// G (resp. 𝒢). Returns whether A ⟂ H_U given G (resp. 𝒢) under P^{do(U,Q)}.
bool check_prop2(const CausalSpace& cs, CoordSet u, const Event& a, const Event& g,
                 const Measure& q);
bool check_prop2(const CausalSpace& cs, CoordSet u, const Event& a, const Partition& g,
                 const Measure& q);

struct Prop3Result {
  // Only when U ∩ V = ∅: in the space intervened on H_V via Q_V, ω has no
  // active U-effect on A.
  std::optional<bool> disjoint_part;
  // In the space intervened on H_U via Q_U, ω still has no post-intervention
  // active effect.
  bool reintervened_part = false;
};

// `q` lives on Ω_{U∪V}; its V- and U-marginals are the two interventions.
// Premise: no post-intervention active effect for every outcome that agrees
// with ω on U∩V (else PremiseNotMet).
Prop3Result check_prop3(const CausalSpace& cs, CoordSet u, CoordSet v, std::size_t omega,
                        const Event& a, const Measure& q);

}  // namespace cee

#endif  // CEE_EFFECTS_HPP_
