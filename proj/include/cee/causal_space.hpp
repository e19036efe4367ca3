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

#ifndef CEE_CAUSAL_SPACE_HPP_
#define CEE_CAUSAL_SPACE_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cee/coord_set.hpp"
#include "cee/measure.hpp"
#include "cee/space.hpp"

namespace cee {

// K_S: one measure on Ω per sub-outcome ω_S ∈ Ω_S. Storing rows by ω_S makes
// the kernel H_S-measurable by construction.
class CausalKernel {
 public:
  // rows.size() must equal |Ω_S| and every row must live on `space`.
  CausalKernel(SpacePtr space, CoordSet on, std::vector<Measure> rows);

  CoordSet on() const { return on_; }
  const ProductSpace& space() const { return *space_; }
  std::size_t row_count() const { return rows_.size(); }
  const Measure& row(std::size_t sub_index) const { return rows_[sub_index]; }
  const std::vector<Measure>& rows() const { return rows_; }
  // The row K_S(ω, ·) selected by the S-coordinates of `outcome`.
  const Measure& row_at(std::size_t outcome) const {
    return rows_[space_->project(outcome, on_)];
  }
  Rational operator()(std::size_t outcome, const Event& a) const { return row_at(outcome)(a); }

  friend bool operator==(const CausalKernel& a, const CausalKernel& b) {
    return a.on_ == b.on_ && a.rows_ == b.rows_;
  }

 private:
  SpacePtr space_;
  CoordSet on_;
  std::vector<Measure> rows_;
};

// An intervention on H_U via Q, with Q stored on Ω_U.
struct InterventionSpec {
  CoordSet target;
  Measure q;  // on space.restricted(target)
};

InterventionSpec delta_intervention(const ProductSpace& space, CoordSet target,
                                    std::size_t outcome);
InterventionSpec uniform_intervention(const ProductSpace& space, CoordSet target);

class Mechanism;

// (Ω, H, P, 𝕂) with a possibly partial kernel family. K_∅ is always
// available and equals P.
class CausalSpace {
 public:
  // Throws InvalidArgument on structural problems: kernels on another space,
  // two kernels for one subset. Axiom checks are left to `validate`.
  CausalSpace(Measure observational, std::vector<CausalKernel> kernels);

  const ProductSpace& space() const { return observational_.space(); }
  const SpacePtr& space_ptr() const { return observational_.space_ptr(); }
  const Measure& observational() const { return observational_; }

  bool has_kernel(CoordSet s) const;
  // Throws KernelMissing.
  const CausalKernel& kernel(CoordSet s) const;
  // Subsets with an available kernel, ∅ included, in increasing bit order.
  std::vector<CoordSet> kernel_subsets() const;
  // A user-supplied K_∅, kept only so validation can compare it with P.
  const std::optional<CausalKernel>& supplied_empty_kernel() const;

  // Whether this space came from an intervention (kernels computed lazily).
  bool is_intervened() const;

 private:
  CausalSpace(Measure observational, std::shared_ptr<const Mechanism> mechanism);
  friend CausalSpace intervene(const CausalSpace& cs, const InterventionSpec& spec);

  Measure observational_;
  std::shared_ptr<const Mechanism> mechanism_;
};

[[noreturn]] void throw_kernel_missing(const ProductSpace& space, CoordSet s);

struct Violation {
  enum class Kind {
    kObservationalNegative,
    kObservationalSum,
    kRowNegative,
    kRowSum,
    kSupport,         // row mass outside its own cylinder
    kEmptyKernel,     // supplied K_∅ differs from P
  };
  Kind kind;
  std::optional<CoordSet> kernel;
  std::optional<std::size_t> row;      // index in Ω_S
  std::optional<std::size_t> outcome;  // index in Ω
  Rational value;                      // offending weight or sum
  std::string message;
};

const char* to_string(Violation::Kind kind);

// Empty iff P and every kernel row are probability measures, every row of K_S
// is supported on {ω : ω_S = row key}, and any supplied K_∅ equals P.
std::vector<Violation> validate(const CausalSpace& cs);

// P^{do(U,Q)} = Σ_{ω_U} Q(ω_U) K_U(ω_U, ·).
Measure intervention_measure(const CausalSpace& cs, const InterventionSpec& spec);

// K^{do(U,Q)}_S: row ω_S mixes K_{S∪U}((ω_S, ω'_{U∖S}), ·) over the
// U∖S-marginal of Q.
CausalKernel intervention_kernel(const CausalSpace& cs, const InterventionSpec& spec,
                                 CoordSet s);

// The intervened space. Its kernels are computed on first use; K^{do}_S is
// available whenever K_{S∪U} is available in `cs`.
CausalSpace intervene(const CausalSpace& cs, const InterventionSpec& spec);

// Restriction to the coordinates `keep`: P' and each K'_S (S ⊆ keep) are
// pushforwards. Kernels absent from `cs` stay absent unless
// `require_full_family`, in which case the first absent S ⊆ keep throws
// KernelMissing.
CausalSpace marginalize(const CausalSpace& cs, CoordSet keep,
                        bool require_full_family = false);

// Whether `small` equals the marginalization of `large` on small's
// coordinates, on P and on every kernel both spaces carry. Throws
// CoordinateMismatch when small's coordinates are not a subsequence of
// large's with identical labels.
bool is_marginalization_of(const CausalSpace& small, const CausalSpace& large);

// Entry-wise exact comparison of P and of the kernels present in both.
bool same_on_common_kernels(const CausalSpace& a, const CausalSpace& b);

}  // namespace cee

#endif  // CEE_CAUSAL_SPACE_HPP_
