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

#ifndef CEE_SCORES_HPP_
#define CEE_SCORES_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cee/causal_space.hpp"
#include "cee/measure.hpp"
#include "cee/space.hpp"

namespace cee {

// A non-decreasing map f : [0,1] → [−½, ½] with f(0) = −½, f(½) = 0, f(1) = ½
// and f(x) = −f(1−x).
class ScaleFunction {
 public:
  using Real = std::function<double(double)>;
  using Exact = std::function<Rational(const Rational&)>;

  ScaleFunction(std::string id, Real real, Exact exact = {})
      : id_(std::move(id)), real_(std::move(real)), exact_(std::move(exact)) {}

  const std::string& id() const { return id_; }
  double operator()(double x) const;
  bool has_exact() const { return static_cast<bool>(exact_); }
  Rational exact(const Rational& x) const;

 private:
  std::string id_;
  Real real_;
  Exact exact_;
};

// x − ½. Throws DomainError outside [0,1].
Rational scale_f1(const Rational& x);
double scale_f1(double x);
// sinh(x − ½) / (2 sinh ½). Throws DomainError outside [0,1].
double scale_f2(double x);

ScaleFunction f1();
ScaleFunction f2();

// Descriptions of every failed requirement, checked at the three anchor points
// and on a uniform 1025-point grid. Empty means the function is admissible.
std::vector<std::string> validate_scale_function(const ScaleFunction& f,
                                                 double tolerance = 1e-12);

struct EffectScore {
  std::vector<double> value;
  // Present when the score never left exact arithmetic.
  std::optional<std::vector<Rational>> exact;
  CoordSet intervened;
  // The maximizing outcome, for maximum scores.
  std::optional<std::size_t> argmax;
  // Another row reached the same magnitude.
  bool tied = false;

  // |value| in dimension 1, Euclidean norm otherwise.
  double norm() const;
};

// f(P^{do(U,Q)}(A)) − f(P(A)).
EffectScore mean_effect_score_event(const CausalSpace& cs, const InterventionSpec& spec,
                                    const Event& a, const ScaleFunction& f);

// Signed score of the K_U row reachable from B with the largest
// |f(K_U(ω,A)) − f(P(A))|. B must be a nonempty union of H_U blocks.
EffectScore max_effect_score_event(const CausalSpace& cs, CoordSet u, const Event& b,
                                   const Event& a, const ScaleFunction& f);

// D_ℱ(μ, ν) with values in ℚ^dimension.
class DifferenceFunctional {
 public:
  using Fn = std::function<std::vector<Rational>(const Measure&, const Measure&,
                                                 const Partition&, const RandomVariable*)>;

  DifferenceFunctional(std::string id, std::size_t dimension, bool needs_variable, Fn fn)
      : id_(std::move(id)), dimension_(dimension), needs_variable_(needs_variable),
        fn_(std::move(fn)) {}

  const std::string& id() const { return id_; }
  std::size_t dimension() const { return dimension_; }
  bool needs_variable() const { return needs_variable_; }

  // Throws MissingNumericVariable when a variable is needed and absent, and
  // InvalidArgument when it is not ℱ-measurable.
  std::vector<Rational> operator()(const Measure& mu, const Measure& nu, const Partition& f,
                                   const RandomVariable* x) const;

 private:
  std::string id_;
  std::size_t dimension_;
  bool needs_variable_;
  Fn fn_;
};

DifferenceFunctional mean_diff();
DifferenceFunctional variance_diff();
// ½ Σ_blocks |μ(block) − ν(block)|.
DifferenceFunctional total_variation();
// (mean_diff, variance_diff)
DifferenceFunctional mean_and_variance_diff();
std::vector<DifferenceFunctional> builtin_difference_functionals();
// "mean", "var", "tv", "mean+var". Throws InvalidArgument.
DifferenceFunctional difference_functional(const std::string& id);

// D_ℱ(P^{do(U,Q)}, P).
EffectScore mean_effect_score_algebra(const CausalSpace& cs, const InterventionSpec& spec,
                                      const Partition& f, const DifferenceFunctional& d,
                                      const RandomVariable* x = nullptr);

// D_ℱ(K_U(ω_max,·), P) for the row reachable from B with the largest norm.
EffectScore max_effect_score_algebra(const CausalSpace& cs, CoordSet u, const Event& b,
                                     const Partition& f, const DifferenceFunctional& d,
                                     const RandomVariable* x = nullptr);

// E[Y] under do(W=1) minus E[Y] under do(W=0), computed as a mean_diff score
// in the space intervened with W = 0. The coordinate's labels must be exactly
// {0, 1} (by numeric value when present, else by label text).
Rational ate(const CausalSpace& cs, std::size_t treatment, const RandomVariable& y);

}  // namespace cee

#endif  // CEE_SCORES_HPP_
