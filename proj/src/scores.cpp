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

#include "cee/scores.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "cee/errors.hpp"

namespace cee {
namespace {

void check_unit_interval(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("scale function argument " + std::to_string(x) + " outside [0,1]");
  }
}

std::vector<double> to_doubles(const std::vector<Rational>& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const Rational& r : v) out.push_back(to_double(r));
  return out;
}

Rational squared_norm(const std::vector<Rational>& v) {
  Rational sum = 0;
  for (const Rational& r : v) sum += r * r;
  return sum;
}

// First outcome of B for every distinct ω_U, after checking that B is a
// nonempty union of H_U blocks.
std::vector<std::size_t> rows_reachable(const CausalSpace& cs, CoordSet u, const Event& b) {
  const ProductSpace& space = cs.space();
  if (b.universe_size() != space.size()) throw InvalidArgument("event over a different space");
  if (b.is_empty()) throw EmptySubject();
  if (!coordinate_subalgebra(space, u).measurable(b)) {
    throw InvalidArgument("subject is not a union of " + space.format_set(u) + " blocks");
  }
  std::set<std::size_t> seen;
  std::vector<std::size_t> out;
  for (std::size_t o : b.members()) {
    if (seen.insert(space.project(o, u)).second) out.push_back(o);
  }
  return out;
}

// Keeps the first candidate of largest magnitude and flags equal magnitudes.
template <typename Magnitude>
class ArgMax {
 public:
  // Returns true when the candidate became the new maximum.
  bool offer(std::size_t outcome, const Magnitude& m, bool equal_to_best) {
    if (!best_) {
      best_ = m;
      outcome_ = outcome;
      return true;
    }
    if (equal_to_best) {
      tied_ = true;
      return false;
    }
    if (m > *best_) {
      best_ = m;
      outcome_ = outcome;
      tied_ = false;
      return true;
    }
    return false;
  }
  const std::optional<Magnitude>& best() const { return best_; }
  std::size_t outcome() const { return outcome_; }
  bool tied() const { return tied_; }

 private:
  std::optional<Magnitude> best_;
  std::size_t outcome_ = 0;
  bool tied_ = false;
};

EffectScore event_score(const Rational& after, const Rational& before, const ScaleFunction& f,
                        CoordSet u) {
  EffectScore s;
  s.intervened = u;
  if (f.has_exact()) {
    const Rational diff = f.exact(after) - f.exact(before);
    s.exact = std::vector<Rational>{diff};
    s.value = {to_double(diff)};
  } else {
    s.value = {f(to_double(after)) - f(to_double(before))};
  }
  return s;
}

Rational expectation(const Measure& m, const RandomVariable& x) {
  Rational sum = 0;
  for (std::size_t o = 0; o < m.size(); ++o) sum += m.weight(o) * x(o);
  return sum;
}

}  // namespace

double ScaleFunction::operator()(double x) const { return real_(x); }

Rational ScaleFunction::exact(const Rational& x) const {
  if (!exact_) throw InvalidArgument("scale function '" + id_ + "' has no exact form");
  return exact_(x);
}

Rational scale_f1(const Rational& x) {
  if (x < 0 || x > 1) {
    throw DomainError("scale function argument " + fraction_string(x) + " outside [0,1]");
  }
  return x - Rational(1, 2);
}

double scale_f1(double x) {
  check_unit_interval(x);
  return x - 0.5;
}

double scale_f2(double x) {
  check_unit_interval(x);
  return std::sinh(x - 0.5) / (2.0 * std::sinh(0.5));
}

ScaleFunction f1() {
  return ScaleFunction(
      "f1", [](double x) { return scale_f1(x); },
      [](const Rational& x) { return scale_f1(x); });
}

ScaleFunction f2() {
  return ScaleFunction("f2", [](double x) { return scale_f2(x); });
}

std::vector<std::string> validate_scale_function(const ScaleFunction& f, double tolerance) {
  std::vector<std::string> problems;
  auto eval = [&](double x) -> std::optional<double> {
    try {
      return f(x);
    } catch (const std::exception& e) {
      problems.push_back("f(" + std::to_string(x) + ") failed: " + e.what());
      return std::nullopt;
    }
  };
  const std::pair<double, double> anchors[] = {{0.0, -0.5}, {0.5, 0.0}, {1.0, 0.5}};
  for (auto [x, want] : anchors) {
    auto y = eval(x);
    if (y && std::abs(*y - want) > tolerance) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "f(" << x << ") = " << *y << ", expected " << want;
      problems.push_back(msg.str());
    }
  }
  constexpr int kSteps = 1024;
  std::vector<std::optional<double>> grid(kSteps + 1);
  for (int i = 0; i <= kSteps; ++i) grid[i] = eval(static_cast<double>(i) / kSteps);
  for (int i = 0; i <= kSteps; ++i) {
    if (!grid[i]) continue;
    const double x = static_cast<double>(i) / kSteps;
    if (*grid[i] < -0.5 - tolerance || *grid[i] > 0.5 + tolerance) {
      problems.push_back("f(" + std::to_string(x) + ") leaves [-1/2, 1/2]");
    }
    if (i < kSteps && grid[i + 1] && *grid[i + 1] < *grid[i] - tolerance) {
      problems.push_back("f decreases after x = " + std::to_string(x));
    }
    if (grid[kSteps - i] && std::abs(*grid[i] + *grid[kSteps - i]) > tolerance) {
      problems.push_back("f(" + std::to_string(x) + ") != -f(1 - x)");
    }
  }
  return problems;
}

double EffectScore::norm() const {
  if (value.size() == 1) return std::abs(value.front());
  double sum = 0.0;
  for (double v : value) sum += v * v;
  return std::sqrt(sum);
}

EffectScore mean_effect_score_event(const CausalSpace& cs, const InterventionSpec& spec,
                                    const Event& a, const ScaleFunction& f) {
  const Rational after = intervention_measure(cs, spec)(a);
  return event_score(after, cs.observational()(a), f, spec.target);
}

EffectScore max_effect_score_event(const CausalSpace& cs, CoordSet u, const Event& b,
                                   const Event& a, const ScaleFunction& f) {
  const std::vector<std::size_t> rows = rows_reachable(cs, u, b);
  const CausalKernel& k = cs.kernel(u);
  const Rational pa = cs.observational()(a);
  std::optional<EffectScore> best;
  if (f.has_exact()) {
    ArgMax<Rational> arg;
    for (std::size_t o : rows) {
      EffectScore s = event_score(k(o, a), pa, f, u);
      const Rational m = abs((*s.exact)[0]);
      if (arg.offer(o, m, arg.best() && m == *arg.best())) best = std::move(s);
    }
    best->argmax = arg.outcome();
    best->tied = arg.tied();
  } else {
    ArgMax<double> arg;
    for (std::size_t o : rows) {
      EffectScore s = event_score(k(o, a), pa, f, u);
      const double m = s.norm();
      const bool equal = arg.best() && std::abs(m - *arg.best()) <= 1e-12;
      if (arg.offer(o, m, equal)) best = std::move(s);
    }
    best->argmax = arg.outcome();
    best->tied = arg.tied();
  }
  return *best;
}

std::vector<Rational> DifferenceFunctional::operator()(const Measure& mu, const Measure& nu,
                                                       const Partition& f,
                                                       const RandomVariable* x) const {
  if (mu.size() != nu.size() || f.universe_size() != mu.size()) {
    throw InvalidArgument("difference functional arguments live on different spaces");
  }
  if (needs_variable_) {
    if (x == nullptr) {
      throw MissingNumericVariable("difference functional '" + id_ + "' needs a random variable");
    }
    if (x->values().size() != mu.size()) throw InvalidArgument("random variable over a different space");
    if (!x->measurable_wrt(f)) {
      throw InvalidArgument("random variable is not measurable with respect to the target algebra");
    }
  }
  return fn_(mu, nu, f, x);
}

DifferenceFunctional mean_diff() {
  return DifferenceFunctional(
      "mean", 1, true,
      [](const Measure& mu, const Measure& nu, const Partition&, const RandomVariable* x) {
        return std::vector<Rational>{expectation(mu, *x) - expectation(nu, *x)};
      });
}

DifferenceFunctional variance_diff() {
  return DifferenceFunctional(
      "var", 1, true,
      [](const Measure& mu, const Measure& nu, const Partition&, const RandomVariable* x) {
        return std::vector<Rational>{mean_and_variance(mu, *x).second -
                                     mean_and_variance(nu, *x).second};
      });
}

DifferenceFunctional total_variation() {
  return DifferenceFunctional(
      "tv", 1, false,
      [](const Measure& mu, const Measure& nu, const Partition& f, const RandomVariable*) {
        Rational sum = 0;
        for (const auto& block : f.blocks()) {
          Rational d = 0;
          for (std::size_t o : block) d += mu.weight(o) - nu.weight(o);
          sum += abs(d);
        }
        return std::vector<Rational>{sum / 2};
      });
}

DifferenceFunctional mean_and_variance_diff() {
  return DifferenceFunctional(
      "mean+var", 2, true,
      [](const Measure& mu, const Measure& nu, const Partition&, const RandomVariable* x) {
        const auto [mm, mv] = mean_and_variance(mu, *x);
        const auto [nm, nv] = mean_and_variance(nu, *x);
        return std::vector<Rational>{mm - nm, mv - nv};
      });
}

std::vector<DifferenceFunctional> builtin_difference_functionals() {
  return {mean_diff(), variance_diff(), total_variation(), mean_and_variance_diff()};
}

DifferenceFunctional difference_functional(const std::string& id) {
  for (auto& d : builtin_difference_functionals()) {
    if (d.id() == id) return d;
  }
  throw InvalidArgument("unknown difference functional '" + id +
                        "' (expected mean, var, tv or mean+var)");
}

EffectScore mean_effect_score_algebra(const CausalSpace& cs, const InterventionSpec& spec,
                                      const Partition& f, const DifferenceFunctional& d,
                                      const RandomVariable* x) {
  const Measure after = intervention_measure(cs, spec);
  EffectScore s;
  s.intervened = spec.target;
  s.exact = d(after, cs.observational(), f, x);
  s.value = to_doubles(*s.exact);
  return s;
}

EffectScore max_effect_score_algebra(const CausalSpace& cs, CoordSet u, const Event& b,
                                     const Partition& f, const DifferenceFunctional& d,
                                     const RandomVariable* x) {
  const std::vector<std::size_t> rows = rows_reachable(cs, u, b);
  const CausalKernel& k = cs.kernel(u);
  ArgMax<Rational> arg;
  std::vector<Rational> best;
  for (std::size_t o : rows) {
    std::vector<Rational> v = d(k.row_at(o), cs.observational(), f, x);
    const Rational m = squared_norm(v);
    if (arg.offer(o, m, arg.best() && m == *arg.best())) best = std::move(v);
  }
  EffectScore s;
  s.intervened = u;
  s.value = to_doubles(best);
  s.exact = std::move(best);
  s.argmax = arg.outcome();
  s.tied = arg.tied();
  return s;
}

namespace {

// Label indices of the values 0 and 1 of a binary treatment coordinate.
std::pair<std::size_t, std::size_t> binary_labels(const Coordinate& c) {
  if (c.labels.size() != 2) {
    throw NonBinaryTreatment("treatment '" + c.id + "' has " + std::to_string(c.labels.size()) +
                             " labels, expected 2");
  }
  std::optional<std::size_t> zero, one;
  for (std::size_t i = 0; i < 2; ++i) {
    const bool is_zero = c.values ? (*c.values)[i] == 0 : c.labels[i] == "0";
    const bool is_one = c.values ? (*c.values)[i] == 1 : c.labels[i] == "1";
    if (is_zero) zero = i;
    if (is_one) one = i;
  }
  if (!zero || !one) throw NonBinaryTreatment("treatment '" + c.id + "' is not labeled {0, 1}");
  return {*zero, *one};
}

}  // namespace

Rational ate(const CausalSpace& cs, std::size_t treatment, const RandomVariable& y) {
  const ProductSpace& space = cs.space();
  if (treatment >= space.dimension()) throw InvalidArgument("treatment position out of range");
  const auto [zero, one] = binary_labels(space.coordinate(treatment));
  const CoordSet w{treatment};
  const InterventionSpec do0 = delta_intervention(space, w, space.splice(0, w, zero));
  const InterventionSpec do1 = delta_intervention(space, w, space.splice(0, w, one));

  const Rational direct = expectation(intervention_measure(cs, do1), y) -
                          expectation(intervention_measure(cs, do0), y);

  // Score of do(W = 1) taken in the space already intervened with W = 0.
  const CausalSpace after0 = intervene(cs, do0);
  const EffectScore sequential =
      mean_effect_score_algebra(after0, do1, y.partition(), mean_diff(), &y);
  if ((*sequential.exact)[0] != direct) {
    throw Error("sequential intervention identity failed: " +
                fraction_string((*sequential.exact)[0]) + " vs " + fraction_string(direct));
  }
  return direct;
}

}  // namespace cee
