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

#include "cee/causal_space.hpp"

#include <map>
#include <mutex>
#include <set>

#include "cee/errors.hpp"

namespace cee {

CausalKernel::CausalKernel(SpacePtr space, CoordSet on, std::vector<Measure> rows)
    : space_(std::move(space)), on_(on), rows_(std::move(rows)) {
  if (!on_.subset_of(space_->all())) throw InvalidArgument("kernel subset outside the space");
  if (rows_.size() != space_->subset_size(on_)) {
    throw InvalidArgument("kernel on " + space_->format_set(on_) + " has " +
                          std::to_string(rows_.size()) + " rows, expected " +
                          std::to_string(space_->subset_size(on_)));
  }
  for (const Measure& row : rows_) {
    if (!(row.space() == *space_)) throw InvalidArgument("kernel row on a different space");
  }
}

InterventionSpec delta_intervention(const ProductSpace& space, CoordSet target,
                                    std::size_t outcome) {
  auto small = std::make_shared<const ProductSpace>(space.restricted(target));
  return {target, delta(small, space.project(outcome, target))};
}

InterventionSpec uniform_intervention(const ProductSpace& space, CoordSet target) {
  return {target, Measure::uniform(std::make_shared<const ProductSpace>(space.restricted(target)))};
}

void throw_kernel_missing(const ProductSpace& space, CoordSet s) {
  throw KernelMissing(s, space.format_set(s));
}

// Source of kernels for a CausalSpace.
class Mechanism {
 public:
  virtual ~Mechanism() = default;
  virtual bool has(CoordSet s) const = 0;
  // Precondition: has(s).
  virtual const CausalKernel& get(CoordSet s) const = 0;
  virtual std::vector<CoordSet> subsets() const = 0;
  virtual const std::optional<CausalKernel>& supplied_empty() const {
    static const std::optional<CausalKernel> none;
    return none;
  }
  virtual bool intervened() const { return false; }
};

namespace {

CausalKernel observational_kernel(const Measure& p) {
  return CausalKernel(p.space_ptr(), CoordSet{}, std::vector<Measure>{p});
}

class StoredMechanism final : public Mechanism {
 public:
  StoredMechanism(const Measure& p, std::vector<CausalKernel> kernels) {
    kernels_.emplace(CoordSet{}, observational_kernel(p));
    for (CausalKernel& k : kernels) {
      if (!(k.space() == p.space())) throw InvalidArgument("kernel on a different space");
      if (k.on().empty()) {
        if (supplied_empty_) throw InvalidArgument("two kernels supplied for {}");
        supplied_empty_.emplace(std::move(k));
        continue;
      }
      const CoordSet on = k.on();
      if (!kernels_.emplace(on, std::move(k)).second) {
        throw InvalidArgument("two kernels supplied for " + p.space().format_set(on));
      }
    }
  }

  bool has(CoordSet s) const override { return kernels_.count(s) > 0; }
  const CausalKernel& get(CoordSet s) const override { return kernels_.at(s); }
  std::vector<CoordSet> subsets() const override {
    std::vector<CoordSet> out;
    for (const auto& [s, k] : kernels_) out.push_back(s);
    return out;
  }
  const std::optional<CausalKernel>& supplied_empty() const override { return supplied_empty_; }

 private:
  std::map<CoordSet, CausalKernel> kernels_;
  std::optional<CausalKernel> supplied_empty_;
};

// Kernels of P^{do(U,Q)}'s mechanism, computed from the parent on first use.
class InterventionMechanism final : public Mechanism {
 public:
  InterventionMechanism(CausalSpace parent, InterventionSpec spec)
      : parent_(std::move(parent)), spec_(std::move(spec)) {}

  bool has(CoordSet s) const override { return parent_.has_kernel(s | spec_.target); }

  const CausalKernel& get(CoordSet s) const override {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(s);
    if (it == cache_.end()) {
      it = cache_.emplace(s, intervention_kernel(parent_, spec_, s)).first;
    }
    return it->second;
  }

  std::vector<CoordSet> subsets() const override {
    std::set<CoordSet> out;
    for (CoordSet r : parent_.kernel_subsets()) {
      if (!spec_.target.subset_of(r)) continue;
      // Every S with S ∪ U = R.
      for (CoordSet extra : all_subsets(spec_.target)) out.insert((r - spec_.target) | extra);
    }
    return {out.begin(), out.end()};
  }

  bool intervened() const override { return true; }

 private:
  CausalSpace parent_;
  InterventionSpec spec_;
  mutable std::mutex mutex_;
  // std::map keeps references stable across insertions.
  mutable std::map<CoordSet, CausalKernel> cache_;
};

// Q pushed from Ω_U to Ω_W for W ⊆ U, as weights indexed by Ω_W.
std::vector<Rational> q_marginal(const ProductSpace& space, const InterventionSpec& spec,
                                 CoordSet w) {
  std::vector<Rational> out(space.subset_size(w));
  for (std::size_t u = 0; u < spec.q.size(); ++u) {
    if (spec.q.weight(u) == 0) continue;
    const std::size_t full = space.splice(0, spec.target, u);
    out[space.project(full, w)] += spec.q.weight(u);
  }
  return out;
}

void check_spec(const CausalSpace& cs, const InterventionSpec& spec) {
  if (!spec.target.subset_of(cs.space().all())) {
    throw InvalidArgument("intervention target outside the space");
  }
  if (!(spec.q.space() == cs.space().restricted(spec.target))) {
    throw InvalidArgument("intervention measure does not live on the target coordinates");
  }
}

}  // namespace

CausalSpace::CausalSpace(Measure observational, std::vector<CausalKernel> kernels)
    : observational_(std::move(observational)),
      mechanism_(std::make_shared<StoredMechanism>(observational_, std::move(kernels))) {}

CausalSpace::CausalSpace(Measure observational, std::shared_ptr<const Mechanism> mechanism)
    : observational_(std::move(observational)), mechanism_(std::move(mechanism)) {}

bool CausalSpace::has_kernel(CoordSet s) const {
  return s.subset_of(space().all()) && mechanism_->has(s);
}

const CausalKernel& CausalSpace::kernel(CoordSet s) const {
  if (!has_kernel(s)) throw_kernel_missing(space(), s);
  return mechanism_->get(s);
}

std::vector<CoordSet> CausalSpace::kernel_subsets() const { return mechanism_->subsets(); }

const std::optional<CausalKernel>& CausalSpace::supplied_empty_kernel() const {
  return mechanism_->supplied_empty();
}

bool CausalSpace::is_intervened() const { return mechanism_->intervened(); }

const char* to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::kObservationalNegative: return "observational-negative";
    case Violation::Kind::kObservationalSum: return "observational-sum";
    case Violation::Kind::kRowNegative: return "row-negative";
    case Violation::Kind::kRowSum: return "row-sum";
    case Violation::Kind::kSupport: return "support";
    case Violation::Kind::kEmptyKernel: return "empty-kernel";
  }
  return "?";
}

std::vector<Violation> validate(const CausalSpace& cs) {
  const ProductSpace& space = cs.space();
  std::vector<Violation> out;
  const Measure& p = cs.observational();
  for (std::size_t o = 0; o < p.size(); ++o) {
    if (p.weight(o) < 0) {
      out.push_back({Violation::Kind::kObservationalNegative, std::nullopt, std::nullopt, o,
                     p.weight(o), "P has negative weight at (" + space.format(o) + ")"});
    }
  }
  if (p.total() != 1) {
    out.push_back({Violation::Kind::kObservationalSum, std::nullopt, std::nullopt, std::nullopt,
                   p.total(), "P sums to " + fraction_string(p.total())});
  }

  for (CoordSet s : cs.kernel_subsets()) {
    if (s.empty()) continue;  // synthesized from P
    const CausalKernel& k = cs.kernel(s);
    const std::string name = "K_" + space.format_set(s);
    for (std::size_t r = 0; r < k.row_count(); ++r) {
      const Measure& row = k.row(r);
      const std::string where = name + " row (" + space.format_sub(s, r) + ")";
      for (std::size_t o = 0; o < row.size(); ++o) {
        const Rational& w = row.weight(o);
        if (w < 0) {
          out.push_back({Violation::Kind::kRowNegative, s, r, o, w,
                         where + " has negative weight at (" + space.format(o) + ")"});
        }
        if (w != 0 && space.project(o, s) != r) {
          out.push_back({Violation::Kind::kSupport, s, r, o, w,
                         where + " puts mass " + fraction_string(w) + " on (" +
                             space.format(o) + ") outside {ω_S = row}"});
        }
      }
      if (row.total() != 1) {
        out.push_back({Violation::Kind::kRowSum, s, r, std::nullopt, row.total(),
                       where + " sums to " + fraction_string(row.total())});
      }
    }
  }

  if (const auto& supplied = cs.supplied_empty_kernel()) {
    const Measure& row = supplied->row(0);
    for (std::size_t o = 0; o < row.size(); ++o) {
      if (row.weight(o) != p.weight(o)) {
        out.push_back({Violation::Kind::kEmptyKernel, CoordSet{}, 0, o, row.weight(o),
                       "supplied K_{} differs from P at (" + space.format(o) + ")"});
      }
    }
  }
  return out;
}

Measure intervention_measure(const CausalSpace& cs, const InterventionSpec& spec) {
  check_spec(cs, spec);
  const ProductSpace& space = cs.space();
  const CausalKernel& k = cs.kernel(spec.target);
  std::vector<Rational> w(space.size());
  for (std::size_t u = 0; u < spec.q.size(); ++u) {
    const Rational& qu = spec.q.weight(u);
    if (qu == 0) continue;
    const Measure& row = k.row(u);
    for (std::size_t o = 0; o < space.size(); ++o) w[o] += qu * row.weight(o);
  }
  return Measure(cs.space_ptr(), std::move(w));
}

CausalKernel intervention_kernel(const CausalSpace& cs, const InterventionSpec& spec,
                                 CoordSet s) {
  check_spec(cs, spec);
  const ProductSpace& space = cs.space();
  if (!s.subset_of(space.all())) throw InvalidArgument("kernel subset outside the space");
  const CoordSet joint = s | spec.target;
  const CoordSet free = spec.target - s;
  const CausalKernel& source = cs.kernel(joint);
  const std::vector<Rational> q_free = q_marginal(space, spec, free);

  std::vector<Measure> rows;
  rows.reserve(space.subset_size(s));
  for (std::size_t r = 0; r < space.subset_size(s); ++r) {
    const std::size_t base = space.splice(0, s, r);
    std::vector<Rational> w(space.size());
    for (std::size_t f = 0; f < q_free.size(); ++f) {
      if (q_free[f] == 0) continue;
      const std::size_t key = space.splice(base, free, f);
      const Measure& row = source.row_at(key);
      for (std::size_t o = 0; o < space.size(); ++o) w[o] += q_free[f] * row.weight(o);
    }
    rows.emplace_back(cs.space_ptr(), std::move(w));
  }
  return CausalKernel(cs.space_ptr(), s, std::move(rows));
}

CausalSpace intervene(const CausalSpace& cs, const InterventionSpec& spec) {
  Measure p = intervention_measure(cs, spec);
  return CausalSpace(std::move(p), std::make_shared<InterventionMechanism>(cs, spec));
}

CausalSpace marginalize(const CausalSpace& cs, CoordSet keep, bool require_full_family) {
  const ProductSpace& space = cs.space();
  if (!keep.subset_of(space.all())) throw InvalidArgument("coordinate subset outside the space");
  Measure p = marginal(cs.observational(), keep);
  const auto& small = p.space_ptr();
  const auto keep_positions = keep.positions();

  std::vector<CausalKernel> kernels;
  for (CoordSet s : all_subsets(keep)) {
    if (s.empty()) continue;
    if (!cs.has_kernel(s)) {
      if (require_full_family) throw_kernel_missing(space, s);
      continue;
    }
    // S in the small space's positions.
    CoordSet small_s;
    for (std::size_t i = 0; i < keep_positions.size(); ++i) {
      if (s.contains(keep_positions[i])) small_s = small_s.with(i);
    }
    const CausalKernel& k = cs.kernel(s);
    std::vector<Measure> rows;
    for (const Measure& row : k.rows()) {
      Measure m = marginal(row, keep);
      rows.emplace_back(small, std::vector<Rational>(m.weights().begin(), m.weights().end()));
    }
    kernels.emplace_back(small, small_s, std::move(rows));
  }
  return CausalSpace(std::move(p), std::move(kernels));
}

bool same_on_common_kernels(const CausalSpace& a, const CausalSpace& b) {
  if (!(a.observational() == b.observational())) return false;
  for (CoordSet s : a.kernel_subsets()) {
    if (!b.has_kernel(s)) continue;
    if (!(a.kernel(s) == b.kernel(s))) return false;
  }
  return true;
}

bool is_marginalization_of(const CausalSpace& small, const CausalSpace& large) {
  const ProductSpace& ss = small.space();
  const ProductSpace& ls = large.space();
  CoordSet keep;
  std::size_t last = 0;
  bool first = true;
  for (const Coordinate& c : ss.coordinates()) {
    std::size_t p = 0;
    try {
      p = ls.position_of(c.id);
    } catch (const UnknownCoordinate&) {
      throw CoordinateMismatch("coordinate '" + c.id + "' is not in the larger space");
    }
    if (ls.coordinate(p).labels != c.labels) {
      throw CoordinateMismatch("coordinate '" + c.id + "' has different labels");
    }
    if (!first && p <= last) {
      throw CoordinateMismatch("coordinates are not in the larger space's order");
    }
    keep = keep.with(p);
    last = p;
    first = false;
  }
  const CausalSpace projected = marginalize(large, keep);
  if (!(projected.observational().weights().size() == small.observational().size())) return false;
  for (std::size_t o = 0; o < small.observational().size(); ++o) {
    if (projected.observational().weight(o) != small.observational().weight(o)) return false;
  }
  for (CoordSet s : small.kernel_subsets()) {
    if (s.empty() || !projected.has_kernel(s)) continue;
    const CausalKernel& mine = small.kernel(s);
    const CausalKernel& theirs = projected.kernel(s);
    for (std::size_t r = 0; r < mine.row_count(); ++r) {
      if (mine.row(r).weights().size() != theirs.row(r).weights().size()) return false;
      for (std::size_t o = 0; o < mine.row(r).size(); ++o) {
        if (mine.row(r).weight(o) != theirs.row(r).weight(o)) return false;
      }
    }
  }
  return true;
}

}  // namespace cee
