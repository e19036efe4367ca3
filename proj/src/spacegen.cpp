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

#include "cee/spacegen.hpp"

#include <limits>

#include "cee/errors.hpp"

namespace cee {
namespace {

// Outcomes of the cylinder {ω : ω_S = r}.
std::vector<std::size_t> cylinder(const ProductSpace& space, CoordSet s, std::size_t r) {
  const std::size_t base = space.splice(0, s, r);
  const CoordSet rest = space.all() - s;
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < space.subset_size(rest); ++w) out.push_back(space.splice(base, rest, w));
  return out;
}

CausalKernel random_kernel(const SpacePtr& space, CoordSet s, std::uint32_t denominator,
                           SpaceRng& rng) {
  std::vector<Measure> rows;
  for (std::size_t r = 0; r < space->subset_size(s); ++r) {
    rows.push_back(random_measure(space, cylinder(*space, s, r), denominator, rng));
  }
  return CausalKernel(space, s, std::move(rows));
}

std::vector<std::size_t> everything(const ProductSpace& space) {
  std::vector<std::size_t> out(space.size());
  for (std::size_t o = 0; o < out.size(); ++o) out[o] = o;
  return out;
}

SpacePtr numbered_space(const std::vector<std::size_t>& label_counts) {
  std::vector<Coordinate> coords;
  for (std::size_t i = 0; i < label_counts.size(); ++i) {
    Coordinate c;
    c.id = "x" + std::to_string(i);
    std::vector<Rational> values;
    for (std::size_t l = 0; l < label_counts[i]; ++l) {
      c.labels.push_back(std::to_string(l));
      values.emplace_back(static_cast<long>(l));
    }
    c.values = std::move(values);
    coords.push_back(std::move(c));
  }
  return make_space(std::move(coords));
}

std::vector<std::size_t> random_label_counts(const GenConfig& cfg, std::size_t n, SpaceRng& rng) {
  std::vector<std::size_t> counts(n);
  for (auto& c : counts) c = rng.uniform(cfg.min_labels, cfg.max_labels);
  return counts;
}

// Probability vector over `n` labels with at least one positive entry.
std::vector<Rational> random_distribution(std::size_t n, std::uint32_t denominator, SpaceRng& rng) {
  std::vector<Rational> w(n);
  Rational total = 0;
  for (auto& x : w) {
    x = rng.chance(1, 4) ? 0 : static_cast<long>(rng.uniform(0, denominator));
    total += x;
  }
  if (total == 0) {
    w[rng.uniform(0, n - 1)] = 1;
    total = 1;
  }
  for (auto& x : w) x /= total;
  return w;
}

}  // namespace

void check_config(const GenConfig& cfg) {
  if (cfg.min_coordinates == 0 || cfg.min_labels == 0 || cfg.denominator == 0) {
    throw InvalidArgument("generator bounds must be at least 1");
  }
  if (cfg.min_coordinates > cfg.max_coordinates || cfg.min_labels > cfg.max_labels) {
    throw InvalidArgument("generator minimum exceeds maximum");
  }
  if (cfg.max_coordinates > 16) throw InvalidArgument("at most 16 generated coordinates");
}

std::size_t SpaceRng::uniform(std::size_t lo, std::size_t hi) {
  if (hi < lo) throw InvalidArgument("empty random range");
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  if (range == 0) return lo + engine_();
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<std::size_t>(x % range);
}

bool SpaceRng::chance(std::size_t numerator, std::size_t denominator) {
  return uniform(0, denominator - 1) < numerator;
}

Measure random_measure(SpacePtr space, const std::vector<std::size_t>& support,
                       std::uint32_t denominator, SpaceRng& rng) {
  if (support.empty()) throw InvalidArgument("random measure needs a nonempty support");
  const std::vector<Rational> local = random_distribution(support.size(), denominator, rng);
  std::vector<Rational> w(space->size());
  for (std::size_t i = 0; i < support.size(); ++i) w[support[i]] = local[i];
  return Measure(std::move(space), std::move(w));
}

Measure random_measure(SpacePtr space, std::uint32_t denominator, SpaceRng& rng) {
  const auto support = everything(*space);
  return random_measure(std::move(space), support, denominator, rng);
}

SpacePtr random_product_space(const GenConfig& cfg, SpaceRng& rng) {
  check_config(cfg);
  const std::size_t n = rng.uniform(cfg.min_coordinates, cfg.max_coordinates);
  return numbered_space(random_label_counts(cfg, n, rng));
}

CausalSpace gen_random_space(const GenConfig& cfg) {
  SpaceRng rng(cfg.seed);
  SpacePtr space = random_product_space(cfg, rng);
  Measure p = random_measure(space, cfg.denominator, rng);
  std::vector<CausalKernel> kernels;
  for (CoordSet s : all_subsets(space->all())) {
    if (s.empty()) continue;
    if (cfg.mode == GenConfig::Mode::kPartial && !rng.chance(1, 2)) continue;
    kernels.push_back(random_kernel(space, s, cfg.denominator, rng));
  }
  return CausalSpace(std::move(p), std::move(kernels));
}

CausalSpace gen_null_effect_space(const GenConfig& cfg, CoordSet u) {
  check_config(cfg);
  if (u.empty()) throw InvalidArgument("U must be nonempty");
  SpaceRng rng(cfg.seed);
  const auto positions = u.positions();
  std::size_t n = rng.uniform(cfg.min_coordinates, cfg.max_coordinates);
  n = std::max(n, positions.back() + 1);
  if (u == CoordSet::first(n)) ++n;
  SpacePtr space = numbered_space(random_label_counts(cfg, n, rng));
  const CoordSet rest = space->all() - u;

  // P_U on Ω_U and μ on Ω_{T∖U}, both as flat vectors over sub-indices.
  const std::vector<Rational> pu = random_distribution(space->subset_size(u), cfg.denominator, rng);
  const std::vector<Rational> mu = random_distribution(space->subset_size(rest), cfg.denominator, rng);

  std::vector<Rational> pw(space->size());
  for (std::size_t o = 0; o < space->size(); ++o) {
    pw[o] = pu[space->project(o, u)] * mu[space->project(o, rest)];
  }
  std::vector<CausalKernel> kernels;
  for (CoordSet s : all_subsets(space->all())) {
    if (s.empty()) continue;
    if (s == u) {
      std::vector<Measure> rows;
      for (std::size_t r = 0; r < space->subset_size(u); ++r) {
        std::vector<Rational> w(space->size());
        for (std::size_t o : cylinder(*space, u, r)) w[o] = mu[space->project(o, rest)];
        rows.emplace_back(space, std::move(w));
      }
      kernels.emplace_back(space, u, std::move(rows));
      continue;
    }
    if (cfg.mode == GenConfig::Mode::kPartial && !rng.chance(1, 2)) continue;
    kernels.push_back(random_kernel(space, s, cfg.denominator, rng));
  }
  return CausalSpace(Measure(space, std::move(pw)), std::move(kernels));
}

CausalSpace gen_product_space(const GenConfig& cfg) {
  SpaceRng rng(cfg.seed);
  SpacePtr space = random_product_space(cfg, rng);
  const std::size_t n = space->dimension();
  std::vector<std::vector<Rational>> marginals;
  for (std::size_t t = 0; t < n; ++t) {
    marginals.push_back(random_distribution(space->label_count(t), cfg.denominator, rng));
  }
  auto product_row = [&](CoordSet fixed, std::size_t base) {
    std::vector<Rational> w(space->size());
    for (std::size_t o = 0; o < space->size(); ++o) {
      Rational x = 1;
      for (std::size_t t = 0; t < n && x != 0; ++t) {
        const std::size_t l = space->label_of(o, t);
        if (fixed.contains(t)) {
          if (l != space->label_of(base, t)) x = 0;
        } else {
          x *= marginals[t][l];
        }
      }
      w[o] = x;
    }
    return Measure(space, std::move(w));
  };
  std::vector<CausalKernel> kernels;
  for (CoordSet s : all_subsets(space->all())) {
    if (s.empty()) continue;
    std::vector<Measure> rows;
    for (std::size_t r = 0; r < space->subset_size(s); ++r) {
      rows.push_back(product_row(s, space->splice(0, s, r)));
    }
    kernels.emplace_back(space, s, std::move(rows));
  }
  return CausalSpace(product_row(CoordSet{}, 0), std::move(kernels));
}

CausalSpace gen_network_space(SpacePtr space,
                              const std::vector<std::vector<std::size_t>>& parents,
                              std::uint32_t denominator, SpaceRng& rng) {
  const std::size_t n = space->dimension();
  if (parents.size() != n) throw InvalidArgument("one parent list per coordinate required");
  std::vector<CoordSet> parent_sets(n);
  std::vector<std::vector<std::vector<Rational>>> tables(n);
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t p : parents[t]) {
      if (p >= t) throw InvalidArgument("parents must precede their child");
      parent_sets[t] = parent_sets[t].with(p);
    }
    for (std::size_t c = 0; c < space->subset_size(parent_sets[t]); ++c) {
      tables[t].push_back(random_distribution(space->label_count(t), denominator, rng));
    }
  }
  auto row = [&](CoordSet fixed, std::size_t base) {
    std::vector<Rational> w(space->size());
    for (std::size_t o = 0; o < space->size(); ++o) {
      Rational x = 1;
      for (std::size_t t = 0; t < n && x != 0; ++t) {
        const std::size_t l = space->label_of(o, t);
        if (fixed.contains(t)) {
          if (l != space->label_of(base, t)) x = 0;
        } else {
          x *= tables[t][space->project(o, parent_sets[t])][l];
        }
      }
      w[o] = x;
    }
    return Measure(space, std::move(w));
  };
  std::vector<CausalKernel> kernels;
  for (CoordSet s : all_subsets(space->all())) {
    if (s.empty()) continue;
    std::vector<Measure> rows;
    for (std::size_t r = 0; r < space->subset_size(s); ++r) rows.push_back(row(s, space->splice(0, s, r)));
    kernels.emplace_back(space, s, std::move(rows));
  }
  return CausalSpace(row(CoordSet{}, 0), std::move(kernels));
}

MediatedSpace gen_mediated_space(const GenConfig& cfg) {
  check_config(cfg);
  SpaceRng rng(cfg.seed);
  const std::size_t n = std::max<std::size_t>(3, rng.uniform(cfg.min_coordinates, cfg.max_coordinates));
  GenConfig labels = cfg;
  labels.min_labels = std::max<std::size_t>(2, cfg.min_labels);
  labels.max_labels = std::max(labels.min_labels, cfg.max_labels);
  SpacePtr space = numbered_space(random_label_counts(labels, n, rng));
  std::vector<std::vector<std::size_t>> parents(n);
  parents[1] = {0};
  for (std::size_t t = 2; t < n; ++t) {
    for (std::size_t p = 1; p < t; ++p) {
      if (p == 1 || rng.chance(1, 2)) parents[t].push_back(p);
    }
  }
  return {gen_network_space(space, parents, cfg.denominator, rng), CoordSet{0}, CoordSet{1}};
}

DormantExample gen_dormant_space() {
  SpacePtr space = numbered_space({2, 2});
  const Rational half(1, 2);
  auto at = [&](std::size_t a, std::size_t b) { return space->index_of(Outcome{{a, b}}); };
  auto measure = [&](std::vector<std::pair<std::size_t, Rational>> cells) {
    std::vector<Rational> w(space->size());
    for (auto& [o, x] : cells) w[o] = x;
    return Measure(space, std::move(w));
  };
  Measure p = measure({{at(0, 0), half}, {at(1, 1), half}});
  CausalKernel k1(space, CoordSet{0},
                  {measure({{at(0, 0), 1}}), measure({{at(1, 1), 1}})});
  CausalKernel k2(space, CoordSet{1},
                  {measure({{at(0, 0), half}, {at(1, 0), half}}),
                   measure({{at(0, 1), half}, {at(1, 1), half}})});
  std::vector<Measure> deltas;
  for (std::size_t o = 0; o < space->size(); ++o) deltas.push_back(delta(space, o));
  CausalKernel k12(space, CoordSet{0, 1}, std::move(deltas));
  Event a(space->size());
  a.insert(at(0, 0));
  a.insert(at(1, 1));
  return {CausalSpace(std::move(p), {k1, k2, k12}), CoordSet{0}, at(0, 1), a};
}

namespace {

Event random_event(std::size_t n, SpaceRng& rng) {
  Event e(n);
  for (std::size_t o = 0; o < n; ++o) {
    if (rng.chance(1, 2)) e.insert(o);
  }
  return e;
}

Partition random_partition(std::size_t n, std::size_t max_blocks, SpaceRng& rng) {
  const std::size_t k = rng.uniform(1, std::max<std::size_t>(1, max_blocks));
  std::vector<std::size_t> keys(n);
  for (auto& key : keys) key = rng.uniform(0, k - 1);
  return Partition::from_keys(keys);
}

CoordSet random_subset(CoordSet universe, SpaceRng& rng) {
  CoordSet s;
  for (std::size_t p : universe.positions()) {
    if (rng.chance(1, 2)) s = s.with(p);
  }
  return s;
}

}  // namespace

EffectQuery gen_random_query(const CausalSpace& cs, SpaceRng& rng, std::size_t max_blocks) {
  const std::size_t n = cs.space().size();
  EffectQuery q;
  q.u = random_subset(cs.space().all(), rng);
  if (rng.chance(1, 4)) q.v = random_subset(cs.space().all(), rng);
  if (rng.chance(1, 2)) {
    q.subject = rng.uniform(0, n - 1);
  } else {
    Event b = random_event(n, rng);
    if (b.is_empty()) b.insert(rng.uniform(0, n - 1));
    q.subject = b;
  }
  if (rng.chance(1, 2)) {
    q.target = random_event(n, rng);
  } else {
    q.target = random_partition(n, max_blocks, rng);
  }
  if (!q.v) {
    switch (rng.uniform(0, 2)) {
      case 0: q.given = std::monostate{}; break;
      case 1: q.given = random_event(n, rng); break;
      default: q.given = random_partition(n, 4, rng); break;
    }
  }
  return q;
}

}  // namespace cee
