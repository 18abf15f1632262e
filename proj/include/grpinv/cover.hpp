// Copyright 2026 The grpinv Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GRPINV_COVER_HPP_
#define GRPINV_COVER_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "grpinv/errors.hpp"
#include "grpinv/ext_nat.hpp"
#include "grpinv/lattice.hpp"

namespace grpinv {

using PointSet = boost::dynamic_bitset<std::uint64_t>;

// Minimum set-cover problem. Construction drops empty, duplicate and
// dominated candidates (those strictly inside another), keeping the
// survivors in input order; origin(i) maps back to the input position.
class CoverInstance {
 public:
  CoverInstance(std::size_t universe_size, const std::vector<PointSet>& candidates)
      : universe_size_(universe_size) {
    for (const auto& c : candidates)
      if (c.size() != universe_size) throw std::invalid_argument("candidate width mismatch");
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const PointSet& c = candidates[i];
      if (c.none()) continue;
      bool dominated = false;
      for (std::size_t j = 0; j < candidates.size() && !dominated; ++j) {
        if (j == i || !c.is_subset_of(candidates[j])) continue;
        // Equal sets: the earliest copy survives.
        dominated = c != candidates[j] || j < i;
      }
      if (dominated) continue;
      candidates_.push_back(c);
      origin_.push_back(i);
    }
    PointSet reach(universe_size_);
    for (const auto& c : candidates_) reach |= c;
    feasible_ = reach.all();
    covering_.resize(universe_size_);
    for (std::size_t c = 0; c < candidates_.size(); ++c)
      for (auto p = candidates_[c].find_first(); p != PointSet::npos; p = candidates_[c].find_next(p))
        covering_[p].push_back(c);
  }

  // Convenience form: candidates as point-index lists.
  CoverInstance(std::size_t universe_size, const std::vector<std::vector<std::size_t>>& candidates)
      : CoverInstance(universe_size, to_sets(universe_size, candidates)) {}

  std::size_t universe_size() const { return universe_size_; }
  const std::vector<PointSet>& candidates() const { return candidates_; }
  std::size_t origin(std::size_t i) const { return origin_[i]; }
  bool feasible() const { return feasible_; }
  // Candidates containing point p, ascending.
  const std::vector<std::size_t>& covering(std::size_t p) const { return covering_[p]; }

 private:
  static std::vector<PointSet> to_sets(std::size_t n, const std::vector<std::vector<std::size_t>>& lists) {
    std::vector<PointSet> out;
    for (const auto& l : lists) {
      PointSet s(n);
      for (auto p : l) {
        if (p >= n) throw std::invalid_argument("candidate point out of range");
        s.set(p);
      }
      out.push_back(std::move(s));
    }
    return out;
  }

  std::size_t universe_size_;
  std::vector<PointSet> candidates_;
  std::vector<std::size_t> origin_;
  std::vector<std::vector<std::size_t>> covering_;
  bool feasible_ = false;
};

struct CoverSolution {
  ExtNat value = ExtNat::infinite();
  // Ascending candidate indices into CoverInstance::candidates().
  std::vector<std::size_t> certificate;
  std::uint64_t nodes = 0;
};

struct CoverOptions {
  std::uint64_t node_budget = 100'000'000;
  // Test hook: added to every finite optimum to simulate a broken solver.
  std::uint64_t fault_offset = 0;
};

namespace detail {

class CoverSearch {
 public:
  CoverSearch(const CoverInstance& inst, const CoverOptions& opt) : inst_(inst), opt_(opt) {}

  std::uint64_t nodes() const { return nodes_; }

  std::vector<std::size_t> greedy() const {
    PointSet uncovered(inst_.universe_size());
    uncovered.set();
    std::vector<std::size_t> chosen;
    while (uncovered.any()) {
      std::size_t best = 0, gain = 0;
      for (std::size_t c = 0; c < inst_.candidates().size(); ++c) {
        const std::size_t g = (inst_.candidates()[c] & uncovered).count();
        if (g > gain) {
          gain = g;
          best = c;
        }
      }
      chosen.push_back(best);
      uncovered -= inst_.candidates()[best];
    }
    return chosen;
  }

  // Optimal size by depth-first branch and bound, seeded with `upper`.
  std::size_t optimum(std::size_t upper) {
    best_ = upper;
    PointSet uncovered(inst_.universe_size());
    uncovered.set();
    minimize(uncovered, 0);
    return best_;
  }

  // Is there a cover of `uncovered` by at most `budget` candidates with
  // index >= min_index?
  bool feasible(const PointSet& uncovered, std::size_t budget, std::size_t min_index) {
    tick();
    if (uncovered.none()) return true;
    if (budget == 0) return false;
    if (lower_bound(uncovered, min_index) > budget) return false;
    const std::size_t p = branch_point(uncovered, min_index);
    for (std::size_t c : inst_.covering(p)) {
      if (c < min_index) continue;
      if (feasible(uncovered - inst_.candidates()[c], budget - 1, min_index)) return true;
    }
    return false;
  }

 private:
  void tick() {
    if (++nodes_ > opt_.node_budget)
      throw BudgetExceeded("cover search exceeded node budget of " + std::to_string(opt_.node_budget));
  }

  void minimize(const PointSet& uncovered, std::size_t depth) {
    tick();
    if (uncovered.none()) {
      best_ = std::min(best_, depth);
      return;
    }
    if (depth + lower_bound(uncovered, 0) >= best_) return;
    const std::size_t p = branch_point(uncovered, 0);
    for (std::size_t c : inst_.covering(p)) minimize(uncovered - inst_.candidates()[c], depth + 1);
  }

  // ceil(uncovered / largest number of uncovered points one candidate hits);
  // unbounded when nothing usable remains.
  std::size_t lower_bound(const PointSet& uncovered, std::size_t min_index) const {
    std::size_t widest = 0;
    for (std::size_t c = min_index; c < inst_.candidates().size(); ++c)
      widest = std::max(widest, (inst_.candidates()[c] & uncovered).count());
    if (widest == 0) return ~std::size_t{0} / 2;
    const std::size_t n = uncovered.count();
    return (n + widest - 1) / widest;
  }

  // Uncovered point with the fewest usable covering candidates.
  std::size_t branch_point(const PointSet& uncovered, std::size_t min_index) const {
    std::size_t best = PointSet::npos, fewest = ~std::size_t{0};
    for (auto p = uncovered.find_first(); p != PointSet::npos; p = uncovered.find_next(p)) {
      const auto& cov = inst_.covering(p);
      const std::size_t usable = static_cast<std::size_t>(
          cov.end() - std::lower_bound(cov.begin(), cov.end(), min_index));
      if (usable < fewest) {
        fewest = usable;
        best = p;
      }
    }
    return best;
  }

  const CoverInstance& inst_;
  const CoverOptions& opt_;
  std::uint64_t nodes_ = 0;
  std::size_t best_ = 0;
};

}  // namespace detail

// Exact minimum cover. Among optimal covers the certificate is the
// lexicographically least ascending index list. Infinite when some point is
// in no candidate; throws BudgetExceeded past opt.node_budget search nodes.
inline CoverSolution min_cover(const CoverInstance& inst, const CoverOptions& opt = {}) {
  CoverSolution sol;
  if (inst.universe_size() == 0) throw std::invalid_argument("empty universe");
  if (!inst.feasible()) return sol;
  detail::CoverSearch search(inst, opt);
  const std::size_t k = search.optimum(search.greedy().size());

  PointSet uncovered(inst.universe_size());
  uncovered.set();
  std::size_t start = 0;
  for (std::size_t step = 0; step < k; ++step) {
    for (std::size_t c = start; c < inst.candidates().size(); ++c) {
      const PointSet rest = uncovered - inst.candidates()[c];
      if (search.feasible(rest, k - step - 1, c + 1)) {
        sol.certificate.push_back(c);
        uncovered = rest;
        start = c + 1;
        break;
      }
    }
  }
  if (sol.certificate.size() != k || uncovered.any())
    throw std::logic_error("min_cover: certificate extraction failed");
  sol.value = ExtNat::finite(k + opt.fault_offset);
  sol.nodes = search.nodes();
  return sol;
}

// Certificate covers the universe, is irredundant, and has |value| members.
inline bool validate_cover(const CoverInstance& inst, const CoverSolution& sol) {
  if (!sol.value.is_finite() || sol.certificate.size() != sol.value.value()) return false;
  const auto& cands = inst.candidates();
  std::vector<std::size_t> sorted = sol.certificate;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  PointSet all(inst.universe_size());
  for (auto c : sol.certificate) {
    if (c >= cands.size()) return false;
    all |= cands[c];
  }
  if (!all.all()) return false;
  for (std::size_t skip = 0; skip < sol.certificate.size(); ++skip) {
    PointSet rest(inst.universe_size());
    for (std::size_t i = 0; i < sol.certificate.size(); ++i)
      if (i != skip) rest |= cands[sol.certificate[i]];
    if (rest.all()) return false;
  }
  return true;
}

// |A_1 u ... u A_k| via the alternating sum of intersection sizes over all
// nonempty index subsets. Limited to k <= 20.
inline std::uint64_t inclusion_exclusion_cardinality(std::span<const Subgroup> sets) {
  if (sets.size() > 20) throw TooManySets("inclusion-exclusion limited to 20 sets");
  if (sets.empty()) return 0;
  const std::size_t width = sets.front().parent_order();
  for (const auto& s : sets)
    if (s.parent_order() != width) throw std::invalid_argument("subgroups from different groups");
  std::int64_t total = 0;
  // Depth-first over subsets, carrying the running intersection.
  std::function<void(std::size_t, const ElementSet&, std::size_t)> walk =
      [&](std::size_t next, const ElementSet& inter, std::size_t depth) {
        for (std::size_t i = next; i < sets.size(); ++i) {
          const ElementSet meet = depth == 0 ? sets[i].members() : (inter & sets[i].members());
          const auto n = static_cast<std::int64_t>(meet.count());
          total += (depth % 2 == 0) ? n : -n;
          walk(i + 1, meet, depth + 1);
        }
      };
  walk(0, ElementSet(width), 0);
  return static_cast<std::uint64_t>(total);
}

}  // namespace grpinv

#endif  // GRPINV_COVER_HPP_
