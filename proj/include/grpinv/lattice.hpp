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

#ifndef GRPINV_LATTICE_HPP_
#define GRPINV_LATTICE_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "grpinv/errors.hpp"
#include "grpinv/ext_nat.hpp"
#include "grpinv/group.hpp"

namespace grpinv {

// Membership mask over the elements of a parent group.
using ElementSet = boost::dynamic_bitset<std::uint64_t>;

class Subgroup {
 public:
  Subgroup(ElementSet members, std::vector<Element> generators, bool cyclic)
      : members_(std::move(members)),
        order_(members_.count()),
        generators_(std::move(generators)),
        cyclic_(cyclic) {}

  const ElementSet& members() const { return members_; }
  std::size_t order() const { return order_; }
  std::size_t parent_order() const { return members_.size(); }
  bool contains(Element a) const { return members_.test(a); }
  bool is_cyclic() const { return cyclic_; }
  bool is_trivial() const { return order_ == 1; }
  bool is_whole() const { return order_ == members_.size(); }
  // Elements whose closure is this subgroup (not necessarily minimal).
  std::span<const Element> generators() const { return generators_; }

  bool is_subset_of(const Subgroup& other) const { return members_.is_subset_of(other.members_); }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(order_);
    for (auto i = members_.find_first(); i != ElementSet::npos; i = members_.find_next(i))
      out.push_back(static_cast<Element>(i));
    return out;
  }

  bool operator==(const Subgroup& other) const { return members_ == other.members_; }

 private:
  ElementSet members_;
  std::size_t order_;
  std::vector<Element> generators_;
  bool cyclic_;
};

// Canonical order: by order, then by the ascending element list.
inline bool canonical_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  const ElementSet diff = a.members() ^ b.members();
  const auto first = diff.find_first();
  if (first == ElementSet::npos) return false;
  // Equal sizes: whichever holds the smallest differing element sorts first.
  return a.members().test(first);
}

struct SubgroupLattice {
  std::vector<Subgroup> all;             // canonical order
  std::vector<std::size_t> maximal;      // maximal proper subgroups
  std::vector<std::size_t> maximal_cyclic;

  std::vector<Subgroup> select(std::span<const std::size_t> indices) const {
    std::vector<Subgroup> out;
    for (auto i : indices) out.push_back(all[i]);
    return out;
  }
};

struct LatticeOptions {
  std::size_t max_subgroups = 200'000;
};

namespace detail {

inline bool has_generator_of_order(const FiniteGroup& g, const ElementSet& members,
                                   std::size_t order) {
  for (auto i = members.find_first(); i != ElementSet::npos; i = members.find_next(i))
    if (g.element_order(static_cast<Element>(i)) == order) return true;
  return false;
}

}  // namespace detail

// Least subgroup containing `base` and `extra`. Grows the union of right
// cosets of `base`, so the cost is linear in the result's order.
inline Subgroup extend(const FiniteGroup& g, const Subgroup& base, Element extra) {
  if (base.contains(extra)) return base;
  ElementSet members = base.members();
  const std::vector<Element> base_elems = base.elements();
  std::vector<Element> gens(base.generators().begin(), base.generators().end());
  gens.push_back(extra);
  std::vector<Element> reps{FiniteGroup::identity()};
  for (std::size_t r = 0; r < reps.size(); ++r) {
    for (Element s : gens) {
      const Element x = g.mul(reps[r], s);
      if (members.test(x)) continue;
      reps.push_back(x);
      for (Element h : base_elems) members.set(g.mul(h, x));
    }
  }
  const std::size_t order = members.count();
  const bool cyclic = detail::has_generator_of_order(g, members, order);
  return Subgroup(std::move(members), std::move(gens), cyclic);
}

inline Subgroup trivial_subgroup(const FiniteGroup& g) {
  ElementSet members(g.order());
  members.set(FiniteGroup::identity());
  return Subgroup(std::move(members), {}, true);
}

inline Subgroup whole_group(const FiniteGroup& g) {
  ElementSet members(g.order());
  members.set();
  std::vector<Element> gens;
  for (Element a = 1; a < g.order(); ++a) gens.push_back(a);
  return Subgroup(std::move(members), std::move(gens), g.is_cyclic());
}

// Least subgroup containing every element of `seed`.
inline Subgroup closure(const FiniteGroup& g, std::span<const Element> seed) {
  Subgroup acc = trivial_subgroup(g);
  for (Element a : seed) acc = extend(g, acc, a);
  return acc;
}

inline Subgroup closure(const FiniteGroup& g, const ElementSet& seed) {
  Subgroup acc = trivial_subgroup(g);
  for (auto i = seed.find_first(); i != ElementSet::npos; i = seed.find_next(i))
    acc = extend(g, acc, static_cast<Element>(i));
  return acc;
}

inline Subgroup cyclic_subgroup(const FiniteGroup& g, Element a) {
  ElementSet members(g.order());
  Element x = FiniteGroup::identity();
  do {
    members.set(x);
    x = g.mul(x, a);
  } while (x != FiniteGroup::identity());
  std::vector<Element> gens;
  if (a != FiniteGroup::identity()) gens.push_back(a);
  return Subgroup(std::move(members), std::move(gens), true);
}

// {<g> : g in G} without duplicates, in canonical order.
inline std::vector<Subgroup> cyclic_subgroups(const FiniteGroup& g) {
  std::vector<Subgroup> out;
  ElementSet covered_generators(g.order());
  for (Element a = 0; a < g.order(); ++a) {
    if (covered_generators.test(a)) continue;
    Subgroup c = cyclic_subgroup(g, a);
    // Every generator of <a> is a power a^k with gcd(k, ord a) = 1.
    const std::uint32_t n = g.element_order(a);
    for (std::uint32_t k = 1; k <= n; ++k)
      if (std::gcd(k, n) == 1) covered_generators.set(g.power(a, k));
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

// The inclusion-maximal members (among the cyclic ones when requested), in
// canonical order. Input must be duplicate-free.
inline std::vector<Subgroup> maximal_filter(std::span<const Subgroup> subgroups,
                                            bool restrict_to_cyclic) {
  std::vector<const Subgroup*> pool;
  for (const auto& s : subgroups)
    if (!restrict_to_cyclic || s.is_cyclic()) pool.push_back(&s);
  std::stable_sort(pool.begin(), pool.end(),
                   [](const Subgroup* a, const Subgroup* b) { return a->order() > b->order(); });
  // A member is non-maximal iff it lies inside some maximal member, and all
  // strictly larger maximal members precede it in this order.
  std::vector<const Subgroup*> found;
  for (const Subgroup* s : pool) {
    bool dominated = std::any_of(found.begin(), found.end(), [s](const Subgroup* m) {
      return m->order() > s->order() && s->is_subset_of(*m);
    });
    if (!dominated) found.push_back(s);
  }
  std::vector<Subgroup> out;
  for (const Subgroup* s : found) out.push_back(*s);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

// Complete subgroup lattice by layered join-closure: seed with the cyclic
// subgroups, then join every known subgroup with every cyclic subgroup of
// prime-power order until nothing new appears. Every subgroup is generated
// by its prime-power-order elements, so the fixed point is complete.
inline SubgroupLattice all_subgroups(const FiniteGroup& g, const LatticeOptions& opt = {}) {
  std::vector<Subgroup> list = cyclic_subgroups(g);
  std::unordered_map<ElementSet, std::size_t> seen;
  for (std::size_t i = 0; i < list.size(); ++i) seen.emplace(list[i].members(), i);

  std::vector<Element> atoms;
  for (const auto& c : list) {
    if (c.is_trivial()) continue;
    std::uint32_t n = static_cast<std::uint32_t>(c.order());
    std::uint32_t p = 2;
    while (n % p != 0) ++p;
    while (n % p == 0) n /= p;
    if (n == 1) atoms.push_back(c.generators().front());
  }
  if (list.size() > opt.max_subgroups) throw BudgetExceeded("subgroup count exceeds budget");

  for (std::size_t i = 0; i < list.size(); ++i) {
    for (Element a : atoms) {
      if (list[i].contains(a)) continue;
      Subgroup joined = extend(g, list[i], a);
      if (seen.emplace(joined.members(), list.size()).second) {
        list.push_back(std::move(joined));
        if (list.size() > opt.max_subgroups)
          throw BudgetExceeded("subgroup count exceeds budget of " +
                               std::to_string(opt.max_subgroups));
      }
    }
  }

  SubgroupLattice lattice;
  std::sort(list.begin(), list.end(), canonical_less);
  lattice.all = std::move(list);

  std::unordered_map<ElementSet, std::size_t> position;
  for (std::size_t i = 0; i < lattice.all.size(); ++i) position.emplace(lattice.all[i].members(), i);
  std::vector<Subgroup> proper(lattice.all.begin(), lattice.all.end() - 1);
  for (const auto& s : maximal_filter(proper, false)) lattice.maximal.push_back(position.at(s.members()));
  for (const auto& s : maximal_filter(lattice.all, true))
    lattice.maximal_cyclic.push_back(position.at(s.members()));
  return lattice;
}

// True iff every proper subgroup is cyclic.
inline bool all_proper_subgroups_cyclic(const SubgroupLattice& lattice) {
  return std::all_of(lattice.all.begin(), lattice.all.end(),
                     [](const Subgroup& s) { return s.is_whole() || s.is_cyclic(); });
}

inline std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

// Sum over x != 1 of 1/phi(ord x), i.e. the number of nontrivial cyclic
// subgroups. Elements of order d come in blocks of phi(d) generators, so
// every partial sum is integral. Infinite for cyclic G.
inline ExtNat totient_cover_bound(const FiniteGroup& g) {
  if (g.is_cyclic()) return ExtNat::infinite();
  std::map<std::uint32_t, std::uint64_t> count;
  for (Element a = 1; a < g.order(); ++a) ++count[g.element_order(a)];
  std::uint64_t total = 0;
  for (auto [d, c] : count) {
    const std::uint64_t phi = euler_phi(d);
    if (c % phi != 0) throw std::logic_error("element count not divisible by phi(d)");
    total += c / phi;
  }
  return ExtNat::finite(total);
}

}  // namespace grpinv

#endif  // GRPINV_LATTICE_HPP_
