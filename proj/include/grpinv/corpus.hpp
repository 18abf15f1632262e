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

#ifndef GRPINV_CORPUS_HPP_
#define GRPINV_CORPUS_HPP_

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "grpinv/group.hpp"
#include "grpinv/group_spec.hpp"
#include "grpinv/iso.hpp"

namespace grpinv {

struct CorpusEntry {
  GroupSpec spec;
  FiniteGroup group;
};

namespace detail {

inline void add_if_new(std::vector<CorpusEntry>& corpus, GroupSpec spec, const BuildOptions& opt) {
  FiniteGroup g = build(spec, opt);
  const auto profile = sorted_profile(g);
  for (const auto& e : corpus) {
    if (e.group.order() != g.order()) continue;
    if (sorted_profile(e.group) != profile) continue;
    if (are_isomorphic(e.group, g)) return;
  }
  corpus.push_back({std::move(spec), std::move(g)});
}

}  // namespace detail

// The constructible groups of order <= max_order, one per isomorphism
// class: cyclic, dihedral, generalized quaternion, non-abelian C_q x| C_p,
// the permutation groups A4 and S4, powers of these, and all iterated direct
// products. Sorted by order; within an order, by discovery.
inline std::vector<CorpusEntry> family_corpus(std::size_t max_order) {
  BuildOptions opt;
  opt.max_order = std::max<std::size_t>(opt.max_order, max_order);
  std::vector<CorpusEntry> corpus;
  std::vector<GroupSpec> atoms;
  for (std::uint64_t n = 1; n <= max_order; ++n) atoms.push_back(GroupSpec::cyclic(n));
  for (std::uint64_t n = 3; 2 * n <= max_order; ++n) atoms.push_back(GroupSpec::dihedral(n));
  for (std::uint64_t m = 8; m <= max_order; m *= 2) atoms.push_back(GroupSpec::quaternion(m));
  for (std::uint64_t p = 2; p * p <= max_order; ++p) {
    for (std::uint64_t q = p + 1; p * q <= max_order; ++q) {
      if (detail::is_prime(p) && detail::is_prime(q) && (q - 1) % p == 0)
        atoms.push_back(GroupSpec::semidirect_pq(q, p));
    }
  }
  if (max_order >= 12) atoms.push_back(GroupSpec::perm_group({{{1, 2, 3}}, {{1, 2}, {3, 4}}}));
  if (max_order >= 24) atoms.push_back(GroupSpec::perm_group({{{1, 2, 3, 4}}, {{1, 2}}}));
  for (auto& a : atoms) detail::add_if_new(corpus, a, opt);

  // Powers first so elementary abelian groups get their C_p^n labels.
  for (const auto& a : atoms) {
    const std::uint64_t n = *predicted_order(a.kind == GroupSpec::Kind::kPermGroup
                                                 ? GroupSpec::cyclic(build(a, opt).order())
                                                 : a);
    if (n < 2) continue;
    std::uint64_t acc = n;
    for (std::uint64_t e = 2; acc * n <= max_order; ++e) {
      acc *= n;
      detail::add_if_new(corpus, GroupSpec::power(a, e), opt);
    }
  }

  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t current = corpus.size();
    for (std::size_t i = 0; i < current; ++i) {
      for (std::size_t j = i; j < current; ++j) {
        const auto& a = corpus[i];
        const auto& b = corpus[j];
        if (a.group.order() < 2 || b.group.order() < 2) continue;
        if (a.group.order() * b.group.order() > max_order) continue;
        const std::size_t before = corpus.size();
        detail::add_if_new(corpus, GroupSpec::product(a.spec, b.spec), opt);
        grew |= corpus.size() != before;
      }
    }
  }

  std::stable_sort(corpus.begin(), corpus.end(), [](const CorpusEntry& a, const CorpusEntry& b) {
    return a.group.order() < b.group.order();
  });
  return corpus;
}

}  // namespace grpinv

#endif  // GRPINV_CORPUS_HPP_
