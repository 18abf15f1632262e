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

// Brute-force reference computations used only by the tests. None of these
// share code paths with the library algorithms they check.

#ifndef GRPINV_TESTS_ORACLES_HPP_
#define GRPINV_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <random>
#include <set>
#include <vector>

#include "grpinv/group.hpp"

namespace grpinv::oracle {

// Every identity-containing subset closed under the operation, as sorted
// element lists. Depth-first over include/exclude decisions; a branch dies
// as soon as the product of two included elements was already excluded.
inline std::set<std::vector<Element>> subgroups_by_subset_filter(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::set<std::vector<Element>> out;
  std::vector<int> state(n, -1);  // -1 undecided, 0 out, 1 in
  state[0] = 1;
  std::vector<Element> in{0};
  auto closed = [&] {
    for (Element a : in)
      for (Element b : in)
        if (state[g.mul(a, b)] != 1) return false;
    return true;
  };
  auto rec = [&](auto&& self, Element x) -> void {
    if (x == n) {
      if (closed()) {
        std::vector<Element> s = in;
        std::sort(s.begin(), s.end());
        out.insert(s);
      }
      return;
    }
    // exclude x
    state[x] = 0;
    bool ok = true;
    for (Element a : in) {
      for (Element b : in) {
        if (g.mul(a, b) == x) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) self(self, x + 1);
    // include x
    state[x] = 1;
    in.push_back(x);
    ok = true;
    for (Element a : in) {
      const Element p = g.mul(a, x), q = g.mul(x, a);
      if ((p <= x && state[p] == 0) || (q <= x && state[q] == 0)) {
        ok = false;
        break;
      }
    }
    if (ok) self(self, x + 1);
    in.pop_back();
    state[x] = -1;
  };
  rec(rec, 1);
  return out;
}

// <a> by repeated multiplication.
inline std::vector<Element> power_closure(const FiniteGroup& g, Element a) {
  std::vector<Element> out{0};
  for (Element x = a; x != 0; x = g.mul(x, a)) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

// Tries every bijection fixing the identity.
inline bool isomorphic_by_bijection_scan(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() != h.order()) return false;
  std::vector<Element> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0u);
  do {
    bool hom = true;
    for (Element a = 0; a < g.order() && hom; ++a)
      for (Element b = 0; b < g.order() && hom; ++b)
        hom = perm[g.mul(a, b)] == h.mul(perm[a], perm[b]);
    if (hom) return true;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return false;
}

// Minimum cover by enumerating index subsets by size, lexicographically
// within a size. Sets are bitmasks over at most 64 points. Returns the first
// (lexicographically least) optimal subset, or nullopt if none covers.
inline std::optional<std::vector<std::size_t>> min_cover_by_enumeration(
    const std::vector<std::uint64_t>& sets, std::size_t universe) {
  const std::uint64_t full = universe == 64 ? ~0ull : ((1ull << universe) - 1);
  const std::size_t m = sets.size();
  for (std::size_t k = 1; k <= m; ++k) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::uint64_t u = 0;
      for (auto i : idx) u |= sets[i];
      if (u == full) return idx;
      std::size_t pos = k;
      while (pos > 0 && idx[pos - 1] == m - k + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

// Injective homomorphism K -> H by assigning images element by element in
// index order, checking every product whose three terms are assigned.
inline bool embeds_by_backtracking(const FiniteGroup& k, const FiniteGroup& h) {
  const std::size_t n = k.order();
  if (h.order() % n) return false;
  std::vector<Element> img(n, 0);
  std::vector<bool> assigned(n, false), used(h.order(), false);
  img[0] = 0;
  assigned[0] = used[0] = true;
  auto ok = [&](Element x) {
    for (Element a = 0; a < n; ++a) {
      if (!assigned[a]) continue;
      for (auto [l, r] : {std::pair{a, x}, std::pair{x, a}}) {
        const Element prod = k.mul(l, r);
        if (assigned[prod] && img[prod] != h.mul(img[l], img[r])) return false;
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, Element x) -> bool {
    if (x == n) return true;
    for (Element y = 1; y < h.order(); ++y) {
      if (used[y]) continue;
      img[x] = y;
      assigned[x] = used[y] = true;
      if (ok(x) && self(self, x + 1)) return true;
      assigned[x] = used[y] = false;
    }
    return false;
  };
  return rec(rec, 1);
}

// The subgroup on a sorted element list, relabelled 0..m-1.
inline FiniteGroup subgroup_as_group(const FiniteGroup& g, const std::vector<Element>& elems) {
  std::vector<Element> local(g.order(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i) local[elems[i]] = static_cast<Element>(i);
  std::vector<Element> table;
  for (Element a : elems)
    for (Element b : elems) table.push_back(local[g.mul(a, b)]);
  return FiniteGroup(elems.size(), table, "sub");
}

inline std::uint64_t mask_of(const std::vector<Element>& elems) {
  std::uint64_t m = 0;
  for (Element a : elems) m |= 1ull << a;
  return m;
}

// Drops masks strictly contained in another (and later duplicates).
inline std::vector<std::uint64_t> maximal_masks(const std::vector<std::uint64_t>& masks) {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < masks.size() && keep; ++j)
      if (i != j && (masks[i] & masks[j]) == masks[i]) keep = masks[i] != masks[j] ? false : i < j;
    if (keep) out.push_back(masks[i]);
  }
  return out;
}

// Least number of subgroups satisfying `admissible` that cover G (|G| <= 64),
// or 0 when none do.
template <typename Pred>
std::size_t cover_number(const FiniteGroup& g, Pred admissible) {
  std::vector<std::uint64_t> masks;
  for (const auto& s : subgroups_by_subset_filter(g))
    if (admissible(s)) masks.push_back(mask_of(s));
  const auto best = min_cover_by_enumeration(maximal_masks(masks), g.order());
  return best ? best->size() : 0;
}

inline std::size_t sigma_by_enumeration(const FiniteGroup& g, bool cyclic_only) {
  return cover_number(g, [&](const std::vector<Element>& s) {
    if (s.size() == g.order()) return false;
    if (!cyclic_only) return true;
    for (Element a : s)
      if (power_closure(g, a).size() == s.size()) return true;
    return false;
  });
}

inline std::size_t ic_by_enumeration(const FiniteGroup& g, const FiniteGroup& h) {
  return cover_number(g, [&](const std::vector<Element>& s) {
    return embeds_by_backtracking(subgroup_as_group(g, s), h);
  });
}

}  // namespace grpinv::oracle

#endif  // GRPINV_TESTS_ORACLES_HPP_
