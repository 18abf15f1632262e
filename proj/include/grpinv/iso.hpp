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

#ifndef GRPINV_ISO_HPP_
#define GRPINV_ISO_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "grpinv/group.hpp"
#include "grpinv/lattice.hpp"

namespace grpinv {

// Element order -> number of elements of that order.
using OrderSpectrum = std::map<std::uint32_t, std::size_t>;

inline OrderSpectrum order_spectrum(const FiniteGroup& g) {
  OrderSpectrum spectrum;
  for (auto o : g.element_orders()) ++spectrum[o];
  return spectrum;
}

// Every element order of `g` occurs in `h` (counts ignored).
inline bool spectrum_dominates(const FiniteGroup& g, const FiniteGroup& h) {
  const OrderSpectrum hs = order_spectrum(h);
  for (const auto& [d, count] : order_spectrum(g))
    if (!hs.contains(d)) return false;
  return true;
}

// Least element order of `g` missing from `h`, if any.
inline std::optional<std::uint32_t> spectrum_gap(const FiniteGroup& g, const FiniteGroup& h) {
  const OrderSpectrum hs = order_spectrum(h);
  for (const auto& [d, count] : order_spectrum(g))
    if (!hs.contains(d)) return d;
  return std::nullopt;
}

// image[a] is the image of source element a.
struct EmbeddingWitness {
  std::vector<Element> image;
  bool operator==(const EmbeddingWitness&) const = default;
};

// Independent check: injective and f(ab) = f(a)f(b) on all pairs.
inline bool verify_embedding(const FiniteGroup& source, const FiniteGroup& target,
                             const EmbeddingWitness& w) {
  if (w.image.size() != source.order()) return false;
  std::vector<bool> hit(target.order(), false);
  for (Element img : w.image) {
    if (img >= target.order() || hit[img]) return false;
    hit[img] = true;
  }
  for (Element a = 0; a < source.order(); ++a)
    for (Element b = 0; b < source.order(); ++b)
      if (w.image[source.mul(a, b)] != target.mul(w.image[a], w.image[b])) return false;
  return true;
}

namespace detail {

// Per-element isomorphism invariant: (order, number of square roots).
inline std::vector<std::uint64_t> element_profile(const FiniteGroup& g) {
  std::vector<std::uint64_t> roots(g.order(), 0);
  for (Element a = 0; a < g.order(); ++a) ++roots[g.mul(a, a)];
  std::vector<std::uint64_t> profile(g.order());
  for (Element a = 0; a < g.order(); ++a)
    profile[a] = (std::uint64_t{g.element_order(a)} << 32) | roots[a];
  return profile;
}

inline std::vector<std::uint64_t> sorted_profile(const FiniteGroup& g) {
  auto p = element_profile(g);
  std::sort(p.begin(), p.end());
  return p;
}

// Greedy: repeatedly take a highest-order element outside the closure so far
// (lowest index on ties).
inline std::vector<Element> greedy_generators(const FiniteGroup& g) {
  std::vector<Element> by_order(g.order());
  for (Element a = 0; a < g.order(); ++a) by_order[a] = a;
  std::stable_sort(by_order.begin(), by_order.end(), [&g](Element a, Element b) {
    return g.element_order(a) > g.element_order(b);
  });
  std::vector<Element> gens;
  Subgroup acc = trivial_subgroup(g);
  for (Element a : by_order) {
    if (acc.is_whole()) break;
    if (acc.contains(a)) continue;
    gens.push_back(a);
    acc = extend(g, acc, a);
  }
  return gens;
}

// Backtracking search for an isomorphism once the cheap invariants agree.
class IsoSearch {
 public:
  IsoSearch(const FiniteGroup& g, const FiniteGroup& h) : g_(g), h_(h) {
    gens_ = greedy_generators(g_);
    const auto gp = element_profile(g_);
    const auto hp = element_profile(h_);
    for (Element s : gens_) {
      std::vector<Element> cands;
      for (Element b = 0; b < h_.order(); ++b)
        if (hp[b] == gp[s]) cands.push_back(b);
      candidates_.push_back(std::move(cands));
    }
    images_.resize(gens_.size());
  }

  std::optional<EmbeddingWitness> run() {
    if (gens_.empty()) return EmbeddingWitness{{0}};
    if (!descend(0)) return std::nullopt;
    return EmbeddingWitness{map_};
  }

 private:
  bool descend(std::size_t level) {
    for (Element img : candidates_[level]) {
      images_[level] = img;
      if (!consistent(level + 1)) continue;
      if (level + 1 == gens_.size()) return true;
      if (descend(level + 1)) return true;
    }
    return false;
  }

  // Builds the map on <gens_[0..count)> by walking the Cayley graph and
  // checks every edge x -> x*s for consistency and injectivity. Edge
  // consistency over a generating set implies a homomorphism.
  bool consistent(std::size_t count) {
    constexpr Element kUnset = ~Element{0};
    map_.assign(g_.order(), kUnset);
    std::vector<bool> used(h_.order(), false);
    map_[0] = 0;
    used[0] = true;
    std::vector<Element> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Element x = queue[head];
      for (std::size_t i = 0; i < count; ++i) {
        const Element y = g_.mul(x, gens_[i]);
        const Element fy = h_.mul(map_[x], images_[i]);
        if (map_[y] == kUnset) {
          if (used[fy]) return false;
          map_[y] = fy;
          used[fy] = true;
          queue.push_back(y);
        } else if (map_[y] != fy) {
          return false;
        }
      }
    }
    return true;
  }

  const FiniteGroup& g_;
  const FiniteGroup& h_;
  std::vector<Element> gens_;
  std::vector<std::vector<Element>> candidates_;
  std::vector<Element> images_;
  std::vector<Element> map_;
};

}  // namespace detail

// A bijective homomorphism g -> h if one exists. Rejects on order or
// element-profile mismatch, then backtracks over images of a greedy
// generating set.
inline std::optional<EmbeddingWitness> are_isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() != h.order()) return std::nullopt;
  if (order_spectrum(g) != order_spectrum(h)) return std::nullopt;
  if (detail::sorted_profile(g) != detail::sorted_profile(h)) return std::nullopt;
  return detail::IsoSearch(g, h).run();
}

// A subgroup materialized as a standalone group. Local element i is parent
// element inclusion[i]; the parent elements are listed ascending, so the
// identity stays at 0.
struct InducedSubgroup {
  FiniteGroup group;
  std::vector<Element> inclusion;
};

inline InducedSubgroup induced_group(const FiniteGroup& g, const Subgroup& s,
                                     const std::string& label = {}) {
  std::vector<Element> elems = s.elements();
  std::vector<Element> local(g.order(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i) local[elems[i]] = static_cast<Element>(i);
  const std::size_t n = elems.size();
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = local[g.mul(elems[i], elems[j])];
  BuildOptions opt;
  opt.max_order = std::max<std::size_t>(opt.max_order, n);
  // Closed subsets of a validated group are groups; skip the cubic pass.
  opt.associativity_check_max_order = 0;
  return {FiniteGroup(n, std::move(table), label.empty() ? g.label() + "[sub]" : label, opt),
          std::move(elems)};
}

// Maps the generator of cyclic `k` to an element of the same order in `h`.
inline std::optional<EmbeddingWitness> embed_cyclic(const FiniteGroup& k, const FiniteGroup& h) {
  Element gen = 0;
  for (Element a = 0; a < k.order(); ++a)
    if (k.element_order(a) == k.order()) gen = a;
  for (Element b = 0; b < h.order(); ++b) {
    if (h.element_order(b) != k.order()) continue;
    EmbeddingWitness w{std::vector<Element>(k.order(), 0)};
    Element x = 0, y = 0;
    for (std::size_t i = 0; i < k.order(); ++i) {
      w.image[x] = y;
      x = k.mul(x, gen);
      y = h.mul(y, b);
    }
    return w;
  }
  return std::nullopt;
}

// A group together with its lattice and lazily materialized subgroups,
// answering "does K embed here?" queries. Thread-safe for concurrent reads.
class EmbeddingTarget {
 public:
  explicit EmbeddingTarget(FiniteGroup h, LatticeOptions opt = {})
      : h_(std::move(h)), opt_(opt), spectrum_(order_spectrum(h_)) {}

  const FiniteGroup& group() const { return h_; }
  const OrderSpectrum& spectrum() const { return spectrum_; }

  const SubgroupLattice& lattice() const {
    std::call_once(lattice_once_, [this] { lattice_ = all_subgroups(h_, opt_); });
    return lattice_;
  }

  // Witness maps K's elements into this group's elements.
  std::optional<EmbeddingWitness> embeds(const FiniteGroup& k) const {
    if (h_.order() % k.order() != 0) return std::nullopt;
    const OrderSpectrum ks = order_spectrum(k);
    for (const auto& [d, count] : ks) {
      auto it = spectrum_.find(d);
      if (it == spectrum_.end() || it->second < count) return std::nullopt;
    }
    if (k.is_cyclic()) return embed_cyclic(k, h_);
    const auto k_profile = detail::sorted_profile(k);
    for (const auto* sub : subgroups_of_order(k.order())) {
      if (detail::sorted_profile(sub->group) != k_profile) continue;
      if (auto iso = are_isomorphic(k, sub->group)) {
        for (auto& x : iso->image) x = sub->inclusion[x];
        return iso;
      }
    }
    return std::nullopt;
  }

 private:
  std::vector<const InducedSubgroup*> subgroups_of_order(std::size_t n) const {
    const SubgroupLattice& lat = lattice();
    std::lock_guard<std::mutex> lock(mu_);
    auto it = by_order_.find(n);
    if (it == by_order_.end()) {
      std::vector<std::unique_ptr<InducedSubgroup>> bucket;
      for (const auto& s : lat.all)
        if (s.order() == n) bucket.push_back(std::make_unique<InducedSubgroup>(induced_group(h_, s)));
      it = by_order_.emplace(n, std::move(bucket)).first;
    }
    std::vector<const InducedSubgroup*> out;
    for (const auto& p : it->second) out.push_back(p.get());
    return out;
  }

  FiniteGroup h_;
  LatticeOptions opt_;
  OrderSpectrum spectrum_;
  mutable std::once_flag lattice_once_;
  mutable SubgroupLattice lattice_;
  mutable std::mutex mu_;
  mutable std::map<std::size_t, std::vector<std::unique_ptr<InducedSubgroup>>> by_order_;
};

// Witness iff some subgroup of h of order |k| is isomorphic to k; the
// witness is the isomorphism composed with the inclusion.
inline std::optional<EmbeddingWitness> embeds(const FiniteGroup& k, const FiniteGroup& h,
                                              const LatticeOptions& opt = {}) {
  return EmbeddingTarget(h, opt).embeds(k);
}

}  // namespace grpinv

#endif  // GRPINV_ISO_HPP_
