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

#ifndef GRPINV_THEOREMS_HPP_
#define GRPINV_THEOREMS_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "grpinv/group.hpp"
#include "grpinv/invariants.hpp"
#include "grpinv/iso.hpp"
#include "grpinv/lattice.hpp"

// Executable forms of the inequalities and closed formulas relating IC,
// sigma and sigma_c. Each check recomputes every side with the engine and
// compares in extended-natural arithmetic.
namespace grpinv {

// IC(G;K) <= IC(G;H) * IC(H;K).
inline bool check_triangle(Engine& e, const GroupHandle& g, const GroupHandle& h, const GroupHandle& k) {
  return e.ic(g, k).value <= e.ic(g, h).value * e.ic(h, k).value;
}

// sigma(G) <= IC(G;H) when G does not embed in H; IC(G;H) <= sigma_c(G) when
// every element order of G occurs in H.
inline bool check_bounds_sandwich(Engine& e, const GroupHandle& g, const GroupHandle& h) {
  const ExtNat value = e.ic(g, h).value;
  if (!h->embeds(g->group()) && !(e.sigma(g).value <= value)) return false;
  if (spectrum_dominates(g->group(), h->group()) && !(value <= e.sigma_c(g).value)) return false;
  return true;
}

// For nontrivial G with IC(G;C_p) finite: |G| = IC(G;C_p)(p-1) + 1 and
// p | IC(G;C_p) - 1. Throws std::invalid_argument when IC(G;C_p) is infinite.
inline bool check_to_zp_formula(Engine& e, const GroupHandle& g, std::uint64_t p) {
  const auto cp = e.intern(build(GroupSpec::cyclic(p), e.options().build));
  const ExtNat value = e.ic(g, cp).value;
  if (!value.is_finite()) throw std::invalid_argument("IC(G;C_p) is infinite");
  const std::uint64_t k = value.value();
  return g->group().order() == k * (p - 1) + 1 && (k - 1) % p == 0;
}

// Throws InvalidPartition unless A, B, C are proper subgroups of G whose
// union is G.
inline void require_proper_triple_cover(const FiniteGroup& g, const Subgroup& a, const Subgroup& b,
                                        const Subgroup& c) {
  for (const Subgroup* s : {&a, &b, &c}) {
    if (s->parent_order() != g.order()) throw InvalidPartition("subgroup of a different group");
    if (s->is_whole()) throw InvalidPartition("part is not a proper subgroup");
  }
  if (!(a.members() | b.members() | c.members()).all())
    throw InvalidPartition("parts do not cover the group");
}

// max{IC(A;H), IC(B;H), IC(C;H)} <= IC(G;H) <= IC(A;H) + IC(B;H) + IC(C;H).
inline bool check_subadditivity(Engine& e, const GroupHandle& g, const GroupHandle& h, const Subgroup& a,
                                const Subgroup& b, const Subgroup& c) {
  require_proper_triple_cover(g->group(), a, b, c);
  const ExtNat whole = e.ic(g, h).value;
  std::array<ExtNat, 3> parts{ExtNat::infinite(), ExtNat::infinite(), ExtNat::infinite()};
  const std::array<const Subgroup*, 3> subs{&a, &b, &c};
  for (std::size_t i = 0; i < 3; ++i)
    parts[i] = e.ic(e.intern(induced_group(g->group(), *subs[i]).group), h).value;
  const ExtNat largest = std::max({parts[0], parts[1], parts[2]});
  return largest <= whole && whole <= parts[0] + parts[1] + parts[2];
}

inline GroupHandle product_handle(Engine& e, const GroupHandle& a, const GroupHandle& b) {
  return e.intern(direct_product(a->group(), b->group(), a->group().label() + " x " + b->group().label(),
                                 e.options().build));
}

// IC(G1 x G2; H1 x H2) <= IC(G1;H1) * IC(G2;H2).
inline bool check_product_inequality(Engine& e, const GroupHandle& g1, const GroupHandle& g2,
                                     const GroupHandle& h1, const GroupHandle& h2) {
  const auto g = product_handle(e, g1, g2);
  const auto h = product_handle(e, h1, h2);
  return e.ic(g, h).value <= e.ic(g1, h1).value * e.ic(g2, h2).value;
}

// IC(G; H x H2) <= min{IC(G;H), IC(G;H2)},
// max{IC(G;H), IC(G2;H)} <= IC(G x G2; H), and
// IC(G; H x H) <= IC(G;H) <= IC(G x G; H).
inline bool check_coordinate_injections(Engine& e, const GroupHandle& g, const GroupHandle& g2,
                                        const GroupHandle& h, const GroupHandle& h2) {
  const ExtNat gh = e.ic(g, h).value;
  const bool codomain =
      e.ic(g, product_handle(e, h, h2)).value <= std::min(gh, e.ic(g, h2).value);
  const bool domain = std::max(gh, e.ic(g2, h).value) <= e.ic(product_handle(e, g, g2), h).value;
  const bool chain = e.ic(g, product_handle(e, h, h)).value <= gh &&
                     gh <= e.ic(product_handle(e, g, g), h).value;
  return codomain && domain && chain;
}

// Compares "every proper subgroup is cyclic" (from the lattice) with
// membership in the listed families: cyclic, generalized quaternion, and
// non-abelian C_q x| C_p. Disagreements are flagged, not failed: the list
// omits C_p x C_p and Q_{2^n} for n >= 4 contains a non-cyclic Q_8.
struct MillerMorenoResult {
  bool all_proper_cyclic = false;
  bool listed = false;
  std::string family;  // matching listed family, empty if none
  bool agree() const { return all_proper_cyclic == listed; }
};

inline MillerMorenoResult check_miller_moreno(Engine& e, const GroupHandle& g) {
  const FiniteGroup& grp = g->group();
  MillerMorenoResult r;
  r.all_proper_cyclic = all_proper_subgroups_cyclic(g->lattice());
  const std::uint64_t n = grp.order();
  BuildOptions opt = e.options().build;
  opt.max_order = std::max<std::size_t>(opt.max_order, n);
  if (grp.is_cyclic()) {
    r.listed = true;
    r.family = "cyclic";
  } else if (n >= 8 && detail::is_power_of_two(n)) {
    if (are_isomorphic(grp, build(GroupSpec::quaternion(n), opt))) {
      r.listed = true;
      r.family = "generalized quaternion";
    }
  } else if (!grp.is_abelian()) {
    for (std::uint64_t p = 2; p * p < n; ++p) {
      if (n % p || !detail::is_prime(p)) continue;
      const std::uint64_t q = n / p;
      if (!detail::is_prime(q) || (q - 1) % p) continue;
      if (are_isomorphic(grp, build(GroupSpec::semidirect_pq(q, p), opt))) {
        r.listed = true;
        r.family = "semidirect C_q x| C_p";
      }
    }
  }
  return r;
}

}  // namespace grpinv

#endif  // GRPINV_THEOREMS_HPP_
