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

#ifndef GRPINV_INVARIANTS_HPP_
#define GRPINV_INVARIANTS_HPP_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "grpinv/cover.hpp"
#include "grpinv/ext_nat.hpp"
#include "grpinv/group.hpp"
#include "grpinv/iso.hpp"
#include "grpinv/lattice.hpp"

namespace grpinv {

enum class InvariantKind { kSigma, kSigmaC, kIc };
enum class InfinitenessReason { kNone, kGCyclic, kSpectrumGap, kNoCover };

inline const char* to_string(InvariantKind k) {
  switch (k) {
    case InvariantKind::kSigma: return "sigma";
    case InvariantKind::kSigmaC: return "sigmac";
    case InvariantKind::kIc: return "ic";
  }
  return "?";
}

inline const char* to_string(InfinitenessReason r) {
  switch (r) {
    case InfinitenessReason::kNone: return "none";
    case InfinitenessReason::kGCyclic: return "G_cyclic";
    case InfinitenessReason::kSpectrumGap: return "spectrum_gap";
    case InfinitenessReason::kNoCover: return "no_cover";
  }
  return "?";
}

// One member of a cover certificate. For IC the embedding maps the
// subgroup's elements, listed ascending, into the codomain group.
struct CertificateEntry {
  Subgroup subgroup;
  std::optional<EmbeddingWitness> embedding;
};

struct InvariantReport {
  InvariantKind kind = InvariantKind::kSigma;
  std::string g_label;
  std::string h_label;  // ic only
  ExtNat value = ExtNat::infinite();
  std::vector<CertificateEntry> certificate;
  InfinitenessReason reason = InfinitenessReason::kNone;
  std::uint32_t gap_order = 0;  // for kSpectrumGap
};

// Groups are interned by Cayley table, so each lattice is built once.
using GroupHandle = std::shared_ptr<const EmbeddingTarget>;

struct EngineOptions {
  BuildOptions build;
  LatticeOptions lattice;
  CoverOptions cover;
  // Re-check every produced certificate and count failures.
  bool validate_certificates = true;
};

struct CertificateStats {
  std::uint64_t checked = 0;
  std::uint64_t optimal_checked = 0;
  std::vector<std::string> failures;
};

// Member union equals G, |certificate| = value, no member redundant, plus
// per-kind conditions: proper (sigma), proper and cyclic (sigma_c), a
// verified embedding into H (ic).
inline bool validate_report(const InvariantReport& report, const FiniteGroup& g,
                            const FiniteGroup* h = nullptr) {
  if (!report.value.is_finite()) return report.certificate.empty();
  if (report.certificate.size() != report.value.value()) return false;
  std::vector<PointSet> sets;
  for (const auto& e : report.certificate) {
    if (e.subgroup.parent_order() != g.order()) return false;
    sets.push_back(e.subgroup.members());
  }
  CoverInstance inst(g.order(), sets);
  if (inst.candidates().size() != sets.size()) return false;  // duplicate or nested member
  CoverSolution sol;
  sol.value = report.value;
  for (std::size_t i = 0; i < sets.size(); ++i) sol.certificate.push_back(i);
  if (!validate_cover(inst, sol)) return false;
  for (const auto& e : report.certificate) {
    // Re-derive closure so a corrupted member cannot pass as a subgroup.
    if (!(closure(g, e.subgroup.members()) == e.subgroup)) return false;
    switch (report.kind) {
      case InvariantKind::kSigma:
        if (e.subgroup.is_whole()) return false;
        break;
      case InvariantKind::kSigmaC:
        if (e.subgroup.is_whole()) return false;
        if (!detail::has_generator_of_order(g, e.subgroup.members(), e.subgroup.order())) return false;
        break;
      case InvariantKind::kIc: {
        if (h == nullptr || !e.embedding) return false;
        const InducedSubgroup sub = induced_group(g, e.subgroup);
        if (!verify_embedding(sub.group, *h, *e.embedding)) return false;
        break;
      }
    }
  }
  return true;
}

// Structural conditions an optimal IC certificate of size > 1 satisfies:
// (i) no member lies in the union of the others; (ii) any two members
// generate G, or generate a subgroup that does not embed in H.
inline bool validate_optimal_ic_certificate(const InvariantReport& report, const FiniteGroup& g,
                                            const EmbeddingTarget& h) {
  if (report.kind != InvariantKind::kIc || !report.value.is_finite() || report.value.value() <= 1)
    return false;
  const auto& cert = report.certificate;
  for (std::size_t i = 0; i < cert.size(); ++i) {
    ElementSet others(g.order());
    for (std::size_t j = 0; j < cert.size(); ++j)
      if (j != i) others |= cert[j].subgroup.members();
    if (cert[i].subgroup.members().is_subset_of(others)) return false;
  }
  for (std::size_t i = 0; i < cert.size(); ++i) {
    for (std::size_t j = i + 1; j < cert.size(); ++j) {
      const Subgroup joined = closure(g, cert[i].subgroup.members() | cert[j].subgroup.members());
      if (joined.is_whole()) continue;
      if (h.embeds(induced_group(g, joined).group)) return false;
    }
  }
  return true;
}

class Engine {
 public:
  explicit Engine(EngineOptions opt = {}) : opt_(std::move(opt)) {}

  const EngineOptions& options() const { return opt_; }

  GroupHandle intern(const FiniteGroup& g) {
    std::lock_guard<std::mutex> lock(mu_);
    std::vector<Element> key(g.table().begin(), g.table().end());
    auto it = interned_.find(key);
    if (it != interned_.end()) return it->second;
    auto handle = std::make_shared<const EmbeddingTarget>(g, opt_.lattice);
    interned_.emplace(std::move(key), handle);
    return handle;
  }

  // sigma(G): least number of proper subgroups covering G.
  InvariantReport sigma(const GroupHandle& g) {
    return memoized(InvariantKind::kSigma, g, nullptr, [&] { return compute_sigma(*g, false); });
  }

  // sigma_c(G): least number of proper cyclic subgroups covering G.
  InvariantReport sigma_c(const GroupHandle& g) {
    return memoized(InvariantKind::kSigmaC, g, nullptr, [&] { return compute_sigma(*g, true); });
  }

  // IC(G; H): least number of subgroups of G covering G, each embedding in H.
  InvariantReport ic(const GroupHandle& g, const GroupHandle& h) {
    return memoized(InvariantKind::kIc, g, h.get(), [&] { return compute_ic(*g, *h); });
  }

  InvariantReport sigma(const FiniteGroup& g) { return sigma(intern(g)); }
  InvariantReport sigma_c(const FiniteGroup& g) { return sigma_c(intern(g)); }
  InvariantReport ic(const FiniteGroup& g, const FiniteGroup& h) { return ic(intern(g), intern(h)); }

  CertificateStats certificate_stats() const {
    std::lock_guard<std::mutex> lock(mu_);
    return stats_;
  }

 private:
  using MemoKey = std::tuple<int, const EmbeddingTarget*, const EmbeddingTarget*>;

  template <typename Compute>
  InvariantReport memoized(InvariantKind kind, const GroupHandle& g, const EmbeddingTarget* h,
                           Compute compute) {
    const MemoKey key{static_cast<int>(kind), g.get(), h};
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    InvariantReport report = compute();
    if (opt_.validate_certificates) audit(report, *g, h);
    std::lock_guard<std::mutex> lock(mu_);
    return memo_.emplace(key, std::move(report)).first->second;
  }

  void audit(const InvariantReport& report, const EmbeddingTarget& g, const EmbeddingTarget* h) {
    if (!report.value.is_finite()) return;
    const bool ok = validate_report(report, g.group(), h ? &h->group() : nullptr);
    bool optimal_ok = true;
    const bool needs_optimal = report.kind == InvariantKind::kIc && report.value.value() > 1;
    if (needs_optimal) optimal_ok = validate_optimal_ic_certificate(report, g.group(), *h);
    std::lock_guard<std::mutex> lock(mu_);
    ++stats_.checked;
    if (needs_optimal) ++stats_.optimal_checked;
    if (!ok || !optimal_ok) {
      std::string what = std::string(to_string(report.kind)) + "(" + report.g_label;
      if (h) what += "; " + report.h_label;
      what += ") = " + report.value.to_string() + (ok ? ": not optimal-structured" : ": invalid certificate");
      stats_.failures.push_back(std::move(what));
    }
  }

  InvariantReport compute_sigma(const EmbeddingTarget& target, bool cyclic_only) {
    const FiniteGroup& g = target.group();
    InvariantReport report;
    report.kind = cyclic_only ? InvariantKind::kSigmaC : InvariantKind::kSigma;
    report.g_label = g.label();
    if (g.is_cyclic()) {
      // A generator lies in no proper subgroup.
      report.reason = InfinitenessReason::kGCyclic;
      return report;
    }
    const SubgroupLattice& lat = target.lattice();
    const auto& cand_idx = cyclic_only ? lat.maximal_cyclic : lat.maximal;
    std::vector<Subgroup> candidates = lat.select(cand_idx);
    solve(report, lat, std::move(candidates), {});
    return report;
  }

  InvariantReport compute_ic(const EmbeddingTarget& gt, const EmbeddingTarget& ht) {
    const FiniteGroup& g = gt.group();
    const FiniteGroup& h = ht.group();
    InvariantReport report;
    report.kind = InvariantKind::kIc;
    report.g_label = g.label();
    report.h_label = h.label();
    if (auto w = ht.embeds(g)) {
      report.value = ExtNat::finite(1);
      report.certificate.push_back({whole_group(g), std::move(*w)});
      return report;
    }
    if (auto gap = spectrum_gap(g, h)) {
      report.reason = InfinitenessReason::kSpectrumGap;
      report.gap_order = *gap;
      return report;
    }
    // Maximal admissible subgroups, top-down. Admissibility is closed
    // downward, so anything inside an admissible subgroup already found is
    // skipped; rejected groups are remembered up to isomorphism.
    const SubgroupLattice& lat = gt.lattice();
    std::vector<Subgroup> admissible;
    std::vector<EmbeddingWitness> witnesses;
    std::vector<FiniteGroup> rejected;
    for (std::size_t i = lat.all.size(); i-- > 0;) {
      const Subgroup& s = lat.all[i];
      if (s.is_whole()) continue;
      const bool inside = std::any_of(admissible.begin(), admissible.end(),
                                      [&s](const Subgroup& m) { return s.is_subset_of(m); });
      if (inside) continue;
      InducedSubgroup sub = induced_group(g, s);
      const bool known_bad = std::any_of(rejected.begin(), rejected.end(), [&sub](const FiniteGroup& r) {
        return r.order() == sub.group.order() && are_isomorphic(r, sub.group).has_value();
      });
      if (known_bad) continue;
      if (auto w = ht.embeds(sub.group)) {
        admissible.push_back(s);
        witnesses.push_back(std::move(*w));
      } else {
        rejected.push_back(std::move(sub.group));
      }
    }
    std::reverse(admissible.begin(), admissible.end());
    std::reverse(witnesses.begin(), witnesses.end());
    solve(report, lat, std::move(admissible), std::move(witnesses));
    return report;
  }

  // Universe: one point per maximal cyclic subgroup (a subgroup contains g
  // iff it contains <g>).
  void solve(InvariantReport& report, const SubgroupLattice& lat, std::vector<Subgroup> candidates,
             std::vector<EmbeddingWitness> witnesses) {
    const auto points = lat.select(lat.maximal_cyclic);
    std::vector<PointSet> sets;
    for (const auto& c : candidates) {
      PointSet s(points.size());
      for (std::size_t p = 0; p < points.size(); ++p)
        if (points[p].is_subset_of(c)) s.set(p);
      sets.push_back(std::move(s));
    }
    const CoverInstance inst(points.size(), sets);
    const CoverSolution sol = min_cover(inst, opt_.cover);
    report.value = sol.value;
    if (!sol.value.is_finite()) {
      report.reason = InfinitenessReason::kNoCover;
      return;
    }
    for (std::size_t c : sol.certificate) {
      const std::size_t src = inst.origin(c);
      std::optional<EmbeddingWitness> w;
      if (!witnesses.empty()) w = witnesses[src];
      report.certificate.push_back({candidates[src], std::move(w)});
    }
  }

  EngineOptions opt_;
  mutable std::mutex mu_;
  std::map<std::vector<Element>, GroupHandle> interned_;
  std::map<MemoKey, InvariantReport> memo_;
  CertificateStats stats_;
};

inline InvariantReport sigma(const FiniteGroup& g, const EngineOptions& opt = {}) {
  return Engine(opt).sigma(g);
}
inline InvariantReport sigma_c(const FiniteGroup& g, const EngineOptions& opt = {}) {
  return Engine(opt).sigma_c(g);
}
inline InvariantReport ic(const FiniteGroup& g, const FiniteGroup& h, const EngineOptions& opt = {}) {
  return Engine(opt).ic(g, h);
}

}  // namespace grpinv

#endif  // GRPINV_INVARIANTS_HPP_
