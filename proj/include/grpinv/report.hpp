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

#ifndef GRPINV_REPORT_HPP_
#define GRPINV_REPORT_HPP_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "grpinv/invariants.hpp"
#include "grpinv/lattice.hpp"
#include "grpinv/verify.hpp"

namespace grpinv {

inline constexpr const char* kEngineVersion = "1.0.0";

using json = nlohmann::json;

// "13", "infinite (spectrum gap: order 4)", "infinite (G cyclic)".
inline std::string render_value(const InvariantReport& r) {
  if (r.value.is_finite()) return r.value.to_string();
  switch (r.reason) {
    case InfinitenessReason::kSpectrumGap:
      return "infinite (spectrum gap: order " + std::to_string(r.gap_order) + ")";
    case InfinitenessReason::kGCyclic:
      return "infinite (G cyclic)";
    case InfinitenessReason::kNoCover:
      return "infinite (no cover)";
    case InfinitenessReason::kNone:
      break;
  }
  return "infinite";
}

inline json value_to_json(const InvariantReport& r) {
  if (r.value.is_finite()) return {{"finite", r.value.value()}};
  json v{{"infinite", true}, {"reason", to_string(r.reason)}};
  if (r.reason == InfinitenessReason::kSpectrumGap) v["gap_order"] = r.gap_order;
  return v;
}

inline json subgroup_to_json(const Subgroup& s) {
  return {{"order", s.order()}, {"elements", s.elements()}};
}

struct DocumentMeta {
  std::vector<std::string> operands;
  bool with_certificate = false;
  double elapsed_ms = 0;
  std::size_t max_order = 128;
};

// The result document for one invariant computation. The certificate is
// present iff requested and the value is finite.
inline json to_json(const InvariantReport& r, const DocumentMeta& meta) {
  json doc{{"kind", to_string(r.kind)}, {"operands", meta.operands}, {"value", value_to_json(r)}};
  if (meta.with_certificate && r.value.is_finite()) {
    json cert = json::array();
    for (const auto& e : r.certificate) {
      json item = subgroup_to_json(e.subgroup);
      if (e.embedding) item["embedding"] = e.embedding->image;
      cert.push_back(std::move(item));
    }
    doc["certificate"] = std::move(cert);
  }
  doc["elapsed_ms"] = meta.elapsed_ms;
  doc["engine_version"] = kEngineVersion;
  doc["max_order"] = meta.max_order;
  return doc;
}

// Rebuilds a report from its document so the certificate can be
// re-validated against G. Subgroups are re-derived by closure of the listed
// elements; a listing that is not closed fails validation downstream.
inline InvariantReport report_from_json(const json& doc, const FiniteGroup& g) {
  InvariantReport r;
  const std::string kind = doc.at("kind").get<std::string>();
  if (kind == "sigma") r.kind = InvariantKind::kSigma;
  else if (kind == "sigmac") r.kind = InvariantKind::kSigmaC;
  else if (kind == "ic") r.kind = InvariantKind::kIc;
  else throw std::invalid_argument("unknown kind '" + kind + "'");
  const auto& ops = doc.at("operands");
  r.g_label = ops.at(0).get<std::string>();
  if (ops.size() > 1) r.h_label = ops.at(1).get<std::string>();
  const auto& v = doc.at("value");
  if (v.contains("finite")) {
    r.value = ExtNat::finite(v.at("finite").get<std::uint64_t>());
  } else {
    const std::string reason = v.at("reason").get<std::string>();
    if (reason == "G_cyclic") r.reason = InfinitenessReason::kGCyclic;
    else if (reason == "spectrum_gap") r.reason = InfinitenessReason::kSpectrumGap;
    else if (reason == "no_cover") r.reason = InfinitenessReason::kNoCover;
    if (v.contains("gap_order")) r.gap_order = v.at("gap_order").get<std::uint32_t>();
  }
  if (doc.contains("certificate")) {
    for (const auto& item : doc.at("certificate")) {
      ElementSet members(g.order());
      for (auto x : item.at("elements").get<std::vector<Element>>()) {
        if (x >= g.order()) throw std::invalid_argument("certificate element out of range");
        members.set(x);
      }
      Subgroup s(members, {}, detail::has_generator_of_order(g, members, members.count()));
      // Keep the listed set itself; validate_report checks it is closed.
      std::optional<EmbeddingWitness> w;
      if (item.contains("embedding")) w = EmbeddingWitness{item.at("embedding").get<std::vector<Element>>()};
      r.certificate.push_back({std::move(s), std::move(w)});
    }
  }
  return r;
}

inline json lattice_to_json(const std::string& spec, const std::string& stratum,
                            const std::vector<Subgroup>& subgroups) {
  json list = json::array();
  for (const auto& s : subgroups) list.push_back(subgroup_to_json(s));
  return {{"spec", spec},
          {"stratum", stratum},
          {"count", subgroups.size()},
          {"subgroups", std::move(list)},
          {"engine_version", kEngineVersion}};
}

inline json verify_to_json(const VerifyReport& report) {
  json suites = json::array();
  for (const auto& s : report.suites) {
    suites.push_back({{"name", s.name},
                      {"bound", s.bound},
                      {"checks", s.checks},
                      {"passed", s.passed()},
                      {"failures", s.failures},
                      {"skipped", s.skipped},
                      {"flagged", s.flagged},
                      {"lines", s.lines},
                      {"seconds", s.seconds}});
  }
  return {{"suites", std::move(suites)},
          {"certificates",
           {{"checked", report.certificates.checked},
            {"optimal_checked", report.certificates.optimal_checked},
            {"failures", report.certificates.failures}}},
          {"exit_code", report.exit_code()},
          {"engine_version", kEngineVersion}};
}

}  // namespace grpinv

#endif  // GRPINV_REPORT_HPP_
