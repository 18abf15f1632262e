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

// grpinv: covering numbers and injective hom-complexity of finite groups.
//
//   grpinv ic G H | sigma G | sigmac G | lattice G | embeds K H | verify
//
// Exit codes: 0 success, 1 parse/usage error, 2 budget or order limit,
// 3 verification failure.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "grpinv/grpinv.hpp"

namespace {

using grpinv::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;

struct CommonFlags {
  bool json = false;
  bool certificate = false;
  std::size_t max_order = 128;
  std::uint64_t budget = 100'000'000;
};

grpinv::EngineOptions engine_options(const CommonFlags& f) {
  grpinv::EngineOptions opt;
  opt.build.max_order = f.max_order;
  opt.cover.node_budget = f.budget;
  opt.validate_certificates = false;
  return opt;
}

std::string join_elements(const std::vector<grpinv::Element>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
  return os.str();
}

int run_invariant(const std::string& kind, const std::vector<std::string>& specs, const CommonFlags& f) {
  const auto t0 = std::chrono::steady_clock::now();
  grpinv::Engine engine(engine_options(f));
  const auto g = grpinv::build(grpinv::parse_spec(specs.at(0)), engine.options().build);
  grpinv::InvariantReport report;
  if (kind == "ic") {
    const auto h = grpinv::build(grpinv::parse_spec(specs.at(1)), engine.options().build);
    report = engine.ic(g, h);
  } else if (kind == "sigma") {
    report = engine.sigma(g);
  } else {
    report = engine.sigma_c(g);
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (f.json) {
    std::cout << grpinv::to_json(report, {specs, f.certificate, ms, f.max_order}).dump(2) << "\n";
    return kExitOk;
  }
  std::cout << grpinv::render_value(report) << "\n";
  if (f.certificate && report.value.is_finite()) {
    for (const auto& e : report.certificate) {
      std::cout << "  order " << e.subgroup.order() << ": " << join_elements(e.subgroup.elements());
      if (e.embedding) std::cout << " -> " << join_elements(e.embedding->image);
      std::cout << "\n";
    }
  }
  return kExitOk;
}

int run_lattice(const std::string& spec, bool maximal, bool cyclic, const CommonFlags& f) {
  grpinv::BuildOptions bopt;
  bopt.max_order = f.max_order;
  const auto g = grpinv::build(grpinv::parse_spec(spec), bopt);
  const auto lat = grpinv::all_subgroups(g);
  std::vector<grpinv::Subgroup> out;
  std::string stratum;
  if (maximal && cyclic) {
    out = lat.select(lat.maximal_cyclic);
    stratum = "maximal_cyclic";
  } else if (maximal) {
    out = lat.select(lat.maximal);
    stratum = "maximal";
  } else if (cyclic) {
    for (const auto& s : lat.all)
      if (s.is_cyclic()) out.push_back(s);
    stratum = "cyclic";
  } else {
    out = lat.all;
    stratum = "all";
  }
  if (f.json) {
    std::cout << grpinv::lattice_to_json(spec, stratum, out).dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& s : out) std::cout << s.order() << ": " << join_elements(s.elements()) << "\n";
  return kExitOk;
}

int run_embeds(const std::vector<std::string>& specs, const CommonFlags& f) {
  grpinv::BuildOptions bopt;
  bopt.max_order = f.max_order;
  const auto k = grpinv::build(grpinv::parse_spec(specs.at(0)), bopt);
  const auto h = grpinv::build(grpinv::parse_spec(specs.at(1)), bopt);
  const auto w = grpinv::embeds(k, h);
  if (f.json) {
    json doc{{"kind", "embeds"}, {"operands", specs}, {"embeds", w.has_value()}};
    if (w && f.certificate) doc["embedding"] = w->image;
    doc["engine_version"] = grpinv::kEngineVersion;
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << (w ? "yes" : "no") << "\n";
  if (w && f.certificate) std::cout << "  " << join_elements(w->image) << "\n";
  return kExitOk;
}

int run_verify(const std::vector<std::string>& suites, const CommonFlags& f, bool inject_fault) {
  grpinv::VerifyOptions opt;
  opt.max_order = f.max_order;
  if (!suites.empty()) opt.suites = suites;
  opt.engine.cover.node_budget = f.budget;
  if (inject_fault) opt.engine.cover.fault_offset = 1;
  const grpinv::VerifyReport report = grpinv::run_verify(opt);
  if (f.json) {
    std::cout << grpinv::verify_to_json(report).dump(2) << "\n";
    return report.exit_code();
  }
  for (const auto& s : report.suites) {
    for (const auto& line : s.lines) std::cout << "  " << line << "\n";
    std::cout << (s.passed() ? "PASS " : "FAIL ") << s.name << ": " << s.checks << " checks (bound " << s.bound
              << "), " << s.failures.size() << " failures, " << s.skipped.size() << " skipped, "
              << s.flagged.size() << " flagged, " << s.seconds << " s\n";
    for (const auto& x : s.failures) std::cout << "  counterexample: " << x << "\n";
    for (const auto& x : s.skipped) std::cout << "  skipped: " << x << "\n";
    for (const auto& x : s.flagged) std::cout << "  flagged: " << x << "\n";
  }
  const auto& c = report.certificates;
  std::cout << (c.failures.empty() ? "PASS" : "FAIL") << " certificates: " << c.checked << " validated ("
            << c.optimal_checked << " optimal-structure checks), " << c.failures.size() << " failures\n";
  for (const auto& x : c.failures) std::cout << "  counterexample: " << x << "\n";
  return report.exit_code();
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"grpinv: covering numbers and injective hom-complexity of finite groups"};
  app.require_subcommand(1);
  CommonFlags flags;
  app.add_flag("--json", flags.json, "emit one JSON document");
  app.add_flag("--certificate", flags.certificate, "include the cover certificate");
  app.add_option("--max-order", flags.max_order, "largest group order accepted")->check(CLI::Range(1, 512));
  app.add_option("--budget", flags.budget, "cover search node budget")->check(CLI::PositiveNumber);

  auto* ic = app.add_subcommand("ic", "injective hom-complexity IC(G;H)");
  std::string g_spec, h_spec;
  ic->add_option("G", g_spec, "domain group")->required();
  ic->add_option("H", h_spec, "codomain group")->required();
  auto* sigma = app.add_subcommand("sigma", "covering number sigma(G)");
  std::string single;
  sigma->add_option("G", single, "group")->required();
  auto* sigmac = app.add_subcommand("sigmac", "cyclic covering number sigma_c(G)");
  sigmac->add_option("G", single, "group")->required();
  auto* lattice = app.add_subcommand("lattice", "list subgroups in canonical order");
  lattice->add_option("G", single, "group")->required();
  bool maximal = false, cyclic = false;
  lattice->add_flag("--maximal", maximal, "maximal subgroups only");
  lattice->add_flag("--cyclic", cyclic, "cyclic subgroups only");
  auto* embeds = app.add_subcommand("embeds", "is there an injective homomorphism K -> H?");
  std::string k_spec, eh_spec;
  embeds->add_option("K", k_spec, "source group")->required();
  embeds->add_option("H", eh_spec, "target group")->required();
  auto* verify = app.add_subcommand("verify", "replay the theorem and example checks");
  std::string suite_list;
  verify->add_option("--suite", suite_list, "comma-separated suites");
  bool inject_fault = false;
  verify->add_flag("--inject-fault", inject_fault, "perturb the cover solver (self-test)")->group("");

  // Subcommand flags may follow the positionals.
  for (auto* sub : {ic, sigma, sigmac, lattice, embeds, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (ic->parsed()) return run_invariant("ic", {g_spec, h_spec}, flags);
    if (sigma->parsed()) return run_invariant("sigma", {single}, flags);
    if (sigmac->parsed()) return run_invariant("sigmac", {single}, flags);
    if (lattice->parsed()) return run_lattice(single, maximal, cyclic, flags);
    if (embeds->parsed()) return run_embeds({k_spec, eh_spec}, flags);
    if (verify->parsed()) return run_verify(split_csv(suite_list), flags, inject_fault);
  } catch (const grpinv::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const grpinv::InvalidSpec& e) {
    std::cerr << "invalid spec: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const grpinv::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const grpinv::OrderLimitExceeded& e) {
    std::cerr << "order limit: " << e.what() << "\n";
    return kExitBudget;
  }
  return kExitUsage;
}
