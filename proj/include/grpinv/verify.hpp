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

#ifndef GRPINV_VERIFY_HPP_
#define GRPINV_VERIFY_HPP_

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "grpinv/corpus.hpp"
#include "grpinv/invariants.hpp"
#include "grpinv/theorems.hpp"

namespace grpinv {

inline const std::vector<std::string>& all_suite_names() {
  static const std::vector<std::string> names{"examples", "triangle", "bounds",    "tozp",
                                              "subadd",   "product",  "coordinate", "miller_moreno"};
  return names;
}

struct VerifyOptions {
  // Caps every suite's corpus bound.
  std::size_t max_order = 128;
  std::vector<std::string> suites = all_suite_names();
  // 0 = hardware concurrency.
  unsigned threads = 0;
  EngineOptions engine;
};

struct SuiteResult {
  std::string name;
  std::size_t bound = 0;
  std::uint64_t checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> skipped;  // budget exhausted
  std::vector<std::string> flagged;  // reported, not failed
  std::vector<std::string> lines;    // per-check detail (examples suite)
  double seconds = 0;
  bool passed() const { return failures.empty(); }
};

struct VerifyReport {
  std::vector<SuiteResult> suites;
  CertificateStats certificates;

  bool any_failure() const {
    if (!certificates.failures.empty()) return true;
    return std::any_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return !s.passed(); });
  }
  bool any_skipped() const {
    return std::any_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return !s.skipped.empty(); });
  }
  // 0 all pass, 3 any verification failure, 2 budget exhaustion only.
  int exit_code() const { return any_failure() ? 3 : (any_skipped() ? 2 : 0); }
};

// One row of the worked-example table: a computed quantity and its
// expected exact value.
struct ExampleCase {
  std::string name;
  std::size_t max_group_order;
  std::function<ExtNat(Engine&)> compute;
  ExtNat expected;
};

namespace detail {

inline unsigned worker_count(unsigned requested) {
  if (requested == 0) {
    if (const char* env = std::getenv("GRPINV_THREADS")) requested = static_cast<unsigned>(std::atoi(env));
  }
  if (requested == 0) requested = std::max(1u, std::thread::hardware_concurrency());
  return requested;
}

// Runs body(i) for i in [0, n) on a small pool. Results must be written to
// per-index slots by the caller so aggregation stays in canonical order.
inline void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body) {
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) body(i);
    });
  for (auto& th : pool) th.join();
}

inline ExtNat ic_of(Engine& e, const char* g, const char* h) {
  const auto& opt = e.options().build;
  return e.ic(build(parse_spec(g), opt), build(parse_spec(h), opt)).value;
}
inline ExtNat sigma_of(Engine& e, const std::string& g) {
  return e.sigma(build(parse_spec(g), e.options().build)).value;
}
inline ExtNat sigma_c_of(Engine& e, const std::string& g) {
  return e.sigma_c(build(parse_spec(g), e.options().build)).value;
}

}  // namespace detail

// The worked examples with their closed-form values.
inline std::vector<ExampleCase> example_cases() {
  using detail::ic_of;
  const auto fin = [](std::uint64_t k) { return ExtNat::finite(k); };
  std::vector<ExampleCase> cases{
      {"IC(C2^2; C2)", 4, [](Engine& e) { return ic_of(e, "C2^2", "C2"); }, fin(3)},
      {"IC(C2^3; C2)", 8, [](Engine& e) { return ic_of(e, "C2^3", "C2"); }, fin(7)},
      {"IC(C3^2; C3)", 9, [](Engine& e) { return ic_of(e, "C3^2", "C3"); }, fin(4)},
      {"IC(C3^3; C3)", 27, [](Engine& e) { return ic_of(e, "C3^3", "C3"); }, fin(13)},
      {"IC(C3^2; C9)", 9, [](Engine& e) { return ic_of(e, "C3^2", "C9"); }, fin(4)},
      {"IC(C2^2; C4)", 4, [](Engine& e) { return ic_of(e, "C2^2", "C4"); }, fin(3)},
      {"IC(D5; C10)", 10, [](Engine& e) { return ic_of(e, "D5", "C10"); }, fin(6)},
      {"IC(D3; C6)", 6, [](Engine& e) { return ic_of(e, "D3", "C6"); }, fin(4)},
      {"IC(C2^2; C2)  [n=1]", 4, [](Engine& e) { return ic_of(e, "C2^2", "C2"); }, fin(3)},
      {"IC(C2^3; C2^2)  [n=2]", 8, [](Engine& e) { return ic_of(e, "C2^3", "C2^2"); }, fin(3)},
      {"IC(C2^4; C2^3)  [n=3]", 16, [](Engine& e) { return ic_of(e, "C2^4", "C2^3"); }, fin(3)},
      {"IC(C4; C2)", 4, [](Engine& e) { return ic_of(e, "C4", "C2"); }, ExtNat::infinite()},
      {"IC(C1; D5)", 10, [](Engine& e) { return ic_of(e, "C1", "D5"); }, fin(1)},
      {"IC(C2^2; C1)", 4, [](Engine& e) { return ic_of(e, "C2^2", "C1"); }, ExtNat::infinite()},
  };
  for (std::uint64_t p : {2, 3, 5}) {
    const std::string g = "C" + std::to_string(p) + "^2";
    cases.push_back({"sigma(" + g + ")", p * p, [g](Engine& e) { return detail::sigma_of(e, g); }, fin(p + 1)});
  }
  cases.push_back({"sigma(C3^3)", 27, [](Engine& e) { return detail::sigma_of(e, "C3^3"); }, fin(4)});
  const std::pair<std::uint64_t, std::uint64_t> pn[] = {{2, 2}, {2, 3}, {3, 2}, {3, 3}, {5, 2}};
  for (auto [p, n] : pn) {
    std::uint64_t order = 1;
    for (std::uint64_t i = 0; i < n; ++i) order *= p;
    const std::string g = "C" + std::to_string(p) + "^" + std::to_string(n);
    cases.push_back({"sigma_c(" + g + ")", order, [g](Engine& e) { return detail::sigma_c_of(e, g); },
                     fin((order - 1) / (p - 1))});
  }
  for (std::uint64_t n = 2; n <= 16; ++n) {
    const std::string g = "C" + std::to_string(n);
    cases.push_back({"sigma(" + g + ")", n, [g](Engine& e) { return detail::sigma_of(e, g); }, ExtNat::infinite()});
  }
  cases.push_back({"totient_cover_bound(Q8)", 8,
                   [](Engine& e) { return totient_cover_bound(build(parse_spec("Q8"), e.options().build)); },
                   fin(4)});
  cases.push_back({"sigma_c(Q8)", 8, [](Engine& e) { return detail::sigma_c_of(e, "Q8"); }, fin(3)});
  cases.push_back({"IC(C3^3; C3) - sigma(C3^3)", 27,
                   [](Engine& e) {
                     return ExtNat::finite(ic_of(e, "C3^3", "C3").value() - detail::sigma_of(e, "C3^3").value());
                   },
                   fin(9)});
  cases.push_back({"IC(Perm[(1 2 3);(1 2)]; C2 x C3) = IC(D3; C6)", 6,
                   [](Engine& e) {
                     const ExtNat a = ic_of(e, "Perm[(1 2 3);(1 2)]", "C2 x C3");
                     const ExtNat b = ic_of(e, "D3", "C6");
                     return a == b ? a : ExtNat::infinite();
                   },
                   fin(4)});
  return cases;
}

namespace detail {

using Clock = std::chrono::steady_clock;

inline std::vector<GroupHandle> corpus_handles(Engine& e, std::size_t bound) {
  std::vector<GroupHandle> out;
  for (const auto& entry : family_corpus(bound)) out.push_back(e.intern(entry.group));
  return out;
}

inline std::string label(const GroupHandle& g) { return g->group().label(); }

// Runs `check` over n items; each returns a failure message or nothing.
inline void sweep(SuiteResult& result, std::size_t n, unsigned threads,
                  const std::function<std::optional<std::string>(std::size_t)>& check) {
  std::vector<std::optional<std::string>> failures(n), skipped(n);
  parallel_for(n, threads, [&](std::size_t i) {
    try {
      failures[i] = check(i);
    } catch (const BudgetExceeded& ex) {
      skipped[i] = "item " + std::to_string(i) + ": " + ex.what();
    }
  });
  result.checks += n;
  for (std::size_t i = 0; i < n; ++i) {
    if (failures[i]) result.failures.push_back(*failures[i]);
    if (skipped[i]) result.skipped.push_back(*skipped[i]);
  }
}

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= n; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

inline void run_examples(Engine& e, SuiteResult& r, std::size_t max_order) {
  constexpr double kLineSeconds = 10.0;
  for (const auto& c : example_cases()) {
    if (c.max_group_order > max_order) {
      r.lines.push_back("SKIP " + c.name + " (order " + std::to_string(c.max_group_order) + " > max-order)");
      continue;
    }
    ++r.checks;
    const auto t0 = Clock::now();
    ExtNat got = ExtNat::infinite();
    try {
      got = c.compute(e);
    } catch (const BudgetExceeded& ex) {
      r.skipped.push_back(c.name + ": " + ex.what());
      continue;
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    const bool ok = got == c.expected && secs <= kLineSeconds;
    std::string line = (ok ? "PASS " : "FAIL ") + c.name + " = " + got.to_string() + " (expected " +
                       c.expected.to_string() + ", " + std::to_string(secs) + " s)";
    r.lines.push_back(line);
    if (!ok) r.failures.push_back(line);
  }
}

inline void run_triangle(Engine& e, SuiteResult& r, unsigned threads) {
  const auto groups = corpus_handles(e, r.bound);
  const std::size_t n = groups.size();
  // Warm the pairwise IC memo so triples are lookups.
  sweep(r, n * n, threads, [&](std::size_t i) -> std::optional<std::string> {
    e.ic(groups[i / n], groups[i % n]);
    return std::nullopt;
  });
  r.checks = 0;
  sweep(r, n * n * n, threads, [&](std::size_t i) -> std::optional<std::string> {
    const auto& g = groups[i / (n * n)];
    const auto& h = groups[(i / n) % n];
    const auto& k = groups[i % n];
    if (check_triangle(e, g, h, k)) return std::nullopt;
    return "IC(" + label(g) + ";" + label(k) + ") > IC(" + label(g) + ";" + label(h) + ")*IC(" + label(h) +
           ";" + label(k) + ")";
  });
}

inline void run_bounds(Engine& e, SuiteResult& r, unsigned threads) {
  const auto groups = corpus_handles(e, r.bound);
  const std::size_t n = groups.size();
  sweep(r, n * n, threads, [&](std::size_t i) -> std::optional<std::string> {
    const auto& g = groups[i / n];
    const auto& h = groups[i % n];
    if (check_bounds_sandwich(e, g, h)) return std::nullopt;
    return "sigma/IC/sigma_c sandwich violated for G=" + label(g) + ", H=" + label(h);
  });
}

inline void run_tozp(Engine& e, SuiteResult& r, unsigned threads) {
  const auto groups = corpus_handles(e, r.bound);
  const auto primes = primes_up_to(r.bound);
  std::vector<std::pair<GroupHandle, std::uint64_t>> items;
  for (const auto& g : groups)
    if (g->group().order() > 1)
      for (auto p : primes) items.emplace_back(g, p);
  sweep(r, items.size(), threads, [&](std::size_t i) -> std::optional<std::string> {
    const auto& [g, p] = items[i];
    const auto cp = e.intern(build(GroupSpec::cyclic(p), e.options().build));
    if (!e.ic(g, cp).value.is_finite()) return std::nullopt;
    if (check_to_zp_formula(e, g, p)) return std::nullopt;
    return "|G| = IC(G;C_p)(p-1)+1 fails for G=" + label(g) + ", p=" + std::to_string(p);
  });
}

inline void run_subadd(Engine& e, SuiteResult& r, unsigned threads) {
  const auto groups = corpus_handles(e, r.bound);
  struct Item {
    GroupHandle g;
    std::size_t a, b, c;
  };
  std::vector<Item> items;
  for (const auto& g : groups) {
    const auto& all = g->lattice().all;
    const std::size_t proper = all.size() - 1;  // whole group sorts last
    for (std::size_t a = 0; a < proper; ++a)
      for (std::size_t b = a + 1; b < proper; ++b)
        for (std::size_t c = b + 1; c < proper; ++c)
          if ((all[a].members() | all[b].members() | all[c].members()).all()) items.push_back({g, a, b, c});
  }
  const std::size_t nh = groups.size();
  sweep(r, items.size() * nh, threads, [&](std::size_t i) -> std::optional<std::string> {
    const Item& it = items[i / nh];
    const auto& h = groups[i % nh];
    const auto& all = it.g->lattice().all;
    if (check_subadditivity(e, it.g, h, all[it.a], all[it.b], all[it.c])) return std::nullopt;
    return "sub-additivity fails for G=" + label(it.g) + ", H=" + label(h) + ", parts #" +
           std::to_string(it.a) + ",#" + std::to_string(it.b) + ",#" + std::to_string(it.c);
  });
}

// Ordered factor pairs (nontrivial, product order <= bound); `unordered`
// keeps i <= j only.
inline std::vector<std::pair<std::size_t, std::size_t>> factor_pairs(const std::vector<GroupHandle>& f,
                                                                     std::size_t bound, bool unordered) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = unordered ? i : 0; j < f.size(); ++j) {
      const std::size_t a = f[i]->group().order(), b = f[j]->group().order();
      if (a > 1 && b > 1 && a * b <= bound) out.emplace_back(i, j);
    }
  return out;
}

inline void run_product(Engine& e, SuiteResult& r, unsigned threads) {
  const auto factors = corpus_handles(e, r.bound / 2);
  const auto gp = factor_pairs(factors, r.bound, true);
  const auto hp = factor_pairs(factors, r.bound, false);
  sweep(r, gp.size() * hp.size(), threads, [&](std::size_t i) -> std::optional<std::string> {
    const auto [g1, g2] = gp[i / hp.size()];
    const auto [h1, h2] = hp[i % hp.size()];
    if (check_product_inequality(e, factors[g1], factors[g2], factors[h1], factors[h2])) return std::nullopt;
    return "product inequality fails for G=" + label(factors[g1]) + " x " + label(factors[g2]) +
           ", H=" + label(factors[h1]) + " x " + label(factors[h2]);
  });
}

inline void run_coordinate(Engine& e, SuiteResult& r, unsigned threads) {
  const auto factors = corpus_handles(e, r.bound / 2);
  // G x G and H x H are formed too, so the first factor of each pair also
  // satisfies |G|^2 <= bound.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (auto [i, j] : factor_pairs(factors, r.bound, false)) {
    const std::size_t a = factors[i]->group().order();
    if (a * a <= r.bound) pairs.emplace_back(i, j);
  }
  sweep(r, pairs.size() * pairs.size(), threads, [&](std::size_t i) -> std::optional<std::string> {
    const auto [g, g2] = pairs[i / pairs.size()];
    const auto [h, h2] = pairs[i % pairs.size()];
    if (check_coordinate_injections(e, factors[g], factors[g2], factors[h], factors[h2])) return std::nullopt;
    return "coordinate-injection inequalities fail for G=" + label(factors[g]) + ", G2=" + label(factors[g2]) +
           ", H=" + label(factors[h]) + ", H2=" + label(factors[h2]);
  });
}

inline void run_miller_moreno(Engine& e, SuiteResult& r) {
  for (const auto& g : corpus_handles(e, r.bound)) {
    ++r.checks;
    const MillerMorenoResult mm = check_miller_moreno(e, g);
    if (mm.agree()) continue;
    r.flagged.push_back(label(g) + ": every proper subgroup cyclic = " + (mm.all_proper_cyclic ? "yes" : "no") +
                        ", listed family = " + (mm.listed ? mm.family : std::string("none")));
  }
}

inline std::size_t default_bound(const std::string& suite) {
  if (suite == "triangle") return 16;
  if (suite == "bounds") return 24;
  if (suite == "subadd") return 12;
  return 32;  // examples, tozp, product, coordinate, miller_moreno
}

}  // namespace detail

// Runs the selected suites in canonical order against one shared engine.
// Throws std::invalid_argument for an unknown suite name.
inline VerifyReport run_verify(const VerifyOptions& opt) {
  for (const auto& s : opt.suites)
    if (std::find(all_suite_names().begin(), all_suite_names().end(), s) == all_suite_names().end())
      throw std::invalid_argument("unknown suite '" + s + "'");
  EngineOptions eopt = opt.engine;
  eopt.build.max_order = std::max<std::size_t>(eopt.build.max_order, 32);
  Engine engine(eopt);
  const unsigned threads = detail::worker_count(opt.threads);
  VerifyReport report;
  for (const auto& name : all_suite_names()) {
    if (std::find(opt.suites.begin(), opt.suites.end(), name) == opt.suites.end()) continue;
    SuiteResult r;
    r.name = name;
    r.bound = std::min(detail::default_bound(name), opt.max_order);
    const auto t0 = detail::Clock::now();
    if (name == "examples") detail::run_examples(engine, r, r.bound);
    else if (name == "triangle") detail::run_triangle(engine, r, threads);
    else if (name == "bounds") detail::run_bounds(engine, r, threads);
    else if (name == "tozp") detail::run_tozp(engine, r, threads);
    else if (name == "subadd") detail::run_subadd(engine, r, threads);
    else if (name == "product") detail::run_product(engine, r, threads);
    else if (name == "coordinate") detail::run_coordinate(engine, r, threads);
    else if (name == "miller_moreno") detail::run_miller_moreno(engine, r);
    r.seconds = std::chrono::duration<double>(detail::Clock::now() - t0).count();
    report.suites.push_back(std::move(r));
  }
  report.certificates = engine.certificate_stats();
  return report;
}

}  // namespace grpinv

#endif  // GRPINV_VERIFY_HPP_
