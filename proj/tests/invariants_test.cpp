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

#include "grpinv/invariants.hpp"

#include <gtest/gtest.h>

#include "grpinv/corpus.hpp"
#include "grpinv/group_spec.hpp"
#include "oracles.hpp"

namespace grpinv {
namespace {

FiniteGroup make(const std::string& text) { return build(parse_spec(text)); }

class InvariantsTest : public ::testing::Test {
 protected:
  ExtNat ic(const std::string& g, const std::string& h) { return engine_.ic(make(g), make(h)).value; }
  ExtNat sig(const std::string& g) { return engine_.sigma(make(g)).value; }
  ExtNat sigc(const std::string& g) { return engine_.sigma_c(make(g)).value; }
  void TearDown() override { EXPECT_TRUE(engine_.certificate_stats().failures.empty()); }
  Engine engine_;
};

ExtNat fin(std::uint64_t k) { return ExtNat::finite(k); }

TEST_F(InvariantsTest, IcExamples) {
  EXPECT_EQ(ic("C2^2", "C2"), fin(3));
  EXPECT_EQ(ic("C2^3", "C2"), fin(7));
  EXPECT_EQ(ic("C3^2", "C3"), fin(4));
  EXPECT_EQ(ic("C3^3", "C3"), fin(13));
  EXPECT_EQ(ic("C3^2", "C9"), fin(4));
  EXPECT_EQ(ic("C2^2", "C4"), fin(3));
  EXPECT_EQ(ic("D5", "C10"), fin(6));
  EXPECT_EQ(ic("D3", "C6"), fin(4));
  EXPECT_EQ(ic("C2^3", "C2^2"), fin(3));
  EXPECT_EQ(ic("C2^4", "C2^3"), fin(3));
  EXPECT_EQ(ic("C1", "D5"), fin(1));
  EXPECT_EQ(ic("D3", "Perm[(1 2 3);(1 2)]"), fin(1));
}

TEST_F(InvariantsTest, IcInfiniteReasons) {
  const InvariantReport gap = engine_.ic(make("C4"), make("C2"));
  EXPECT_FALSE(gap.value.is_finite());
  EXPECT_EQ(gap.reason, InfinitenessReason::kSpectrumGap);
  EXPECT_EQ(gap.gap_order, 4u);
  EXPECT_TRUE(gap.certificate.empty());
  // C1 has no element of order 2.
  EXPECT_EQ(engine_.ic(make("C2^2"), make("C1")).reason, InfinitenessReason::kSpectrumGap);
}

TEST_F(InvariantsTest, SigmaExamples) {
  EXPECT_EQ(sig("C2^2"), fin(3));
  EXPECT_EQ(sig("C3^2"), fin(4));
  EXPECT_EQ(sig("C5^2"), fin(6));
  EXPECT_EQ(sig("C3^3"), fin(4));
  EXPECT_EQ(sig("Q8"), fin(3));
  EXPECT_EQ(sig("C2^3"), fin(3));
  EXPECT_EQ(sig("D3"), fin(4));
}

TEST_F(InvariantsTest, SigmaCExamples) {
  EXPECT_EQ(sigc("C2^2"), fin(3));
  EXPECT_EQ(sigc("C3^2"), fin(4));
  EXPECT_EQ(sigc("C5^2"), fin(6));
  EXPECT_EQ(sigc("C3^3"), fin(13));
  EXPECT_EQ(sigc("Q8"), fin(3));
  EXPECT_EQ(sigc("C2^3"), fin(7));
}

TEST_F(InvariantsTest, CyclicGroupsAreInfinite) {
  for (const char* c : {"C1", "C2", "C7", "C12"}) {
    const InvariantReport r = engine_.sigma(make(c));
    EXPECT_FALSE(r.value.is_finite()) << c;
    EXPECT_EQ(r.reason, InfinitenessReason::kGCyclic);
    EXPECT_FALSE(engine_.sigma_c(make(c)).value.is_finite());
  }
}

TEST_F(InvariantsTest, ElementaryAbelianDifference) {
  // IC(C_p^n; C_p) - sigma(C_p^n) = (p^n - 1)/(p - 1) - (p + 1).
  const std::vector<std::tuple<std::uint64_t, std::uint64_t>> cases{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}};
  for (auto [p, n] : cases) {
    const std::string g = "C" + std::to_string(p) + "^" + std::to_string(n);
    std::uint64_t pn = 1;
    for (std::uint64_t i = 0; i < n; ++i) pn *= p;
    EXPECT_EQ(ic(g, "C" + std::to_string(p)).value() - sig(g).value(), (pn - 1) / (p - 1) - (p + 1)) << g;
  }
}

TEST_F(InvariantsTest, CertificatesValidate) {
  const FiniteGroup g = make("C3^2"), h = make("C3");
  const InvariantReport r = engine_.ic(g, h);
  ASSERT_EQ(r.certificate.size(), 4u);
  EXPECT_TRUE(validate_report(r, g, &h));
  EXPECT_TRUE(validate_optimal_ic_certificate(r, g, EmbeddingTarget(h)));

  InvariantReport short_one = r;
  short_one.certificate.pop_back();
  short_one.value = fin(3);
  EXPECT_FALSE(validate_report(short_one, g, &h));

  InvariantReport padded = r;
  padded.certificate.push_back(CertificateEntry{trivial_subgroup(g), EmbeddingWitness{{0}}});
  padded.value = fin(5);
  EXPECT_FALSE(validate_report(padded, g, &h));

  InvariantReport bad_map = r;
  bad_map.certificate[0].embedding->image[1] = 0;
  EXPECT_FALSE(validate_report(bad_map, g, &h));

  const FiniteGroup k = make("C2^3");
  InvariantReport not_proper = engine_.sigma(k);
  not_proper.certificate[0].subgroup = whole_group(k);
  EXPECT_FALSE(validate_report(not_proper, k));
}

TEST_F(InvariantsTest, MatchesEnumerationOracles) {
  for (const auto& e : family_corpus(16)) {
    const FiniteGroup& g = e.group;
    if (g.is_cyclic()) continue;
    EXPECT_EQ(engine_.sigma(g).value, fin(oracle::sigma_by_enumeration(g, false))) << g.label();
    EXPECT_EQ(engine_.sigma_c(g).value, fin(oracle::sigma_by_enumeration(g, true))) << g.label();
  }
  const auto small = family_corpus(12);
  for (const auto& a : small) {
    for (const auto& b : small) {
      const std::size_t expected = oracle::ic_by_enumeration(a.group, b.group);
      const ExtNat got = engine_.ic(a.group, b.group).value;
      if (expected == 0)
        EXPECT_FALSE(got.is_finite()) << a.group.label() << " ; " << b.group.label();
      else
        EXPECT_EQ(got, fin(expected)) << a.group.label() << " ; " << b.group.label();
    }
  }
}

TEST_F(InvariantsTest, CorpusProperties) {
  const auto corpus = family_corpus(24);
  for (const auto& e : corpus) {
    const FiniteGroup& g = e.group;
    const auto handle = engine_.intern(g);
    if (!g.is_cyclic()) {
      const ExtNat s = engine_.sigma(handle).value, sc = engine_.sigma_c(handle).value;
      EXPECT_GE(s, fin(3)) << g.label();
      EXPECT_LE(s, sc) << g.label();
      EXPECT_EQ(sc, fin(handle->lattice().maximal_cyclic.size())) << g.label();
    }
  }
  const auto small = family_corpus(16);
  for (const auto& a : small) {
    for (const auto& b : small) {
      const auto ga = engine_.intern(a.group), hb = engine_.intern(b.group);
      const ExtNat v = engine_.ic(ga, hb).value;
      EXPECT_EQ(v == fin(1), hb->embeds(a.group).has_value()) << a.group.label() << " ; " << b.group.label();
      EXPECT_EQ(v.is_finite(), spectrum_dominates(a.group, b.group)) << a.group.label() << " ; " << b.group.label();
    }
  }
}

TEST_F(InvariantsTest, IsomorphismInvariance) {
  const std::vector<std::pair<std::string, std::string>> same{
      {"C2 x C3", "C6"}, {"D3", "Perm[(1 2 3);(1 2)]"}, {"C2 x C2 x C2", "C2^3"}, {"D6", "C2 x D3"}};
  const std::vector<std::string> targets{"C2", "C3", "C6", "C2^2", "D3"};
  for (const auto& [x, y] : same) {
    for (const auto& t : targets) {
      EXPECT_EQ(ic(x, t), ic(y, t)) << x << " vs " << y << " ; " << t;
      EXPECT_EQ(ic(t, x), ic(t, y)) << t << " ; " << x << " vs " << y;
    }
    EXPECT_EQ(sig(x), sig(y));
    EXPECT_EQ(sigc(x), sigc(y));
  }
}

TEST(EngineTest, MemoizedAndInterned) {
  Engine e;
  const auto a = e.intern(make("D4"));
  const auto b = e.intern(make("D4"));
  EXPECT_EQ(a.get(), b.get());
  const InvariantReport first = e.sigma(a);
  const InvariantReport second = e.sigma(b);
  EXPECT_EQ(first.value, second.value);
  EXPECT_EQ(first.certificate.size(), second.certificate.size());
}

TEST(EngineTest, FreeFunctions) {
  EXPECT_EQ(sigma(make("C2^2")).value, ExtNat::finite(3));
  EXPECT_EQ(sigma_c(make("C3^3")).value, ExtNat::finite(13));
  EXPECT_EQ(ic(make("C3^3"), make("C3")).value, ExtNat::finite(13));
}

TEST(EngineTest, KindNames) {
  EXPECT_STREQ(to_string(InvariantKind::kSigma), "sigma");
  EXPECT_STREQ(to_string(InvariantKind::kSigmaC), "sigmac");
  EXPECT_STREQ(to_string(InvariantKind::kIc), "ic");
  EXPECT_STREQ(to_string(InfinitenessReason::kSpectrumGap), "spectrum_gap");
}

}  // namespace
}  // namespace grpinv
