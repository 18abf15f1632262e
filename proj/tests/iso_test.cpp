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

#include "grpinv/iso.hpp"

#include <memory>

#include <gtest/gtest.h>

#include "grpinv/corpus.hpp"
#include "grpinv/group_spec.hpp"
#include "oracles.hpp"

namespace grpinv {
namespace {

FiniteGroup make(const char* text) { return build(parse_spec(text)); }

TEST(IsoTest, Examples) {
  EXPECT_TRUE(are_isomorphic(make("C2 x C3"), make("C6")));
  EXPECT_TRUE(are_isomorphic(make("Perm[(1 2 3);(1 2)]"), make("D3")));
  EXPECT_TRUE(are_isomorphic(make("SD(3,2)"), make("D3")));
  EXPECT_FALSE(are_isomorphic(make("C2^2"), make("C4")));
  EXPECT_FALSE(are_isomorphic(make("Q8"), make("D4")));
  EXPECT_FALSE(are_isomorphic(make("C2 x C4"), make("C8")));
  EXPECT_TRUE(are_isomorphic(make("D6"), make("D3 x C2")));
  EXPECT_TRUE(are_isomorphic(make("Perm[(1 2 3 4);(1 2)]"), make("Perm[(1 2);(2 3);(3 4)]")));
}

TEST(IsoTest, WitnessIsAnIsomorphism) {
  const FiniteGroup a = make("Q8 x C2"), b = make("C2 x Q8");
  const auto w = are_isomorphic(a, b);
  ASSERT_TRUE(w);
  EXPECT_TRUE(verify_embedding(a, b, *w));
  std::set<Element> image(w->image.begin(), w->image.end());
  EXPECT_EQ(image.size(), b.order());
}

TEST(IsoTest, AgreesWithBijectionScan) {
  const auto corpus = family_corpus(8);
  for (const auto& x : corpus)
    for (const auto& y : corpus)
      if (x.group.order() == y.group.order())
        EXPECT_EQ(are_isomorphic(x.group, y.group).has_value(),
                  oracle::isomorphic_by_bijection_scan(x.group, y.group))
            << x.group.label() << " vs " << y.group.label();
  // Differently presented groups of the same order.
  const std::vector<const char*> eights{"C8", "C2 x C4", "C4 x C2", "C2^3", "D4", "Q8",
                                        "Perm[(1 2 3 4);(1 3)]"};
  for (const char* p : eights)
    for (const char* q : eights)
      EXPECT_EQ(are_isomorphic(make(p), make(q)).has_value(),
                oracle::isomorphic_by_bijection_scan(make(p), make(q)))
          << p << " vs " << q;
}

TEST(IsoTest, ReflexiveAndSymmetric) {
  for (const auto& x : family_corpus(16)) {
    EXPECT_TRUE(are_isomorphic(x.group, x.group)) << x.group.label();
  }
  const auto corpus = family_corpus(12);
  for (const auto& x : corpus)
    for (const auto& y : corpus)
      EXPECT_EQ(are_isomorphic(x.group, y.group).has_value(), are_isomorphic(y.group, x.group).has_value());
}

TEST(SpectrumTest, Examples) {
  const OrderSpectrum s = order_spectrum(make("D5"));
  EXPECT_EQ(s, (OrderSpectrum{{1, 1}, {2, 5}, {5, 4}}));
  EXPECT_TRUE(spectrum_dominates(make("C2^2"), make("C2")));
  EXPECT_FALSE(spectrum_dominates(make("C4"), make("C2")));
  EXPECT_EQ(spectrum_gap(make("C4"), make("C2")), std::optional<std::uint32_t>(4));
  EXPECT_EQ(spectrum_gap(make("C2^2"), make("C2")), std::nullopt);
}

TEST(EmbedsTest, Examples) {
  EXPECT_TRUE(embeds(make("C2^2"), make("D4")));
  EXPECT_FALSE(embeds(make("C2^2"), make("Q8")));
  EXPECT_TRUE(embeds(make("Q8"), make("Q16")));
  EXPECT_TRUE(embeds(make("C1"), make("C1")));
  EXPECT_TRUE(embeds(make("D3"), make("Perm[(1 2 3 4);(1 2)]")));
  EXPECT_FALSE(embeds(make("C4"), make("Perm[(1 2 3);(1 2)(3 4)]")));
  EXPECT_FALSE(embeds(make("C3"), make("C2^3")));
}

TEST(EmbedsTest, WitnessVerifies) {
  const FiniteGroup k = make("D4"), h = make("Perm[(1 2 3 4);(1 2)]");
  const auto w = embeds(k, h);
  ASSERT_TRUE(w);
  EXPECT_TRUE(verify_embedding(k, h, *w));
  EmbeddingWitness broken = *w;
  std::swap(broken.image[1], broken.image[2]);
  EXPECT_FALSE(verify_embedding(k, h, broken));
}

TEST(EmbedsTest, NecessaryConditionsAndTransitivity) {
  const auto corpus = family_corpus(16);
  std::vector<std::unique_ptr<EmbeddingTarget>> targets;
  for (const auto& e : corpus) targets.push_back(std::make_unique<EmbeddingTarget>(e.group));
  const std::size_t n = corpus.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto w = targets[j]->embeds(corpus[i].group);
      rel[i][j] = w.has_value();
      if (!w) continue;
      EXPECT_TRUE(verify_embedding(corpus[i].group, corpus[j].group, *w));
      EXPECT_EQ(corpus[j].group.order() % corpus[i].group.order(), 0u);
      EXPECT_TRUE(spectrum_dominates(corpus[i].group, corpus[j].group));
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (rel[a][b] && rel[b][c]) EXPECT_TRUE(rel[a][c]);
}

TEST(InducedGroupTest, InclusionIsHomomorphism) {
  const FiniteGroup g = make("D4");
  for (const auto& s : all_subgroups(g).all) {
    const InducedSubgroup ind = induced_group(g, s);
    EXPECT_EQ(ind.group.order(), s.order());
    EXPECT_TRUE(verify_embedding(ind.group, g, EmbeddingWitness{ind.inclusion}));
  }
}

}  // namespace
}  // namespace grpinv
