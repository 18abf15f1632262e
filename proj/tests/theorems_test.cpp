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

#include "grpinv/theorems.hpp"

#include <gtest/gtest.h>

#include "grpinv/corpus.hpp"
#include "grpinv/group_spec.hpp"

namespace grpinv {
namespace {

class TheoremsTest : public ::testing::Test {
 protected:
  GroupHandle h(const char* text) { return engine_.intern(build(parse_spec(text))); }
  Engine engine_;
};

TEST_F(TheoremsTest, Triangle) {
  EXPECT_TRUE(check_triangle(engine_, h("C2^3"), h("C2^2"), h("C2")));
  EXPECT_TRUE(check_triangle(engine_, h("C3^3"), h("C3^2"), h("C3")));
  EXPECT_TRUE(check_triangle(engine_, h("D4"), h("C4"), h("C2")));
}

TEST_F(TheoremsTest, BoundsSandwich) {
  EXPECT_TRUE(check_bounds_sandwich(engine_, h("C3^3"), h("C3")));
  EXPECT_TRUE(check_bounds_sandwich(engine_, h("D5"), h("C10")));
  EXPECT_TRUE(check_bounds_sandwich(engine_, h("C4"), h("C2")));
}

TEST_F(TheoremsTest, ToZpFormula) {
  EXPECT_TRUE(check_to_zp_formula(engine_, h("C3^3"), 3));
  EXPECT_TRUE(check_to_zp_formula(engine_, h("C2^4"), 2));
  EXPECT_TRUE(check_to_zp_formula(engine_, h("C5^2"), 5));
  EXPECT_THROW(check_to_zp_formula(engine_, h("C4"), 2), std::invalid_argument);
}

TEST_F(TheoremsTest, Subadditivity) {
  const auto g = h("C2^2");
  const auto& lat = g->lattice();
  const auto lines = lat.select(lat.maximal);
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_TRUE(check_subadditivity(engine_, g, h("C2"), lines[0], lines[1], lines[2]));
  EXPECT_TRUE(check_subadditivity(engine_, g, h("C1"), lines[0], lines[1], lines[2]));
}

TEST_F(TheoremsTest, SubadditivityRejectsInvalidPartition) {
  const auto s3 = h("D3");
  const auto& lat = s3->lattice();
  const auto max = lat.select(lat.maximal);  // C3 and three C2
  // Three of the four maximal subgroups miss the rest of S3.
  EXPECT_THROW(check_subadditivity(engine_, s3, h("C6"), max[0], max[1], max[2]), InvalidPartition);
  EXPECT_THROW(check_subadditivity(engine_, s3, h("C6"), max[0], max[1], whole_group(s3->group())),
               InvalidPartition);
  const auto other = h("C2^2");
  EXPECT_THROW(check_subadditivity(engine_, s3, h("C6"), max[0], max[1], other->lattice().all[1]),
               InvalidPartition);
}

TEST_F(TheoremsTest, ProductInequality) {
  EXPECT_TRUE(check_product_inequality(engine_, h("C2^2"), h("C3"), h("C2"), h("C3")));
  EXPECT_TRUE(check_product_inequality(engine_, h("D3"), h("C2"), h("C6"), h("C2")));
}

TEST_F(TheoremsTest, CoordinateInjections) {
  EXPECT_TRUE(check_coordinate_injections(engine_, h("C2^2"), h("C3"), h("C2"), h("C4")));
  EXPECT_TRUE(check_coordinate_injections(engine_, h("D3"), h("C2"), h("C6"), h("C3")));
}

TEST_F(TheoremsTest, MillerMorenoListedFamilies) {
  for (const char* text : {"C7", "Q8", "SD(7,3)", "D3", "D5"}) {
    const MillerMorenoResult r = check_miller_moreno(engine_, h(text));
    EXPECT_TRUE(r.all_proper_cyclic) << text;
    EXPECT_TRUE(r.agree()) << text;
    EXPECT_FALSE(r.family.empty()) << text;
  }
  const MillerMorenoResult d4 = check_miller_moreno(engine_, h("D4"));
  EXPECT_FALSE(d4.all_proper_cyclic);
  EXPECT_TRUE(d4.agree());
}

TEST_F(TheoremsTest, MillerMorenoFlags) {
  // Elementary abelian of rank 2 has only cyclic proper subgroups but is not listed.
  const MillerMorenoResult klein = check_miller_moreno(engine_, h("C2^2"));
  EXPECT_TRUE(klein.all_proper_cyclic);
  EXPECT_FALSE(klein.listed);
  // Q16 is listed but contains a non-cyclic Q8.
  const MillerMorenoResult q16 = check_miller_moreno(engine_, h("Q16"));
  EXPECT_TRUE(q16.listed);
  EXPECT_FALSE(q16.all_proper_cyclic);
}

}  // namespace
}  // namespace grpinv
