#include "vgraph/group.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "vgraph/error.hpp"

namespace vgraph {
namespace {

// Order of (i, j) in Z_m x Z_n is lcm(m / gcd(m, i), n / gcd(n, j)).
int product_order(int m, int n, int i, int j) { return std::lcm(m / std::gcd(m, i), n / std::gcd(n, j)); }

TEST(GroupTest, CyclicTableIsAdditionModN) {
  const FiniteGroup g = FiniteGroup::cyclic(7);
  for (int x = 0; x < 7; ++x)
    for (int y = 0; y < 7; ++y) EXPECT_EQ(g.mul(x, y), (x + y) % 7);
  EXPECT_EQ(g.inv(3), 4);
  EXPECT_EQ(g.pow(3, 5), 1);
  EXPECT_EQ(g.pow(3, -1), 4);
}

TEST(GroupTest, ProductElementOrders) {
  GroupPtr g = direct_product(make_cyclic(2), make_cyclic(4));
  ASSERT_EQ(g->order(), 8);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 4; ++j) EXPECT_EQ(element_order(*g, i * 4 + j), product_order(2, 4, i, j));
  EXPECT_EQ(element_order(*g, *g->parse_element("1,1")), 4);
  EXPECT_EQ(g->name(5), "1,1");
}

TEST(GroupTest, ParseElementRejectsUnknownNames) {
  const FiniteGroup g = FiniteGroup::cyclic(5);
  EXPECT_EQ(g.parse_element("3"), 3);
  EXPECT_FALSE(g.parse_element("5").has_value());
  EXPECT_FALSE(g.parse_element("x").has_value());
}

TEST(GroupTest, FromTableValidatesAxioms) {
  // Klein four-group by xor.
  std::vector<std::vector<int>> rows(4, std::vector<int>(4));
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) rows[x][y] = x ^ y;
  const FiniteGroup k = FiniteGroup::from_table(rows);
  EXPECT_EQ(k.order(), 4);
  for (int x = 0; x < 4; ++x) EXPECT_EQ(k.inv(x), x);

  rows[1][1] = 2;  // breaks the Latin-square property
  EXPECT_THROW(FiniteGroup::from_table(rows), ValidationError);
  EXPECT_THROW(FiniteGroup::from_table({{0, 1}, {1, 1}}), ValidationError);
}

TEST(GroupTest, NonabelianTableFromPermutations) {
  // S_3 as permutations of {0,1,2}; composition (p*q)(i) = p(q(i)).
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<int>> rows(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      rows[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  GroupPtr s3 = std::make_shared<const FiniteGroup>(FiniteGroup::from_table(rows));
  EXPECT_EQ(s3->identity(), 0);
  std::multiset<int> orders;
  for (int x = 0; x < 6; ++x) orders.insert(element_order(*s3, x));
  EXPECT_EQ(orders, (std::multiset<int>{1, 2, 2, 2, 3, 3}));

  const Subgroup h = cyclic_subgroup(s3, 1);  // a transposition
  ASSERT_EQ(h.size(), 2);
  const CosetPartition cosets = left_cosets(whole_group(s3).elements(), h);
  EXPECT_EQ(cosets.size(), 3);
  for (const auto& c : cosets.cosets) {
    ASSERT_EQ(c.size(), 2u);
    EXPECT_EQ(left_translate(*s3, c.front(), h.elements()), c);
  }
}

TEST(GroupTest, SubgroupGeneratedAndCosets) {
  GroupPtr z12 = make_cyclic(12);
  const std::vector<Element> gens{8, 6};
  const Subgroup h = subgroup_generated(z12, gens);
  EXPECT_EQ(h.elements(), (std::vector<Element>{0, 2, 4, 6, 8, 10}));
  EXPECT_EQ(h.index(), 2);
  EXPECT_TRUE(cyclic_subgroup(z12, 4).is_subgroup_of(h));
  EXPECT_FALSE(cyclic_subgroup(z12, 3).is_subgroup_of(h));
  EXPECT_EQ(subgroup_generated(z12, {}).size(), 1);

  const CosetPartition p = left_cosets(h.elements(), cyclic_subgroup(z12, 4));
  ASSERT_EQ(p.size(), 2);
  EXPECT_EQ(p.cosets[0], (std::vector<Element>{0, 4, 8}));
  EXPECT_EQ(p.cosets[1], (std::vector<Element>{2, 6, 10}));
  EXPECT_EQ(p.coset_of(10), 1);
  EXPECT_EQ(p.coset_of(3), -1);

  const std::vector<Element> odd{1, 3, 5};
  EXPECT_THROW(left_cosets(odd, cyclic_subgroup(z12, 4)), ValidationError);
}

}  // namespace
}  // namespace vgraph
