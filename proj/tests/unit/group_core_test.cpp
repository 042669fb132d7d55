#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pqgroup/error.hpp"
#include "pqgroup/group.hpp"

namespace pqgroup {
namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const GroupError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no GroupError thrown";
  return ErrorKind::Internal;
}

TEST(FromTable, TrivialTable) {
  const auto g = FiniteGroup::from_rows({{0}});
  EXPECT_EQ(g->order(), 1U);
  EXPECT_TRUE(is_cyclic(*g).has_value());
}

TEST(FromTable, AdditionModTwo) {
  const auto g = FiniteGroup::from_rows({{0, 1}, {1, 0}});
  EXPECT_EQ(g->order(), 2U);
  EXPECT_EQ(g->inv(1), 1U);
  EXPECT_EQ(*g, *cyclic_group(2));
}

TEST(FromTable, RepeatedEntryIsNotLatin) {
  EXPECT_EQ(kind_of([] { FiniteGroup::from_rows({{0, 1}, {1, 1}}); }), ErrorKind::NotLatin);
}

TEST(FromTable, OutOfRangeIsNotClosed) {
  EXPECT_EQ(kind_of([] { FiniteGroup::from_rows({{0, 1}, {1, 2}}); }), ErrorKind::NotClosed);
}

TEST(FromTable, MissingIdentity) {
  EXPECT_EQ(kind_of([] { FiniteGroup::from_rows({{1, 0}, {0, 1}}); }), ErrorKind::NoIdentity);
}

TEST(FromTable, NonAssociativeLatinSquare) {
  // A loop of order 5 with identity 0 that is not a group.
  const std::vector<std::vector<Index>> rows{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  try {
    FiniteGroup::from_rows(rows);
    FAIL() << "accepted a non-associative table";
  } catch (const GroupError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAssociative);
    EXPECT_NE(std::string(e.what()).find("("), std::string::npos) << e.what();
  }
}

TEST(FromTable, WrongSizeRejected) {
  EXPECT_EQ(kind_of([] { FiniteGroup::from_table(2, {0, 1, 1}); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { FiniteGroup::from_table(0, {}); }), ErrorKind::InvalidArgument);
}

TEST(CyclicGroup, Basics) {
  EXPECT_EQ(cyclic_group(1)->order(), 1U);
  const auto c6 = cyclic_group(6);
  EXPECT_EQ(element_order(*c6, Element{1}), 6U);
  EXPECT_EQ(element_order(*c6, Element{2}), 3U);
  EXPECT_EQ(oracle::element_order(*c6, 2), 3U);
  EXPECT_EQ(c6->mul(4, 5), 3U);
  EXPECT_EQ(c6->pow(1, -1), 5U);
  EXPECT_EQ(is_cyclic(*cyclic_group(9))->index, 1U);
  EXPECT_EQ(kind_of([] { cyclic_group(0); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { cyclic_group(kMaxOrder + 1); }), ErrorKind::SizeCap);
}

TEST(CyclicGroup, GeneratorOfC15) { EXPECT_EQ(element_order(*cyclic_group(15), Element{1}), 15U); }

TEST(SymmetricGroup, S1IsTrivial) { EXPECT_EQ(symmetric_group(1)->order(), 1U); }

TEST(SymmetricGroup, S3) {
  const auto g = symmetric_group(3);
  EXPECT_EQ(g->order(), 6U);
  EXPECT_FALSE(is_abelian(*g));
  EXPECT_NE(g->mul(1, 3), g->mul(3, 1));
  EXPECT_FALSE(is_cyclic(*g).has_value());
  const auto orders = element_orders(*g);
  EXPECT_EQ(*std::max_element(orders.begin(), orders.end()), 3U);
  EXPECT_EQ(element_order(*g, Element{fixtures::kS3Transposition}), 2U);
  EXPECT_EQ(element_order(*g, Element{fixtures::kS3ThreeCycle}), 3U);
  EXPECT_EQ(symmetric_group_permutation(3, 0), (std::vector<unsigned>{0, 1, 2}));
  EXPECT_EQ(symmetric_group_permutation(3, 3), (std::vector<unsigned>{1, 2, 0}));
}

TEST(SymmetricGroup, SizeLimits) {
  EXPECT_EQ(symmetric_group(5)->order(), 120U);
  EXPECT_EQ(kind_of([] { symmetric_group(7); }), ErrorKind::SizeCap);
  EXPECT_EQ(kind_of([] { symmetric_group(0); }), ErrorKind::InvalidArgument);
}

TEST(ElementOrder, IdentityHasOrderOne) { EXPECT_EQ(element_order(*symmetric_group(4), Element{0}), 1U); }

TEST(IsAbelian, Examples) {
  EXPECT_TRUE(is_abelian(*cyclic_group(9)));
  EXPECT_FALSE(is_abelian(*symmetric_group(3)));
  EXPECT_TRUE(is_abelian(*fixtures::klein()));
}

TEST(IsCyclic, TrivialGroupGeneratorIsIdentity) { EXPECT_EQ(is_cyclic(*trivial_group())->index, 0U); }

// Properties over the corpus.

TEST(GroupProperties, ElementOrdersDivideGroupOrderAndMatchOracle) {
  for (const auto& [name, g] : fixtures::corpus()) {
    for (std::size_t x = 0; x < g->order(); ++x) {
      const std::size_t k = element_order(*g, Element{static_cast<Index>(x)});
      EXPECT_EQ(g->order() % k, 0U) << name;
      EXPECT_EQ(k, oracle::element_order(*g, static_cast<Index>(x))) << name;
    }
  }
}

TEST(GroupProperties, CyclicIffMaxOrderIsGroupOrder) {
  for (const auto& [name, g] : fixtures::corpus()) {
    const auto orders = element_orders(*g);
    const bool has_full = *std::max_element(orders.begin(), orders.end()) == g->order();
    const auto gen = is_cyclic(*g);
    EXPECT_EQ(gen.has_value(), has_full) << name;
    if (gen) {
      EXPECT_EQ(element_order(*g, *gen), g->order()) << name;
      for (Index x = 0; x < gen->index; ++x) EXPECT_LT(element_order(*g, Element{x}), g->order()) << name;
    }
  }
}

TEST(GroupProperties, InvariantsRecheck) {
  for (const auto& [name, g] : fixtures::corpus()) {
    EXPECT_NO_THROW(validate(*g)) << name;
    for (Index x = 0; x < g->order(); ++x) {
      EXPECT_EQ(g->mul(x, g->inv(x)), 0U) << name;
      EXPECT_EQ(g->mul(g->inv(x), x), 0U) << name;
    }
  }
}

TEST(SameGroup, PointerOrTable) {
  const auto a = cyclic_group(5);
  EXPECT_TRUE(same_group(a, a));
  EXPECT_TRUE(same_group(a, cyclic_group(5)));
  EXPECT_FALSE(same_group(a, cyclic_group(4)));
}

}  // namespace
}  // namespace pqgroup
