#include <gtest/gtest.h>

#include "ivlab/ivlab.hpp"

using namespace ivlab;

namespace {

const ValueGroup kL2 = ValueGroup::lexZ(2);
const ValueGroup kL3 = ValueGroup::lexZ(3);
const ValueGroup kOmega = ValueGroup::lexZOmega();
const ValueGroup kQ = ValueGroup::rationals();

GroupElement lex(const ValueGroup& g, std::vector<std::int64_t> c) { return GroupElement::lex(g, std::move(c)); }
GroupElement q(std::int64_t n, std::int64_t d) { return GroupElement::rational(kQ, Rational(n, d)); }

}  // namespace

TEST(ValueGroup, Compare) {
  EXPECT_EQ(compare(lex(kL2, {1, 0}), lex(kL2, {0, 5})), std::strong_ordering::greater);
  EXPECT_EQ(compare(GroupElement::zero(kOmega), GroupElement::sparse(kOmega, {})), std::strong_ordering::equal);
  EXPECT_EQ(compare(q(1, 3), q(2, 5)), std::strong_ordering::less);
}

TEST(ValueGroup, Add) {
  EXPECT_EQ(add(lex(kL2, {1, 0}), lex(kL2, {0, 5})), lex(kL2, {1, 5}));
  const GroupElement s = add(GroupElement::sparse(kOmega, {{2, 3}}), GroupElement::sparse(kOmega, {{2, -3}}));
  EXPECT_TRUE(s.isZero());
  EXPECT_TRUE(s.sparseEntries().empty());
  EXPECT_EQ(add(q(1, 2), q(1, 3)), q(5, 6));
  EXPECT_TRUE(add(q(1, 2), negate(q(1, 2))).isZero());
}

TEST(ValueGroup, SparseNormalForm) {
  const GroupElement x = GroupElement::sparse(kOmega, {{5, 1}, {2, 0}, {3, -4}});
  ASSERT_EQ(x.sparseEntries().size(), 2u);
  EXPECT_EQ(x.sparseEntries()[0].first, 3u);
  EXPECT_EQ(x.sparseEntries()[1].first, 5u);
  EXPECT_EQ(x.str(), "{3:-4, 5:1}");
}

TEST(ValueGroup, RationalLowestTerms) {
  const Rational r(6, -4);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_THROW(Rational(1, 0), UsageError);
}

TEST(ValueGroup, LeadingLevel) {
  EXPECT_EQ(leadingLevel(lex(kL3, {0, 0, 4})), ExtNat(3));
  EXPECT_EQ(leadingLevel(lex(kL3, {1, -2, 0})), ExtNat(1));
  EXPECT_EQ(leadingLevel(GroupElement::zero(kOmega)), kInf);
}

TEST(ValueGroup, Truncate) {
  EXPECT_EQ(lex(kL3, {1, -2, 7}).prefix(2), (std::vector<std::int64_t>{1, -2}));
  EXPECT_EQ(GroupElement::sparse(kOmega, {{3, 5}}).prefix(2), (std::vector<std::int64_t>{0, 0}));
  EXPECT_EQ(lex(kL2, {0, 4}).prefix(1), (std::vector<std::int64_t>{0}));
  EXPECT_EQ(truncate(lex(kL3, {1, -2, 7}), 2), lex(kL2, {1, -2}));
}

TEST(ValueGroup, MixedGroupsRejected) {
  EXPECT_THROW(add(lex(kL2, {1, 0}), lex(kL3, {1, 0, 0})), UsageError);
  EXPECT_THROW(ValueGroup::lexZ(0), UsageError);
}

TEST(ValueGroup, SampleElementsContract) {
  const auto a = sampleElements(ValueGroup::lexZ(1), 2, 7);
  EXPECT_TRUE(std::any_of(a.begin(), a.end(), [](const GroupElement& x) { return x.isZero(); }));
  for (const auto& x : sampleElements(kQ, 3, 1)) {
    EXPECT_LE(std::abs(x.rational().num()), 3);
    EXPECT_LE(x.rational().den(), 3);
  }
  EXPECT_EQ(sampleElements(kOmega, 3, 5), sampleElements(kOmega, 3, 5));
}

TEST(ValueGroup, OrderCompatibleWithAddition) {
  for (const ValueGroup& g : {kL2, kL3, kOmega, kQ}) {
    const auto xs = sampleElements(g, 4, 11, 24);
    for (const auto& a : xs)
      for (const auto& b : xs) {
        const auto ab = compare(a, b);
        EXPECT_EQ(compare(b, a), 0 <=> ab) << g.str();
        for (const auto& c : xs) EXPECT_EQ(compare(add(a, c), add(b, c)), ab) << g.str();
      }
  }
}

TEST(ValueGroup, AdditionIsAbelian) {
  for (const ValueGroup& g : {kL3, kOmega, kQ}) {
    const auto xs = sampleElements(g, 4, 3, 16);
    for (const auto& a : xs)
      for (const auto& b : xs) {
        EXPECT_EQ(add(a, b), add(b, a));
        EXPECT_EQ(subtract(add(a, b), b), a);
        for (const auto& c : xs) EXPECT_EQ(add(add(a, b), c), add(a, add(b, c)));
      }
  }
}

TEST(ExtNat, OrderAndArithmetic) {
  EXPECT_LT(ExtNat(3), kInf);
  EXPECT_EQ(min(ExtNat(2), kInf), ExtNat(2));
  EXPECT_EQ(kInf.str(), "inf");
  EXPECT_THROW((void)kInf.value(), UsageError);
}
