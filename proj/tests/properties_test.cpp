#include <gtest/gtest.h>

#include "biunary/esn.hpp"
#include "biunary/text_format.hpp"
#include "support.hpp"

namespace biunary {
namespace {

using test::E;
using test::holds;
using test::in;

constexpr std::size_t kMaxOrder = 4;

// From order 3 on every antecedent must be met by some model.
void expect_exercised(std::size_t order, std::size_t hits) {
  if (order >= 3) EXPECT_GT(hits, 0u);
}

class Semigroups : public ::testing::TestWithParam<std::size_t> {
 protected:
  const std::vector<BiunarySemigroup>& models() const { return test::precat_models(GetParam()); }
};

class Categories : public ::testing::TestWithParam<std::size_t> {
 protected:
  const std::vector<BiactionCategory>& models() const { return test::category_models(GetParam()); }
};

INSTANTIATE_TEST_SUITE_P(Orders, Semigroups, ::testing::Range<std::size_t>(1, kMaxOrder + 1));
INSTANTIATE_TEST_SUITE_P(Orders, Categories, ::testing::Range<std::size_t>(1, kMaxOrder + 1));

TEST_P(Semigroups, WeakCongruenceConditionsGiveCS6) {
  std::size_t hits = 0;
  for (const auto& s : models()) {
    if (!holds(s, LawId::kLWCong) || !holds(s, LawId::kRWCong)) continue;
    ++hits;
    EXPECT_TRUE(holds(s, LawId::kCS6)) << serialize(s);
  }
  expect_exercised(GetParam(), hits);
}

TEST_P(Semigroups, StrongMatchupGivesMatchup) {
  std::size_t hits = 0;
  for (const auto& s : models()) {
    if (!in(s, ClassId::kCat) || !holds(s, LawId::kSMatch1)) continue;
    ++hits;
    EXPECT_TRUE(holds(s, LawId::kLMatch)) << serialize(s);
    EXPECT_TRUE(holds(s, LawId::kRMatch)) << serialize(s);
  }
  expect_exercised(GetParam(), hits);
}

TEST_P(Semigroups, LeftMatchupCharacterisation) {
  std::size_t hits = 0;
  for (const auto& s : models()) {
    const bool lhs = in(s, ClassId::kCat) && holds(s, LawId::kLMatch);
    const bool rhs = holds(s, LawId::kLCong) && holds(s, LawId::kRWCong) &&
                     holds(s, LawId::kRAbsorb);
    hits += lhs;
    EXPECT_EQ(lhs, rhs) << serialize(s);
  }
  expect_exercised(GetParam(), hits);
}

TEST_P(Semigroups, MatchupCharacterisation) {
  std::size_t hits = 0;
  for (const auto& s : models()) {
    const bool lhs = in(s, ClassId::kMatchup);
    const bool rhs = holds(s, LawId::kLCong) && holds(s, LawId::kRCong) &&
                     holds(s, LawId::kRAbsorb) && holds(s, LawId::kDAbsorb);
    hits += lhs;
    EXPECT_EQ(lhs, rhs) << serialize(s);
  }
  expect_exercised(GetParam(), hits);
}

TEST_P(Semigroups, DAmpleGivesBand) {
  std::size_t hits = 0;
  for (const auto& s : models()) {
    if (!holds(s, LawId::kDAmple)) continue;
    ++hits;
    EXPECT_TRUE(holds(s, LawId::kBandD)) << serialize(s);
  }
  expect_exercised(GetParam(), hits);
}

TEST_P(Semigroups, LeftRestrictionWithRangeCharacterisation) {
  std::size_t hits = 0;
  for (const auto& s : models()) {
    const bool rhs = in(s, ClassId::kLeftSemiLoc) && holds(s, LawId::kDAmple) &&
                     holds(s, LawId::kSemilatticeD);
    hits += rhs;
    EXPECT_EQ(in(s, ClassId::kLRR), rhs) << serialize(s);
  }
  expect_exercised(GetParam(), hits);
}

TEST_P(Semigroups, LocalisableThreeWays) {
  std::size_t hits = 0;
  for (const auto& s : models()) {
    if (!in(s, ClassId::kCat)) continue;
    const bool band = holds(s, LawId::kBandD);
    const bool loc = in(s, ClassId::kLocalisable);
    hits += loc;
    EXPECT_EQ(loc, in(s, ClassId::kStrongMatchup) && band) << serialize(s);
    EXPECT_EQ(loc, in(s, ClassId::kMatchup) && band) << serialize(s);
  }
  expect_exercised(GetParam(), hits);
}

TEST_P(Semigroups, StrongConditionViaCongruences) {
  std::size_t hits = 0;
  for (const auto& s : models()) {
    if (!in(s, ClassId::kCat)) continue;
    const bool rhs = holds(s, LawId::kLCong) && holds(s, LawId::kRCong) &&
                     holds(s, LawId::kProjDEqR);
    hits += rhs;
    EXPECT_EQ(holds(s, LawId::kSMatch1), rhs) << serialize(s);
  }
  expect_exercised(GetParam(), hits);
}

TEST_P(Semigroups, BandLeftMatchup) {
  std::size_t hits = 0;
  for (const auto& s : models()) {
    if (!in(s, ClassId::kCat) || !holds(s, LawId::kBandD)) continue;
    hits += holds(s, LawId::kLMatch);
    EXPECT_EQ(holds(s, LawId::kLMatch), in(s, ClassId::kLeftSemiLoc)) << serialize(s);
  }
  expect_exercised(GetParam(), hits);
}

TEST_P(Semigroups, CategoryOfCatSemigroup) {
  std::size_t hits = 0;
  for (const auto& s : models()) {
    if (!in(s, ClassId::kCat)) continue;
    ++hits;
    const BiactionCategory c = category_of(s);
    const std::size_t n = s.order();
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const bool composable = s.r(E(x)) == s.d(E(y));
        EXPECT_EQ(c.comp(E(x), E(y)), composable ? s.mul(E(x), E(y)) : kUndefined);
      }
    for (LawId l : {LawId::kTC1, LawId::kTC2, LawId::kTC6}) EXPECT_TRUE(holds(c, l));
  }
  expect_exercised(GetParam(), hits);
}

TEST_P(Semigroups, LeftMatchupCategoryIsExtensible) {
  std::size_t hits = 0;
  for (const auto& s : models()) {
    if (!in(s, ClassId::kLeftMatchup)) continue;
    ++hits;
    const BiactionCategory c = category_of(s);
    EXPECT_TRUE(holds(c, LawId::kLMU)) << serialize(s);
    EXPECT_TRUE(holds(c, LawId::kTC4L)) << serialize(s);
    EXPECT_TRUE(roundtrip_semigroup(s, PseudoproductKind::kLeft).holds) << serialize(s);
  }
  expect_exercised(GetParam(), hits);
}

TEST_P(Semigroups, LocalisableCategoryIsTranscription) {
  std::size_t hits = 0;
  for (const auto& s : models()) {
    if (!in(s, ClassId::kLocalisable)) continue;
    ++hits;
    EXPECT_TRUE(in_class(category_of(s).view(), CategoryClassId::kTranscription))
        << serialize(s);
  }
  expect_exercised(GetParam(), hits);
}

TEST_P(Categories, TC4SplitsIntoLeftAndRight) {
  std::size_t hits = 0;
  for (const auto& c : models()) {
    const bool tc4 = holds(c, LawId::kTC4);
    EXPECT_EQ(tc4, holds(c, LawId::kTC4L) && holds(c, LawId::kTC4R)) << serialize(c);
    if (!tc4) continue;
    ++hits;
    EXPECT_TRUE(holds(c, LawId::kLMU)) << serialize(c);
    EXPECT_TRUE(holds(c, LawId::kRMU)) << serialize(c);
  }
  expect_exercised(GetParam(), hits);
}

TEST_P(Categories, PseudoproductsAgreeUnderTC4) {
  std::size_t hits = 0;
  for (const auto& c : models()) {
    if (!holds(c, LawId::kTC4)) continue;
    ++hits;
    const CategoryView v = c.view();
    const test::NaiveCategory k{c};
    for (std::size_t s = 0; s < c.order(); ++s)
      for (std::size_t t = 0; t < c.order(); ++t) {
        const Element l = pseudoproduct(v, PseudoproductKind::kLeft, E(s), E(t));
        ASSERT_NE(l, kUndefined);
        EXPECT_EQ(l, pseudoproduct(v, PseudoproductKind::kRight, E(s), E(t)));
        EXPECT_EQ(l, pseudoproduct(v, PseudoproductKind::kSymmetric, E(s), E(t)));
        EXPECT_EQ(l, k.pl(E(s), E(t)));
        EXPECT_EQ(l, k.psym(E(s), E(t)));
      }
    EXPECT_EQ(holds(c, LawId::kTC7), holds(c, LawId::kAssocSym)) << serialize(c);
  }
  expect_exercised(GetParam(), hits);
}

TEST_P(Categories, LeftSemiLocalisableGivesAssociativity) {
  std::size_t hits = 0;
  for (const auto& c : models()) {
    if (!holds(c, LawId::kTC3) || !holds(c, LawId::kTC4L) || !holds(c, LawId::kTC5a))
      continue;
    ++hits;
    EXPECT_TRUE(holds(c, LawId::kAssocL)) << serialize(c);
  }
  expect_exercised(GetParam(), hits);
}

TEST_P(Categories, StrongFormUnderSMU) {
  std::size_t hits = 0;
  for (const auto& c : models()) {
    if (!holds(c, LawId::kTC4) || !holds(c, LawId::kSMU)) continue;
    ++hits;
    const CategoryView v = c.view();
    for (std::size_t s = 0; s < c.order(); ++s)
      for (std::size_t t = 0; t < c.order(); ++t)
        EXPECT_EQ(pseudoproduct(v, PseudoproductKind::kStrong, E(s), E(t)),
                  pseudoproduct(v, PseudoproductKind::kSymmetric, E(s), E(t)))
            << serialize(c);
  }
  expect_exercised(GetParam(), hits);
}

TEST_P(Categories, StrictTC7IsTC4WithAssociativity) {
  std::size_t hits = 0;
  for (const auto& c : models()) {
    hits += holds(c, LawId::kTC7P);
    EXPECT_EQ(holds(c, LawId::kTC7P), holds(c, LawId::kTC4) && holds(c, LawId::kAssocSym))
        << serialize(c);
  }
  expect_exercised(GetParam(), hits);
}

TEST_P(Categories, RightActionIdempotentUnderLeftMatchup) {
  std::size_t hits = 0;
  for (const auto& c : models()) {
    if (!holds(c, LawId::kLMU) || !holds(c, LawId::kTC4L)) continue;
    ++hits;
    for (std::size_t x = 0; x < c.order(); ++x)
      for (Element e : c.identities())
        EXPECT_EQ(c.right(c.right(E(x), e), e), c.right(E(x), e)) << serialize(c);
  }
  expect_exercised(GetParam(), hits);
}

TEST_P(Categories, AssociativeLeftExtensionIsLeftMatchup) {
  std::size_t hits = 0;
  for (const auto& c : models()) {
    if (!holds(c, LawId::kLMU) || !holds(c, LawId::kTC4L)) continue;
    const Extension ext = extension(c, PseudoproductKind::kLeft);
    if (!ext.semigroup) continue;
    ++hits;
    EXPECT_TRUE(in(*ext.semigroup, ClassId::kLeftMatchup)) << serialize(c);
  }
  expect_exercised(GetParam(), hits);
}

}  // namespace
}  // namespace biunary
