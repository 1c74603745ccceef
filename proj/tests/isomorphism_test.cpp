#include <gtest/gtest.h>

#include <set>

#include "biunary/esn.hpp"
#include "biunary/fixtures.hpp"
#include "biunary/isomorphism.hpp"
#include "support.hpp"

namespace biunary {
namespace {

TEST(Isomorphism, Ex33NotEvenAsSemigroups) {
  const BiunarySemigroup s = fixture_semigroup(FixtureId::kEx3_3S);
  const BiunarySemigroup t = fixture_semigroup(FixtureId::kEx3_3T);
  EXPECT_FALSE(find_isomorphism(s, t));
  EXPECT_FALSE(find_isomorphism(s, t, {.ignore_unary = true}));
}

TEST(Isomorphism, SelfIsIdentity) {
  for (FixtureId id : fixture_ids()) {
    const Structure s = fixture(id);
    std::optional<ElementMap> f;
    std::size_t n = 0;
    if (const auto* sg = std::get_if<BiunarySemigroup>(&s)) {
      f = find_isomorphism(*sg, *sg);
      n = sg->order();
    } else {
      const auto& c = std::get<BiactionCategory>(s);
      f = find_isomorphism(c, c);
      n = c.order();
    }
    ASSERT_TRUE(f) << tag(id);
    EXPECT_EQ(*f, ElementMap::identity(n)) << tag(id);
  }
}

TEST(Isomorphism, RecoversAppliedPermutation) {
  const BiunarySemigroup s = fixture_semigroup(FixtureId::kEx2_4);
  const std::vector<Element> perm = {2, 0, 3, 1};
  const BiunarySemigroup p = permute(s, perm);
  const auto f = find_isomorphism(p, s);
  ASSERT_TRUE(f);
  EXPECT_TRUE(is_homomorphism(*f, p, s));
  for (std::size_t x = 0; x < 4; ++x) EXPECT_EQ(f->image[perm[x]], x);
}

TEST(Isomorphism, RandomRelabellingsOfModels) {
  std::mt19937 rng(7);
  for (std::size_t n = 2; n <= 4; ++n)
    for (const auto& s : test::precat_models(n)) {
      const auto perm = test::random_permutation(n, rng);
      const BiunarySemigroup p = permute(s, perm);
      const auto f = find_isomorphism(s, p);
      ASSERT_TRUE(f);
      EXPECT_TRUE(is_homomorphism(*f, s, p));
      EXPECT_EQ(canonical_form(s).key, canonical_form(p).key);
    }
  for (std::size_t n = 2; n <= 3; ++n)
    for (const auto& c : test::category_models(n)) {
      const auto perm = test::random_permutation(n, rng);
      const BiactionCategory p = permute(c, perm);
      const auto f = find_isomorphism(c, p);
      ASSERT_TRUE(f);
      EXPECT_TRUE(is_biaction_functor(*f, c, p));
      EXPECT_EQ(canonical_form(c).key, canonical_form(p).key);
    }
}

TEST(Isomorphism, DistinctRepresentativesAreNotIsomorphic) {
  const auto& models = test::precat_models(3);
  for (std::size_t i = 0; i < models.size(); ++i)
    for (std::size_t j = i + 1; j < models.size(); ++j)
      EXPECT_FALSE(find_isomorphism(models[i], models[j]));
}

TEST(Canonical, MatchesExhaustiveReference) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& s : test::precat_models(n)) {
      const Canonical a = canonical_form(s);
      const Canonical b = canonical_form_exhaustive(s.view());
      EXPECT_EQ(a.key, b.key);
      EXPECT_EQ(permute(s, a.perm).mul_table().size(), n * n);
    }
}

TEST(Canonical, RepresentativeIsFixedPoint) {
  std::mt19937 rng(11);
  for (const auto& s : test::precat_models(4)) {
    const BiunarySemigroup rep = canonical_representative(s);
    const BiunarySemigroup again =
        canonical_representative(permute(s, test::random_permutation(4, rng)));
    EXPECT_TRUE(rep == again);
  }
}

TEST(Canonical, OrderSixKeyIsInvariant) {
  // a 6-element semilattice chain plus relabellings
  RawSemigroup raw;
  raw.names = default_names(6);
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y) raw.mul.push_back(std::min(x, y));
  for (int x = 0; x < 6; ++x) {
    raw.d.push_back(x);
    raw.r.push_back(x);
  }
  const BiunarySemigroup s = validate_semigroup(raw);
  std::mt19937 rng(3);
  std::set<std::vector<Element>> keys;
  for (int i = 0; i < 20; ++i)
    keys.insert(canonical_form(permute(s, test::random_permutation(6, rng))).key);
  EXPECT_EQ(keys.size(), 1u);
}

}  // namespace
}  // namespace biunary
