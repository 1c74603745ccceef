#include "biunary/fixtures.hpp"

namespace biunary {
namespace {

constexpr FixtureId kIds[] = {FixtureId::kEx2_4,  FixtureId::kEx2_10,
                              FixtureId::kEx3_3S, FixtureId::kEx3_3T,
                              FixtureId::kEx3_8,  FixtureId::kEx4_9};

constexpr std::string_view kEx2_4 = R"(# partial injections a, g, e, 1 on four points
semigroup order=4
elements a g e 1
mul
a: g a a a
g: a g g g
e: a g e e
1: a g e 1
D a:e g:g e:e 1:1
R a:1 g:g e:e 1:1
)";

constexpr std::string_view kEx2_10 = R"(# band of three maps, D(a)=R(a)=e
semigroup order=3
elements e f a
mul
e: e f a
f: a f a
a: a f a
D e:e f:f a:e
R e:e f:f a:e
)";

constexpr std::string_view kEx3_3S = R"(# 0 is the empty function
semigroup order=4
elements 0 e f b
mul
0: 0 0 0 0
e: 0 e b b
f: 0 b f b
b: 0 b b b
D 0:e e:e f:f b:e
R 0:f e:e f:f b:f
)";

constexpr std::string_view kEx3_3T = R"(# as ex3.3S except 0*0 = b
semigroup order=4
elements 0 e f b
mul
0: b 0 0 0
e: 0 e b b
f: 0 b f b
b: 0 b b b
D 0:e e:e f:f b:e
R 0:f e:e f:f b:f
)";

constexpr std::string_view kEx3_8 = R"(# semilattice 0 < e < 1
semigroup order=3
elements 0 e 1
mul
0: 0 0 0
e: 0 e e
1: 0 e 1
D 0:e e:e 1:1
R 0:1 e:e 1:1
)";

constexpr std::string_view kEx4_9 = R"(# s o s = f; satisfies LMU and TC4L
category order=3
elements s e f
comp
s: f - s
e: - e -
f: s - f
D s:f e:e f:f
R s:f e:e f:f
lact
e: e e e
f: s f f
ract
e: s e f
f: s e f
)";

}  // namespace

std::span<const FixtureId> fixture_ids() { return kIds; }

std::string_view tag(FixtureId id) {
  switch (id) {
    case FixtureId::kEx2_4:
      return "ex2.4";
    case FixtureId::kEx2_10:
      return "ex2.10";
    case FixtureId::kEx3_3S:
      return "ex3.3S";
    case FixtureId::kEx3_3T:
      return "ex3.3T";
    case FixtureId::kEx3_8:
      return "ex3.8";
    case FixtureId::kEx4_9:
      return "ex4.9";
  }
  return "?";
}

std::optional<FixtureId> parse_fixture_id(std::string_view s) {
  for (FixtureId id : kIds)
    if (tag(id) == s) return id;
  return std::nullopt;
}

std::string_view fixture_text(FixtureId id) {
  switch (id) {
    case FixtureId::kEx2_4:
      return kEx2_4;
    case FixtureId::kEx2_10:
      return kEx2_10;
    case FixtureId::kEx3_3S:
      return kEx3_3S;
    case FixtureId::kEx3_3T:
      return kEx3_3T;
    case FixtureId::kEx3_8:
      return kEx3_8;
    case FixtureId::kEx4_9:
      return kEx4_9;
  }
  return {};
}

Structure fixture(FixtureId id) { return parse(fixture_text(id)); }

BiunarySemigroup fixture_semigroup(FixtureId id) {
  return parse_semigroup(fixture_text(id));
}

BiactionCategory fixture_category(FixtureId id) {
  return parse_category(fixture_text(id));
}

std::optional<FixtureRelations> fixture_relations(FixtureId id) {
  using P = std::vector<std::pair<std::size_t, std::size_t>>;
  auto rels = [](std::size_t n, std::initializer_list<P> ps) {
    FixtureRelations out{n, {}};
    for (const auto& p : ps) out.elements.push_back(FiniteRelation::from_pairs(n, p));
    return out;
  };
  switch (id) {
    case FixtureId::kEx2_4:
      // X = {w,x,y,z} as 0..3
      return rels(4, {{{0, 1}, {1, 0}},
                      {{0, 0}, {1, 1}},
                      {{0, 0}, {1, 1}, {2, 2}},
                      {{0, 0}, {1, 1}, {2, 2}, {3, 3}}});
    case FixtureId::kEx2_10:
      // X = {x,y,z} as 0..2
      return rels(3, {{{0, 0}, {1, 2}, {2, 2}},
                      {{0, 1}, {1, 1}, {2, 1}},
                      {{0, 2}, {1, 2}, {2, 2}}});
    case FixtureId::kEx3_3S:
    case FixtureId::kEx3_3T: {
      // X = {1,2,3,4} as 0..3
      P zero;
      if (id == FixtureId::kEx3_3T) zero = {{1, 2}, {2, 1}};
      return rels(4, {zero,
                      {{0, 0}, {1, 1}, {2, 2}},
                      {{1, 1}, {2, 2}, {3, 3}},
                      {{1, 1}, {2, 2}}});
    }
    default:
      return std::nullopt;
  }
}

}  // namespace biunary
