#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "biunary/relations.hpp"
#include "biunary/text_format.hpp"

namespace biunary {

enum class FixtureId : std::uint8_t { kEx2_4, kEx2_10, kEx3_3S, kEx3_3T, kEx3_8, kEx4_9 };

std::span<const FixtureId> fixture_ids();
std::string_view tag(FixtureId id);  // "ex2.4", ...
std::optional<FixtureId> parse_fixture_id(std::string_view s);

// Embedded source text in the module text format.
std::string_view fixture_text(FixtureId id);
Structure fixture(FixtureId id);
BiunarySemigroup fixture_semigroup(FixtureId id);  // WrongStructureKind for ex4.9
BiactionCategory fixture_category(FixtureId id);   // WrongStructureKind otherwise

// The concrete relations the fixture's elements are, in element order, for
// the fixtures built inside a relation monoid (ex2.4, ex2.10, ex3.3S,
// ex3.3T). Composition is angelic.
struct FixtureRelations {
  std::size_t ground;
  std::vector<FiniteRelation> elements;
};
std::optional<FixtureRelations> fixture_relations(FixtureId id);

}  // namespace biunary
