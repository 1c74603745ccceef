#pragma once

#include <optional>
#include <string_view>

#include "biunary/laws.hpp"
#include "biunary/structures.hpp"

namespace biunary {

enum class PseudoproductKind : std::uint8_t { kLeft, kRight, kSymmetric, kStrong };

std::string_view tag(PseudoproductKind k);
// Accepts left|right|symmetric|strong (case-insensitive).
std::optional<PseudoproductKind> parse_kind(std::string_view s);

// Category-side laws that must hold before the pseudoproduct is total:
// LMU, RMU, TC4, and TC4 + SMU respectively.
std::span<const LawId> pseudoproduct_prerequisites(PseudoproductKind k);
// The associativity law for the pseudoproduct (ASSOC-L, ASSOC-R, ASSOC-SYM;
// the strong form coincides with the symmetric one under its prerequisites).
LawId associativity_law(PseudoproductKind k);

Element pseudoproduct(const CategoryView& v, PseudoproductKind k, Element s,
                      Element t);

// Restricted product s∘t = st when R(s)=D(t), identity actions by
// multiplication. Throws NotCatSemigroup with the first failing CS law.
BiactionCategory category_of(const BiunarySemigroup& s);

struct Extension {
  RawSemigroup table;  // pseudoproduct with D and R carried over from C
  CheckReport associativity;
  std::optional<BiunarySemigroup> semigroup;  // set iff associative
};

// Throws PrerequisiteFailed(law, witness) for the first failing prerequisite.
Extension extension(const BiactionCategory& c, PseudoproductKind k);

// Semigroup-side class each kind is meant for: CAT+LMATCH, CAT+RMATCH,
// MATCHUP, STRONG-MATCHUP.
ClassId roundtrip_class(PseudoproductKind k);
// Category-side laws each kind requires for the reverse trip.
std::span<const LawId> roundtrip_category_laws(PseudoproductKind k);

// Tablewise comparison of S(C(S)) with S. The witness of a failure is the
// first pair (x,y) whose products differ. Throws PrerequisiteFailed when S
// is outside roundtrip_class(k).
CheckReport roundtrip_semigroup(const BiunarySemigroup& s, PseudoproductKind k);
// Tablewise comparison of C(S(C)) with C: comp, D, R and both actions.
// Witness: the first differing (x,y) cell, D/R entry (x), or action cell.
// Throws PrerequisiteFailed when a law in roundtrip_category_laws(k) fails.
CheckReport roundtrip_category(const BiactionCategory& c, PseudoproductKind k);

bool is_homomorphism(const ElementMap& f, const BiunarySemigroup& a,
                     const BiunarySemigroup& b);
bool is_biaction_functor(const ElementMap& f, const BiactionCategory& a,
                         const BiactionCategory& b);

}  // namespace biunary
