#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "biunary/element.hpp"
#include "biunary/structures.hpp"
#include "biunary/view.hpp"

namespace biunary {

enum class LawId : std::uint8_t {
  // Semigroup side.
  kCS1,
  kCS2,
  kCS3,
  kCS4,
  kCS5,
  kCS6,
  kLCong,
  kRCong,
  kLWCong,
  kRWCong,
  kLMatch,
  kRMatch,
  kRMatchAsPrinted,
  kSMatch1,
  kSMatch2,
  kDAmple,
  kLRR,
  kBandD,
  kSemilatticeD,
  kProjDEqR,
  kRAbsorb,
  kDAbsorb,
  kCommD,
  // Category-with-biaction side.
  kTC1,
  kTC2,
  kTC3,
  kTC4,
  kTC4a,
  kTC4b,
  kTC4aP,
  kTC4bP,
  kTC4L,
  kTC4R,
  kTC5,
  kTC5a,
  kTC5b,
  kTC6,
  kLMU,
  kRMU,
  kSMU,
  kSMU1,
  kSMU2,
  kTC7,
  kTC7a,
  kTC7b,
  kTC7P,
  kTC7aP,
  kTC7bP,
  kAssocL,
  kAssocR,
  kAssocSym,
  kCommId,
  kRestrId,
};

enum class Side : std::uint8_t { kSemigroup, kCategory };

// Quantifier domain of one law variable.
enum class VarKind : std::uint8_t {
  kAny,         // every element
  kProjection,  // D(S)
  kIdentity,    // C⁰
};

struct LawInfo {
  LawId id;
  std::string_view tag;
  Side side;
  std::uint8_t arity;  // 0 for conjunctions of other laws
  std::array<VarKind, 3> vars;
  std::string_view variables;  // e.g. "x,y" or "a,b,e"
  std::string_view formula;
  std::span<const LawId> components;  // non-empty for conjunctions
};

std::span<const LawInfo> law_catalog();
const LawInfo& info(LawId id);
inline std::string_view tag(LawId id) { return info(id).tag; }
// Case-insensitive.
std::optional<LawId> parse_law(std::string_view tag);

// Evaluation of one atomic law at one variable assignment. part is the
// index of the failing (or undecided) equation for multi-equation laws;
// lhs/rhs are the two sides of that equation, kUndefined when the term does
// not exist.
struct Instance {
  Tri verdict = Tri::kTrue;
  std::uint8_t part = 0;
  Element lhs = 0;
  Element rhs = 0;
};

Instance eval(LawId id, const SemigroupView& v, const Element* vars);
Instance eval(LawId id, const CategoryView& v, const Element* vars);

struct CheckReport {
  std::string law;
  bool holds = true;
  std::optional<Tuple> witness;  // present iff !holds
  // Detail for failures: atomic law that failed (differs from law for
  // conjunctions), equation index, and evaluated sides.
  std::string failed_component;
  std::uint8_t part = 0;
  Element lhs = 0;
  Element rhs = 0;
};

// Witness is the lexicographically first failing tuple. Conjunctions report
// the first failing component in listed order.
// check_law throws WrongStructureKind for category-side tags and vice versa.
CheckReport check_law(const BiunarySemigroup& s, LawId id);
CheckReport check_law(const SemigroupView& v, LawId id);
// ASSOC-L/R/SYM first require LMU / RMU / TC4 respectively and throw
// PseudoproductUndefined with that law's witness when it fails.
CheckReport check_tc(const BiactionCategory& c, LawId id);
// Non-throwing: an undefined pseudoproduct simply makes ASSOC-* fail.
CheckReport check_tc(const CategoryView& v, LawId id);

// Three-valued scan over a partially filled structure: kFalse as soon as
// some instance is decided false, kTrue when all are decided true.
Tri scan(const SemigroupView& v, LawId id);
Tri scan(const CategoryView& v, LawId id);

// ---------------------------------------------------------------------------
// Classes

enum class ClassId : std::uint8_t {
  kPrecat,
  kCat,
  kLocalisable,
  kEhresmann,
  kLeftSemiLoc,
  kRightSemiLoc,
  kLeftMatchup,
  kRightMatchup,
  kMatchup,
  kStrongMatchup,
  kDAmple,
  kLRR,
};

enum class CategoryClassId : std::uint8_t {
  kTranscription,
  kLeftMatchup,
  kRightMatchup,
  kMatchup,
  kStrongMatchup,
  kLeftSemiLoc,
  kLRR,
};

struct ClassInfo {
  std::string_view tag;
  std::span<const LawId> laws;
  std::string_view description;
};

std::span<const ClassId> all_classes();
std::span<const CategoryClassId> all_category_classes();
const ClassInfo& info(ClassId id);
const ClassInfo& info(CategoryClassId id);
inline std::string_view tag(ClassId id) { return info(id).tag; }
inline std::string_view tag(CategoryClassId id) { return info(id).tag; }
std::optional<ClassId> parse_class(std::string_view tag);
std::optional<CategoryClassId> parse_category_class(std::string_view tag);

bool in_class(const SemigroupView& v, ClassId id);
bool in_class(const CategoryView& v, CategoryClassId id);

struct Classification {
  std::vector<std::pair<ClassId, bool>> classes;
  // Set when PRECAT fails; then no class is claimed.
  std::optional<CheckReport> precat_failure;

  bool has(ClassId id) const;
};

struct CategoryClassification {
  std::vector<std::pair<CategoryClassId, bool>> classes;
  bool has(CategoryClassId id) const;
};

Classification classify(const BiunarySemigroup& s);
CategoryClassification classify_category(const BiactionCategory& c);

}  // namespace biunary
