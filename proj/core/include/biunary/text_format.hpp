#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "biunary/structures.hpp"

namespace biunary {

using Structure = std::variant<BiunarySemigroup, BiactionCategory>;

// Line-oriented text format. '#' starts a comment; blank lines are ignored.
//
//   semigroup order=4
//   elements a g e 1
//   mul
//   a: g a a a
//   ...
//   D a:e g:g e:e 1:1
//   R a:1 g:g e:e 1:1
//
// Category files use the header "category order=N", a "comp" block whose
// cells are '-' where undefined, then D and R lines, then "lact" and
// "ract" blocks with one row per identity e. In lact row e, column s holds
// e|s; in ract row e, column s holds s|e. Table rows may appear in any
// order but each exactly once.
//
// Throws SyntaxError for malformed text, and the validation errors of
// validate_semigroup / validate_biaction_category otherwise.
Structure parse(std::string_view text);
BiunarySemigroup parse_semigroup(std::string_view text);
BiactionCategory parse_category(std::string_view text);

std::string serialize(const BiunarySemigroup& s);
std::string serialize(const BiactionCategory& c);
std::string serialize(const Structure& s);

// Raw tables (e.g. a non-associative extension candidate) in the semigroup
// layout, without validation.
std::string serialize(const RawSemigroup& s);

}  // namespace biunary
