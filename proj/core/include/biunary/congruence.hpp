#pragma once

#include <string>
#include <vector>

#include "biunary/structures.hpp"

namespace biunary {

inline constexpr std::size_t kMaxCongruenceOrder = 10;

// A partition of the carrier. block[x] is the index of x's block; blocks are
// numbered in order of their least element.
struct Congruence {
  std::vector<Element> block;

  std::size_t block_count() const;
  std::vector<std::vector<Element>> blocks() const;
  bool operator==(const Congruence&) const = default;
  auto operator<=>(const Congruence&) const = default;
};

// Renumbers an arbitrary block labelling into the canonical numbering.
Congruence normalize(std::vector<Element> labels);

// Compatible with the product, D and R.
bool is_congruence(const BiunarySemigroup& s, const Congruence& c);

// Least congruence containing every pair in `pairs`.
Congruence generated_congruence(const BiunarySemigroup& s,
                                const std::vector<std::pair<Element, Element>>& pairs);

// Every congruence, sorted by block vector. Built as joins of principal
// congruences. Throws OrderTooLarge above kMaxCongruenceOrder.
std::vector<Congruence> congruences(const BiunarySemigroup& s);

// Blocks become elements in block order, labelled "{x,y,...}". Throws
// ShapeError when c is not a congruence of s.
BiunarySemigroup quotient(const BiunarySemigroup& s, const Congruence& c);
ElementMap quotient_map(const Congruence& c);

// "{{a},{g},{e,1}}"
std::string to_string(const BiunarySemigroup& s, const Congruence& c);

}  // namespace biunary
