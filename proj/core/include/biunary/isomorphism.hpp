#pragma once

#include <optional>
#include <vector>

#include "biunary/structures.hpp"

namespace biunary {

struct IsoOptions {
  // Compare only the multiplication (semigroup reducts).
  bool ignore_unary = false;
};

// A bijection f with f(xy)=f(x)f(y), f(D(x))=D(f(x)), f(R(x))=R(f(x)), or
// nullopt when none exists. Backtracking with invariant pruning; the first
// map found in lexicographic order of images is returned.
std::optional<ElementMap> find_isomorphism(const BiunarySemigroup& a,
                                           const BiunarySemigroup& b,
                                           IsoOptions opt = {});
std::optional<ElementMap> find_isomorphism(const BiactionCategory& a,
                                           const BiactionCategory& b);

// Canonical key: the table words (D, R, mul for semigroups; D, R, comp,
// lact, ract for categories) of the relabeling that minimises them
// lexicographically. Two structures are isomorphic iff their keys are equal.
// Up to order 5 the minimum runs over all permutations; above that only over
// permutations that order elements by an isomorphism-invariant signature,
// which is still a complete invariant but may pick a different
// representative.
struct Canonical {
  std::vector<Element> key;
  std::vector<Element> perm;  // element x of the input becomes perm[x]
};

Canonical canonical_form(const SemigroupView& v);
Canonical canonical_form(const CategoryView& v);
Canonical canonical_form(const BiunarySemigroup& s);
Canonical canonical_form(const BiactionCategory& c);

// Reference implementation minimising over all n! permutations.
Canonical canonical_form_exhaustive(const SemigroupView& v);
Canonical canonical_form_exhaustive(const CategoryView& v);

// Structure relabelled by the canonical permutation, names 0..n-1.
BiunarySemigroup canonical_representative(const BiunarySemigroup& s);
BiactionCategory canonical_representative(const BiactionCategory& c);

}  // namespace biunary
