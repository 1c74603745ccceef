#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "biunary/element.hpp"

namespace biunary {

enum class Tri : std::uint8_t { kFalse, kTrue, kUnknown };

constexpr Tri tri(bool b) noexcept { return b ? Tri::kTrue : Tri::kFalse; }

// "Both sides exist and are equal."
constexpr Tri strict_eq(Element a, Element b) noexcept {
  if (a == kUnknown || b == kUnknown) return Tri::kUnknown;
  if (a == kUndefined || b == kUndefined) return Tri::kFalse;
  return tri(a == b);
}

// "Equal whenever both sides exist."
constexpr Tri guarded_eq(Element a, Element b) noexcept {
  if (a == kUnknown || b == kUnknown) return Tri::kUnknown;
  if (a == kUndefined || b == kUndefined) return Tri::kTrue;
  return tri(a == b);
}

// Non-owning view of a biunary semigroup, possibly with unfilled cells.
// Every operation propagates sentinels, so the same law formulas evaluate
// both complete structures and partial search states.
struct SemigroupView {
  std::size_t n = 0;
  const Element* mul_table = nullptr;  // n*n, row-major
  const Element* d_map = nullptr;
  const Element* r_map = nullptr;
  std::span<const Element> projections;  // image of D, ascending

  Element mul(Element x, Element y) const noexcept {
    if (is_sentinel(x) || is_sentinel(y)) return taint(x, y);
    return mul_table[x * n + y];
  }
  Element mul(Element x, Element y, Element z) const noexcept {
    return mul(mul(x, y), z);
  }
  Element d(Element x) const noexcept {
    return is_sentinel(x) ? x : d_map[x];
  }
  Element r(Element x) const noexcept {
    return is_sentinel(x) ? x : r_map[x];
  }
};

// Non-owning view of a category with biaction. comp() re-derives
// definedness from R(x)=D(y); the actions are undefined when the acting
// element is not an identity.
struct CategoryView {
  std::size_t n = 0;
  const Element* d_map = nullptr;
  const Element* r_map = nullptr;
  const Element* comp_table = nullptr;  // n*n
  const Element* lact_table = nullptr;  // n*n, row = acting identity
  const Element* ract_table = nullptr;  // n*n, ract[s*n+e] = s|e
  const std::uint8_t* identity_flags = nullptr;
  std::span<const Element> identities;  // ascending

  Element d(Element x) const noexcept {
    return is_sentinel(x) ? x : d_map[x];
  }
  Element r(Element x) const noexcept {
    return is_sentinel(x) ? x : r_map[x];
  }
  bool is_identity(Element x) const noexcept {
    return !is_sentinel(x) && identity_flags[x] != 0;
  }
  Element comp(Element x, Element y) const noexcept {
    if (is_sentinel(x) || is_sentinel(y)) return taint(x, y);
    if (r_map[x] != d_map[y]) return kUndefined;
    return comp_table[x * n + y];
  }
  Element comp(Element x, Element y, Element z) const noexcept {
    return comp(comp(x, y), z);
  }
  // e|s
  Element left(Element e, Element s) const noexcept {
    if (is_sentinel(e) || is_sentinel(s)) return taint(e, s);
    if (!identity_flags[e]) return kUndefined;
    return lact_table[e * n + s];
  }
  // s|e
  Element right(Element s, Element e) const noexcept {
    if (is_sentinel(e) || is_sentinel(s)) return taint(e, s);
    if (!identity_flags[e]) return kUndefined;
    return ract_table[s * n + e];
  }

  // s ⊗l t = s|D(t) ∘ R(s|D(t))|t
  Element left_pseudoproduct(Element s, Element t) const noexcept {
    const Element a = right(s, d(t));
    return comp(a, left(r(a), t));
  }
  // s ⊗r t = s|D(R(s)|t) ∘ R(s)|t
  Element right_pseudoproduct(Element s, Element t) const noexcept {
    const Element b = left(r(s), t);
    return comp(right(s, d(b)), b);
  }
  // s|D(R(s)|D(t)) ∘ R(s)|D(t) ∘ R(R(s)|D(t))|t
  Element symmetric_pseudoproduct(Element s, Element t) const noexcept {
    const Element mid = left(r(s), d(t));
    return comp(right(s, d(mid)), mid, left(r(mid), t));
  }
  // s|D(t) ∘ R(s)|t
  Element strong_pseudoproduct(Element s, Element t) const noexcept {
    return comp(right(s, d(t)), left(r(s), t));
  }
};

}  // namespace biunary
