#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "biunary/element.hpp"
#include "biunary/view.hpp"

namespace biunary {

// Unvalidated semigroup tables. Indices are plain ints so out-of-range
// input can be reported instead of silently wrapping.
struct RawSemigroup {
  std::vector<std::string> names;
  std::vector<int> mul;  // order*order, row-major
  std::vector<int> d;
  std::vector<int> r;

  std::size_t order() const noexcept { return names.size(); }
};

// Unvalidated category-with-biaction tables. -1 marks "no entry": an
// undefined composite, or an action row/column whose acting element is not
// an identity.
struct RawCategory {
  std::vector<std::string> names;
  std::vector<int> d;
  std::vector<int> r;
  std::vector<int> comp;  // order*order
  std::vector<int> lact;  // lact[e*order+s] = e|s
  std::vector<int> ract;  // ract[s*order+e] = s|e

  std::size_t order() const noexcept { return names.size(); }
};

std::vector<std::string> default_names(std::size_t order);

// An associative biunary semigroup. Only validate_semigroup constructs one,
// so every instance is associative with total, in-range D and R.
class BiunarySemigroup {
 public:
  std::size_t order() const noexcept { return n_; }
  Element mul(Element x, Element y) const noexcept { return mul_[x * n_ + y]; }
  Element d(Element x) const noexcept { return d_[x]; }
  Element r(Element x) const noexcept { return r_[x]; }

  const std::string& name(Element x) const { return names_[x]; }
  std::span<const std::string> names() const noexcept { return names_; }
  std::span<const Element> mul_table() const noexcept { return mul_; }
  std::span<const Element> d_map() const noexcept { return d_; }
  std::span<const Element> r_map() const noexcept { return r_; }

  // D(S), ascending.
  std::span<const Element> projections() const noexcept { return proj_; }
  bool is_projection(Element x) const noexcept;

  SemigroupView view() const noexcept;
  RawSemigroup raw() const;

  // Structural equality of tables and labels.
  bool operator==(const BiunarySemigroup& o) const {
    return n_ == o.n_ && names_ == o.names_ && mul_ == o.mul_ && d_ == o.d_ &&
           r_ == o.r_;
  }
  // Table equality ignoring labels.
  bool same_tables(const BiunarySemigroup& o) const {
    return n_ == o.n_ && mul_ == o.mul_ && d_ == o.d_ && r_ == o.r_;
  }

 private:
  friend BiunarySemigroup validate_semigroup(const RawSemigroup& raw);

  std::size_t n_ = 0;
  std::vector<std::string> names_;
  std::vector<Element> mul_;
  std::vector<Element> d_;
  std::vector<Element> r_;
  std::vector<Element> proj_;
};

// A small category (object-free form) with total left and right actions of
// its identities satisfying (TC1), (TC2) and (TC6).
class BiactionCategory {
 public:
  std::size_t order() const noexcept { return n_; }
  Element d(Element x) const noexcept { return d_[x]; }
  Element r(Element x) const noexcept { return r_[x]; }
  // kUndefined unless R(x) = D(y).
  Element comp(Element x, Element y) const noexcept {
    return r_[x] == d_[y] ? comp_[x * n_ + y] : kUndefined;
  }
  Element left(Element e, Element s) const noexcept {
    return lact_[e * n_ + s];
  }
  Element right(Element s, Element e) const noexcept {
    return ract_[s * n_ + e];
  }
  bool is_identity(Element x) const noexcept { return ident_flags_[x] != 0; }
  std::span<const Element> identities() const noexcept { return idents_; }

  const std::string& name(Element x) const { return names_[x]; }
  std::span<const std::string> names() const noexcept { return names_; }
  std::span<const Element> d_map() const noexcept { return d_; }
  std::span<const Element> r_map() const noexcept { return r_; }
  std::span<const Element> comp_table() const noexcept { return comp_; }
  std::span<const Element> lact_table() const noexcept { return lact_; }
  std::span<const Element> ract_table() const noexcept { return ract_; }

  CategoryView view() const noexcept;
  RawCategory raw() const;

  bool operator==(const BiactionCategory& o) const {
    return n_ == o.n_ && names_ == o.names_ && same_tables(o);
  }
  bool same_tables(const BiactionCategory& o) const {
    return n_ == o.n_ && d_ == o.d_ && r_ == o.r_ && comp_ == o.comp_ &&
           lact_ == o.lact_ && ract_ == o.ract_;
  }

 private:
  friend BiactionCategory validate_biaction_category(const RawCategory& raw);

  std::size_t n_ = 0;
  std::vector<std::string> names_;
  std::vector<Element> d_;
  std::vector<Element> r_;
  std::vector<Element> comp_;  // kUndefined off the composable pairs
  std::vector<Element> lact_;  // kUndefined on non-identity rows
  std::vector<Element> ract_;  // kUndefined on non-identity columns
  std::vector<std::uint8_t> ident_flags_;
  std::vector<Element> idents_;
};

// Throws ShapeError or AssocError(x,y,z) with the lexicographically first
// non-associative triple.
BiunarySemigroup validate_semigroup(const RawSemigroup& raw);

// Throws ShapeError, CategoryAxiomError("C1".."C5", witness) or
// BiactionAxiomError("TC1"|"TC2"|"TC6", witness), checking in that order.
BiactionCategory validate_biaction_category(const RawCategory& raw);

// A total map between carriers, used for homomorphisms and functors.
struct ElementMap {
  std::size_t source_order = 0;
  std::size_t target_order = 0;
  std::vector<Element> image;

  static ElementMap identity(std::size_t n);
  bool operator==(const ElementMap&) const = default;
};

// Relabel a structure: element x of the input becomes perm[x].
BiunarySemigroup permute(const BiunarySemigroup& s,
                         std::span<const Element> perm);
BiactionCategory permute(const BiactionCategory& c,
                         std::span<const Element> perm);

}  // namespace biunary
