#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "biunary/structures.hpp"

namespace biunary {

inline constexpr std::size_t kMaxGround = 8;

enum class Composition : std::uint8_t { kAngelic, kDemonic };

std::string_view tag(Composition m);
std::optional<Composition> parse_composition(std::string_view s);

// Binary relation on {0..n-1}, n <= 8. Row x is byte x of the bit set.
class FiniteRelation {
 public:
  explicit FiniteRelation(std::size_t n = 1);
  static FiniteRelation identity(std::size_t n);
  static FiniteRelation from_pairs(
      std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& p);
  // Bit x*n+y of code is set iff (x,y) is in the relation.
  static FiniteRelation from_code(std::size_t n, std::uint64_t code);

  std::size_t ground() const noexcept { return n_; }
  bool contains(std::size_t x, std::size_t y) const noexcept {
    return (bits_ >> (x * 8 + y)) & 1u;
  }
  void insert(std::size_t x, std::size_t y);
  std::uint8_t row(std::size_t x) const noexcept {
    return static_cast<std::uint8_t>(bits_ >> (x * 8));
  }
  std::uint8_t domain_mask() const noexcept;
  std::uint8_t range_mask() const noexcept;
  bool empty() const noexcept { return bits_ == 0; }
  std::uint64_t code() const noexcept;
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  bool operator==(const FiniteRelation& o) const = default;
  bool operator<(const FiniteRelation& o) const {
    return n_ != o.n_ ? n_ < o.n_ : code() < o.code();
  }

 private:
  std::size_t n_;
  std::uint64_t bits_ = 0;
};

// Left-to-right: (x,z) in ρτ iff (x,y) in ρ and (y,z) in τ for some y. The
// demonic product keeps row x only when every ρ-image of x is in dom(τ).
// Throws SizeMismatch for different ground sets.
FiniteRelation compose(const FiniteRelation& a, const FiniteRelation& b,
                       Composition mode);
FiniteRelation domain_proj(const FiniteRelation& a);
FiniteRelation range_proj(const FiniteRelation& a);

// "{(0,1),(1,1)}", "{}" when empty.
std::string to_string(const FiniteRelation& a);
// "rel n=3 {(0,1),(1,1)}"
std::string to_text(const FiniteRelation& a);
// Accepts the to_text form. Throws SyntaxError (line 1).
FiniteRelation parse_relation(std::string_view text);

enum class ClosureOps : std::uint8_t {
  kProductDomainRange,  // close under product, D and R
  kProductOnly,         // close under product; D and R exported as identity
};

// A table algebra plus the relation each element stands for. Elements are
// sorted by relation code; labels are to_string of the relation.
struct RelationAlgebra {
  BiunarySemigroup algebra;
  std::vector<FiniteRelation> elements;
  Composition mode;
};

// Throws CapExceeded when the closure grows beyond cap elements.
RelationAlgebra generate_subalgebra(std::size_t n, Composition mode,
                                    const std::vector<FiniteRelation>& gens,
                                    std::size_t cap,
                                    ClosureOps ops = ClosureOps::kProductDomainRange);

// All 2^(n*n) relations; element k has code k. n <= 2 unless allow_large,
// which admits n = 3. Throws OrderTooLarge otherwise.
RelationAlgebra full_algebra(std::size_t n, Composition mode,
                             bool allow_large = false);

// Exhaustive associativity check of the product over all relations on n
// points (n <= 3). Returns the first failing triple of codes.
std::optional<std::array<std::uint64_t, 3>> associativity_counterexample(
    std::size_t n, Composition mode);

}  // namespace biunary
