#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace biunary {

// Elements are dense indices 0..order-1. Two reserved values sit above any
// valid index: kUndefined marks a composite that does not exist, kUnknown a
// table cell the model search has not filled yet.
using Element = std::uint16_t;

inline constexpr Element kUndefined = 0xFFFE;
inline constexpr Element kUnknown = 0xFFFF;
inline constexpr std::size_t kMaxOrder = 4096;

constexpr bool is_sentinel(Element x) noexcept { return x >= kUndefined; }

// Result of a sentinel-tainted operation: unknown dominates undefined.
constexpr Element taint(Element a, Element b) noexcept {
  return (a == kUnknown || b == kUnknown) ? kUnknown : kUndefined;
}

using Tuple = std::vector<Element>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Base for every error that names a law (or axiom) together with the tuple
// of element indices at which it fails.
class LawError : public Error {
 public:
  LawError(std::string kind, std::string law, Tuple witness)
      : Error(kind + ": " + law + " fails at " + render(witness)),
        law_(std::move(law)),
        witness_(std::move(witness)) {}

  const std::string& law() const noexcept { return law_; }
  const Tuple& witness() const noexcept { return witness_; }

 private:
  static std::string render(const Tuple& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(t[i]);
    }
    return s + ")";
  }

  std::string law_;
  Tuple witness_;
};

class AssocError : public LawError {
 public:
  explicit AssocError(Tuple w)
      : LawError("AssocError", "ASSOC", std::move(w)) {}
};

class CategoryAxiomError : public LawError {
 public:
  CategoryAxiomError(std::string axiom, Tuple w)
      : LawError("CategoryAxiomError", std::move(axiom), std::move(w)) {}
};

class BiactionAxiomError : public LawError {
 public:
  BiactionAxiomError(std::string axiom, Tuple w)
      : LawError("BiactionAxiomError", std::move(axiom), std::move(w)) {}
};

class NotCatSemigroup : public LawError {
 public:
  NotCatSemigroup(std::string law, Tuple w)
      : LawError("NotCatSemigroup", std::move(law), std::move(w)) {}
};

class PrerequisiteFailed : public LawError {
 public:
  PrerequisiteFailed(std::string law, Tuple w)
      : LawError("PrerequisiteFailed", std::move(law), std::move(w)) {}
};

class PseudoproductUndefined : public LawError {
 public:
  PseudoproductUndefined(std::string law, Tuple w)
      : LawError("PseudoproductUndefined", std::move(law), std::move(w)) {}
};

class WrongStructureKind : public Error {
 public:
  using Error::Error;
};

class OrderTooLarge : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  explicit CapExceeded(std::size_t cap)
      : Error("closure exceeded cap of " + std::to_string(cap) + " elements"),
        cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace biunary
