#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "biunary/congruence.hpp"
#include "biunary/laws.hpp"
#include "biunary/text_format.hpp"

namespace biunary {

inline constexpr std::size_t kMaxSearchOrder = 6;

enum class StructureKind : std::uint8_t { kSemigroup, kCategory };

class QueryError : public Error {
 public:
  using Error::Error;
};

// A constraint is a law tag or a class tag of the query's kind. In violate,
// a class means "outside the class".
struct Constraint {
  std::string tag;
  std::vector<LawId> laws;  // the law itself, or the class conjunction
  bool is_class = false;
};

// Resolves a tag for the given kind. Throws QueryError for unknown tags or
// tags of the other kind.
Constraint resolve_constraint(StructureKind kind, std::string_view tag);

struct SearchQuery {
  StructureKind kind = StructureKind::kSemigroup;
  std::size_t order = 1;
  std::vector<Constraint> satisfy;
  std::vector<Constraint> violate;
  bool up_to_iso = true;
  std::optional<std::size_t> limit;
  double budget_seconds = 0;  // <= 0: unlimited
  std::size_t threads = 0;    // 0: hardware concurrency

  // Tag-level convenience.
  static SearchQuery make(StructureKind kind, std::size_t order,
                          const std::vector<std::string>& satisfy,
                          const std::vector<std::string>& violate,
                          bool up_to_iso = true);
};

// Throws QueryError: order outside 1..kMaxSearchOrder or a tag both in
// satisfy and violate.
void validate_query(const SearchQuery& q);

// "search kind=semigroup order=4 satisfy=PRECAT,LCONG violate=CS6
//  up_to_iso=true budget=60 limit=10". Throws QueryError.
SearchQuery parse_query(std::string_view line);
std::string to_string(const SearchQuery& q);

struct SearchResult {
  std::vector<Structure> models;
  std::uint64_t nodes = 0;
  bool completed = false;      // the whole space was explored
  bool limit_reached = false;  // stopped early after `limit` models
};

// Models of exactly q.order elements meeting every satisfy constraint and
// failing every violate constraint. With up_to_iso the models are canonical
// representatives (labels 0..n-1) in order of discovery; otherwise every
// labelled model on {0..n-1}. Every model is re-checked by the law engine
// before it is returned.
SearchResult enumerate(const SearchQuery& q);

struct MinimalResult {
  std::optional<Structure> model;
  // Orders 1..certified_up_to were searched completely with no model found.
  std::size_t certified_up_to = 0;
  std::uint64_t nodes = 0;
  bool completed = false;  // every order up to max_order was decided
};

// Orders 1..max_order in turn; budget is shared across orders.
MinimalResult minimal_counterexample(StructureKind kind,
                                     const std::vector<std::string>& satisfy,
                                     const std::vector<std::string>& violate,
                                     std::size_t max_order,
                                     double budget_seconds = 0);

struct ClosureResult {
  struct Witness {
    BiunarySemigroup model;
    Congruence congruence;
    BiunarySemigroup quotient;
    CheckReport failure;  // first class law failing on the quotient
  };
  std::optional<Witness> witness;
  std::size_t certified_up_to = 0;
  bool completed = false;
};

// Looks for a model of the class (semigroup side) with a quotient by a
// D,R-respecting congruence that leaves the class. max_order <= 6.
ClosureResult closure_under_quotients(const std::vector<std::string>& klass,
                                      std::size_t max_order,
                                      double budget_seconds = 0);

}  // namespace biunary
