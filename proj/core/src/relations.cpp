#include "biunary/relations.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <deque>
#include <map>
#include <set>

namespace biunary {
namespace {

void check_ground(std::size_t n) {
  if (n == 0 || n > kMaxGround)
    throw ShapeError("ground set size must be in 1.." +
                     std::to_string(kMaxGround));
}

void check_point(std::size_t n, std::size_t x) {
  if (x >= n) throw ShapeError("point " + std::to_string(x) + " out of range");
}

}  // namespace

std::string_view tag(Composition m) {
  return m == Composition::kAngelic ? "angelic" : "demonic";
}

std::optional<Composition> parse_composition(std::string_view s) {
  if (s == "angelic") return Composition::kAngelic;
  if (s == "demonic") return Composition::kDemonic;
  return std::nullopt;
}

FiniteRelation::FiniteRelation(std::size_t n) : n_(n) { check_ground(n); }

FiniteRelation FiniteRelation::identity(std::size_t n) {
  FiniteRelation r(n);
  for (std::size_t x = 0; x < n; ++x) r.insert(x, x);
  return r;
}

FiniteRelation FiniteRelation::from_pairs(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& p) {
  FiniteRelation r(n);
  for (auto [x, y] : p) r.insert(x, y);
  return r;
}

FiniteRelation FiniteRelation::from_code(std::size_t n, std::uint64_t code) {
  FiniteRelation r(n);
  if (n * n < 64 && code >> (n * n))
    throw ShapeError("relation code out of range");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if ((code >> (x * n + y)) & 1u) r.insert(x, y);
  return r;
}

void FiniteRelation::insert(std::size_t x, std::size_t y) {
  check_point(n_, x);
  check_point(n_, y);
  bits_ |= std::uint64_t{1} << (x * 8 + y);
}

std::uint8_t FiniteRelation::domain_mask() const noexcept {
  std::uint8_t m = 0;
  for (std::size_t x = 0; x < n_; ++x)
    if (row(x)) m |= static_cast<std::uint8_t>(1u << x);
  return m;
}

std::uint8_t FiniteRelation::range_mask() const noexcept {
  std::uint8_t m = 0;
  for (std::size_t x = 0; x < n_; ++x) m |= row(x);
  return m;
}

std::uint64_t FiniteRelation::code() const noexcept {
  std::uint64_t c = 0;
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = 0; y < n_; ++y)
      if (contains(x, y)) c |= std::uint64_t{1} << (x * n_ + y);
  return c;
}

std::vector<std::pair<std::size_t, std::size_t>> FiniteRelation::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < n_; ++x)
    for (std::size_t y = 0; y < n_; ++y)
      if (contains(x, y)) out.emplace_back(x, y);
  return out;
}

FiniteRelation compose(const FiniteRelation& a, const FiniteRelation& b,
                       Composition mode) {
  if (a.ground() != b.ground())
    throw SizeMismatch("relations on ground sets of size " +
                       std::to_string(a.ground()) + " and " +
                       std::to_string(b.ground()));
  const std::size_t n = a.ground();
  const std::uint8_t dom_b = b.domain_mask();
  FiniteRelation out(n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::uint8_t images = a.row(x);
    if (mode == Composition::kDemonic && (images & ~dom_b)) continue;
    for (std::size_t y = 0; y < n; ++y) {
      if (!((images >> y) & 1u)) continue;
      const std::uint8_t next = b.row(y);
      for (std::size_t z = 0; z < n; ++z)
        if ((next >> z) & 1u) out.insert(x, z);
    }
  }
  return out;
}

FiniteRelation domain_proj(const FiniteRelation& a) {
  FiniteRelation out(a.ground());
  const std::uint8_t m = a.domain_mask();
  for (std::size_t x = 0; x < a.ground(); ++x)
    if ((m >> x) & 1u) out.insert(x, x);
  return out;
}

FiniteRelation range_proj(const FiniteRelation& a) {
  FiniteRelation out(a.ground());
  const std::uint8_t m = a.range_mask();
  for (std::size_t x = 0; x < a.ground(); ++x)
    if ((m >> x) & 1u) out.insert(x, x);
  return out;
}

std::string to_string(const FiniteRelation& a) {
  std::string s = "{";
  bool first = true;
  for (auto [x, y] : a.pairs()) {
    if (!first) s += ",";
    first = false;
    s += "(" + std::to_string(x) + "," + std::to_string(y) + ")";
  }
  return s + "}";
}

std::string to_text(const FiniteRelation& a) {
  return "rel n=" + std::to_string(a.ground()) + " " + to_string(a);
}

FiniteRelation parse_relation(std::string_view text) {
  std::size_t i = 0;
  auto fail = [&](const std::string& what) -> FiniteRelation {
    throw SyntaxError(1, i + 1, what);
  };
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto expect = [&](std::string_view lit) {
    skip();
    if (text.substr(i, lit.size()) != lit)
      fail("expected '" + std::string(lit) + "'");
    i += lit.size();
  };
  auto number = [&]() -> std::size_t {
    skip();
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      fail("expected a number");
    std::size_t v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + static_cast<std::size_t>(text[i] - '0');
      if (v > 1000) fail("number too large");
      ++i;
    }
    return v;
  };
  expect("rel");
  expect("n=");
  const std::size_t start = i;
  const std::size_t n = number();
  if (n == 0 || n > kMaxGround) {
    i = start;
    fail("ground set size must be in 1.." + std::to_string(kMaxGround));
  }
  FiniteRelation r(n);
  expect("{");
  skip();
  if (i < text.size() && text[i] == '}') {
    ++i;
  } else {
    for (;;) {
      expect("(");
      const std::size_t at = i;
      const std::size_t x = number();
      expect(",");
      const std::size_t y = number();
      if (x >= n || y >= n) {
        i = at;
        fail("pair out of range");
      }
      expect(")");
      r.insert(x, y);
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      expect("}");
      break;
    }
  }
  skip();
  if (i != text.size()) fail("trailing content");
  return r;
}

namespace {

RelationAlgebra build(std::vector<FiniteRelation> elems, Composition mode,
                      bool with_unary) {
  std::sort(elems.begin(), elems.end());
  const std::size_t k = elems.size();
  std::map<std::uint64_t, int> index;
  for (std::size_t i = 0; i < k; ++i) index.emplace(elems[i].code(), static_cast<int>(i));
  RawSemigroup raw;
  raw.mul.resize(k * k);
  raw.d.resize(k);
  raw.r.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    raw.names.push_back(to_string(elems[i]));
    raw.d[i] = with_unary ? index.at(domain_proj(elems[i]).code()) : static_cast<int>(i);
    raw.r[i] = with_unary ? index.at(range_proj(elems[i]).code()) : static_cast<int>(i);
    for (std::size_t j = 0; j < k; ++j)
      raw.mul[i * k + j] = index.at(compose(elems[i], elems[j], mode).code());
  }
  return RelationAlgebra{validate_semigroup(raw), std::move(elems), mode};
}

}  // namespace

RelationAlgebra generate_subalgebra(std::size_t n, Composition mode,
                                    const std::vector<FiniteRelation>& gens,
                                    std::size_t cap, ClosureOps ops) {
  check_ground(n);
  if (gens.empty()) throw ShapeError("at least one generator is required");
  std::set<FiniteRelation> seen;
  std::vector<FiniteRelation> order;
  std::deque<FiniteRelation> work;
  auto add = [&](const FiniteRelation& r) {
    if (r.ground() != n) throw SizeMismatch("generator on a different ground set");
    if (seen.insert(r).second) {
      if (seen.size() > cap) throw CapExceeded(cap);
      order.push_back(r);
      work.push_back(r);
    }
  };
  for (const auto& g : gens) add(g);
  const bool unary = ops == ClosureOps::kProductDomainRange;
  while (!work.empty()) {
    const FiniteRelation r = work.front();
    work.pop_front();
    if (unary) {
      add(domain_proj(r));
      add(range_proj(r));
    }
    // Products with every element seen so far, in both orders.
    for (std::size_t i = 0; i < order.size(); ++i) {
      const FiniteRelation s = order[i];
      add(compose(r, s, mode));
      add(compose(s, r, mode));
    }
  }
  return build(std::move(order), mode, unary);
}

RelationAlgebra full_algebra(std::size_t n, Composition mode, bool allow_large) {
  check_ground(n);
  if (n > 3 || (n == 3 && !allow_large))
    throw OrderTooLarge("full relation algebra on " + std::to_string(n) +
                        " points is not materialised");
  std::vector<FiniteRelation> elems;
  const std::uint64_t count = std::uint64_t{1} << (n * n);
  for (std::uint64_t c = 0; c < count; ++c)
    elems.push_back(FiniteRelation::from_code(n, c));
  return build(std::move(elems), mode, true);
}

std::optional<std::array<std::uint64_t, 3>> associativity_counterexample(
    std::size_t n, Composition mode) {
  check_ground(n);
  if (n > 3) throw OrderTooLarge("exhaustive check limited to 3 points");
  const std::size_t count = std::size_t{1} << (n * n);
  std::vector<FiniteRelation> all;
  for (std::size_t c = 0; c < count; ++c)
    all.push_back(FiniteRelation::from_code(n, c));
  std::vector<std::uint16_t> table(count * count);
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b)
      table[a * count + b] =
          static_cast<std::uint16_t>(compose(all[a], all[b], mode).code());
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b) {
      const std::size_t ab = table[a * count + b];
      for (std::size_t c = 0; c < count; ++c)
        if (table[ab * count + c] != table[a * count + table[b * count + c]])
          return std::array<std::uint64_t, 3>{a, b, c};
    }
  return std::nullopt;
}

}  // namespace biunary
