#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "biunary/esn.hpp"
#include "biunary/laws.hpp"
#include "biunary/search.hpp"
#include "biunary/structures.hpp"

namespace biunary::test {

inline Element E(std::size_t x) { return static_cast<Element>(x); }

// Precat-semigroups of order n up to isomorphism, enumerated once per run.
inline const std::vector<BiunarySemigroup>& precat_models(std::size_t n) {
  static std::map<std::size_t, std::vector<BiunarySemigroup>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<BiunarySemigroup> out;
    const auto r = enumerate(
        SearchQuery::make(StructureKind::kSemigroup, n, {"PRECAT"}, {}));
    for (const auto& m : r.models) out.push_back(std::get<BiunarySemigroup>(m));
    it = cache.emplace(n, std::move(out)).first;
  }
  return it->second;
}

inline const std::vector<BiactionCategory>& category_models(std::size_t n) {
  static std::map<std::size_t, std::vector<BiactionCategory>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<BiactionCategory> out;
    const auto r =
        enumerate(SearchQuery::make(StructureKind::kCategory, n, {}, {}));
    for (const auto& m : r.models) out.push_back(std::get<BiactionCategory>(m));
    it = cache.emplace(n, std::move(out)).first;
  }
  return it->second;
}

inline bool holds(const BiunarySemigroup& s, LawId id) {
  return check_law(s, id).holds;
}

inline bool holds(const BiactionCategory& c, LawId id) {
  return check_tc(c.view(), id).holds;
}

inline bool in(const BiunarySemigroup& s, ClassId id) {
  return in_class(s.view(), id);
}

inline std::vector<Element> random_permutation(std::size_t n, std::mt19937& rng) {
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), Element{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Every set partition of {0..n-1} as a restricted-growth string.
inline std::vector<std::vector<Element>> all_partitions(std::size_t n) {
  std::vector<std::vector<Element>> out;
  std::vector<Element> a(n, 0);
  std::function<void(std::size_t, Element)> rec = [&](std::size_t i, Element top) {
    if (i == n) {
      out.push_back(a);
      return;
    }
    for (Element b = 0; b <= top + 1 && (i > 0 || b == 0); ++b) {
      a[i] = b;
      rec(i + 1, std::max(top, b));
    }
  };
  if (n == 0) return out;
  a[0] = 0;
  rec(1, 0);
  return out;
}

// Naive evaluation of the semigroup-side laws, straight from the formulas.
struct NaiveSemigroup {
  const BiunarySemigroup& s;
  Element m(Element x, Element y) const { return s.mul(x, y); }
  Element D(Element x) const { return s.d(x); }
  Element R(Element x) const { return s.r(x); }

  bool unary(LawId id, Element x) const {
    switch (id) {
      case LawId::kCS1: return m(D(x), x) == x;
      case LawId::kCS2: return m(x, R(x)) == x;
      case LawId::kCS3: return m(D(x), D(x)) == D(x);
      case LawId::kCS4: return D(R(x)) == R(x);
      case LawId::kCS5: return R(D(x)) == D(x);
      default: return true;
    }
  }

  bool binary(LawId id, Element x, Element y) const {
    const Element xy = m(x, y);
    switch (id) {
      case LawId::kCS6:
        return R(x) != D(y) || (D(xy) == D(x) && R(xy) == R(y));
      case LawId::kLCong: return D(xy) == D(m(x, D(y)));
      case LawId::kRCong: return R(xy) == R(m(R(x), y));
      case LawId::kLWCong: return D(xy) == D(m(x, D(m(R(x), y))));
      case LawId::kRWCong: return R(xy) == R(m(R(m(x, D(y))), y));
      case LawId::kLMatch: {
        const Element u = R(m(x, D(y)));
        return u == D(m(u, y));
      }
      case LawId::kRMatch: {
        const Element u = D(m(R(x), y));
        return u == R(m(x, u));
      }
      case LawId::kRMatchAsPrinted:
        return D(m(R(x), y)) == R(m(x, D(m(R(y), x))));
      case LawId::kSMatch1: return R(m(x, D(y))) == D(m(R(x), y));
      case LawId::kSMatch2: return xy == m(m(m(x, D(y)), R(x)), y);
      case LawId::kDAmple: return m(x, D(y)) == m(D(xy), x);
      case LawId::kLRR:
        return m(D(x), x) == x && m(D(x), D(y)) == m(D(y), D(x)) &&
               D(m(D(x), y)) == m(D(x), D(y)) && m(x, D(y)) == m(D(xy), x) &&
               m(R(xy), R(y)) == R(xy);
      case LawId::kRAbsorb: return R(xy) == D(m(R(xy), R(y)));
      case LawId::kDAbsorb: return D(xy) == R(m(D(x), D(xy)));
      case LawId::kCommD: return m(D(x), D(y)) == m(D(y), D(x));
      case LawId::kBandD: return D(xy) == xy;
      case LawId::kSemilatticeD: return xy == m(y, x) && D(xy) == xy;
      case LawId::kProjDEqR: return D(xy) == R(xy);
      default: return true;
    }
  }

  static bool over_projections(LawId id) {
    return id == LawId::kBandD || id == LawId::kSemilatticeD ||
           id == LawId::kProjDEqR;
  }

  // Lexicographically first failing tuple, if any.
  std::optional<Tuple> witness(LawId id) const {
    const std::size_t n = s.order();
    if (info(id).arity == 1) {
      for (std::size_t x = 0; x < n; ++x)
        if (!unary(id, E(x))) return Tuple{E(x)};
      return std::nullopt;
    }
    std::vector<Element> dom;
    if (over_projections(id))
      dom.assign(s.projections().begin(), s.projections().end());
    else
      for (std::size_t x = 0; x < n; ++x) dom.push_back(E(x));
    for (Element x : dom)
      for (Element y : dom)
        if (!binary(id, x, y)) return Tuple{x, y};
    return std::nullopt;
  }
};

// Pseudoproducts written out from the composites, undefined propagating.
struct NaiveCategory {
  const BiactionCategory& c;
  Element D(Element x) const { return x == kUndefined ? kUndefined : c.d(x); }
  Element R(Element x) const { return x == kUndefined ? kUndefined : c.r(x); }
  Element comp(Element x, Element y) const {
    return x == kUndefined || y == kUndefined ? kUndefined : c.comp(x, y);
  }
  Element left(Element e, Element s) const {
    return e == kUndefined || s == kUndefined ? kUndefined : c.left(e, s);
  }
  Element right(Element s, Element e) const {
    return e == kUndefined || s == kUndefined ? kUndefined : c.right(s, e);
  }
  Element pl(Element s, Element t) const {
    const Element a = right(s, D(t));
    return comp(a, left(R(a), t));
  }
  Element pr(Element s, Element t) const {
    const Element b = left(R(s), t);
    return comp(right(s, D(b)), b);
  }
  Element psym(Element s, Element t) const {
    const Element mid = left(R(s), D(t));
    return comp(comp(right(s, D(mid)), mid), left(R(mid), t));
  }
  Element pstrong(Element s, Element t) const {
    return comp(right(s, D(t)), left(R(s), t));
  }
};

}  // namespace biunary::test
