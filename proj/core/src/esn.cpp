#include "biunary/esn.hpp"

#include <algorithm>
#include <cctype>

namespace biunary {
namespace {

constexpr LawId kLeftPre[] = {LawId::kLMU};
constexpr LawId kRightPre[] = {LawId::kRMU};
constexpr LawId kSymPre[] = {LawId::kTC4};
constexpr LawId kStrongPre[] = {LawId::kTC4, LawId::kSMU};

constexpr LawId kLeftTrip[] = {LawId::kLMU, LawId::kTC4L, LawId::kAssocL};
constexpr LawId kRightTrip[] = {LawId::kRMU, LawId::kTC4R, LawId::kAssocR};
constexpr LawId kSymTrip[] = {LawId::kTC4, LawId::kTC7};
constexpr LawId kStrongTrip[] = {LawId::kTC4, LawId::kTC7, LawId::kSMU};

Element E(std::size_t x) { return static_cast<Element>(x); }

void require(const CategoryView& v, std::span<const LawId> laws) {
  for (LawId law : laws) {
    const CheckReport rep = check_tc(v, law);
    if (!rep.holds)
      throw PrerequisiteFailed(std::string(tag(law)), *rep.witness);
  }
}

CheckReport mismatch(std::string law, Tuple w) {
  CheckReport rep;
  rep.law = std::move(law);
  rep.holds = false;
  rep.witness = std::move(w);
  rep.failed_component = rep.law;
  return rep;
}

}  // namespace

std::string_view tag(PseudoproductKind k) {
  switch (k) {
    case PseudoproductKind::kLeft:
      return "left";
    case PseudoproductKind::kRight:
      return "right";
    case PseudoproductKind::kSymmetric:
      return "symmetric";
    case PseudoproductKind::kStrong:
      return "strong";
  }
  return "?";
}

std::optional<PseudoproductKind> parse_kind(std::string_view s) {
  std::string lower(s);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (auto k : {PseudoproductKind::kLeft, PseudoproductKind::kRight,
                 PseudoproductKind::kSymmetric, PseudoproductKind::kStrong})
    if (tag(k) == lower) return k;
  return std::nullopt;
}

std::span<const LawId> pseudoproduct_prerequisites(PseudoproductKind k) {
  switch (k) {
    case PseudoproductKind::kLeft:
      return kLeftPre;
    case PseudoproductKind::kRight:
      return kRightPre;
    case PseudoproductKind::kSymmetric:
      return kSymPre;
    case PseudoproductKind::kStrong:
      return kStrongPre;
  }
  return {};
}

LawId associativity_law(PseudoproductKind k) {
  switch (k) {
    case PseudoproductKind::kLeft:
      return LawId::kAssocL;
    case PseudoproductKind::kRight:
      return LawId::kAssocR;
    default:
      return LawId::kAssocSym;
  }
}

Element pseudoproduct(const CategoryView& v, PseudoproductKind k, Element s,
                      Element t) {
  switch (k) {
    case PseudoproductKind::kLeft:
      return v.left_pseudoproduct(s, t);
    case PseudoproductKind::kRight:
      return v.right_pseudoproduct(s, t);
    case PseudoproductKind::kSymmetric:
      return v.symmetric_pseudoproduct(s, t);
    case PseudoproductKind::kStrong:
      return v.strong_pseudoproduct(s, t);
  }
  return kUndefined;
}

BiactionCategory category_of(const BiunarySemigroup& s) {
  for (LawId law : info(ClassId::kCat).laws) {
    const CheckReport rep = check_law(s, law);
    if (!rep.holds) throw NotCatSemigroup(std::string(tag(law)), *rep.witness);
  }
  const std::size_t n = s.order();
  RawCategory raw;
  raw.names.assign(s.names().begin(), s.names().end());
  raw.d.assign(s.d_map().begin(), s.d_map().end());
  raw.r.assign(s.r_map().begin(), s.r_map().end());
  raw.comp.assign(n * n, -1);
  raw.lact.assign(n * n, -1);
  raw.ract.assign(n * n, -1);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (s.r(E(x)) == s.d(E(y))) raw.comp[x * n + y] = s.mul(E(x), E(y));
  for (Element e : s.projections())
    for (std::size_t x = 0; x < n; ++x) {
      raw.lact[e * n + x] = s.mul(e, E(x));
      raw.ract[x * n + e] = s.mul(E(x), e);
    }
  return validate_biaction_category(raw);
}

Extension extension(const BiactionCategory& c, PseudoproductKind k) {
  const CategoryView v = c.view();
  require(v, pseudoproduct_prerequisites(k));
  const std::size_t n = c.order();
  Extension ext;
  ext.table.names.assign(c.names().begin(), c.names().end());
  ext.table.d.assign(c.d_map().begin(), c.d_map().end());
  ext.table.r.assign(c.r_map().begin(), c.r_map().end());
  ext.table.mul.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Element p = pseudoproduct(v, k, E(x), E(y));
      // The prerequisites make every pseudoproduct defined.
      ext.table.mul[x * n + y] = p == kUndefined ? -1 : int{p};
    }
  auto m = [&](std::size_t x, std::size_t y) { return ext.table.mul[x * n + y]; };
  ext.associativity.law = std::string(tag(associativity_law(k)));
  for (std::size_t x = 0; x < n && ext.associativity.holds; ++x)
    for (std::size_t y = 0; y < n && ext.associativity.holds; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const int lhs = m(m(x, y), z);
        const int rhs = m(x, m(y, z));
        if (lhs != rhs) {
          ext.associativity.holds = false;
          ext.associativity.witness = Tuple{E(x), E(y), E(z)};
          ext.associativity.failed_component = ext.associativity.law;
          ext.associativity.lhs = E(lhs);
          ext.associativity.rhs = E(rhs);
          break;
        }
      }
  if (ext.associativity.holds) ext.semigroup = validate_semigroup(ext.table);
  return ext;
}

ClassId roundtrip_class(PseudoproductKind k) {
  switch (k) {
    case PseudoproductKind::kLeft:
      return ClassId::kLeftMatchup;
    case PseudoproductKind::kRight:
      return ClassId::kRightMatchup;
    case PseudoproductKind::kSymmetric:
      return ClassId::kMatchup;
    case PseudoproductKind::kStrong:
      return ClassId::kStrongMatchup;
  }
  return ClassId::kCat;
}

std::span<const LawId> roundtrip_category_laws(PseudoproductKind k) {
  switch (k) {
    case PseudoproductKind::kLeft:
      return kLeftTrip;
    case PseudoproductKind::kRight:
      return kRightTrip;
    case PseudoproductKind::kSymmetric:
      return kSymTrip;
    case PseudoproductKind::kStrong:
      return kStrongTrip;
  }
  return {};
}

CheckReport roundtrip_semigroup(const BiunarySemigroup& s, PseudoproductKind k) {
  for (LawId law : info(roundtrip_class(k)).laws) {
    const CheckReport rep = check_law(s, law);
    if (!rep.holds)
      throw PrerequisiteFailed(std::string(tag(law)), *rep.witness);
  }
  const Extension ext = extension(category_of(s), k);
  const std::size_t n = s.order();
  const std::string law = "ROUNDTRIP-S";
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (ext.table.mul[x * n + y] != s.mul(E(x), E(y))) {
        CheckReport rep = mismatch(law, {E(x), E(y)});
        rep.lhs = E(ext.table.mul[x * n + y]);
        rep.rhs = s.mul(E(x), E(y));
        return rep;
      }
  CheckReport ok;
  ok.law = law;
  return ok;
}

CheckReport roundtrip_category(const BiactionCategory& c, PseudoproductKind k) {
  require(c.view(), roundtrip_category_laws(k));
  const Extension ext = extension(c, k);
  const std::string law = "ROUNDTRIP-C";
  if (!ext.semigroup) {
    // Unreachable once the associativity law has been checked above.
    return mismatch(law, *ext.associativity.witness);
  }
  const BiunarySemigroup& s = *ext.semigroup;
  for (LawId l : info(ClassId::kCat).laws) {
    const CheckReport rep = check_law(s, l);
    if (!rep.holds) return mismatch(law, *rep.witness);
  }
  const BiactionCategory back = category_of(s);
  const std::size_t n = c.order();
  for (std::size_t x = 0; x < n; ++x)
    if (back.d(E(x)) != c.d(E(x)) || back.r(E(x)) != c.r(E(x)))
      return mismatch(law, {E(x)});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Element a = E(x), b = E(y);
      if (back.comp(a, b) != c.comp(a, b) ||
          (back.is_identity(a) && back.left(a, b) != c.left(a, b)) ||
          (back.is_identity(b) && back.right(a, b) != c.right(a, b)))
        return mismatch(law, {a, b});
    }
  CheckReport ok;
  ok.law = law;
  return ok;
}

bool is_homomorphism(const ElementMap& f, const BiunarySemigroup& a,
                     const BiunarySemigroup& b) {
  if (f.source_order != a.order() || f.target_order != b.order() ||
      f.image.size() != a.order())
    return false;
  const auto& m = f.image;
  for (Element y : m)
    if (y >= b.order()) return false;
  for (std::size_t x = 0; x < a.order(); ++x) {
    if (m[a.d(E(x))] != b.d(m[x]) || m[a.r(E(x))] != b.r(m[x])) return false;
    for (std::size_t y = 0; y < a.order(); ++y)
      if (m[a.mul(E(x), E(y))] != b.mul(m[x], m[y])) return false;
  }
  return true;
}

bool is_biaction_functor(const ElementMap& f, const BiactionCategory& a,
                         const BiactionCategory& b) {
  if (f.source_order != a.order() || f.target_order != b.order() ||
      f.image.size() != a.order())
    return false;
  const auto& m = f.image;
  for (Element y : m)
    if (y >= b.order()) return false;
  for (std::size_t x = 0; x < a.order(); ++x) {
    const Element s = E(x);
    if (m[a.d(s)] != b.d(m[s]) || m[a.r(s)] != b.r(m[s])) return false;
    for (std::size_t y = 0; y < a.order(); ++y) {
      const Element t = E(y);
      const Element st = a.comp(s, t);
      if (st != kUndefined && m[st] != b.comp(m[s], m[t])) return false;
      if (a.is_identity(s) && m[a.left(s, t)] != b.left(m[s], m[t]))
        return false;
      if (a.is_identity(t) && m[a.right(s, t)] != b.right(m[s], m[t]))
        return false;
    }
  }
  return true;
}

}  // namespace biunary
