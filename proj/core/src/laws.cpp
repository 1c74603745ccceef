#include "biunary/laws.hpp"

#include <algorithm>
#include <cctype>

namespace biunary {
namespace {

constexpr VarKind A = VarKind::kAny;
constexpr VarKind P = VarKind::kProjection;
constexpr VarKind I = VarKind::kIdentity;
constexpr Side SG = Side::kSemigroup;
constexpr Side CT = Side::kCategory;

constexpr LawId kTC4Parts[] = {LawId::kTC4a, LawId::kTC4b};
constexpr LawId kTC4LParts[] = {LawId::kTC4a, LawId::kTC4bP};
constexpr LawId kTC4RParts[] = {LawId::kTC4aP, LawId::kTC4b};
constexpr LawId kTC5Parts[] = {LawId::kTC5a, LawId::kTC5b};
constexpr LawId kSMUParts[] = {LawId::kSMU1, LawId::kSMU2};
constexpr LawId kTC7Parts[] = {LawId::kTC7a, LawId::kTC7b};
constexpr LawId kTC7PParts[] = {LawId::kTC7aP, LawId::kTC7bP};

// Order matches the LawId enumerators.
const LawInfo kCatalog[] = {
    {LawId::kCS1, "CS1", SG, 1, {A}, "x", "D(x)x = x", {}},
    {LawId::kCS2, "CS2", SG, 1, {A}, "x", "xR(x) = x", {}},
    {LawId::kCS3, "CS3", SG, 1, {A}, "x", "D(x)D(x) = D(x)", {}},
    {LawId::kCS4, "CS4", SG, 1, {A}, "x", "D(R(x)) = R(x)", {}},
    {LawId::kCS5, "CS5", SG, 1, {A}, "x", "R(D(x)) = D(x)", {}},
    {LawId::kCS6, "CS6", SG, 2, {A, A}, "x,y",
     "R(x) = D(y) => [0] D(xy) = D(x) & [1] R(xy) = R(y)", {}},
    {LawId::kLCong, "LCONG", SG, 2, {A, A}, "x,y", "D(xy) = D(xD(y))", {}},
    {LawId::kRCong, "RCONG", SG, 2, {A, A}, "x,y", "R(xy) = R(R(x)y)", {}},
    {LawId::kLWCong, "LWCONG", SG, 2, {A, A}, "x,y", "D(xy) = D(xD(R(x)y))",
     {}},
    {LawId::kRWCong, "RWCONG", SG, 2, {A, A}, "x,y", "R(xy) = R(R(xD(y))y)",
     {}},
    {LawId::kLMatch, "LMATCH", SG, 2, {A, A}, "x,y",
     "R(xD(y)) = D(R(xD(y))y)", {}},
    {LawId::kRMatch, "RMATCH", SG, 2, {A, A}, "x,y",
     "D(R(x)y) = R(xD(R(x)y))", {}},
    {LawId::kRMatchAsPrinted, "RMATCH-ASPRINTED", SG, 2, {A, A}, "x,y",
     "D(R(x)y) = R(xD(R(y)x))", {}},
    {LawId::kSMatch1, "SMATCH1", SG, 2, {A, A}, "x,y", "R(xD(y)) = D(R(x)y)",
     {}},
    {LawId::kSMatch2, "SMATCH2", SG, 2, {A, A}, "x,y", "xy = xD(y)R(x)y", {}},
    {LawId::kDAmple, "DAMPLE", SG, 2, {A, A}, "x,y", "xD(y) = D(xy)x", {}},
    {LawId::kLRR, "LRR", SG, 2, {A, A}, "x,y",
     "[0] D(x)x = x & [1] D(x)D(y) = D(y)D(x) & [2] D(D(x)y) = D(x)D(y) & "
     "[3] xD(y) = D(xy)x & [4] R(xy)R(y) = R(xy)",
     {}},
    {LawId::kBandD, "BAND-D", SG, 2, {P, P}, "e,f", "D(ef) = ef", {}},
    {LawId::kSemilatticeD, "SEMILATTICE-D", SG, 2, {P, P}, "e,f",
     "[0] ef = fe & [1] D(ef) = ef", {}},
    {LawId::kProjDEqR, "PROJ-DEFR", SG, 2, {P, P}, "e,f", "D(ef) = R(ef)",
     {}},
    {LawId::kRAbsorb, "R-ABSORB", SG, 2, {A, A}, "x,y",
     "R(xy) = D(R(xy)R(y))", {}},
    {LawId::kDAbsorb, "D-ABSORB", SG, 2, {A, A}, "x,y",
     "D(xy) = R(D(x)D(xy))", {}},
    {LawId::kCommD, "COMM-D", SG, 2, {A, A}, "x,y", "D(x)D(y) = D(y)D(x)",
     {}},

    {LawId::kTC1, "TC1", CT, 2, {I, I}, "e,f",
     "e|f (left action) = e|f (right action)", {}},
    {LawId::kTC2, "TC2", CT, 1, {A}, "a", "[0] D(a)|a = a & [1] a|R(a) = a",
     {}},
    {LawId::kTC3, "TC3", CT, 3, {A, I, I}, "a,e,f",
     "[0] e|(f|a) = (e|f)|a & [1] a|(e|f) = (a|e)|f  (e|f must be an "
     "identity)",
     {}},
    {LawId::kTC4, "TC4", CT, 0, {}, "", "TC4a & TC4b", kTC4Parts},
    {LawId::kTC4a, "TC4a", CT, 3, {A, A, I}, "a,b,e",
     "a∘b exists => (e|a)∘(R(e|a)|b) exists and equals e|(a∘b)", {}},
    {LawId::kTC4b, "TC4b", CT, 3, {A, A, I}, "a,b,e",
     "a∘b exists => (a|D(b|e))∘(b|e) exists and equals (a∘b)|e", {}},
    {LawId::kTC4aP, "TC4aP", CT, 3, {A, A, I}, "a,b,e",
     "a∘b exists => ((e|a)|D(R(e|a)|b))∘(R(e|a)|b) exists and equals "
     "e|(a∘b)",
     {}},
    {LawId::kTC4bP, "TC4bP", CT, 3, {A, A, I}, "a,b,e",
     "a∘b exists => (a|D(b|e))∘(R(a|D(b|e))|(b|e)) exists and equals "
     "(a∘b)|e",
     {}},
    {LawId::kTC4L, "TC4L", CT, 0, {}, "", "TC4a & TC4bP", kTC4LParts},
    {LawId::kTC4R, "TC4R", CT, 0, {}, "", "TC4aP & TC4b", kTC4RParts},
    {LawId::kTC5, "TC5", CT, 0, {}, "", "TC5a & TC5b", kTC5Parts},
    {LawId::kTC5a, "TC5a", CT, 2, {I, A}, "e,a", "D(e|a) = e|D(a)", {}},
    {LawId::kTC5b, "TC5b", CT, 2, {A, I}, "a,e", "R(a|e) = R(a)|e", {}},
    {LawId::kTC6, "TC6", CT, 3, {I, A, I}, "e,a,f", "(e|a)|f = e|(a|f)", {}},
    {LawId::kLMU, "LMU", CT, 2, {A, A}, "s,t", "R(s|D(t)) = D(R(s|D(t))|t)",
     {}},
    {LawId::kRMU, "RMU", CT, 2, {A, A}, "s,t", "D(R(s)|t) = R(s|D(R(s)|t))",
     {}},
    {LawId::kSMU, "SMU", CT, 0, {}, "", "SMU1 & SMU2", kSMUParts},
    {LawId::kSMU1, "SMU1", CT, 2, {A, A}, "s,t", "D(R(s)|t) = R(s|D(t))", {}},
    {LawId::kSMU2, "SMU2", CT, 2, {I, I}, "e,f",
     "(e|f)∘(e|f) exists and equals e|f", {}},
    {LawId::kTC7, "TC7", CT, 0, {}, "", "TC7a & TC7b", kTC7Parts},
    {LawId::kTC7a, "TC7a", CT, 3, {A, A, I}, "a,b,e",
     "e|(a|D(b)∘R(a|D(b))|b) = (e|a)|D(b)∘R((e|a)|D(b))|b whenever both "
     "sides exist",
     {}},
    {LawId::kTC7b, "TC7b", CT, 3, {A, A, I}, "a,b,e",
     "(a|D(R(a)|b)∘R(a)|b)|e = a|D((R(a)|b)|e)∘(R(a)|b)|e whenever both "
     "sides exist",
     {}},
    {LawId::kTC7P, "TC7P", CT, 0, {}, "", "TC7aP & TC7bP", kTC7PParts},
    {LawId::kTC7aP, "TC7aP", CT, 3, {A, A, I}, "a,b,e",
     "both sides of TC7a exist and are equal", {}},
    {LawId::kTC7bP, "TC7bP", CT, 3, {A, A, I}, "a,b,e",
     "both sides of TC7b exist and are equal", {}},
    {LawId::kAssocL, "ASSOC-L", CT, 3, {A, A, A}, "s,t,u",
     "(s⊗l t)⊗l u = s⊗l (t⊗l u), s⊗l t = s|D(t)∘R(s|D(t))|t", {}},
    {LawId::kAssocR, "ASSOC-R", CT, 3, {A, A, A}, "s,t,u",
     "(s⊗r t)⊗r u = s⊗r (t⊗r u), s⊗r t = s|D(R(s)|t)∘R(s)|t", {}},
    {LawId::kAssocSym, "ASSOC-SYM", CT, 3, {A, A, A}, "s,t,u",
     "(s⊗t)⊗u = s⊗(t⊗u), s⊗t = s|D(R(s)|D(t))∘R(s)|D(t)∘R(R(s)|D(t))|t",
     {}},
    {LawId::kCommId, "COMM-ID", CT, 2, {I, I}, "e,f", "e|f = f|e", {}},
    {LawId::kRestrId, "RESTR-ID", CT, 2, {A, I}, "s,e", "s|e = D(s|e)|s", {}},
};

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

// Accumulates the parts of a multi-equation law.
class Parts {
 public:
  // Returns true when the law is already decided false.
  bool add(Tri t, Element lhs, Element rhs) {
    if (t == Tri::kFalse) {
      result_ = {Tri::kFalse, index_, lhs, rhs};
      return true;
    }
    if (t == Tri::kUnknown && result_.verdict == Tri::kTrue)
      result_ = {Tri::kUnknown, index_, lhs, rhs};
    ++index_;
    return false;
  }
  bool strict(Element lhs, Element rhs) {
    return add(strict_eq(lhs, rhs), lhs, rhs);
  }
  Instance result() const { return result_; }

 private:
  Instance result_{};
  std::uint8_t index_ = 0;
};

Instance one(Element lhs, Element rhs) {
  return {strict_eq(lhs, rhs), 0, lhs, rhs};
}

Instance guarded(Element lhs, Element rhs) {
  return {guarded_eq(lhs, rhs), 0, lhs, rhs};
}

// Guard for the TC4 family: the law is vacuous unless a∘b exists.
bool composite_guard(Element ab, Instance& out) {
  if (ab == kUnknown) {
    out = {Tri::kUnknown, 0, kUnknown, kUnknown};
    return true;
  }
  if (ab == kUndefined) {
    out = {Tri::kTrue, 0, 0, 0};
    return true;
  }
  return false;
}

template <class View>
std::span<const Element> domain(const View& v, VarKind k,
                                std::span<const Element> all);

template <>
std::span<const Element> domain(const SemigroupView& v, VarKind k,
                                std::span<const Element> all) {
  return k == VarKind::kProjection ? v.projections : all;
}

template <>
std::span<const Element> domain(const CategoryView& v, VarKind k,
                                std::span<const Element> all) {
  return k == VarKind::kIdentity ? v.identities : all;
}

const std::vector<Element>& iota_elements(std::size_t n) {
  thread_local std::vector<Element> all;
  if (all.size() < n) {
    all.resize(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<Element>(i);
  }
  return all;
}

// Calls f(vars) for every instance in lexicographic order until f returns
// false. Returns false iff stopped early.
template <class View, class F>
bool for_each_instance(const LawInfo& li, const View& v, F&& f) {
  const auto& pool = iota_elements(v.n);
  const std::span<const Element> all(pool.data(), v.n);
  Element vars[3] = {0, 0, 0};
  const auto d0 = domain(v, li.vars[0], all);
  if (li.arity == 1) {
    for (Element a : d0) {
      vars[0] = a;
      if (!f(vars)) return false;
    }
    return true;
  }
  const auto d1 = domain(v, li.vars[1], all);
  if (li.arity == 2) {
    for (Element a : d0)
      for (Element b : d1) {
        vars[0] = a;
        vars[1] = b;
        if (!f(vars)) return false;
      }
    return true;
  }
  const auto d2 = domain(v, li.vars[2], all);
  for (Element a : d0)
    for (Element b : d1)
      for (Element c : d2) {
        vars[0] = a;
        vars[1] = b;
        vars[2] = c;
        if (!f(vars)) return false;
      }
  return true;
}

template <class View>
CheckReport check_atomic(const View& v, const LawInfo& li,
                         std::string_view reported) {
  CheckReport rep;
  rep.law = std::string(reported);
  for_each_instance(li, v, [&](const Element* vars) {
    const Instance in = eval(li.id, v, vars);
    if (in.verdict == Tri::kTrue) return true;
    rep.holds = false;
    rep.witness = Tuple(vars, vars + li.arity);
    rep.failed_component = std::string(li.tag);
    rep.part = in.part;
    rep.lhs = in.lhs;
    rep.rhs = in.rhs;
    return false;
  });
  return rep;
}

template <class View>
CheckReport check_any(const View& v, LawId id, Side want) {
  const LawInfo& li = info(id);
  if (li.side != want)
    throw WrongStructureKind(std::string(li.tag) +
                             (want == Side::kSemigroup
                                  ? " is a category-side law"
                                  : " is a semigroup-side law"));
  if (li.components.empty()) return check_atomic(v, li, li.tag);
  for (LawId part : li.components) {
    CheckReport rep = check_atomic(v, info(part), li.tag);
    if (!rep.holds) return rep;
  }
  CheckReport ok;
  ok.law = std::string(li.tag);
  return ok;
}

template <class View>
Tri scan_any(const View& v, LawId id) {
  const LawInfo& li = info(id);
  if (!li.components.empty()) {
    Tri acc = Tri::kTrue;
    for (LawId part : li.components) {
      const Tri t = scan_any(v, part);
      if (t == Tri::kFalse) return t;
      if (t == Tri::kUnknown) acc = t;
    }
    return acc;
  }
  Tri acc = Tri::kTrue;
  for_each_instance(li, v, [&](const Element* vars) {
    const Tri t = eval(id, v, vars).verdict;
    if (t == Tri::kFalse) {
      acc = t;
      return false;
    }
    if (t == Tri::kUnknown) acc = t;
    return true;
  });
  return acc;
}

// Class tables.
constexpr LawId kPrecatLaws[] = {LawId::kCS1, LawId::kCS2, LawId::kCS3,
                                 LawId::kCS4, LawId::kCS5};
constexpr LawId kCatLaws[] = {LawId::kCS1, LawId::kCS2, LawId::kCS3,
                              LawId::kCS4, LawId::kCS5, LawId::kCS6};
constexpr LawId kLocalisableLaws[] = {
    LawId::kCS1,   LawId::kCS2,   LawId::kCS3,  LawId::kCS4,
    LawId::kCS5,   LawId::kLCong, LawId::kRCong, LawId::kBandD};
constexpr LawId kEhresmannLaws[] = {
    LawId::kCS1,  LawId::kCS2,   LawId::kCS3,   LawId::kCS4,  LawId::kCS5,
    LawId::kLCong, LawId::kRCong, LawId::kBandD, LawId::kCommD};
constexpr LawId kLeftSemiLocLaws[] = {
    LawId::kCS1,   LawId::kCS2,    LawId::kCS3,  LawId::kCS4,
    LawId::kCS5,   LawId::kLCong, LawId::kRWCong, LawId::kBandD};
constexpr LawId kRightSemiLocLaws[] = {
    LawId::kCS1,   LawId::kCS2,    LawId::kCS3,  LawId::kCS4,
    LawId::kCS5,   LawId::kRCong, LawId::kLWCong, LawId::kBandD};
constexpr LawId kLeftMatchupLaws[] = {LawId::kCS1, LawId::kCS2, LawId::kCS3,
                                      LawId::kCS4, LawId::kCS5, LawId::kCS6,
                                      LawId::kLMatch};
constexpr LawId kRightMatchupLaws[] = {LawId::kCS1, LawId::kCS2, LawId::kCS3,
                                       LawId::kCS4, LawId::kCS5, LawId::kCS6,
                                       LawId::kRMatch};
constexpr LawId kMatchupLaws[] = {LawId::kCS1,   LawId::kCS2,   LawId::kCS3,
                                  LawId::kCS4,   LawId::kCS5,   LawId::kCS6,
                                  LawId::kLMatch, LawId::kRMatch};
constexpr LawId kStrongMatchupLaws[] = {
    LawId::kCS1, LawId::kCS2, LawId::kCS3,    LawId::kCS4,
    LawId::kCS5, LawId::kCS6, LawId::kSMatch1, LawId::kSMatch2};
constexpr LawId kDAmpleLaws[] = {LawId::kCS1, LawId::kCS2, LawId::kCS3,
                                 LawId::kCS4, LawId::kCS5, LawId::kDAmple};
constexpr LawId kLRRLaws[] = {LawId::kCS1, LawId::kCS2, LawId::kCS3,
                              LawId::kCS4, LawId::kCS5, LawId::kLRR};

const ClassInfo kClasses[] = {
    {"PRECAT", kPrecatLaws, "precat-semigroup: CS1-CS5"},
    {"CAT", kCatLaws, "cat-semigroup: PRECAT + CS6"},
    {"LOCALISABLE", kLocalisableLaws,
     "PRECAT + both congruence conditions + D(S) a band"},
    {"EHRESMANN", kEhresmannLaws, "LOCALISABLE + commuting projections"},
    {"LEFT-SEMI-LOC", kLeftSemiLocLaws,
     "PRECAT + LCONG + RWCONG + D(S) a band"},
    {"RIGHT-SEMI-LOC", kRightSemiLocLaws,
     "PRECAT + RCONG + LWCONG + D(S) a band"},
    {"LEFT-MATCHUP", kLeftMatchupLaws, "CAT + left match-up condition"},
    {"RIGHT-MATCHUP", kRightMatchupLaws, "CAT + right match-up condition"},
    {"MATCHUP", kMatchupLaws, "CAT + both match-up conditions"},
    {"STRONG-MATCHUP", kStrongMatchupLaws,
     "CAT + strong match-up conditions"},
    {"DAMPLE-CLASS", kDAmpleLaws, "PRECAT + D-ample"},
    {"LRR-CLASS", kLRRLaws, "left restriction semigroup with range"},
};

constexpr ClassId kAllClasses[] = {
    ClassId::kPrecat,       ClassId::kCat,          ClassId::kLocalisable,
    ClassId::kEhresmann,    ClassId::kLeftSemiLoc,  ClassId::kRightSemiLoc,
    ClassId::kLeftMatchup,  ClassId::kRightMatchup, ClassId::kMatchup,
    ClassId::kStrongMatchup, ClassId::kDAmple,      ClassId::kLRR};

constexpr LawId kTranscriptionLaws[] = {LawId::kTC1, LawId::kTC2, LawId::kTC3,
                                        LawId::kTC4, LawId::kTC5, LawId::kTC6};
constexpr LawId kCLeftMatchupLaws[] = {LawId::kLMU, LawId::kTC4L,
                                       LawId::kAssocL};
constexpr LawId kCRightMatchupLaws[] = {LawId::kRMU, LawId::kTC4R,
                                        LawId::kAssocR};
constexpr LawId kCMatchupLaws[] = {LawId::kTC4, LawId::kTC7};
constexpr LawId kCStrongMatchupLaws[] = {LawId::kTC4, LawId::kTC7,
                                         LawId::kSMU};
constexpr LawId kCLeftSemiLocLaws[] = {LawId::kTC3, LawId::kTC4L,
                                       LawId::kTC5a};
constexpr LawId kCLRRLaws[] = {LawId::kTC3, LawId::kTC4L, LawId::kTC5a,
                               LawId::kCommId, LawId::kRestrId};

const ClassInfo kCategoryClasses[] = {
    {"C-TRANSCRIPTION", kTranscriptionLaws, "TC1-TC6"},
    {"C-LMATCHUP", kCLeftMatchupLaws, "LMU + TC4L + associative left pseudoproduct"},
    {"C-RMATCHUP", kCRightMatchupLaws, "RMU + TC4R + associative right pseudoproduct"},
    {"C-MATCHUP", kCMatchupLaws, "TC4 + TC7"},
    {"C-STRONG-MATCHUP", kCStrongMatchupLaws, "TC4 + TC7 + SMU"},
    {"C-LEFT-SEMI-LOC", kCLeftSemiLocLaws, "TC3 + TC4L + TC5a"},
    {"C-LRR", kCLRRLaws, "C-LEFT-SEMI-LOC + COMM-ID + RESTR-ID"},
};

constexpr CategoryClassId kAllCategoryClasses[] = {
    CategoryClassId::kTranscription, CategoryClassId::kLeftMatchup,
    CategoryClassId::kRightMatchup,  CategoryClassId::kMatchup,
    CategoryClassId::kStrongMatchup, CategoryClassId::kLeftSemiLoc,
    CategoryClassId::kLRR};

}  // namespace

std::span<const LawInfo> law_catalog() { return kCatalog; }

const LawInfo& info(LawId id) { return kCatalog[static_cast<std::size_t>(id)]; }

std::optional<LawId> parse_law(std::string_view t) {
  for (const auto& li : kCatalog)
    if (iequals(li.tag, t)) return li.id;
  return std::nullopt;
}

Instance eval(LawId id, const SemigroupView& v, const Element* a) {
  const Element x = a[0];
  const Element y = a[1];
  switch (id) {
    case LawId::kCS1:
      return one(v.mul(v.d(x), x), x);
    case LawId::kCS2:
      return one(v.mul(x, v.r(x)), x);
    case LawId::kCS3:
      return one(v.mul(v.d(x), v.d(x)), v.d(x));
    case LawId::kCS4:
      return one(v.d(v.r(x)), v.r(x));
    case LawId::kCS5:
      return one(v.r(v.d(x)), v.d(x));
    case LawId::kCS6: {
      const Tri pre = strict_eq(v.r(x), v.d(y));
      if (pre == Tri::kUnknown) return {Tri::kUnknown, 0, kUnknown, kUnknown};
      if (pre == Tri::kFalse) return {};
      const Element xy = v.mul(x, y);
      Parts p;
      if (p.strict(v.d(xy), v.d(x))) return p.result();
      p.strict(v.r(xy), v.r(y));
      return p.result();
    }
    case LawId::kLCong:
      return one(v.d(v.mul(x, y)), v.d(v.mul(x, v.d(y))));
    case LawId::kRCong:
      return one(v.r(v.mul(x, y)), v.r(v.mul(v.r(x), y)));
    case LawId::kLWCong:
      return one(v.d(v.mul(x, y)), v.d(v.mul(x, v.d(v.mul(v.r(x), y)))));
    case LawId::kRWCong:
      return one(v.r(v.mul(x, y)), v.r(v.mul(v.r(v.mul(x, v.d(y))), y)));
    case LawId::kLMatch: {
      const Element rxdy = v.r(v.mul(x, v.d(y)));
      return one(rxdy, v.d(v.mul(rxdy, y)));
    }
    case LawId::kRMatch: {
      const Element drxy = v.d(v.mul(v.r(x), y));
      return one(drxy, v.r(v.mul(x, drxy)));
    }
    case LawId::kRMatchAsPrinted:
      return one(v.d(v.mul(v.r(x), y)),
                 v.r(v.mul(x, v.d(v.mul(v.r(y), x)))));
    case LawId::kSMatch1:
      return one(v.r(v.mul(x, v.d(y))), v.d(v.mul(v.r(x), y)));
    case LawId::kSMatch2:
      return one(v.mul(x, y),
                 v.mul(v.mul(x, v.d(y), v.r(x)), y));
    case LawId::kDAmple:
      return one(v.mul(x, v.d(y)), v.mul(v.d(v.mul(x, y)), x));
    case LawId::kLRR: {
      Parts p;
      if (p.strict(v.mul(v.d(x), x), x)) return p.result();
      if (p.strict(v.mul(v.d(x), v.d(y)), v.mul(v.d(y), v.d(x))))
        return p.result();
      if (p.strict(v.d(v.mul(v.d(x), y)), v.mul(v.d(x), v.d(y))))
        return p.result();
      if (p.strict(v.mul(x, v.d(y)), v.mul(v.d(v.mul(x, y)), x)))
        return p.result();
      const Element rxy = v.r(v.mul(x, y));
      p.strict(v.mul(rxy, v.r(y)), rxy);
      return p.result();
    }
    case LawId::kBandD: {
      const Element ef = v.mul(x, y);
      return one(v.d(ef), ef);
    }
    case LawId::kSemilatticeD: {
      Parts p;
      const Element ef = v.mul(x, y);
      if (p.strict(ef, v.mul(y, x))) return p.result();
      p.strict(v.d(ef), ef);
      return p.result();
    }
    case LawId::kProjDEqR: {
      const Element ef = v.mul(x, y);
      return one(v.d(ef), v.r(ef));
    }
    case LawId::kRAbsorb: {
      const Element rxy = v.r(v.mul(x, y));
      return one(rxy, v.d(v.mul(rxy, v.r(y))));
    }
    case LawId::kDAbsorb: {
      const Element dxy = v.d(v.mul(x, y));
      return one(dxy, v.r(v.mul(v.d(x), dxy)));
    }
    case LawId::kCommD:
      return one(v.mul(v.d(x), v.d(y)), v.mul(v.d(y), v.d(x)));
    default:
      throw WrongStructureKind(std::string(tag(id)) +
                               " is not an atomic semigroup-side law");
  }
}

Instance eval(LawId id, const CategoryView& v, const Element* vars) {
  const Element a = vars[0];
  const Element b = vars[1];
  const Element c = vars[2];
  Instance out;
  switch (id) {
    case LawId::kTC1:
      return one(v.left(a, b), v.right(a, b));
    case LawId::kTC2: {
      Parts p;
      if (p.strict(v.left(v.d(a), a), a)) return p.result();
      p.strict(v.right(a, v.r(a)), a);
      return p.result();
    }
    case LawId::kTC3: {
      // (a, e, f)
      const Element e = b, f = c;
      Parts p;
      if (p.strict(v.left(e, v.left(f, a)), v.left(v.left(e, f), a)))
        return p.result();
      p.strict(v.right(a, v.left(e, f)), v.right(v.right(a, e), f));
      return p.result();
    }
    case LawId::kTC4a: {
      const Element ab = v.comp(a, b);
      if (composite_guard(ab, out)) return out;
      const Element ea = v.left(c, a);
      return one(v.left(c, ab), v.comp(ea, v.left(v.r(ea), b)));
    }
    case LawId::kTC4b: {
      const Element ab = v.comp(a, b);
      if (composite_guard(ab, out)) return out;
      const Element be = v.right(b, c);
      return one(v.right(ab, c), v.comp(v.right(a, v.d(be)), be));
    }
    case LawId::kTC4aP: {
      const Element ab = v.comp(a, b);
      if (composite_guard(ab, out)) return out;
      return one(v.left(c, ab), v.right_pseudoproduct(v.left(c, a), b));
    }
    case LawId::kTC4bP: {
      const Element ab = v.comp(a, b);
      if (composite_guard(ab, out)) return out;
      return one(v.right(ab, c), v.left_pseudoproduct(a, v.right(b, c)));
    }
    case LawId::kTC5a:
      // (e, a)
      return one(v.d(v.left(a, b)), v.left(a, v.d(b)));
    case LawId::kTC5b:
      // (a, e)
      return one(v.r(v.right(a, b)), v.right(v.r(a), b));
    case LawId::kTC6:
      // (e, a, f)
      return one(v.right(v.left(a, b), c), v.left(a, v.right(b, c)));
    case LawId::kLMU: {
      const Element rsdt = v.r(v.right(a, v.d(b)));
      return one(rsdt, v.d(v.left(rsdt, b)));
    }
    case LawId::kRMU: {
      const Element drst = v.d(v.left(v.r(a), b));
      return one(drst, v.r(v.right(a, drst)));
    }
    case LawId::kSMU1:
      return one(v.d(v.left(v.r(a), b)), v.r(v.right(a, v.d(b))));
    case LawId::kSMU2: {
      const Element ef = v.left(a, b);
      return one(v.comp(ef, ef), ef);
    }
    case LawId::kTC7a:
    case LawId::kTC7aP: {
      const Element lhs = v.left(c, v.left_pseudoproduct(a, b));
      const Element rhs = v.left_pseudoproduct(v.left(c, a), b);
      return id == LawId::kTC7a ? guarded(lhs, rhs) : one(lhs, rhs);
    }
    case LawId::kTC7b:
    case LawId::kTC7bP: {
      const Element lhs = v.right(v.right_pseudoproduct(a, b), c);
      const Element w = v.right(v.left(v.r(a), b), c);
      const Element rhs = v.comp(v.right(a, v.d(w)), w);
      return id == LawId::kTC7b ? guarded(lhs, rhs) : one(lhs, rhs);
    }
    case LawId::kAssocL:
      return one(v.left_pseudoproduct(v.left_pseudoproduct(a, b), c),
                 v.left_pseudoproduct(a, v.left_pseudoproduct(b, c)));
    case LawId::kAssocR:
      return one(v.right_pseudoproduct(v.right_pseudoproduct(a, b), c),
                 v.right_pseudoproduct(a, v.right_pseudoproduct(b, c)));
    case LawId::kAssocSym:
      return one(v.symmetric_pseudoproduct(v.symmetric_pseudoproduct(a, b), c),
                 v.symmetric_pseudoproduct(a, v.symmetric_pseudoproduct(b, c)));
    case LawId::kCommId:
      return one(v.left(a, b), v.left(b, a));
    case LawId::kRestrId: {
      const Element se = v.right(a, b);
      return one(se, v.left(v.d(se), a));
    }
    default:
      throw WrongStructureKind(std::string(tag(id)) +
                               " is not an atomic category-side law");
  }
}

CheckReport check_law(const SemigroupView& v, LawId id) {
  return check_any(v, id, Side::kSemigroup);
}

CheckReport check_law(const BiunarySemigroup& s, LawId id) {
  return check_law(s.view(), id);
}

CheckReport check_tc(const CategoryView& v, LawId id) {
  return check_any(v, id, Side::kCategory);
}

CheckReport check_tc(const BiactionCategory& c, LawId id) {
  const CategoryView v = c.view();
  std::optional<LawId> prereq;
  if (id == LawId::kAssocL) prereq = LawId::kLMU;
  if (id == LawId::kAssocR) prereq = LawId::kRMU;
  if (id == LawId::kAssocSym) prereq = LawId::kTC4;
  if (prereq) {
    const CheckReport pre = check_tc(v, *prereq);
    if (!pre.holds)
      throw PseudoproductUndefined(std::string(tag(*prereq)), *pre.witness);
  }
  return check_tc(v, id);
}

Tri scan(const SemigroupView& v, LawId id) { return scan_any(v, id); }
Tri scan(const CategoryView& v, LawId id) { return scan_any(v, id); }

std::span<const ClassId> all_classes() { return kAllClasses; }
std::span<const CategoryClassId> all_category_classes() {
  return kAllCategoryClasses;
}

const ClassInfo& info(ClassId id) {
  return kClasses[static_cast<std::size_t>(id)];
}
const ClassInfo& info(CategoryClassId id) {
  return kCategoryClasses[static_cast<std::size_t>(id)];
}

std::optional<ClassId> parse_class(std::string_view t) {
  for (ClassId c : kAllClasses)
    if (iequals(info(c).tag, t)) return c;
  return std::nullopt;
}

std::optional<CategoryClassId> parse_category_class(std::string_view t) {
  for (CategoryClassId c : kAllCategoryClasses)
    if (iequals(info(c).tag, t)) return c;
  return std::nullopt;
}

bool in_class(const SemigroupView& v, ClassId id) {
  for (LawId law : info(id).laws)
    if (!check_law(v, law).holds) return false;
  return true;
}

bool in_class(const CategoryView& v, CategoryClassId id) {
  for (LawId law : info(id).laws)
    if (!check_tc(v, law).holds) return false;
  return true;
}

bool Classification::has(ClassId id) const {
  for (const auto& [c, yes] : classes)
    if (c == id) return yes;
  return false;
}

bool CategoryClassification::has(CategoryClassId id) const {
  for (const auto& [c, yes] : classes)
    if (c == id) return yes;
  return false;
}

Classification classify(const BiunarySemigroup& s) {
  const SemigroupView v = s.view();
  Classification out;
  for (LawId law : info(ClassId::kPrecat).laws) {
    CheckReport rep = check_law(v, law);
    if (!rep.holds) {
      out.precat_failure = std::move(rep);
      break;
    }
  }
  for (ClassId c : kAllClasses)
    out.classes.emplace_back(c, !out.precat_failure && in_class(v, c));
  return out;
}

CategoryClassification classify_category(const BiactionCategory& c) {
  const CategoryView v = c.view();
  CategoryClassification out;
  for (CategoryClassId id : kAllCategoryClasses)
    out.classes.emplace_back(id, in_class(v, id));
  return out;
}

}  // namespace biunary
