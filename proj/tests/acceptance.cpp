// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. The optional 9-element (LMU) structure is read from the
// first argument or from $BIUNARY_LMU_WITNESS.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "biunary/congruence.hpp"
#include "biunary/esn.hpp"
#include "biunary/fixtures.hpp"
#include "biunary/isomorphism.hpp"
#include "biunary/laws.hpp"
#include "biunary/relations.hpp"
#include "biunary/report.hpp"
#include "biunary/search.hpp"
#include "biunary/text_format.hpp"
#include "support.hpp"

namespace biunary {
namespace {

using test::E;
using test::holds;
using test::in;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

class Criterion {
 public:
  explicit Criterion(std::string name) : name_(std::move(name)), t0_(Clock::now()) {}

  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 20) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void note(const std::string& s) { notes_.push_back(s); }
  void skip(const std::string& why) { skipped_ = why; }

  bool report() const {
    const bool pass = failed_ == 0;
    std::cout << name_ << ": " << (pass ? "PASS" : "FAIL") << " (" << checks_
              << " checks, " << failed_ << " failed, " << seconds_since(t0_) << " s)\n";
    for (const auto& n : notes_) std::cout << "  " << n << "\n";
    if (!skipped_.empty()) std::cout << "  SKIP " << skipped_ << "\n";
    for (const auto& f : failures_) std::cout << "  failed: " << f << "\n";
    return pass;
  }

  double elapsed() const { return seconds_since(t0_); }

 private:
  std::string name_;
  Clock::time_point t0_;
  std::size_t checks_ = 0, failed_ = 0;
  std::vector<std::string> failures_, notes_;
  std::string skipped_;
};

std::string show(const BiunarySemigroup& s, const CheckReport& r) {
  if (r.holds) return r.law + " holds";
  return r.law + " fails at " + format_tuple(s.names(), *r.witness);
}

// 1. Fixture goldens.
bool fixtures() {
  Criterion c("criterion 1 (fixture goldens)");

  const BiunarySemigroup ex24 = fixture_semigroup(FixtureId::kEx2_4);
  c.expect(classify(ex24).has(ClassId::kCat), "ex2.4 is CAT");
  const BiunarySemigroup q = quotient(ex24, normalize({0, 1, 2, 2}));
  const CheckReport cs6 = check_law(q, LawId::kCS6);
  c.expect(!cs6.holds && format_tuple(q.names(), *cs6.witness) == "({a},{a})",
           "ex2.4 quotient: " + show(q, cs6));
  c.note("ex2.4/{{a},{g},{e,1}}: " + show(q, cs6));

  const BiunarySemigroup ex210 = fixture_semigroup(FixtureId::kEx2_10);
  const Classification k210 = classify(ex210);
  c.expect(k210.has(ClassId::kStrongMatchup), "ex2.10 is STRONG-MATCHUP");
  c.expect(!k210.has(ClassId::kLocalisable), "ex2.10 is not LOCALISABLE");
  const CheckReport band = check_law(ex210, LawId::kBandD);
  c.expect(!band.holds && format_tuple(ex210.names(), *band.witness) == "(f,e)" &&
               format_element(ex210.names(), band.rhs) == "a",
           "ex2.10: " + show(ex210, band));
  c.note("ex2.10: " + show(ex210, band));

  const BiunarySemigroup s33 = fixture_semigroup(FixtureId::kEx3_3S);
  const BiunarySemigroup t33 = fixture_semigroup(FixtureId::kEx3_3T);
  c.expect(serialize(category_of(s33)) == serialize(category_of(t33)),
           "ex3.3S/T categories are table-identical");
  c.expect(!find_isomorphism(s33, t33), "ex3.3S and ex3.3T are not isomorphic");
  c.expect(!find_isomorphism(s33, t33, {.ignore_unary = true}),
           "ex3.3S and ex3.3T are not isomorphic as semigroups");

  const BiunarySemigroup ex38 = fixture_semigroup(FixtureId::kEx3_8);
  c.expect(holds(category_of(ex38), LawId::kTC4a), "ex3.8: TC4a holds on its category");
  const CheckReport absorb = check_law(ex38, LawId::kRAbsorb);
  c.expect(!absorb.holds && format_tuple(ex38.names(), *absorb.witness) == "(0,e)",
           "ex3.8: " + show(ex38, absorb));
  c.note("ex3.8: " + show(ex38, absorb));

  const BiactionCategory ex49 = fixture_category(FixtureId::kEx4_9);
  const CheckReport assoc = check_tc(ex49, LawId::kAssocL);
  const auto& n = ex49.names();
  c.expect(!assoc.holds && format_tuple(n, *assoc.witness) == "(s,e,s)" &&
               format_element(n, assoc.lhs) == "f" && format_element(n, assoc.rhs) == "s",
           "ex4.9: ASSOC-L");
  if (!assoc.holds)
    c.note("ex4.9: ASSOC-L fails at " + format_tuple(n, *assoc.witness) + ", " +
           format_element(n, assoc.lhs) + " vs " + format_element(n, assoc.rhs));

  c.expect(c.elapsed() < 1.0, "golden suite under 1 s");
  return c.report();
}

// 2. Implications over every model of order <= 4.
bool properties() {
  Criterion c("criterion 2 (theorem properties, orders 1-4 exhaustive)");
  std::size_t semigroups = 0, categories = 0;
  for (std::size_t order = 1; order <= 4; ++order) {
    for (const auto& s : test::precat_models(order)) {
      ++semigroups;
      const std::string id = "order " + std::to_string(order) + "\n" + serialize(s);
      const bool cat = in(s, ClassId::kCat);
      const bool band = holds(s, LawId::kBandD);
      if (holds(s, LawId::kLWCong) && holds(s, LawId::kRWCong))
        c.expect(cat, "weak congruence conditions give CS6: " + id);
      if (cat && holds(s, LawId::kSMatch1))
        c.expect(holds(s, LawId::kLMatch) && holds(s, LawId::kRMatch),
                 "SMATCH1 gives LMATCH and RMATCH: " + id);
      c.expect((cat && holds(s, LawId::kLMatch)) ==
                   (holds(s, LawId::kLCong) && holds(s, LawId::kRWCong) &&
                    holds(s, LawId::kRAbsorb)),
               "left match-up characterisation: " + id);
      c.expect(in(s, ClassId::kMatchup) ==
                   (holds(s, LawId::kLCong) && holds(s, LawId::kRCong) &&
                    holds(s, LawId::kRAbsorb) && holds(s, LawId::kDAbsorb)),
               "match-up characterisation: " + id);
      if (holds(s, LawId::kDAmple)) c.expect(band, "DAMPLE gives BAND-D: " + id);
      c.expect(in(s, ClassId::kLRR) == (in(s, ClassId::kLeftSemiLoc) &&
                                        holds(s, LawId::kDAmple) &&
                                        holds(s, LawId::kSemilatticeD)),
               "LRR characterisation: " + id);
      if (!cat) continue;
      const bool loc = in(s, ClassId::kLocalisable);
      c.expect(loc == (in(s, ClassId::kStrongMatchup) && band) &&
                   loc == (in(s, ClassId::kMatchup) && band),
               "localisable three ways: " + id);
      c.expect(holds(s, LawId::kSMatch1) == (holds(s, LawId::kLCong) &&
                                             holds(s, LawId::kRCong) &&
                                             holds(s, LawId::kProjDEqR)),
               "SMATCH1 via congruences: " + id);
      if (band)
        c.expect(holds(s, LawId::kLMatch) == in(s, ClassId::kLeftSemiLoc),
                 "band: LMATCH iff LEFT-SEMI-LOC: " + id);

      const BiactionCategory k = category_of(s);
      bool restricted = true;
      for (std::size_t x = 0; x < order; ++x)
        for (std::size_t y = 0; y < order; ++y) {
          const bool composable = s.r(E(x)) == s.d(E(y));
          restricted &= k.comp(E(x), E(y)) == (composable ? s.mul(E(x), E(y)) : kUndefined);
        }
      c.expect(restricted && holds(k, LawId::kTC1) && holds(k, LawId::kTC2) &&
                   holds(k, LawId::kTC6),
               "category_of is the restricted product with TC1, TC2, TC6: " + id);
      if (holds(s, LawId::kLMatch)) {
        c.expect(holds(k, LawId::kLMU) && holds(k, LawId::kTC4L),
                 "left match-up category has LMU and TC4L: " + id);
        c.expect(roundtrip_semigroup(s, PseudoproductKind::kLeft).holds,
                 "left extension recovers S: " + id);
      }
    }

    for (const auto& k : test::category_models(order)) {
      ++categories;
      const std::string id = "order " + std::to_string(order) + "\n" + serialize(k);
      const CategoryView v = k.view();
      const bool tc4 = holds(k, LawId::kTC4);
      c.expect(tc4 == (holds(k, LawId::kTC4L) && holds(k, LawId::kTC4R)),
               "TC4 iff TC4L and TC4R: " + id);
      if (tc4) {
        c.expect(holds(k, LawId::kLMU) && holds(k, LawId::kRMU), "TC4 gives LMU and RMU: " + id);
        const test::NaiveCategory naive{k};
        bool agree = true;
        for (std::size_t s = 0; s < order; ++s)
          for (std::size_t t = 0; t < order; ++t) {
            const Element l = naive.pl(E(s), E(t));
            agree &= l != kUndefined && l == naive.pr(E(s), E(t)) &&
                     l == naive.psym(E(s), E(t)) &&
                     l == pseudoproduct(v, PseudoproductKind::kLeft, E(s), E(t));
          }
        c.expect(agree, "left, right and symmetric pseudoproducts agree under TC4: " + id);
        c.expect(holds(k, LawId::kTC7) == holds(k, LawId::kAssocSym),
                 "TC7 iff ASSOC-SYM under TC4: " + id);
        if (holds(k, LawId::kSMU)) {
          bool strong = true;
          for (std::size_t s = 0; s < order; ++s)
            for (std::size_t t = 0; t < order; ++t)
              strong &= naive.pstrong(E(s), E(t)) == naive.psym(E(s), E(t));
          c.expect(strong, "strong form equals symmetric under SMU: " + id);
        }
      }
      if (holds(k, LawId::kTC3) && holds(k, LawId::kTC4L) && holds(k, LawId::kTC5a))
        c.expect(holds(k, LawId::kAssocL), "TC3, TC4L, TC5a give ASSOC-L: " + id);
      c.expect(holds(k, LawId::kTC7P) == (tc4 && holds(k, LawId::kAssocSym)),
               "TC7' iff TC4 and ASSOC-SYM: " + id);
      if (holds(k, LawId::kLMU) && holds(k, LawId::kTC4L)) {
        bool idem = true;
        for (std::size_t x = 0; x < order; ++x)
          for (Element e : k.identities())
            idem &= k.right(k.right(E(x), e), e) == k.right(E(x), e);
        c.expect(idem, "right action idempotent under LMU and TC4L: " + id);
        const Extension ext = extension(k, PseudoproductKind::kLeft);
        if (ext.semigroup)
          c.expect(in(*ext.semigroup, ClassId::kLeftMatchup),
                   "associative left extension is left match-up: " + id);
      }
    }
  }
  c.note(std::to_string(semigroups) + " precat-semigroups and " +
         std::to_string(categories) + " categories with biaction, up to isomorphism");
  return c.report();
}

// 3. Round trips at order <= 3.
bool roundtrips() {
  Criterion c("criterion 3 (round trips, order <= 3)");
  std::size_t sg = 0, cg = 0;
  for (std::size_t order = 1; order <= 3; ++order) {
    for (const auto& s : test::precat_models(order)) {
      if (!in(s, ClassId::kCat) || !holds(s, LawId::kLMatch)) continue;
      ++sg;
      c.expect(roundtrip_semigroup(s, PseudoproductKind::kLeft).holds,
               "S(C(S)) = S:\n" + serialize(s));
    }
    for (const auto& k : test::category_models(order)) {
      if (!holds(k, LawId::kLMU) || !holds(k, LawId::kTC4L) || !holds(k, LawId::kAssocL))
        continue;
      ++cg;
      c.expect(roundtrip_category(k, PseudoproductKind::kLeft).holds,
               "C(S(C)) = C:\n" + serialize(k));
    }
  }
  c.note(std::to_string(sg) + " semigroups, " + std::to_string(cg) + " categories");
  return c.report();
}

// 4. Relations under demonic and angelic composition.
bool relations() {
  Criterion c("criterion 4 (relation algebras)");
  const auto t0 = Clock::now();
  const RelationAlgebra demonic = full_algebra(2, Composition::kDemonic);
  const RelationAlgebra angelic = full_algebra(2, Composition::kAngelic);
  const double built = seconds_since(t0);
  c.expect(built < 1.0, "both n=2 algebras built in under 1 s");

  const BiunarySemigroup& d = demonic.algebra;
  c.expect(classify(d).has(ClassId::kLRR), "demonic is LRR-CLASS");
  c.expect(holds(d, LawId::kLCong), "demonic satisfies LCONG");
  const CheckReport rc = check_law(d, LawId::kRCong);
  c.expect(!rc.holds, "demonic fails RCONG");
  c.note("demonic: " + show(d, rc));
  c.expect(classify(angelic.algebra).has(ClassId::kEhresmann), "angelic is EHRESMANN");

  const BiactionCategory cd = category_of(d);
  const BiactionCategory ca = category_of(angelic.algebra);
  c.expect(std::ranges::equal(cd.comp_table(), ca.comp_table()), "categories agree on comp");
  c.expect(std::ranges::equal(cd.lact_table(), ca.lact_table()),
           "categories agree on the left action");
  c.expect(!std::ranges::equal(cd.ract_table(), ca.ract_table()),
           "categories differ on the right action");

  for (std::size_t n = 1; n <= 3; ++n)
    c.expect(!associativity_counterexample(n, Composition::kDemonic),
             "demonic composition associative on " + std::to_string(n) + " points");
  return c.report();
}

std::uint64_t orbit_key(const std::array<Element, 8>& m) {
  std::uint64_t k = 0;
  for (Element x : m) k = k * 2 + x;
  return k;
}

// 5. Model search.
bool search(const std::string& witness_file) {
  Criterion c("criterion 5 (search)");

  const SearchResult weak = enumerate(
      SearchQuery::make(StructureKind::kSemigroup, 4, {"PRECAT", "LCONG", "RCONG"}, {"CS6"}));
  c.expect(weak.models.empty() && weak.completed,
           "order 4, PRECAT+LCONG+RCONG without CS6: empty and completed");
  c.note("order 4 PRECAT+LCONG+RCONG violating CS6: " + std::to_string(weak.models.size()) +
         " models, completed=" + (weak.completed ? "true" : "false"));

  const SearchResult sm = enumerate(SearchQuery::make(
      StructureKind::kSemigroup, 3, {"CAT", "STRONG-MATCHUP"}, {"BAND-D"}));
  const BiunarySemigroup ex210 = fixture_semigroup(FixtureId::kEx2_10);
  const bool found = std::ranges::any_of(sm.models, [&](const Structure& m) {
    return find_isomorphism(std::get<BiunarySemigroup>(m), ex210).has_value();
  });
  c.expect(found, "order 3 STRONG-MATCHUP without BAND-D contains ex2.10");

  // Every 2x2 table with every pair of unary maps, associativity checked
  // directly and relabelling done by hand.
  std::size_t labelled = 0;
  std::set<std::uint64_t> classes;
  for (unsigned bits = 0; bits < 256; ++bits) {
    std::array<Element, 8> m{};  // mul[4], d[2], r[2]
    for (int i = 0; i < 8; ++i) m[i] = (bits >> (7 - i)) & 1;
    bool assoc = true;
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y)
        for (int z = 0; z < 2; ++z)
          assoc &= m[m[x * 2 + y] * 2 + z] == m[x * 2 + m[y * 2 + z]];
    if (!assoc) continue;
    ++labelled;
    std::array<Element, 8> sw{};
    for (int x = 0; x < 2; ++x) {
      for (int y = 0; y < 2; ++y) sw[(1 - x) * 2 + (1 - y)] = 1 - m[x * 2 + y];
      sw[4 + 1 - x] = 1 - m[4 + x];
      sw[6 + 1 - x] = 1 - m[6 + x];
    }
    classes.insert(std::min(orbit_key(m), orbit_key(sw)));
  }
  const SearchResult all2 =
      enumerate(SearchQuery::make(StructureKind::kSemigroup, 2, {}, {}, false));
  const SearchResult iso2 = enumerate(SearchQuery::make(StructureKind::kSemigroup, 2, {}, {}));
  c.expect(all2.models.size() == labelled, "order 2 labelled count matches brute force");
  c.expect(iso2.models.size() == classes.size(), "order 2 class count matches brute force");
  c.note("order 2: " + std::to_string(all2.models.size()) + " labelled (oracle " +
         std::to_string(labelled) + "), " + std::to_string(iso2.models.size()) +
         " up to isomorphism (oracle " + std::to_string(classes.size()) + ")");

  const auto t0 = Clock::now();
  const MinimalResult lmu =
      minimal_counterexample(StructureKind::kCategory, {"TC4L"}, {"LMU"}, 4, 600);
  c.expect(!lmu.model && lmu.completed && lmu.certified_up_to == 4,
           "5(a) no TC4L category without LMU up to order 4");
  c.note("5(a) TC4L without LMU: " + std::string(lmu.model ? "found" : "none") +
         ", certified up to order " + std::to_string(lmu.certified_up_to) + " in " +
         std::to_string(seconds_since(t0)) + " s");

  if (witness_file.empty()) {
    c.skip("5(b) no 9-element structure supplied (argument or BIUNARY_LMU_WITNESS)");
  } else {
    std::ifstream in(witness_file);
    c.expect(bool(in), "5(b) cannot read " + witness_file);
    if (in) {
      std::stringstream text;
      text << in.rdbuf();
      try {
        const BiactionCategory k = parse_category(text.str());
        c.expect(holds(k, LawId::kTC4L), "5(b) supplied structure satisfies TC4L");
        c.expect(!holds(k, LawId::kLMU), "5(b) supplied structure fails LMU");
        c.note("5(b) checked " + witness_file);
      } catch (const std::exception& e) {
        c.expect(false, std::string("5(b) ") + e.what());
      }
    }
  }
  return c.report();
}

}  // namespace
}  // namespace biunary

int main(int argc, char** argv) {
  std::string witness;
  if (argc > 1) witness = argv[1];
  else if (const char* env = std::getenv("BIUNARY_LMU_WITNESS")) witness = env;

  bool ok = true;
  ok &= biunary::fixtures();
  ok &= biunary::properties();
  ok &= biunary::roundtrips();
  ok &= biunary::relations();
  ok &= biunary::search(witness);
  std::cout << (ok ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << "\n";
  return ok ? 0 : 1;
}
