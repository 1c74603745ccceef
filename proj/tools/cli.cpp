#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "biunary/congruence.hpp"
#include "biunary/esn.hpp"
#include "biunary/fixtures.hpp"
#include "biunary/laws.hpp"
#include "biunary/relations.hpp"
#include "biunary/report.hpp"
#include "biunary/search.hpp"
#include "biunary/text_format.hpp"

namespace biunary::cli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw UsageError("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw UsageError("cannot write " + p.string());
  out << text;
}

// A path, or else a fixture id with an optional .alg/.cat suffix.
Structure load(const std::string& arg) {
  std::error_code ec;
  if (fs::is_regular_file(arg, ec)) return parse(read_file(arg));
  if (auto id = parse_fixture_id(arg)) return fixture(*id);
  for (std::string_view ext : {".alg", ".cat", ".txt"}) {
    if (arg.size() > ext.size() && arg.ends_with(ext))
      if (auto id = parse_fixture_id(arg.substr(0, arg.size() - ext.size())))
        return fixture(*id);
  }
  throw UsageError("no such file or fixture: " + arg);
}

std::span<const std::string> names_of(const Structure& s) {
  return std::visit([](const auto& x) { return x.names(); }, s);
}

PseudoproductKind kind_of(const std::string& s) {
  if (auto k = parse_kind(s)) return *k;
  throw UsageError("unknown kind '" + s + "' (left|right|symmetric|strong)");
}

Composition composition_of(const std::string& s) {
  if (auto m = parse_composition(s)) return *m;
  throw UsageError("unknown mode '" + s + "' (angelic|demonic)");
}

CheckReport failing(std::string law, const LawError& e) {
  CheckReport r;
  r.law = std::move(law);
  r.holds = false;
  r.witness = e.witness();
  r.failed_component = e.law();
  return r;
}

// First failing law of a conjunction, reported under the class tag.
template <class Check>
CheckReport conjunction(std::string_view klass, std::span<const LawId> laws,
                        Check check) {
  for (LawId law : laws) {
    CheckReport r = check(law);
    if (!r.holds) {
      r.law = std::string(klass);
      return r;
    }
  }
  CheckReport ok;
  ok.law = std::string(klass);
  return ok;
}

CheckReport check_category_law(const BiactionCategory& c, LawId law) {
  try {
    return check_tc(c, law);
  } catch (const PseudoproductUndefined& e) {
    CheckReport r = check_tc(c.view(), *parse_law(e.law()));
    r.law = std::string(tag(law));
    return r;
  }
}

void emit(std::ostream& out, const std::vector<CheckReport>& reports,
          std::span<const std::string> names, bool as_json) {
  if (as_json) {
    out << to_json(reports, names) << "\n";
    return;
  }
  for (const auto& r : reports) out << to_text(r, names) << "\n";
}

bool all_hold(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (!r.holds) return false;
  return true;
}

double default_budget() {
  if (const char* env = std::getenv("BIUNARY_BUDGET")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || v < 0)
      throw UsageError("BIUNARY_BUDGET must be a non-negative number");
    return v;
  }
  return 0;
}

StructureKind structure_kind(const std::string& s) {
  if (s == "semigroup") return StructureKind::kSemigroup;
  if (s == "category" || s == "biaction-category") return StructureKind::kCategory;
  throw UsageError("unknown structure kind '" + s + "' (semigroup|category)");
}

std::string suffix(const Structure& s) {
  return std::holds_alternative<BiunarySemigroup>(s) ? ".alg" : ".cat";
}

FiniteRelation relation_arg(const std::string& arg) {
  std::error_code ec;
  if (fs::is_regular_file(arg, ec)) {
    std::string text = read_file(arg);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
      text.pop_back();
    return parse_relation(text);
  }
  return parse_relation(arg);
}

// ---------------------------------------------------------------------------

struct CheckArgs {
  std::string input;
  std::vector<std::string> laws;
  std::vector<std::string> classes;
  bool json = false;
};

int do_check(const CheckArgs& a, std::ostream& out) {
  if (a.laws.empty() && a.classes.empty())
    throw UsageError("check needs at least one --law or --class");
  const Structure s = load(a.input);
  std::vector<CheckReport> reports;
  if (const auto* sg = std::get_if<BiunarySemigroup>(&s)) {
    for (const auto& t : a.laws) {
      auto id = parse_law(t);
      if (!id) throw UsageError("unknown law '" + t + "'");
      reports.push_back(check_law(*sg, *id));
    }
    for (const auto& t : a.classes) {
      auto id = parse_class(t);
      if (!id) throw UsageError("unknown semigroup class '" + t + "'");
      reports.push_back(conjunction(tag(*id), info(*id).laws,
                                    [&](LawId l) { return check_law(*sg, l); }));
    }
  } else {
    const auto& c = std::get<BiactionCategory>(s);
    for (const auto& t : a.laws) {
      auto id = parse_law(t);
      if (!id) throw UsageError("unknown law '" + t + "'");
      if (info(*id).side != Side::kCategory)
        throw WrongStructureKind(std::string(tag(*id)) +
                                 " is a semigroup law; input is a category");
      reports.push_back(check_category_law(c, *id));
    }
    for (const auto& t : a.classes) {
      auto id = parse_category_class(t);
      if (!id) throw UsageError("unknown category class '" + t + "'");
      reports.push_back(conjunction(tag(*id), info(*id).laws, [&](LawId l) {
        return check_category_law(c, l);
      }));
    }
  }
  emit(out, reports, names_of(s), a.json);
  return all_hold(reports) ? kHolds : kFails;
}

struct ClassifyArgs {
  std::string input;
  bool json = false;
};

int do_classify(const ClassifyArgs& a, std::ostream& out) {
  const Structure s = load(a.input);
  if (const auto* sg = std::get_if<BiunarySemigroup>(&s)) {
    const Classification c = classify(*sg);
    out << (a.json ? to_json(c, sg->names()) + "\n" : to_text(c, sg->names()));
  } else {
    const CategoryClassification c =
        classify_category(std::get<BiactionCategory>(s));
    out << (a.json ? to_json(c) + "\n" : to_text(c));
  }
  return kHolds;
}

struct ConstructArgs {
  std::string input;
  std::string kind;
  std::string export_path;
  bool json = false;
};

int do_construct(const ConstructArgs& a, std::ostream& out) {
  const Structure s = load(a.input);
  const auto names = names_of(s);
  std::string text;
  std::optional<CheckReport> report;
  json j;
  try {
    if (const auto* sg = std::get_if<BiunarySemigroup>(&s)) {
      text = serialize(category_of(*sg));
      j["construction"] = "category";
    } else {
      if (a.kind.empty()) throw UsageError("construct on a category needs --kind");
      const PseudoproductKind k = kind_of(a.kind);
      const Extension ext = extension(std::get<BiactionCategory>(s), k);
      text = ext.semigroup ? serialize(*ext.semigroup) : serialize(ext.table);
      report = ext.associativity;
      j["construction"] = "extension";
      j["kind"] = std::string(tag(k));
    }
  } catch (const NotCatSemigroup& e) {
    report = failing("CAT", e);
  } catch (const PrerequisiteFailed& e) {
    report = failing(e.law(), e);
  }
  const bool ok = !report || report->holds;
  if (!text.empty()) {
    if (!a.export_path.empty()) write_file(a.export_path, text);
    if (a.json)
      j["structure"] = a.export_path.empty() ? json(text) : json(a.export_path);
    else if (a.export_path.empty())
      out << text;
  }
  if (a.json) {
    if (report) j["report"] = json::parse(to_json({*report}, names))[0];
    out << j.dump(2) << "\n";
  } else if (report) {
    out << (text.empty() || !a.export_path.empty() ? "" : "# ")
        << to_text(*report, names) << "\n";
  }
  return ok ? kHolds : kFails;
}

struct RoundtripArgs {
  std::string input;
  std::string kind;
  bool json = false;
};

int do_roundtrip(const RoundtripArgs& a, std::ostream& out) {
  const Structure s = load(a.input);
  const PseudoproductKind k = kind_of(a.kind);
  std::vector<CheckReport> reports;
  if (const auto* sg = std::get_if<BiunarySemigroup>(&s)) {
    const ClassId klass = roundtrip_class(k);
    reports.push_back(conjunction(tag(klass), info(klass).laws,
                                  [&](LawId l) { return check_law(*sg, l); }));
    if (reports.back().holds) reports.push_back(roundtrip_semigroup(*sg, k));
  } else {
    const auto& c = std::get<BiactionCategory>(s);
    const CategoryView v = c.view();
    for (LawId l : roundtrip_category_laws(k)) {
      reports.push_back(check_tc(v, l));
      if (!reports.back().holds) break;
    }
    if (reports.back().holds) reports.push_back(roundtrip_category(c, k));
  }
  emit(out, reports, names_of(s), a.json);
  return all_hold(reports) ? kHolds : kFails;
}

struct SearchArgs {
  std::string query;
  std::string mode = "enumerate";
  std::string kind = "semigroup";
  std::size_t order = 0;
  std::size_t max_order = 0;
  std::vector<std::string> satisfy;
  std::vector<std::string> violate;
  bool up_to_iso = true;
  std::optional<std::size_t> limit;
  std::optional<double> budget;
  std::size_t threads = 0;
  bool json = false;
};

std::string query_text(const std::string& arg) {
  std::error_code ec;
  if (!fs::is_regular_file(arg, ec)) return arg;
  std::istringstream in(read_file(arg));
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
  }
  throw UsageError("query file " + arg + " is empty");
}

int do_search(const SearchArgs& a, std::ostream& out) {
  const double budget = a.budget ? *a.budget : default_budget();
  if (a.mode == "enumerate") {
    SearchQuery q;
    if (!a.query.empty()) {
      q = parse_query(query_text(a.query));
      if (a.budget || q.budget_seconds == 0) q.budget_seconds = budget;
    } else {
      if (a.order == 0) throw UsageError("search needs --order or --query");
      q = SearchQuery::make(structure_kind(a.kind), a.order, a.satisfy,
                            a.violate, a.up_to_iso);
      q.limit = a.limit;
      q.budget_seconds = budget;
    }
    if (a.threads) q.threads = a.threads;
    const SearchResult r = enumerate(q);
    if (a.json) {
      json j;
      j["query"] = to_string(q);
      j["models"] = json::array();
      for (const auto& m : r.models) j["models"].push_back(serialize(m));
      j["nodes"] = r.nodes;
      j["completed"] = r.completed;
      j["limit_reached"] = r.limit_reached;
      out << j.dump(2) << "\n";
      return kHolds;
    }
    for (std::size_t i = 0; i < r.models.size(); ++i) {
      if (i) out << "---\n";
      out << serialize(r.models[i]);
    }
    out << "# models=" << r.models.size() << " nodes=" << r.nodes
        << " completed=" << (r.completed ? "true" : "false")
        << " limit_reached=" << (r.limit_reached ? "true" : "false") << "\n";
    return kHolds;
  }
  if (!a.query.empty()) throw UsageError("--query is only for enumerate mode");
  const std::size_t max_order = a.max_order ? a.max_order : a.order;
  if (max_order == 0) throw UsageError("search needs --max-order");
  if (a.mode == "minimal") {
    const MinimalResult r = minimal_counterexample(
        structure_kind(a.kind), a.satisfy, a.violate, max_order, budget);
    if (a.json) {
      json j;
      j["model"] = r.model ? json(serialize(*r.model)) : json(nullptr);
      j["certified_up_to"] = r.certified_up_to;
      j["nodes"] = r.nodes;
      j["completed"] = r.completed;
      out << j.dump(2) << "\n";
    } else if (r.model) {
      out << serialize(*r.model) << "# counterexample of order "
          << std::visit([](const auto& m) { return m.order(); }, *r.model)
          << "\n";
    } else {
      out << "# none up to order " << r.certified_up_to
          << " completed=" << (r.completed ? "true" : "false") << "\n";
    }
    return r.model ? kFails : kHolds;
  }
  if (a.mode == "closure") {
    if (structure_kind(a.kind) != StructureKind::kSemigroup)
      throw UsageError("closure search is for semigroup classes");
    const ClosureResult r = closure_under_quotients(a.satisfy, max_order, budget);
    if (a.json) {
      json j;
      if (r.witness) {
        const auto& w = *r.witness;
        j["model"] = serialize(w.model);
        j["congruence"] = to_string(w.model, w.congruence);
        j["quotient"] = serialize(w.quotient);
        j["failure"] = json::parse(to_json({w.failure}, w.quotient.names()))[0];
      } else {
        j["model"] = nullptr;
      }
      j["certified_up_to"] = r.certified_up_to;
      j["completed"] = r.completed;
      out << j.dump(2) << "\n";
    } else if (r.witness) {
      const auto& w = *r.witness;
      out << serialize(w.model) << "---\n"
          << serialize(w.quotient) << "# congruence "
          << to_string(w.model, w.congruence) << "\n# "
          << to_text(w.failure, w.quotient.names()) << "\n";
    } else {
      out << "# closed up to order " << r.certified_up_to
          << " completed=" << (r.completed ? "true" : "false") << "\n";
    }
    return r.witness ? kFails : kHolds;
  }
  throw UsageError("unknown search mode '" + a.mode +
                   "' (enumerate|minimal|closure)");
}

struct FixtureArgs {
  std::string id;
  bool list = false;
  bool relations = false;
  std::optional<std::string> export_path;
};

int do_fixture(const FixtureArgs& a, std::ostream& out) {
  if (a.list) {
    for (FixtureId id : fixture_ids()) {
      const Structure s = fixture(id);
      out << tag(id) << " "
          << (std::holds_alternative<BiunarySemigroup>(s) ? "semigroup"
                                                          : "category")
          << " order=" << names_of(s).size() << "\n";
    }
    return kHolds;
  }
  std::vector<FixtureId> ids;
  if (a.id.empty()) {
    if (!a.export_path) throw UsageError("fixture needs an id, --list or --export");
    ids.assign(fixture_ids().begin(), fixture_ids().end());
  } else {
    auto id = parse_fixture_id(a.id);
    if (!id) throw UsageError("unknown fixture '" + a.id + "'");
    ids.push_back(*id);
  }
  for (FixtureId id : ids) {
    const std::string text(fixture_text(id));
    if (a.relations) {
      auto rels = fixture_relations(id);
      if (!rels) throw UsageError(std::string(tag(id)) + " is not built from relations");
      const Structure s = fixture(id);
      const auto names = names_of(s);
      for (std::size_t i = 0; i < rels->elements.size(); ++i)
        out << names[i] << " = " << to_text(rels->elements[i]) << "\n";
      continue;
    }
    if (!a.export_path) {
      out << text;
      continue;
    }
    fs::path target = a.export_path->empty() ? fs::path(".") : fs::path(*a.export_path);
    std::error_code ec;
    if (ids.size() > 1 || fs::is_directory(target, ec))
      target /= std::string(tag(id)) + suffix(fixture(id));
    write_file(target, text);
    out << "wrote " << target.string() << "\n";
  }
  return kHolds;
}

struct RelArgs {
  std::string a, b;
  std::string mode = "angelic";
  std::size_t n = 2;
  std::vector<std::string> gens;
  std::size_t cap = 4096;
  bool allow_large = false;
  bool classify = false;
  bool product_only = false;
  std::string export_path;
};

int do_rel_algebra(const RelArgs& a, std::ostream& out) {
  const Composition mode = composition_of(a.mode);
  RelationAlgebra alg = [&] {
    if (a.gens.empty()) return full_algebra(a.n, mode, a.allow_large);
    std::vector<FiniteRelation> gens;
    for (const auto& g : a.gens) gens.push_back(relation_arg(g));
    const std::size_t n = gens.front().ground();
    return generate_subalgebra(n, mode, gens, a.cap,
                               a.product_only ? ClosureOps::kProductOnly
                                              : ClosureOps::kProductDomainRange);
  }();
  std::ostringstream text;
  text << "# " << tag(mode) << " relations on "
       << alg.elements.front().ground() << " points\n";
  text << serialize(alg.algebra);
  if (!a.export_path.empty()) {
    write_file(a.export_path, text.str());
    out << "wrote " << a.export_path << " (" << alg.algebra.order()
        << " elements)\n";
  } else {
    out << text.str();
  }
  if (a.classify) out << to_text(classify(alg.algebra), alg.algebra.names());
  return kHolds;
}

int do_rel(const std::string& op, const RelArgs& a, std::ostream& out) {
  if (op == "compose") {
    out << to_text(compose(relation_arg(a.a), relation_arg(a.b),
                           composition_of(a.mode)))
        << "\n";
    return kHolds;
  }
  if (op == "dom") {
    out << to_text(domain_proj(relation_arg(a.a))) << "\n";
    return kHolds;
  }
  if (op == "ran") {
    out << to_text(range_proj(relation_arg(a.a))) << "\n";
    return kHolds;
  }
  if (op == "algebra") return do_rel_algebra(a, out);
  if (op == "assoc") {
    const auto bad = associativity_counterexample(a.n, composition_of(a.mode));
    if (!bad) {
      out << tag(composition_of(a.mode)) << " composition is associative on "
          << a.n << " points\n";
      return kHolds;
    }
    out << "not associative at";
    for (auto c : *bad) out << " " << to_string(FiniteRelation::from_code(a.n, c));
    out << "\n";
    return kFails;
  }
  throw UsageError("unknown rel operation '" + op + "'");
}

struct CongruenceArgs {
  std::string input;
  std::string klass;
  bool json = false;
};

int do_congruences(const CongruenceArgs& a, std::ostream& out) {
  const Structure st = load(a.input);
  const auto* s = std::get_if<BiunarySemigroup>(&st);
  if (!s) throw WrongStructureKind("congruences are computed for semigroups");
  std::optional<ClassId> klass;
  if (!a.klass.empty()) {
    klass = parse_class(a.klass);
    if (!klass) throw UsageError("unknown semigroup class '" + a.klass + "'");
  }
  bool closed = true;
  json arr = json::array();
  for (const Congruence& c : congruences(*s)) {
    json j;
    j["congruence"] = to_string(*s, c);
    std::string line = to_string(*s, c);
    if (klass) {
      const BiunarySemigroup q = quotient(*s, c);
      const CheckReport r = conjunction(tag(*klass), info(*klass).laws,
                                        [&](LawId l) { return check_law(q, l); });
      closed = closed && r.holds;
      line += "  " + to_text(r, q.names());
      j["quotient"] = json::parse(to_json({r}, q.names()))[0];
    }
    arr.push_back(j);
    if (!a.json) out << line << "\n";
  }
  if (a.json) out << arr.dump(2) << "\n";
  return closed ? kHolds : kFails;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Checker and model finder for biunary semigroups and "
               "categories with biaction",
               "biunary"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "biunary 0.1.0");

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "check laws or classes on a structure");
  check->add_option("input", check_args.input, "file or fixture id")->required();
  check->add_option("--law", check_args.laws, "law tag (repeatable)");
  check->add_option("--class", check_args.classes, "class tag (repeatable)");
  check->add_flag("--json", check_args.json);

  ClassifyArgs classify_args;
  auto* cls = app.add_subcommand("classify", "list class memberships");
  cls->add_option("input", classify_args.input)->required();
  cls->add_flag("--json", classify_args.json);

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand(
      "construct", "category of a cat-semigroup, or pseudoproduct extension of a category");
  construct->add_option("input", construct_args.input)->required();
  construct->add_option("--kind", construct_args.kind, "left|right|symmetric|strong");
  construct->add_option("--export", construct_args.export_path, "write the result here");
  construct->add_flag("--json", construct_args.json);

  RoundtripArgs roundtrip_args;
  auto* roundtrip = app.add_subcommand("roundtrip", "compare S(C(S)) with S or C(S(C)) with C");
  roundtrip->add_option("input", roundtrip_args.input)->required();
  roundtrip->add_option("--kind", roundtrip_args.kind)->required();
  roundtrip->add_flag("--json", roundtrip_args.json);

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "enumerate models, minimal counterexamples, quotient closure");
  search->add_option("--query", search_args.query, "query line or file");
  search->add_option("--mode", search_args.mode, "enumerate|minimal|closure");
  search->add_option("--kind", search_args.kind, "semigroup|category");
  search->add_option("--order", search_args.order);
  search->add_option("--max-order", search_args.max_order);
  search->add_option("--satisfy", search_args.satisfy)->delimiter(',');
  search->add_option("--violate", search_args.violate)->delimiter(',');
  search->add_flag("--up-to-iso,!--labelled", search_args.up_to_iso);
  search->add_option("--limit", search_args.limit);
  search->add_option("--budget", search_args.budget, "seconds; default $BIUNARY_BUDGET or unlimited");
  search->add_option("--threads", search_args.threads);
  search->add_flag("--json", search_args.json);

  FixtureArgs fixture_args;
  auto* fix = app.add_subcommand("fixture", "print, list or export the built-in examples");
  fix->add_option("id", fixture_args.id);
  fix->add_flag("--list", fixture_args.list);
  fix->add_flag("--relations", fixture_args.relations, "print the relation behind each element");
  fix->add_option("--export", fixture_args.export_path, "file or directory")->expected(0, 1);

  RelArgs rel_args;
  std::string rel_op;
  auto* rel = app.add_subcommand("rel", "binary relations under angelic or demonic composition");
  rel->add_option("op", rel_op, "compose|dom|ran|algebra|assoc")->required();
  rel->add_option("a", rel_args.a, "relation, e.g. \"rel n=2 {(0,1)}\"");
  rel->add_option("b", rel_args.b);
  rel->add_option("--mode", rel_args.mode, "angelic|demonic");
  rel->add_option("--n", rel_args.n, "ground set size");
  rel->add_option("--gen", rel_args.gens, "generator (repeatable)");
  rel->add_option("--cap", rel_args.cap);
  rel->add_flag("--allow-large", rel_args.allow_large, "materialise all relations on 3 points");
  rel->add_flag("--product-only", rel_args.product_only, "close under product only");
  rel->add_flag("--classify", rel_args.classify);
  rel->add_option("--export", rel_args.export_path);

  CongruenceArgs congruence_args;
  auto* cong = app.add_subcommand("congruences", "list D,R-respecting congruences");
  cong->add_option("input", congruence_args.input)->required();
  cong->add_option("--class", congruence_args.klass, "check each quotient against a class");
  cong->add_flag("--json", congruence_args.json);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kHolds : kUsage;
  }

  try {
    if (check->parsed()) return do_check(check_args, out);
    if (cls->parsed()) return do_classify(classify_args, out);
    if (construct->parsed()) return do_construct(construct_args, out);
    if (roundtrip->parsed()) return do_roundtrip(roundtrip_args, out);
    if (search->parsed()) return do_search(search_args, out);
    if (fix->parsed()) return do_fixture(fixture_args, out);
    if (rel->parsed()) return do_rel(rel_op, rel_args, out);
    if (cong->parsed()) return do_congruences(congruence_args, out);
  } catch (const PrerequisiteFailed& e) {
    err << "error: " << e.what() << "\n";
    return kFails;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace biunary::cli
