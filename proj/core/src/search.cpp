#include "biunary/search.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "biunary/isomorphism.hpp"

namespace biunary {
namespace {

using Clock = std::chrono::steady_clock;

Element E(std::size_t x) { return static_cast<Element>(x); }

class Control {
 public:
  explicit Control(double budget_seconds) {
    if (budget_seconds > 0)
      deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(budget_seconds));
  }
  bool stopped() const { return stop_.load(std::memory_order_relaxed); }
  void stop() { stop_.store(true, std::memory_order_relaxed); }
  // Called from hot loops; only looks at the clock every 4096 ticks.
  bool tick(std::uint64_t& counter) {
    if ((++counter & 0xFFF) == 0 && deadline_ && Clock::now() > *deadline_) {
      timed_out_.store(true);
      stop();
    }
    return !stopped();
  }
  bool timed_out() const { return timed_out_.load(); }

 private:
  std::optional<Clock::time_point> deadline_;
  std::atomic<bool> stop_{false};
  std::atomic<bool> timed_out_{false};
};

std::vector<LawId> atomic(LawId id) {
  const LawInfo& li = info(id);
  if (li.components.empty()) return {id};
  return {li.components.begin(), li.components.end()};
}

std::vector<LawId> prune_laws(const SearchQuery& q) {
  std::vector<LawId> out;
  for (const auto& c : q.satisfy)
    for (LawId law : c.laws)
      for (LawId a : atomic(law))
        if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
  return out;
}

template <class View>
bool law_holds(const View& v, LawId law) {
  if constexpr (std::is_same_v<View, SemigroupView>)
    return check_law(v, law).holds;
  else
    return check_tc(v, law).holds;
}

template <class View>
bool meets(const View& v, const SearchQuery& q) {
  for (const auto& c : q.satisfy)
    for (LawId law : c.laws)
      if (!law_holds(v, law)) return false;
  for (const auto& c : q.violate) {
    bool all = true;
    for (LawId law : c.laws)
      if (!law_holds(v, law)) {
        all = false;
        break;
      }
    if (all) return false;
  }
  return true;
}

struct Found {
  std::vector<Element> key;
  Structure model;
};

// ---------------------------------------------------------------------------
// Semigroups

struct SgBranch {
  std::vector<Element> d;
  std::vector<Element> r;
  std::size_t projections;  // precat mode: projections are 0..k-1
};

bool precat_mode(const SearchQuery& q) {
  const auto laws = prune_laws(q);
  for (LawId l : info(ClassId::kPrecat).laws)
    if (std::find(laws.begin(), laws.end(), l) == laws.end()) return false;
  return true;
}

// Lexicographically least (D,R) pair in its orbit under relabelling.
bool orbit_minimal(const std::vector<Element>& d, const std::vector<Element>& r) {
  const std::size_t n = d.size();
  std::vector<Element> p(n);
  std::iota(p.begin(), p.end(), Element{0});
  std::vector<Element> inv(n);
  while (std::next_permutation(p.begin(), p.end())) {
    for (std::size_t i = 0; i < n; ++i) inv[p[i]] = E(i);
    // Compare permuted word with the original, position by position.
    int cmp = 0;
    for (std::size_t i = 0; i < 2 * n && cmp == 0; ++i) {
      const auto& m = i < n ? d : r;
      const std::size_t pos = i % n;
      const Element permuted = p[m[inv[pos]]];
      if (permuted != m[pos]) cmp = permuted < m[pos] ? -1 : 1;
    }
    if (cmp < 0) return false;
  }
  return true;
}

std::vector<SgBranch> semigroup_branches(std::size_t n, bool precat) {
  std::vector<SgBranch> out;
  if (precat) {
    for (std::size_t k = 1; k <= n; ++k) {
      const std::size_t free = n - k;
      // Each non-projection picks (D,R) in k*k; pairs non-decreasing.
      std::vector<std::size_t> code(free, 0);
      for (;;) {
        bool sorted = std::is_sorted(code.begin(), code.end());
        if (sorted) {
          SgBranch b{std::vector<Element>(n), std::vector<Element>(n), k};
          for (std::size_t e = 0; e < k; ++e) b.d[e] = b.r[e] = E(e);
          for (std::size_t i = 0; i < free; ++i) {
            b.d[k + i] = E(code[i] / k);
            b.r[k + i] = E(code[i] % k);
          }
          out.push_back(std::move(b));
        }
        std::size_t i = 0;
        while (i < free && ++code[i] == k * k) code[i++] = 0;
        if (i == free) break;
      }
    }
    return out;
  }
  std::vector<Element> d(n, 0), r(n, 0);
  const bool reduce = n <= 4;
  for (;;) {
    if (!reduce || orbit_minimal(d, r)) out.push_back({d, r, 0});
    std::size_t i = 0;
    for (; i < 2 * n; ++i) {
      Element& c = i < n ? d[i] : r[i - n];
      if (++c < n) break;
      c = 0;
    }
    if (i == 2 * n) break;
  }
  return out;
}

class SemigroupSearch {
 public:
  SemigroupSearch(const SearchQuery& q, Control& ctl)
      : q_(q), ctl_(ctl), n_(q.order), laws_(prune_laws(q)) {}

  std::vector<Found> run(const SgBranch& b, std::uint64_t& nodes) {
    found_.clear();
    nodes_ = 0;
    d_ = b.d;
    r_ = b.r;
    proj_ = d_;
    std::sort(proj_.begin(), proj_.end());
    proj_.erase(std::unique(proj_.begin(), proj_.end()), proj_.end());
    mul_.assign(n_ * n_, kUnknown);
    bool ok = true;
    if (b.projections) {
      // D(x)x = x and xR(x) = x.
      for (std::size_t x = 0; x < n_ && ok; ++x) {
        ok = force(d_[x], E(x), E(x)) && force(E(x), r_[x], E(x));
      }
    }
    if (ok) {
      cells_.clear();
      for (std::size_t i = 0; i < n_ * n_; ++i)
        if (mul_[i] == kUnknown) cells_.push_back(i);
      if (prune(0)) fill(0);
    }
    nodes += nodes_;
    return std::move(found_);
  }

 private:
  SemigroupView view() const {
    return SemigroupView{n_, mul_.data(), d_.data(), r_.data(), proj_};
  }

  bool force(Element x, Element y, Element v) {
    Element& c = mul_[x * n_ + y];
    if (c != kUnknown) return c == v;
    return assign(x, y, v);
  }

  // Sets (x,y) = v if no associativity instance becomes false.
  bool assign(Element x, Element y, Element v) {
    const std::size_t n = n_;
    auto m = [&](Element a, Element b) -> Element {
      return (is_sentinel(a) || is_sentinel(b)) ? kUnknown : mul_[a * n + b];
    };
    mul_[x * n + y] = v;
    auto clash = [](Element a, Element b) {
      return a != kUnknown && b != kUnknown && a != b;
    };
    for (std::size_t z = 0; z < n; ++z) {
      // (x y) z = x (y z)
      if (clash(m(v, E(z)), m(x, m(y, E(z))))) goto fail;
      // (z x) y = z (x y)
      if (clash(m(m(E(z), x), y), m(E(z), v))) goto fail;
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        // (a b) y with ab = x
        if (mul_[a * n + b] == x && clash(v, m(E(a), m(E(b), y)))) goto fail;
        // x (a b) with ab = y
        if (mul_[a * n + b] == y && clash(v, m(m(x, E(a)), E(b)))) goto fail;
      }
    return true;
  fail:
    mul_[x * n + y] = kUnknown;
    return false;
  }

  bool prune(std::size_t) {
    const SemigroupView v = view();
    for (LawId law : laws_)
      if (scan(v, law) == Tri::kFalse) return false;
    return true;
  }

  void fill(std::size_t i) {
    if (ctl_.stopped()) return;
    if (i == cells_.size()) {
      leaf();
      return;
    }
    const std::size_t cell = cells_[i];
    const Element x = E(cell / n_), y = E(cell % n_);
    const bool row_end =
        i + 1 == cells_.size() || cells_[i + 1] / n_ != cell / n_;
    for (std::size_t val = 0; val < n_; ++val) {
      if (!ctl_.tick(nodes_)) return;
      if (!assign(x, y, E(val))) continue;
      if (!row_end || prune(i)) fill(i + 1);
      mul_[cell] = kUnknown;
    }
  }

  void leaf() {
    const SemigroupView v = view();
    if (!meets(v, q_)) return;
    Canonical c = canonical_form(v);
    RawSemigroup raw;
    raw.names = default_names(n_);
    raw.mul.assign(mul_.begin(), mul_.end());
    raw.d.assign(d_.begin(), d_.end());
    raw.r.assign(r_.begin(), r_.end());
    found_.push_back({std::move(c.key), validate_semigroup(raw)});
  }

  const SearchQuery& q_;
  Control& ctl_;
  std::size_t n_;
  std::vector<LawId> laws_;
  std::vector<Element> mul_, d_, r_, proj_;
  std::vector<std::size_t> cells_;
  std::vector<Found> found_;
  std::uint64_t nodes_ = 0;
};

// ---------------------------------------------------------------------------
// Categories with biaction

struct Skeleton {
  std::size_t identities;  // 0..k-1
  std::vector<Element> d, r, comp;
};

std::vector<Skeleton> skeletons(std::size_t n, Control& ctl, std::uint64_t& nodes) {
  std::vector<Skeleton> out;
  std::set<std::vector<Element>> seen;
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t free = n - k;
    std::vector<std::size_t> code(free, 0);
    for (;;) {
      if (std::is_sorted(code.begin(), code.end())) {
        Skeleton s{k, std::vector<Element>(n), std::vector<Element>(n),
                   std::vector<Element>(n * n, kUndefined)};
        for (std::size_t e = 0; e < k; ++e) s.d[e] = s.r[e] = E(e);
        for (std::size_t i = 0; i < free; ++i) {
          s.d[k + i] = E(code[i] / k);
          s.r[k + i] = E(code[i] % k);
        }
        std::vector<std::size_t> cells;
        std::vector<std::vector<Element>> options;
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t y = 0; y < n; ++y) {
            if (s.r[x] != s.d[y]) continue;
            if (x < k) {
              s.comp[x * n + y] = E(y);
            } else if (y < k) {
              s.comp[x * n + y] = E(x);
            } else {
              std::vector<Element> opt;
              for (std::size_t z = 0; z < n; ++z)
                if (s.d[z] == s.d[x] && s.r[z] == s.r[y]) opt.push_back(E(z));
              cells.push_back(x * n + y);
              options.push_back(std::move(opt));
            }
          }
        // Odometer over the free composites; C5 checked per leaf.
        std::vector<std::size_t> pick(cells.size(), 0);
        bool any = std::all_of(options.begin(), options.end(),
                               [](const auto& o) { return !o.empty(); });
        while (any) {
          if (!ctl.tick(nodes)) return out;
          for (std::size_t i = 0; i < cells.size(); ++i)
            s.comp[cells[i]] = options[i][pick[i]];
          bool assoc = true;
          for (std::size_t x = 0; x < n && assoc; ++x)
            for (std::size_t y = 0; y < n && assoc; ++y) {
              const Element xy = s.comp[x * n + y];
              if (xy == kUndefined) continue;
              for (std::size_t z = 0; z < n; ++z) {
                const Element yz = s.comp[y * n + z];
                if (yz == kUndefined) continue;
                if (s.comp[xy * n + z] != s.comp[x * n + yz]) {
                  assoc = false;
                  break;
                }
              }
            }
          if (assoc) {
            std::vector<std::uint8_t> flags(n, 0);
            std::vector<Element> ids;
            for (std::size_t e = 0; e < k; ++e) {
              flags[e] = 1;
              ids.push_back(E(e));
            }
            const std::vector<Element> none(n * n, kUndefined);
            const CategoryView v{n, s.d.data(), s.r.data(), s.comp.data(),
                                 none.data(), none.data(), flags.data(), ids};
            if (seen.insert(canonical_form(v).key).second) out.push_back(s);
          }
          std::size_t i = 0;
          while (i < cells.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
          if (i == cells.size()) break;
        }
      }
      std::size_t i = 0;
      while (i < free && ++code[i] == k * k) code[i++] = 0;
      if (i == free) break;
    }
  }
  return out;
}

class CategorySearch {
 public:
  CategorySearch(const SearchQuery& q, Control& ctl)
      : q_(q), ctl_(ctl), n_(q.order), laws_(prune_laws(q)) {}

  std::vector<Found> run(const Skeleton& s, std::uint64_t& nodes) {
    found_.clear();
    nodes_ = 0;
    sk_ = &s;
    const std::size_t n = n_;
    flags_.assign(n, 0);
    ids_.clear();
    for (std::size_t e = 0; e < s.identities; ++e) {
      flags_[e] = 1;
      ids_.push_back(E(e));
    }
    lact_.assign(n * n, kUndefined);
    ract_.assign(n * n, kUndefined);
    for (Element e : ids_)
      for (std::size_t a = 0; a < n; ++a) {
        lact_[e * n + a] = kUnknown;
        ract_[a * n + e] = kUnknown;
      }
    // (TC2); identities share one cell between the actions (TC1).
    for (std::size_t a = 0; a < n; ++a) {
      lact_[s.d[a] * n + a] = E(a);
      ract_[a * n + s.r[a]] = E(a);
    }
    for (Element e : ids_)
      for (Element f : ids_) {
        Element& l = lact_[e * n + f];
        Element& r = ract_[e * n + f];
        if (l != kUnknown && r != kUnknown && l != r) {
          nodes += nodes_;
          return {};
        }
        if (l == kUnknown) l = r;
        if (r == kUnknown) r = l;
      }
    cells_.clear();
    for (Element e : ids_)
      for (std::size_t a = 0; a < n; ++a)
        if (lact_[e * n + a] == kUnknown) cells_.push_back({true, e * n + a});
    for (std::size_t a = 0; a < n; ++a)
      for (Element e : ids_)
        if (!flags_[a] && ract_[a * n + e] == kUnknown)
          cells_.push_back({false, a * n + e});
    if (consistent()) fill(0);
    nodes += nodes_;
    return std::move(found_);
  }

 private:
  struct Cell {
    bool left;
    std::size_t index;
  };

  CategoryView view() const {
    return CategoryView{n_,           sk_->d.data(), sk_->r.data(),
                        sk_->comp.data(), lact_.data(), ract_.data(),
                        flags_.data(), ids_};
  }

  bool consistent() const {
    const CategoryView v = view();
    if (scan(v, LawId::kTC6) == Tri::kFalse) return false;
    for (LawId law : laws_)
      if (scan(v, law) == Tri::kFalse) return false;
    return true;
  }

  void set(const Cell& c, Element v) {
    if (c.left) {
      lact_[c.index] = v;
      // e|f for identities is stored in both tables.
      const std::size_t s = c.index % n_;
      if (flags_[s]) ract_[c.index] = v;
    } else {
      ract_[c.index] = v;
    }
  }

  void fill(std::size_t i) {
    if (ctl_.stopped()) return;
    if (i == cells_.size()) {
      leaf();
      return;
    }
    const Cell c = cells_[i];
    for (std::size_t val = 0; val < n_; ++val) {
      if (!ctl_.tick(nodes_)) return;
      set(c, E(val));
      if (consistent()) fill(i + 1);
    }
    set(c, kUnknown);
  }

  void leaf() {
    const CategoryView v = view();
    if (!meets(v, q_)) return;
    Canonical c = canonical_form(v);
    auto widen = [](const std::vector<Element>& t) {
      std::vector<int> out(t.size());
      std::transform(t.begin(), t.end(), out.begin(),
                     [](Element e) { return e == kUndefined ? -1 : int{e}; });
      return out;
    };
    RawCategory raw;
    raw.names = default_names(n_);
    raw.d = widen(sk_->d);
    raw.r = widen(sk_->r);
    raw.comp = widen(sk_->comp);
    raw.lact = widen(lact_);
    raw.ract = widen(ract_);
    found_.push_back({std::move(c.key), validate_biaction_category(raw)});
  }

  const SearchQuery& q_;
  Control& ctl_;
  std::size_t n_;
  std::vector<LawId> laws_;
  const Skeleton* sk_ = nullptr;
  std::vector<std::uint8_t> flags_;
  std::vector<Element> ids_;
  std::vector<Element> lact_, ract_;
  std::vector<Cell> cells_;
  std::vector<Found> found_;
  std::uint64_t nodes_ = 0;
};

// ---------------------------------------------------------------------------
// Driver: branches in parallel, merged in branch order.

template <class Branch, class Searcher>
SearchResult drive(const SearchQuery& q, Control& ctl,
                   const std::vector<Branch>& branches, std::uint64_t base_nodes) {
  const std::size_t count = branches.size();
  std::vector<std::vector<Found>> results(count);
  std::vector<std::uint8_t> done(count, 0);
  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> nodes{base_nodes};
  std::mutex mu;
  std::size_t prefix = 0;  // branches [0, prefix) are done
  std::set<std::vector<Element>> prefix_keys;
  bool limit_hit = false;

  auto worker = [&] {
    Searcher s(q, ctl);
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || ctl.stopped()) return;
      std::uint64_t local = 0;
      auto found = s.run(branches[i], local);
      nodes += local;
      std::lock_guard<std::mutex> lock(mu);
      results[i] = std::move(found);
      done[i] = ctl.stopped() ? 0 : 1;
      while (prefix < count && done[prefix]) {
        for (const auto& f : results[prefix]) prefix_keys.insert(f.key);
        ++prefix;
      }
      if (q.limit && prefix_keys.size() >= *q.limit) {
        limit_hit = true;
        ctl.stop();
      }
    }
  };
  std::size_t threads = q.threads ? q.threads : std::thread::hardware_concurrency();
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  SearchResult res;
  res.nodes = nodes.load();
  res.limit_reached = limit_hit;
  res.completed = prefix == count && !ctl.timed_out() && !limit_hit;
  // Only the contiguous completed prefix is reported, so the output does not
  // depend on thread timing.
  std::set<std::vector<Element>> keys;
  std::vector<Structure> reps;
  for (std::size_t i = 0; i < prefix; ++i)
    for (auto& f : results[i])
      if (keys.insert(f.key).second) reps.push_back(std::move(f.model));
  if (q.limit && reps.size() > *q.limit) reps.resize(*q.limit);
  res.models = std::move(reps);
  return res;
}

template <class S>
std::vector<Structure> relabelings(const std::vector<Structure>& reps, std::size_t n) {
  std::map<std::vector<Element>, Structure> out;
  std::vector<Element> p(n);
  for (const auto& rep : reps) {
    const S& s = std::get<S>(rep);
    std::iota(p.begin(), p.end(), Element{0});
    do {
      S t = permute(s, p);
      std::vector<Element> key;
      if constexpr (std::is_same_v<S, BiunarySemigroup>) {
        key.assign(t.d_map().begin(), t.d_map().end());
        key.insert(key.end(), t.r_map().begin(), t.r_map().end());
        key.insert(key.end(), t.mul_table().begin(), t.mul_table().end());
      } else {
        for (auto span : {t.d_map(), t.r_map(), t.comp_table(), t.lact_table(),
                          t.ract_table()})
          key.insert(key.end(), span.begin(), span.end());
      }
      auto raw = t.raw();
      raw.names = default_names(n);
      if constexpr (std::is_same_v<S, BiunarySemigroup>)
        out.emplace(std::move(key), validate_semigroup(raw));
      else
        out.emplace(std::move(key), validate_biaction_category(raw));
    } while (std::next_permutation(p.begin(), p.end()));
  }
  std::vector<Structure> v;
  for (auto& [k, s] : out) v.push_back(std::move(s));
  return v;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t end = std::min(s.find(sep, start), s.size());
    if (end > start) out.emplace_back(s.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

}  // namespace

Constraint resolve_constraint(StructureKind kind, std::string_view t) {
  Constraint c;
  c.tag = std::string(t);
  if (auto law = parse_law(t)) {
    const Side want = kind == StructureKind::kSemigroup ? Side::kSemigroup
                                                        : Side::kCategory;
    if (info(*law).side != want)
      throw QueryError(std::string(t) + " is a " +
                       (want == Side::kSemigroup ? "category" : "semigroup") +
                       "-side law");
    c.laws = {*law};
    return c;
  }
  if (kind == StructureKind::kSemigroup) {
    if (auto cl = parse_class(t)) {
      const auto laws = info(*cl).laws;
      c.laws.assign(laws.begin(), laws.end());
      c.is_class = true;
      return c;
    }
  } else if (auto cl = parse_category_class(t)) {
    const auto laws = info(*cl).laws;
    c.laws.assign(laws.begin(), laws.end());
    c.is_class = true;
    return c;
  }
  throw QueryError("unknown law or class '" + std::string(t) + "'");
}

SearchQuery SearchQuery::make(StructureKind kind, std::size_t order,
                              const std::vector<std::string>& satisfy,
                              const std::vector<std::string>& violate,
                              bool up_to_iso) {
  SearchQuery q;
  q.kind = kind;
  q.order = order;
  q.up_to_iso = up_to_iso;
  for (const auto& t : satisfy) q.satisfy.push_back(resolve_constraint(kind, t));
  for (const auto& t : violate) q.violate.push_back(resolve_constraint(kind, t));
  return q;
}

void validate_query(const SearchQuery& q) {
  if (q.order < 1 || q.order > kMaxSearchOrder)
    throw QueryError("order must be in 1.." + std::to_string(kMaxSearchOrder));
  for (const auto& s : q.satisfy)
    for (const auto& v : q.violate)
      if (lower(s.tag) == lower(v.tag))
        throw QueryError(s.tag + " is both satisfied and violated");
}

SearchQuery parse_query(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::string word;
  if (!(in >> word) || word != "search")
    throw QueryError("query must start with 'search'");
  std::map<std::string, std::string> kv;
  while (in >> word) {
    const auto eq = word.find('=');
    if (eq == std::string::npos || eq == 0)
      throw QueryError("expected key=value, got '" + word + "'");
    const std::string key = lower(word.substr(0, eq));
    if (kv.count(key)) throw QueryError("duplicate key '" + key + "'");
    kv[key] = word.substr(eq + 1);
  }
  StructureKind kind = StructureKind::kSemigroup;
  if (auto it = kv.find("kind"); it != kv.end()) {
    const std::string k = lower(it->second);
    if (k == "semigroup")
      kind = StructureKind::kSemigroup;
    else if (k == "category" || k == "biaction-category")
      kind = StructureKind::kCategory;
    else
      throw QueryError("unknown kind '" + it->second + "'");
    kv.erase(it);
  }
  auto number = [&](const std::string& key, const std::string& v) -> double {
    try {
      std::size_t pos = 0;
      const double d = std::stod(v, &pos);
      if (pos != v.size() || d < 0) throw std::invalid_argument(v);
      return d;
    } catch (const std::exception&) {
      throw QueryError("invalid value for " + key + ": '" + v + "'");
    }
  };
  if (!kv.count("order")) throw QueryError("query needs order=N");
  const double order = number("order", kv["order"]);
  kv.erase("order");
  std::vector<std::string> satisfy, violate;
  if (kv.count("satisfy")) satisfy = split(kv["satisfy"], ',');
  if (kv.count("violate")) violate = split(kv["violate"], ',');
  kv.erase("satisfy");
  kv.erase("violate");
  SearchQuery q = SearchQuery::make(kind, static_cast<std::size_t>(order),
                                    satisfy, violate);
  if (order != static_cast<double>(q.order)) throw QueryError("order must be an integer");
  for (const auto& [key, v] : kv) {
    if (key == "up_to_iso") {
      const std::string b = lower(v);
      if (b != "true" && b != "false")
        throw QueryError("up_to_iso must be true or false");
      q.up_to_iso = b == "true";
    } else if (key == "budget") {
      q.budget_seconds = number(key, v);
    } else if (key == "limit") {
      q.limit = static_cast<std::size_t>(number(key, v));
    } else if (key == "threads") {
      q.threads = static_cast<std::size_t>(number(key, v));
    } else {
      throw QueryError("unknown key '" + key + "'");
    }
  }
  validate_query(q);
  return q;
}

std::string to_string(const SearchQuery& q) {
  auto join = [](const std::vector<Constraint>& cs) {
    std::string s;
    for (const auto& c : cs) s += (s.empty() ? "" : ",") + c.tag;
    return s;
  };
  std::string s = "search kind=";
  s += q.kind == StructureKind::kSemigroup ? "semigroup" : "category";
  s += " order=" + std::to_string(q.order);
  if (!q.satisfy.empty()) s += " satisfy=" + join(q.satisfy);
  if (!q.violate.empty()) s += " violate=" + join(q.violate);
  s += q.up_to_iso ? " up_to_iso=true" : " up_to_iso=false";
  if (q.budget_seconds > 0) {
    std::ostringstream b;
    b << q.budget_seconds;
    s += " budget=" + b.str();
  }
  if (q.limit) s += " limit=" + std::to_string(*q.limit);
  return s;
}

SearchResult enumerate(const SearchQuery& q) {
  validate_query(q);
  Control ctl(q.budget_seconds);
  SearchResult res;
  if (q.kind == StructureKind::kSemigroup) {
    const auto branches = semigroup_branches(q.order, precat_mode(q));
    res = drive<SgBranch, SemigroupSearch>(q, ctl, branches, 0);
  } else {
    std::uint64_t nodes = 0;
    const auto sk = skeletons(q.order, ctl, nodes);
    if (ctl.stopped()) {
      res.nodes = nodes;
      return res;
    }
    res = drive<Skeleton, CategorySearch>(q, ctl, sk, nodes);
  }
  // Soundness gate: re-check every model from scratch.
  for (auto& m : res.models) {
    if (auto* s = std::get_if<BiunarySemigroup>(&m)) {
      *s = canonical_representative(*s);
      if (!meets(s->view(), q))
        throw std::logic_error("search emitted a model violating the query");
    } else {
      auto& c = std::get<BiactionCategory>(m);
      c = canonical_representative(c);
      if (!meets(c.view(), q))
        throw std::logic_error("search emitted a model violating the query");
    }
  }
  if (!q.up_to_iso) {
    res.models = q.kind == StructureKind::kSemigroup
                     ? relabelings<BiunarySemigroup>(res.models, q.order)
                     : relabelings<BiactionCategory>(res.models, q.order);
    if (q.limit && res.models.size() > *q.limit) res.models.resize(*q.limit);
  }
  return res;
}

MinimalResult minimal_counterexample(StructureKind kind,
                                     const std::vector<std::string>& satisfy,
                                     const std::vector<std::string>& violate,
                                     std::size_t max_order, double budget_seconds) {
  MinimalResult out;
  const auto start = Clock::now();
  for (std::size_t n = 1; n <= max_order; ++n) {
    SearchQuery q = SearchQuery::make(kind, n, satisfy, violate, true);
    q.limit = 1;
    if (budget_seconds > 0) {
      const double used =
          std::chrono::duration<double>(Clock::now() - start).count();
      if (used >= budget_seconds) return out;
      q.budget_seconds = budget_seconds - used;
    }
    SearchResult r = enumerate(q);
    out.nodes += r.nodes;
    if (!r.models.empty()) {
      out.model = std::move(r.models.front());
      out.completed = true;
      return out;
    }
    if (!r.completed) return out;
    out.certified_up_to = n;
  }
  out.completed = true;
  return out;
}

ClosureResult closure_under_quotients(const std::vector<std::string>& klass,
                                      std::size_t max_order,
                                      double budget_seconds) {
  if (max_order > kMaxSearchOrder)
    throw QueryError("max_order must be at most " + std::to_string(kMaxSearchOrder));
  ClosureResult out;
  const auto start = Clock::now();
  std::vector<LawId> laws;
  for (const auto& t : klass)
    for (LawId l : resolve_constraint(StructureKind::kSemigroup, t).laws) laws.push_back(l);
  for (std::size_t n = 1; n <= max_order; ++n) {
    SearchQuery q = SearchQuery::make(StructureKind::kSemigroup, n, klass, {}, true);
    if (budget_seconds > 0) {
      const double used =
          std::chrono::duration<double>(Clock::now() - start).count();
      if (used >= budget_seconds) return out;
      q.budget_seconds = budget_seconds - used;
    }
    const SearchResult r = enumerate(q);
    for (const auto& m : r.models) {
      const auto& s = std::get<BiunarySemigroup>(m);
      for (const Congruence& c : congruences(s)) {
        if (c.block_count() == n) continue;
        BiunarySemigroup quo = quotient(s, c);
        for (LawId l : laws) {
          CheckReport rep = check_law(quo, l);
          if (!rep.holds) {
            out.witness = ClosureResult::Witness{s, c, std::move(quo), std::move(rep)};
            out.completed = true;
            return out;
          }
        }
      }
    }
    if (!r.completed) return out;
    out.certified_up_to = n;
  }
  out.completed = true;
  return out;
}

}  // namespace biunary
