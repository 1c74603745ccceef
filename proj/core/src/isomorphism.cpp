#include "biunary/isomorphism.hpp"

#include "biunary/esn.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace biunary {
namespace {

using Signature = std::array<std::uint32_t, 8>;

// Table words of one structure kind, in key order.
struct Words {
  std::size_t n = 0;
  std::vector<const Element*> unary;   // length n each
  std::vector<const Element*> binary;  // length n*n each
};

Words words(const SemigroupView& v, bool with_unary = true) {
  Words w;
  w.n = v.n;
  if (with_unary) w.unary = {v.d_map, v.r_map};
  w.binary = {v.mul_table};
  return w;
}

Words words(const CategoryView& v) {
  Words w;
  w.n = v.n;
  w.unary = {v.d_map, v.r_map};
  w.binary = {v.comp_table, v.lact_table, v.ract_table};
  return w;
}

std::vector<Signature> signatures(const SemigroupView& v, bool with_unary) {
  const std::size_t n = v.n;
  std::vector<Signature> sig(n, Signature{});
  for (std::size_t x = 0; x < n; ++x) {
    const auto e = static_cast<Element>(x);
    sig[x][0] = v.mul(e, e) == e;
    if (with_unary) {
      sig[x][1] = v.d(e) == e;
      sig[x][2] = v.r(e) == e;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (with_unary) {
      ++sig[v.d_map[x]][3];
      ++sig[v.r_map[x]][4];
    }
    for (std::size_t y = 0; y < n; ++y) {
      const Element xy = v.mul_table[x * n + y];
      ++sig[xy][5];
      if (xy == x) ++sig[x][6];
      if (xy == y) ++sig[y][7];
    }
  }
  return sig;
}

std::vector<Signature> signatures(const CategoryView& v) {
  const std::size_t n = v.n;
  std::vector<Signature> sig(n, Signature{});
  for (std::size_t x = 0; x < n; ++x) {
    sig[x][0] = v.identity_flags[x];
    ++sig[v.d_map[x]][1];
    ++sig[v.r_map[x]][2];
    for (std::size_t y = 0; y < n; ++y) {
      const Element xy = v.comp_table[x * n + y];
      if (xy != kUndefined) {
        ++sig[xy][3];
        ++sig[x][4];
      }
      const Element l = v.lact_table[x * n + y];
      if (l != kUndefined) ++sig[l][5];
      const Element r = v.ract_table[x * n + y];
      if (r != kUndefined) ++sig[r][6];
      if (l == y) ++sig[y][7];
    }
  }
  return sig;
}

class Minimizer {
 public:
  explicit Minimizer(const Words& w) : w_(w), n_(w.n) {
    p_.resize(n_);
    q_.resize(n_);
  }

  // Tries the relabeling given by q (position i holds old element q[i]).
  void offer(const std::vector<Element>& q) {
    for (std::size_t i = 0; i < n_; ++i) p_[q[i]] = static_cast<Element>(i);
    q_ = q;
    if (best_.key.empty()) {
      best_.key = build();
      best_.perm = p_;
      return;
    }
    // Streamed comparison with early exit.
    std::size_t k = 0;
    bool smaller = false;
    auto step = [&](Element raw) -> bool {
      const Element c = is_sentinel(raw) ? raw : p_[raw];
      if (!smaller) {
        if (c > best_.key[k]) return false;
        if (c < best_.key[k]) smaller = true;
      }
      ++k;
      return true;
    };
    for (const Element* u : w_.unary)
      for (std::size_t i = 0; i < n_; ++i)
        if (!step(u[q_[i]])) return;
    for (const Element* t : w_.binary)
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
          if (!step(t[q_[i] * n_ + q_[j]])) return;
    if (smaller) {
      best_.key = build();
      best_.perm = p_;
    }
  }

  Canonical result() && { return std::move(best_); }

 private:
  std::vector<Element> build() const {
    std::vector<Element> key;
    key.reserve(w_.unary.size() * n_ + w_.binary.size() * n_ * n_);
    auto img = [&](Element raw) { return is_sentinel(raw) ? raw : p_[raw]; };
    for (const Element* u : w_.unary)
      for (std::size_t i = 0; i < n_; ++i) key.push_back(img(u[q_[i]]));
    for (const Element* t : w_.binary)
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
          key.push_back(img(t[q_[i] * n_ + q_[j]]));
    return key;
  }

  const Words& w_;
  std::size_t n_;
  std::vector<Element> p_;
  std::vector<Element> q_;
  Canonical best_;
};

// Minimises over permutations that keep elements sorted by signature.
Canonical minimise(const Words& w, const std::vector<Signature>* sig) {
  const std::size_t n = w.n;
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), Element{0});
  // Class boundaries.
  std::vector<std::size_t> starts{0};
  if (sig) {
    std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) {
      return (*sig)[a] < (*sig)[b];
    });
    for (std::size_t i = 1; i < n; ++i)
      if ((*sig)[order[i]] != (*sig)[order[i - 1]]) starts.push_back(i);
  }
  starts.push_back(n);
  for (std::size_t c = 0; c + 1 < starts.size(); ++c)
    std::sort(order.begin() + starts[c], order.begin() + starts[c + 1]);

  Minimizer m(w);
  // Odometer over per-class permutations.
  for (;;) {
    m.offer(order);
    std::size_t c = starts.size() - 1;
    bool advanced = false;
    while (c-- > 0) {
      if (std::next_permutation(order.begin() + starts[c],
                                order.begin() + starts[c + 1])) {
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return std::move(m).result();
}

constexpr std::size_t kExhaustiveLimit = 5;

// Generic backtracking isomorphism search. `consistent(x)` checks all
// constraints among already-assigned elements involving x.
template <class Check>
std::optional<ElementMap> backtrack(std::size_t n,
                                    const std::vector<Signature>& sa,
                                    const std::vector<Signature>& sb,
                                    Check&& consistent) {
  {
    auto a = sa, b = sb;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  std::vector<Element> f(n, kUnknown);
  std::vector<std::uint8_t> used(n, 0);
  std::size_t x = 0;
  std::vector<std::size_t> next(n, 0);
  while (true) {
    if (x == n) return ElementMap{n, n, f};
    bool placed = false;
    for (std::size_t y = next[x]; y < n; ++y) {
      if (used[y] || sa[x] != sb[y]) continue;
      f[x] = static_cast<Element>(y);
      if (consistent(f, x)) {
        used[y] = 1;
        next[x] = y + 1;
        placed = true;
        break;
      }
      f[x] = kUnknown;
    }
    if (placed) {
      ++x;
      if (x < n) next[x] = 0;
      continue;
    }
    f[x] = kUnknown;
    if (x == 0) return std::nullopt;
    --x;
    used[f[x]] = 0;
    f[x] = kUnknown;
  }
}

}  // namespace

std::optional<ElementMap> find_isomorphism(const BiunarySemigroup& a,
                                           const BiunarySemigroup& b,
                                           IsoOptions opt) {
  const std::size_t n = a.order();
  if (b.order() != n) return std::nullopt;
  const bool unary = !opt.ignore_unary;
  const auto sa = signatures(a.view(), unary);
  const auto sb = signatures(b.view(), unary);
  auto ok = [&](const std::vector<Element>& f, std::size_t x) {
    auto img = [&](Element e) { return f[e]; };
    const auto ex = static_cast<Element>(x);
    if (unary) {
      if (f[a.d(ex)] != kUnknown && img(a.d(ex)) != b.d(f[x])) return false;
      if (f[a.r(ex)] != kUnknown && img(a.r(ex)) != b.r(f[x])) return false;
      // Elements whose D or R is x.
      for (std::size_t y = 0; y < x; ++y) {
        const auto ey = static_cast<Element>(y);
        if (a.d(ey) == ex && b.d(f[y]) != f[x]) return false;
        if (a.r(ey) == ex && b.r(f[y]) != f[x]) return false;
      }
    }
    for (std::size_t y = 0; y <= x; ++y) {
      const auto ey = static_cast<Element>(y);
      for (auto [s, t] : {std::pair{ex, ey}, std::pair{ey, ex}}) {
        const Element st = a.mul(s, t);
        if (f[st] != kUnknown && f[st] != b.mul(f[s], f[t])) return false;
      }
      // Products landing on x.
      for (std::size_t z = 0; z < x; ++z) {
        const auto ez = static_cast<Element>(z);
        if (a.mul(ey, ez) == ex && b.mul(f[y], f[z]) != f[x]) return false;
      }
    }
    if (x + 1 < n) return true;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        const auto ep = static_cast<Element>(p), eq = static_cast<Element>(q);
        if (f[a.mul(ep, eq)] != b.mul(f[p], f[q])) return false;
      }
    return true;
  };
  return backtrack(n, sa, sb, ok);
}

std::optional<ElementMap> find_isomorphism(const BiactionCategory& a,
                                           const BiactionCategory& b) {
  const std::size_t n = a.order();
  if (b.order() != n) return std::nullopt;
  const auto sa = signatures(a.view());
  const auto sb = signatures(b.view());
  auto ok = [&](const std::vector<Element>& f, std::size_t x) {
    const auto ex = static_cast<Element>(x);
    auto same = [&](Element pa, Element pb) {
      if (pa == kUndefined) return pb == kUndefined;
      if (pb == kUndefined) return false;
      return f[pa] == kUnknown || f[pa] == pb;
    };
    if (!same(a.d(ex), b.d(f[x])) || !same(a.r(ex), b.r(f[x]))) return false;
    for (std::size_t y = 0; y <= x; ++y) {
      const auto ey = static_cast<Element>(y);
      if (a.d(ey) == ex && b.d(f[y]) != f[x]) return false;
      if (a.r(ey) == ex && b.r(f[y]) != f[x]) return false;
      for (auto [s, t] : {std::pair{ex, ey}, std::pair{ey, ex}}) {
        if (!same(a.comp(s, t), b.comp(f[s], f[t]))) return false;
        if (a.is_identity(s) && !same(a.left(s, t), b.left(f[s], f[t])))
          return false;
        if (a.is_identity(t) && !same(a.right(s, t), b.right(f[s], f[t])))
          return false;
      }
    }
    return x + 1 < n || is_biaction_functor(ElementMap{n, n, f}, a, b);
  };
  return backtrack(n, sa, sb, ok);
}

Canonical canonical_form(const SemigroupView& v) {
  if (v.n <= kExhaustiveLimit) return canonical_form_exhaustive(v);
  const auto sig = signatures(v, true);
  return minimise(words(v), &sig);
}

Canonical canonical_form(const CategoryView& v) {
  if (v.n <= kExhaustiveLimit) return canonical_form_exhaustive(v);
  const auto sig = signatures(v);
  return minimise(words(v), &sig);
}

Canonical canonical_form(const BiunarySemigroup& s) {
  return canonical_form(s.view());
}
Canonical canonical_form(const BiactionCategory& c) {
  return canonical_form(c.view());
}

Canonical canonical_form_exhaustive(const SemigroupView& v) {
  return minimise(words(v), nullptr);
}
Canonical canonical_form_exhaustive(const CategoryView& v) {
  return minimise(words(v), nullptr);
}

BiunarySemigroup canonical_representative(const BiunarySemigroup& s) {
  const Canonical c = canonical_form(s);
  RawSemigroup raw = permute(s, c.perm).raw();
  raw.names = default_names(s.order());
  return validate_semigroup(raw);
}

BiactionCategory canonical_representative(const BiactionCategory& cat) {
  const Canonical c = canonical_form(cat);
  RawCategory raw = permute(cat, c.perm).raw();
  raw.names = default_names(cat.order());
  return validate_biaction_category(raw);
}

}  // namespace biunary
