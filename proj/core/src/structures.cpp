#include "biunary/structures.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace biunary {
namespace {

void check_labels(const std::vector<std::string>& names) {
  if (names.empty()) throw ShapeError("order must be positive");
  if (names.size() > kMaxOrder) throw ShapeError("order exceeds limit");
  std::set<std::string> seen;
  for (const auto& s : names) {
    if (s.empty() || s == "-")
      throw ShapeError("invalid element label '" + s + "'");
    for (char c : s) {
      if (c == ':' || c == '#' || std::isspace(static_cast<unsigned char>(c)))
        throw ShapeError("invalid element label '" + s + "'");
    }
    if (!seen.insert(s).second)
      throw ShapeError("duplicate element label '" + s + "'");
  }
}

std::vector<Element> to_elements(const std::vector<int>& v, std::size_t size,
                                 std::size_t n, const char* what) {
  if (v.size() != size)
    throw ShapeError(std::string(what) + " has " + std::to_string(v.size()) +
                     " entries, expected " + std::to_string(size));
  std::vector<Element> out(size);
  for (std::size_t i = 0; i < size; ++i) {
    if (v[i] < 0 || static_cast<std::size_t>(v[i]) >= n)
      throw ShapeError(std::string(what) + " entry " + std::to_string(i) +
                       " out of range");
    out[i] = static_cast<Element>(v[i]);
  }
  return out;
}

}  // namespace

std::vector<std::string> default_names(std::size_t order) {
  std::vector<std::string> v(order);
  for (std::size_t i = 0; i < order; ++i) v[i] = std::to_string(i);
  return v;
}

bool BiunarySemigroup::is_projection(Element x) const noexcept {
  return std::binary_search(proj_.begin(), proj_.end(), x);
}

SemigroupView BiunarySemigroup::view() const noexcept {
  return SemigroupView{n_, mul_.data(), d_.data(), r_.data(), proj_};
}

RawSemigroup BiunarySemigroup::raw() const {
  RawSemigroup raw;
  raw.names = names_;
  raw.mul.assign(mul_.begin(), mul_.end());
  raw.d.assign(d_.begin(), d_.end());
  raw.r.assign(r_.begin(), r_.end());
  return raw;
}

BiunarySemigroup validate_semigroup(const RawSemigroup& raw) {
  check_labels(raw.names);
  const std::size_t n = raw.order();
  BiunarySemigroup s;
  s.n_ = n;
  s.names_ = raw.names;
  s.mul_ = to_elements(raw.mul, n * n, n, "mul");
  s.d_ = to_elements(raw.d, n, n, "D");
  s.r_ = to_elements(raw.r, n, n, "R");

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Element xy = s.mul_[x * n + y];
      for (std::size_t z = 0; z < n; ++z) {
        if (s.mul_[xy * n + z] != s.mul_[x * n + s.mul_[y * n + z]])
          throw AssocError({static_cast<Element>(x), static_cast<Element>(y),
                            static_cast<Element>(z)});
      }
    }

  s.proj_ = s.d_;
  std::sort(s.proj_.begin(), s.proj_.end());
  s.proj_.erase(std::unique(s.proj_.begin(), s.proj_.end()), s.proj_.end());
  return s;
}

CategoryView BiactionCategory::view() const noexcept {
  return CategoryView{n_,           d_.data(),           r_.data(),
                      comp_.data(), lact_.data(),        ract_.data(),
                      ident_flags_.data(), idents_};
}

RawCategory BiactionCategory::raw() const {
  auto widen = [](const std::vector<Element>& v) {
    std::vector<int> out(v.size());
    std::transform(v.begin(), v.end(), out.begin(),
                   [](Element e) { return e == kUndefined ? -1 : int{e}; });
    return out;
  };
  RawCategory raw;
  raw.names = names_;
  raw.d = widen(d_);
  raw.r = widen(r_);
  raw.comp = widen(comp_);
  raw.lact = widen(lact_);
  raw.ract = widen(ract_);
  return raw;
}

BiactionCategory validate_biaction_category(const RawCategory& raw) {
  check_labels(raw.names);
  const std::size_t n = raw.order();
  BiactionCategory c;
  c.n_ = n;
  c.names_ = raw.names;
  c.d_ = to_elements(raw.d, n, n, "D");
  c.r_ = to_elements(raw.r, n, n, "R");

  auto cell = [&](const std::vector<int>& v, const char* what) {
    if (v.size() != n * n)
      throw ShapeError(std::string(what) + " must have order*order entries");
    std::vector<Element> out(n * n);
    for (std::size_t i = 0; i < n * n; ++i) {
      if (v[i] == -1) {
        out[i] = kUndefined;
      } else if (v[i] < 0 || static_cast<std::size_t>(v[i]) >= n) {
        throw ShapeError(std::string(what) + " entry out of range");
      } else {
        out[i] = static_cast<Element>(v[i]);
      }
    }
    return out;
  };
  c.comp_ = cell(raw.comp, "comp");
  c.lact_ = cell(raw.lact, "lact");
  c.ract_ = cell(raw.ract, "ract");

  const auto& d = c.d_;
  const auto& r = c.r_;
  auto E = [](std::size_t x) { return static_cast<Element>(x); };
  // Composite as the table provides it, only where R(x)=D(y).
  auto comp = [&](std::size_t x, std::size_t y) -> Element {
    if (r[x] != d[y]) return kUndefined;
    return c.comp_[x * n + y];
  };

  for (std::size_t x = 0; x < n; ++x) {
    if (comp(d[x], x) != x || comp(x, r[x]) != x)
      throw CategoryAxiomError("C1", {E(x)});
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (r[d[x]] != d[x] || d[r[x]] != r[x])
      throw CategoryAxiomError("C2", {E(x)});
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const bool composable = r[x] == d[y];
      const bool present = c.comp_[x * n + y] != kUndefined;
      if (composable != present) throw CategoryAxiomError("C3", {E(x), E(y)});
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Element xy = comp(x, y);
      if (xy == kUndefined) continue;
      if (d[xy] != d[x] || r[xy] != r[y])
        throw CategoryAxiomError("C4", {E(x), E(y)});
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Element xy = comp(x, y);
      if (xy == kUndefined) continue;
      for (std::size_t z = 0; z < n; ++z) {
        const Element yz = comp(y, z);
        if (yz == kUndefined) continue;
        if (comp(xy, z) != comp(x, yz))
          throw CategoryAxiomError("C5", {E(x), E(y), E(z)});
      }
    }

  c.ident_flags_.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) c.ident_flags_[d[x]] = 1;
  for (std::size_t x = 0; x < n; ++x)
    if (c.ident_flags_[x]) c.idents_.push_back(E(x));

  // Actions: total on identity rows/columns, absent elsewhere.
  for (std::size_t e = 0; e < n; ++e)
    for (std::size_t s = 0; s < n; ++s) {
      const bool want = c.ident_flags_[e] != 0;
      if (want != (c.lact_[e * n + s] != kUndefined))
        throw ShapeError(want ? "lact must be total on identities"
                              : "lact row for a non-identity");
      if (want != (c.ract_[s * n + e] != kUndefined))
        throw ShapeError(want ? "ract must be total on identities"
                              : "ract column for a non-identity");
    }

  const CategoryView v = c.view();
  for (Element e : c.idents_)
    for (Element f : c.idents_)
      if (v.left(e, f) != v.right(e, f))
        throw BiactionAxiomError("TC1", {e, f});
  for (std::size_t a = 0; a < n; ++a) {
    if (v.left(d[a], E(a)) != a || v.right(E(a), r[a]) != a)
      throw BiactionAxiomError("TC2", {E(a)});
  }
  for (Element e : c.idents_)
    for (std::size_t a = 0; a < n; ++a)
      for (Element f : c.idents_)
        if (v.right(v.left(e, E(a)), f) != v.left(e, v.right(E(a), f)))
          throw BiactionAxiomError("TC6", {e, E(a), f});
  return c;
}

ElementMap ElementMap::identity(std::size_t n) {
  ElementMap m{n, n, std::vector<Element>(n)};
  for (std::size_t i = 0; i < n; ++i) m.image[i] = static_cast<Element>(i);
  return m;
}

BiunarySemigroup permute(const BiunarySemigroup& s,
                         std::span<const Element> perm) {
  const std::size_t n = s.order();
  if (perm.size() != n) throw ShapeError("permutation size mismatch");
  RawSemigroup raw;
  raw.names.resize(n);
  raw.mul.resize(n * n);
  raw.d.resize(n);
  raw.r.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    raw.names[perm[x]] = s.name(static_cast<Element>(x));
    raw.d[perm[x]] = perm[s.d(static_cast<Element>(x))];
    raw.r[perm[x]] = perm[s.r(static_cast<Element>(x))];
    for (std::size_t y = 0; y < n; ++y)
      raw.mul[perm[x] * n + perm[y]] =
          perm[s.mul(static_cast<Element>(x), static_cast<Element>(y))];
  }
  return validate_semigroup(raw);
}

BiactionCategory permute(const BiactionCategory& c,
                         std::span<const Element> perm) {
  const std::size_t n = c.order();
  if (perm.size() != n) throw ShapeError("permutation size mismatch");
  auto img = [&](Element x) { return x == kUndefined ? -1 : int{perm[x]}; };
  RawCategory raw;
  raw.names.resize(n);
  raw.d.resize(n);
  raw.r.resize(n);
  raw.comp.assign(n * n, -1);
  raw.lact.assign(n * n, -1);
  raw.ract.assign(n * n, -1);
  for (std::size_t x = 0; x < n; ++x) {
    const auto ex = static_cast<Element>(x);
    raw.names[perm[x]] = c.name(ex);
    raw.d[perm[x]] = perm[c.d(ex)];
    raw.r[perm[x]] = perm[c.r(ex)];
    for (std::size_t y = 0; y < n; ++y) {
      const auto ey = static_cast<Element>(y);
      raw.comp[perm[x] * n + perm[y]] = img(c.comp(ex, ey));
      if (c.is_identity(ex))
        raw.lact[perm[x] * n + perm[y]] = img(c.left(ex, ey));
      if (c.is_identity(ey))
        raw.ract[perm[x] * n + perm[y]] = img(c.right(ex, ey));
    }
  }
  return validate_biaction_category(raw);
}

}  // namespace biunary
