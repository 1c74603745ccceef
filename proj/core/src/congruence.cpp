#include "biunary/congruence.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace biunary {
namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Closes uf under compatibility with mul, D and R.
Congruence close(const BiunarySemigroup& s, UnionFind& uf) {
  const std::size_t n = s.order();
  auto E = [](std::size_t x) { return static_cast<Element>(x); };
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t y = uf.find(x);
      if (x == y) continue;
      changed |= uf.unite(s.d(E(x)), s.d(E(y)));
      changed |= uf.unite(s.r(E(x)), s.r(E(y)));
      for (std::size_t z = 0; z < n; ++z) {
        changed |= uf.unite(s.mul(E(x), E(z)), s.mul(E(y), E(z)));
        changed |= uf.unite(s.mul(E(z), E(x)), s.mul(E(z), E(y)));
      }
    }
  }
  std::vector<Element> labels(n);
  for (std::size_t x = 0; x < n; ++x) labels[x] = E(uf.find(x));
  return normalize(std::move(labels));
}

// Least element of each element's block.
std::vector<Element> least_members(const Congruence& c) {
  std::vector<Element> first(c.block.size(), kUnknown);
  std::vector<Element> out(c.block.size());
  for (std::size_t x = 0; x < c.block.size(); ++x) {
    Element& f = first[c.block[x]];
    if (f == kUnknown) f = static_cast<Element>(x);
    out[x] = f;
  }
  return out;
}

}  // namespace

std::size_t Congruence::block_count() const {
  return block.empty() ? 0
                       : *std::max_element(block.begin(), block.end()) + 1u;
}

std::vector<std::vector<Element>> Congruence::blocks() const {
  std::vector<std::vector<Element>> out(block_count());
  for (std::size_t x = 0; x < block.size(); ++x)
    out[block[x]].push_back(static_cast<Element>(x));
  return out;
}

Congruence normalize(std::vector<Element> labels) {
  const std::size_t top =
      labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end());
  std::vector<Element> seen(top + 1, kUnknown);
  Element next = 0;
  Congruence c;
  c.block.resize(labels.size());
  for (std::size_t x = 0; x < labels.size(); ++x) {
    Element& slot = seen[labels[x]];
    if (slot == kUnknown) slot = next++;
    c.block[x] = slot;
  }
  return c;
}

bool is_congruence(const BiunarySemigroup& s, const Congruence& c) {
  const std::size_t n = s.order();
  if (c.block.size() != n) return false;
  const auto& b = c.block;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      if (b[x] != b[y]) continue;
      const auto ex = static_cast<Element>(x), ey = static_cast<Element>(y);
      if (b[s.d(ex)] != b[s.d(ey)] || b[s.r(ex)] != b[s.r(ey)]) return false;
      for (std::size_t z = 0; z < n; ++z) {
        const auto ez = static_cast<Element>(z);
        if (b[s.mul(ex, ez)] != b[s.mul(ey, ez)] ||
            b[s.mul(ez, ex)] != b[s.mul(ez, ey)])
          return false;
      }
    }
  return true;
}

Congruence generated_congruence(
    const BiunarySemigroup& s,
    const std::vector<std::pair<Element, Element>>& pairs) {
  UnionFind uf(s.order());
  for (auto [a, b] : pairs) uf.unite(a, b);
  return close(s, uf);
}

std::vector<Congruence> congruences(const BiunarySemigroup& s) {
  const std::size_t n = s.order();
  if (n > kMaxCongruenceOrder)
    throw OrderTooLarge("congruence search is limited to order " +
                        std::to_string(kMaxCongruenceOrder));
  std::vector<Congruence> principal;
  {
    std::set<Congruence> uniq;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        uniq.insert(generated_congruence(
            s, {{static_cast<Element>(a), static_cast<Element>(b)}}));
    principal.assign(uniq.begin(), uniq.end());
  }
  std::vector<std::vector<Element>> principal_least;
  for (const auto& p : principal) principal_least.push_back(least_members(p));
  std::set<Congruence> found;
  std::deque<Congruence> queue;
  auto add = [&](Congruence c) {
    if (found.insert(c).second) queue.push_back(std::move(c));
  };
  add(generated_congruence(s, {}));
  while (!queue.empty()) {
    const Congruence c = std::move(queue.front());
    queue.pop_front();
    const auto rc = least_members(c);
    for (std::size_t i = 0; i < principal.size(); ++i) {
      UnionFind uf(n);
      for (std::size_t x = 0; x < n; ++x) {
        uf.unite(x, rc[x]);
        uf.unite(x, principal_least[i][x]);
      }
      add(close(s, uf));
    }
  }
  return {found.begin(), found.end()};
}

BiunarySemigroup quotient(const BiunarySemigroup& s, const Congruence& c) {
  if (!is_congruence(s, c))
    throw ShapeError("partition is not a D,R-respecting congruence");
  const auto blocks = c.blocks();
  const std::size_t k = blocks.size();
  RawSemigroup raw;
  raw.mul.resize(k * k);
  raw.d.resize(k);
  raw.r.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::string label = "{";
    for (std::size_t j = 0; j < blocks[i].size(); ++j) {
      if (j) label += ",";
      label += s.name(blocks[i][j]);
    }
    raw.names.push_back(label + "}");
    const Element x = blocks[i].front();
    raw.d[i] = c.block[s.d(x)];
    raw.r[i] = c.block[s.r(x)];
    for (std::size_t j = 0; j < k; ++j)
      raw.mul[i * k + j] = c.block[s.mul(x, blocks[j].front())];
  }
  return validate_semigroup(raw);
}

ElementMap quotient_map(const Congruence& c) {
  return ElementMap{c.block.size(), c.block_count(), c.block};
}

std::string to_string(const BiunarySemigroup& s, const Congruence& c) {
  std::string out = "{";
  const auto blocks = c.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += ",";
    out += "{";
    for (std::size_t j = 0; j < blocks[i].size(); ++j) {
      if (j) out += ",";
      out += s.name(blocks[i][j]);
    }
    out += "}";
  }
  return out + "}";
}

}  // namespace biunary
