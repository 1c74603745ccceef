#include "biunary/text_format.hpp"

#include <charconv>
#include <map>
#include <set>

namespace biunary {
namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' ||
                                raw[i] == '\r'))
        ++i;
      const std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' &&
             raw[i] != '\r')
        ++i;
      if (i > start) line.tokens.push_back({raw.substr(start, i - start),
                                            start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lines_(tokenize(text)) {}

  [[noreturn]] void fail(const Token& t, const std::string& what) const {
    throw SyntaxError(current_line(), t.column, what);
  }
  [[noreturn]] void fail_here(const std::string& what) const {
    throw SyntaxError(current_line(), 1, what);
  }

  const Line& next(const char* expecting) {
    if (at_ >= lines_.size()) {
      const std::size_t last = lines_.empty() ? 1 : lines_.back().number + 1;
      throw SyntaxError(last, 1,
                        std::string("unexpected end of input, expected ") +
                            expecting);
    }
    return lines_[at_++];
  }
  bool done() const { return at_ >= lines_.size(); }
  const Line* peek() const { return done() ? nullptr : &lines_[at_]; }

  // Returns the header keyword and order.
  std::pair<std::string_view, std::size_t> header() {
    const Line& l = next("header");
    const auto& t = l.tokens;
    if (t[0].text != "semigroup" && t[0].text != "category")
      fail(t[0], "expected 'semigroup' or 'category'");
    if (t.size() != 2) fail(t[0], "header must be '<kind> order=N'");
    const std::string_view o = t[1].text;
    if (o.substr(0, 6) != "order=") fail(t[1], "expected order=N");
    std::size_t n = 0;
    const auto* first = o.data() + 6;
    const auto* last = o.data() + o.size();
    auto [p, ec] = std::from_chars(first, last, n);
    if (ec != std::errc() || p != last || n == 0 || n > kMaxOrder)
      fail(t[1], "invalid order");
    return {t[0].text, n};
  }

  std::vector<std::string> elements(std::size_t n) {
    const Line& l = next("'elements'");
    const auto& t = l.tokens;
    if (t[0].text != "elements") fail(t[0], "expected 'elements'");
    if (t.size() - 1 != n)
      fail(t[0], "expected " + std::to_string(n) + " element labels, got " +
                     std::to_string(t.size() - 1));
    std::vector<std::string> names;
    for (std::size_t i = 1; i < t.size(); ++i) {
      const std::string s(t[i].text);
      if (s == "-" || s.find(':') != std::string::npos)
        fail(t[i], "invalid element label '" + s + "'");
      if (index_.count(s)) fail(t[i], "duplicate element label '" + s + "'");
      index_.emplace(s, static_cast<int>(i - 1));
      names.push_back(s);
    }
    return names;
  }

  void keyword(const char* kw) {
    const Line& l = next(kw);
    if (l.tokens[0].text != kw || l.tokens.size() != 1)
      fail(l.tokens[0], std::string("expected '") + kw + "'");
  }

  int label(const Token& t) const {
    auto it = index_.find(std::string(t.text));
    if (it == index_.end()) fail(t, "unknown element '" + std::string(t.text) + "'");
    return it->second;
  }

  // Reads `rows` table rows of n cells. Row labels must come from `allowed`
  // (all elements when empty). Returns row label -> cells.
  std::map<int, std::vector<int>> table(std::size_t rows, std::size_t n,
                                        bool allow_dash,
                                        const std::set<int>& allowed) {
    std::map<int, std::vector<int>> out;
    for (std::size_t k = 0; k < rows; ++k) {
      const Line& l = next("table row");
      const auto& t = l.tokens;
      const std::string_view head = t[0].text;
      if (head.size() < 2 || head.back() != ':')
        fail(t[0], "expected '<label>:' at start of table row");
      const Token row_tok{head.substr(0, head.size() - 1), t[0].column};
      const int row = label(row_tok);
      if (!allowed.empty() && !allowed.count(row))
        fail(t[0], "row label '" + std::string(row_tok.text) +
                       "' is not an identity");
      if (out.count(row))
        fail(t[0], "duplicate row '" + std::string(row_tok.text) + "'");
      if (t.size() - 1 != n)
        fail(t[0], "row must have " + std::to_string(n) + " entries");
      std::vector<int> cells(n);
      for (std::size_t i = 0; i < n; ++i) {
        const Token& c = t[i + 1];
        if (c.text == "-") {
          if (!allow_dash) fail(c, "'-' not allowed here");
          cells[i] = -1;
        } else {
          cells[i] = label(c);
        }
      }
      out.emplace(row, std::move(cells));
    }
    return out;
  }

  std::vector<int> unary(const char* name, std::size_t n) {
    const Line& l = next(name);
    const auto& t = l.tokens;
    if (t[0].text != name) fail(t[0], std::string("expected '") + name + "'");
    if (t.size() - 1 != n)
      fail(t[0], std::string(name) + " must list " + std::to_string(n) +
                     " pairs");
    std::vector<int> out(n, -1);
    for (std::size_t i = 1; i < t.size(); ++i) {
      const std::string_view p = t[i].text;
      const auto colon = p.find(':');
      if (colon == std::string_view::npos)
        fail(t[i], "expected '<label>:<label>'");
      const int x = label({p.substr(0, colon), t[i].column});
      const int y = label({p.substr(colon + 1), t[i].column + colon + 1});
      if (out[x] != -1)
        fail(t[i], std::string(name) + " lists '" +
                       std::string(p.substr(0, colon)) + "' twice");
      out[x] = y;
    }
    return out;
  }

  void end() {
    if (!done()) {
      const Line& l = lines_[at_];
      throw SyntaxError(l.number, l.tokens[0].column, "trailing content");
    }
  }

 private:
  std::size_t current_line() const {
    if (at_ == 0) return lines_.empty() ? 1 : lines_[0].number;
    return lines_[at_ - 1].number;
  }

  std::vector<Line> lines_;
  std::size_t at_ = 0;
  std::map<std::string, int> index_;
};

RawSemigroup parse_semigroup_body(Parser& p, std::size_t n) {
  RawSemigroup raw;
  raw.names = p.elements(n);
  p.keyword("mul");
  const auto rows = p.table(n, n, false, {});
  raw.mul.resize(n * n);
  for (const auto& [x, cells] : rows)
    std::copy(cells.begin(), cells.end(), raw.mul.begin() + x * n);
  raw.d = p.unary("D", n);
  raw.r = p.unary("R", n);
  p.end();
  return raw;
}

RawCategory parse_category_body(Parser& p, std::size_t n) {
  RawCategory raw;
  raw.names = p.elements(n);
  p.keyword("comp");
  const auto rows = p.table(n, n, true, {});
  raw.comp.resize(n * n);
  for (const auto& [x, cells] : rows)
    std::copy(cells.begin(), cells.end(), raw.comp.begin() + x * n);
  raw.d = p.unary("D", n);
  raw.r = p.unary("R", n);
  const std::set<int> ids(raw.d.begin(), raw.d.end());
  p.keyword("lact");
  const auto lrows = p.table(ids.size(), n, false, ids);
  p.keyword("ract");
  const auto rrows = p.table(ids.size(), n, false, ids);
  p.end();
  raw.lact.assign(n * n, -1);
  raw.ract.assign(n * n, -1);
  for (const auto& [e, cells] : lrows)
    for (std::size_t s = 0; s < n; ++s) raw.lact[e * n + s] = cells[s];
  for (const auto& [e, cells] : rrows)
    for (std::size_t s = 0; s < n; ++s) raw.ract[s * n + e] = cells[s];
  return raw;
}

void unary_line(std::string& out, const char* name,
                std::span<const std::string> names,
                std::span<const Element> map) {
  out += name;
  for (std::size_t x = 0; x < names.size(); ++x) {
    out += ' ';
    out += names[x];
    out += ':';
    out += names[map[x]];
  }
  out += '\n';
}

void elements_line(std::string& out, std::span<const std::string> names) {
  out += "elements";
  for (const auto& s : names) {
    out += ' ';
    out += s;
  }
  out += '\n';
}

}  // namespace

Structure parse(std::string_view text) {
  Parser p(text);
  const auto [kind, n] = p.header();
  if (kind == "semigroup") return validate_semigroup(parse_semigroup_body(p, n));
  return validate_biaction_category(parse_category_body(p, n));
}

BiunarySemigroup parse_semigroup(std::string_view text) {
  Structure s = parse(text);
  if (auto* sg = std::get_if<BiunarySemigroup>(&s)) return std::move(*sg);
  throw WrongStructureKind("expected a semigroup, got a category");
}

BiactionCategory parse_category(std::string_view text) {
  Structure s = parse(text);
  if (auto* c = std::get_if<BiactionCategory>(&s)) return std::move(*c);
  throw WrongStructureKind("expected a category, got a semigroup");
}

std::string serialize(const BiunarySemigroup& s) {
  const std::size_t n = s.order();
  const auto names = s.names();
  std::string out = "semigroup order=" + std::to_string(n) + "\n";
  elements_line(out, names);
  out += "mul\n";
  for (std::size_t x = 0; x < n; ++x) {
    out += names[x] + ":";
    for (std::size_t y = 0; y < n; ++y) {
      out += ' ';
      out += names[s.mul(static_cast<Element>(x), static_cast<Element>(y))];
    }
    out += '\n';
  }
  unary_line(out, "D", names, s.d_map());
  unary_line(out, "R", names, s.r_map());
  return out;
}

std::string serialize(const RawSemigroup& s) {
  const std::size_t n = s.order();
  auto name = [&](int i) -> std::string {
    return i >= 0 && static_cast<std::size_t>(i) < n ? s.names[i] : "-";
  };
  std::string out = "semigroup order=" + std::to_string(n) + "\n";
  elements_line(out, s.names);
  out += "mul\n";
  for (std::size_t x = 0; x < n; ++x) {
    out += s.names[x] + ":";
    for (std::size_t y = 0; y < n; ++y) out += ' ' + name(s.mul[x * n + y]);
    out += '\n';
  }
  for (const char* which : {"D", "R"}) {
    const auto& map = which[0] == 'D' ? s.d : s.r;
    out += which;
    for (std::size_t x = 0; x < n; ++x) out += ' ' + s.names[x] + ':' + name(map[x]);
    out += '\n';
  }
  return out;
}

std::string serialize(const BiactionCategory& c) {
  const std::size_t n = c.order();
  const auto names = c.names();
  auto cell = [&](Element v) -> const std::string& {
    static const std::string dash = "-";
    return v == kUndefined ? dash : names[v];
  };
  std::string out = "category order=" + std::to_string(n) + "\n";
  elements_line(out, names);
  out += "comp\n";
  for (std::size_t x = 0; x < n; ++x) {
    out += names[x] + ":";
    for (std::size_t y = 0; y < n; ++y) {
      out += ' ';
      out += cell(c.comp(static_cast<Element>(x), static_cast<Element>(y)));
    }
    out += '\n';
  }
  unary_line(out, "D", names, c.d_map());
  unary_line(out, "R", names, c.r_map());
  out += "lact\n";
  for (Element e : c.identities()) {
    out += names[e] + ":";
    for (std::size_t s = 0; s < n; ++s) {
      out += ' ';
      out += cell(c.left(e, static_cast<Element>(s)));
    }
    out += '\n';
  }
  out += "ract\n";
  for (Element e : c.identities()) {
    out += names[e] + ":";
    for (std::size_t s = 0; s < n; ++s) {
      out += ' ';
      out += cell(c.right(static_cast<Element>(s), e));
    }
    out += '\n';
  }
  return out;
}

std::string serialize(const Structure& s) {
  return std::visit([](const auto& x) { return serialize(x); }, s);
}

}  // namespace biunary
