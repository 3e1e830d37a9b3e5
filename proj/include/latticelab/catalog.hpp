#ifndef LATTICELAB_CATALOG_HPP
#define LATTICELAB_CATALOG_HPP

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "constructors.hpp"
#include "errors.hpp"
#include "group.hpp"
#include "lattice.hpp"
#include "permutation.hpp"

namespace latticelab {

/// One "gen -> word" clause of a semidirect action; gen indexes N's generators (a = 0).
struct ActionClause
{
  std::size_t generator = 0;
  Word image;

  friend bool operator==(ActionClause const &, ActionClause const &) = default;
};

/// Syntax tree of a group expression.
struct GroupExpr
{
  enum class Kind { Cyclic, Dihedral, Dicyclic, Symmetric, Alternating, SL2, M16, Gid, Product, Semidirect };

  Kind kind = Kind::Cyclic;
  std::size_t n = 0;  // size parameter, prime for SL2, order for Gid
  std::size_t id = 0; // Gid only
  std::vector<GroupExpr> children;
  std::vector<ActionClause> action;

  friend bool operator==(GroupExpr const &, GroupExpr const &) = default;
};

namespace detail {

class ExprParser
{
public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  GroupExpr parse()
  {
    GroupExpr e = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw SyntaxError(pos_, {"'x'", "end of input"});
    return e;
  }

private:
  void skip_ws()
  {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                   text_[pos_] == '\n' || text_[pos_] == '\r'))
      ++pos_;
  }

  bool accept(std::string_view tok)
  {
    skip_ws();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view tok)
  {
    if (!accept(tok))
      throw SyntaxError(pos_, {"'" + std::string(tok) + "'"});
  }

  std::size_t integer()
  {
    skip_ws();
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc{} || ptr == text_.data() + pos_)
      throw SyntaxError(pos_, {"integer"});
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  GroupExpr expr()
  {
    GroupExpr first = term();
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != 'x')
      return first;
    GroupExpr prod;
    prod.kind = GroupExpr::Kind::Product;
    prod.children.push_back(std::move(first));
    while (accept("x"))
      prod.children.push_back(term());
    return prod;
  }

  GroupExpr sized(GroupExpr::Kind kind)
  {
    GroupExpr e;
    e.kind = kind;
    e.n = integer();
    return e;
  }

  GroupExpr term()
  {
    skip_ws();
    if (accept("("))  {
      GroupExpr inner = expr();
      expect(")");
      return inner;
    }
    if (accept("sd("))
      return semidirect();
    if (accept("gid(")) {
      GroupExpr e;
      e.kind = GroupExpr::Kind::Gid;
      e.n = integer();
      expect(",");
      e.id = integer();
      expect(")");
      return e;
    }
    if (accept("SL(2,")) {
      GroupExpr e = sized(GroupExpr::Kind::SL2);
      expect(")");
      return e;
    }
    if (accept("M16")) {
      GroupExpr e;
      e.kind = GroupExpr::Kind::M16;
      e.n = 16;
      return e;
    }
    if (accept("Dic"))
      return sized(GroupExpr::Kind::Dicyclic);
    if (accept("C"))
      return sized(GroupExpr::Kind::Cyclic);
    if (accept("D"))
      return sized(GroupExpr::Kind::Dihedral);
    if (accept("S"))
      return sized(GroupExpr::Kind::Symmetric);
    if (accept("A"))
      return sized(GroupExpr::Kind::Alternating);
    throw SyntaxError(pos_, {"C<n>", "D<n>", "Dic<n>", "S<n>", "A<n>", "SL(2,<p>)", "M16",
                             "gid(", "sd(", "("});
  }

  GroupExpr semidirect()
  {
    GroupExpr e;
    e.kind = GroupExpr::Kind::Semidirect;
    e.children.push_back(expr());
    expect(",");
    e.children.push_back(expr());
    expect(",");
    do
      e.action.push_back(clause());
    while (accept(";"));
    expect(")");
    return e;
  }

  std::optional<std::size_t> genname()
  {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] >= 'a' && text_[pos_] <= 'w') {
      return static_cast<std::size_t>(text_[pos_++] - 'a');
    }
    return std::nullopt;
  }

  ActionClause clause()
  {
    ActionClause c;
    auto g = genname();
    if (!g)
      throw SyntaxError(pos_, {"generator name"});
    c.generator = *g;
    expect("->");
    if (accept("1"))
      return c;
    while (true) {
      auto f = genname();
      if (!f)
        throw SyntaxError(pos_, {"generator name", "'1'"});
      WordFactor factor{*f, 1};
      if (accept("^")) {
        bool negative = accept("-");
        factor.exponent = static_cast<long>(integer());
        if (negative)
          factor.exponent = -factor.exponent;
      }
      c.image.push_back(factor);
      accept("*");
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] < 'a' || text_[pos_] > 'w')
        break;
    }
    return c;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace detail

/// Parses a group expression such as "C4 x C2" or "sd(C7, C3, a->a^2)".
inline GroupExpr parse_expr(std::string_view text)
{
  return detail::ExprParser(text).parse();
}

inline std::string to_string(Word const &word)
{
  if (word.empty())
    return "1";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i)
      out += '*';
    out += static_cast<char>('a' + word[i].generator);
    if (word[i].exponent != 1)
      out += '^' + std::to_string(word[i].exponent);
  }
  return out;
}

inline std::string to_string(GroupExpr const &e)
{
  using K = GroupExpr::Kind;
  switch (e.kind) {
  case K::Cyclic:
    return "C" + std::to_string(e.n);
  case K::Dihedral:
    return "D" + std::to_string(e.n);
  case K::Dicyclic:
    return "Dic" + std::to_string(e.n);
  case K::Symmetric:
    return "S" + std::to_string(e.n);
  case K::Alternating:
    return "A" + std::to_string(e.n);
  case K::SL2:
    return "SL(2," + std::to_string(e.n) + ")";
  case K::M16:
    return "M16";
  case K::Gid:
    return "gid(" + std::to_string(e.n) + "," + std::to_string(e.id) + ")";
  case K::Product: {
    std::string out;
    for (std::size_t i = 0; i < e.children.size(); ++i) {
      if (i)
        out += " x ";
      bool wrap = e.children[i].kind == K::Product;
      out += wrap ? "(" + to_string(e.children[i]) + ")" : to_string(e.children[i]);
    }
    return out;
  }
  case K::Semidirect: {
    std::string out = "sd(" + to_string(e.children[0]) + ", " + to_string(e.children[1]) + ", ";
    for (std::size_t i = 0; i < e.action.size(); ++i) {
      if (i)
        out += "; ";
      out += static_cast<char>('a' + e.action[i].generator);
      out += "->" + to_string(e.action[i].image);
    }
    return out + ")";
  }
  }
  return {};
}

/// One line of a catalog file.
struct CatalogEntry
{
  std::size_t order = 0;
  std::size_t id = 0; // external small-group id; 0 when there is none
  std::size_t degree = 0;
  std::vector<std::string> generators;
  std::optional<std::size_t> expected_sub;
  std::string name;
  std::size_t line = 0;

  std::string label() const
  {
    if (!name.empty())
      return name;
    if (id != 0)
      return "gid" + std::to_string(order) + "_" + std::to_string(id);
    return "entry" + std::to_string(line);
  }
};

/// Closes an entry's generators and checks the element count.
inline FiniteGroup build_group(CatalogEntry const &entry, std::size_t cap = kDefaultCap)
{
  std::vector<Permutation> gens;
  try {
    for (auto const &text : entry.generators)
      gens.push_back(parse_cycles(text, entry.degree));
  } catch (InvalidPermutation const &e) {
    throw CatalogError(CatalogError::Kind::Parse, entry.line, e.what());
  }
  if (entry.order > cap)
    throw ClosureExceedsCap(cap);
  FiniteGroup G;
  try {
    G = close_generators(gens, std::max(cap, entry.order), entry.label());
  } catch (ClosureExceedsCap const &) {
    throw CatalogError(CatalogError::Kind::OrderMismatch, entry.line,
                       "generators close to more than " + std::to_string(entry.order) +
                           " elements");
  }
  if (G.order() != entry.order)
    throw CatalogError(CatalogError::Kind::OrderMismatch, entry.line,
                       "declared " + std::to_string(entry.order) + ", generators close to " +
                           std::to_string(G.order()));
  return G;
}

inline void check_expected_sub(CatalogEntry const &entry, std::size_t sub)
{
  if (entry.expected_sub && *entry.expected_sub != sub)
    throw CatalogError(CatalogError::Kind::SubMismatch, entry.line,
                       "declared " + std::to_string(*entry.expected_sub) + ", enumerated " +
                           std::to_string(sub));
}

inline std::string format_entry(CatalogEntry const &e)
{
  std::string out = "order " + std::to_string(e.order) + " id " + std::to_string(e.id) +
                    " deg " + std::to_string(e.degree);
  if (e.expected_sub)
    out += " sub " + std::to_string(*e.expected_sub);
  out += " :";
  for (std::size_t i = 0; i < e.generators.size(); ++i)
    out += (i ? " ; " : " ") + e.generators[i];
  if (!e.name.empty())
    out += "   # " + e.name;
  return out;
}

struct LoadOptions
{
  bool check_order = true;
  bool check_sub = true;
  std::size_t cap = kDefaultCap;
};

namespace detail {

inline std::string_view trim(std::string_view s)
{
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

inline CatalogEntry parse_entry(std::string_view body, std::string_view comment, std::size_t line)
{
  auto fail = [line](std::string const &what) -> CatalogEntry {
    throw CatalogError(CatalogError::Kind::Parse, line, what);
  };

  auto colon = body.find(':');
  if (colon == std::string_view::npos)
    return fail("missing ':' before generators");

  std::vector<std::string> tokens;
  {
    std::istringstream header{std::string(body.substr(0, colon))};
    for (std::string t; header >> t;)
      tokens.push_back(t);
  }
  if (tokens.size() != 6 && tokens.size() != 8)
    return fail("expected 'order <n> id <k> deg <d> [sub <s>]'");

  CatalogEntry e;
  e.line = line;
  e.name = std::string(trim(comment));

  auto field = [&](std::size_t at, char const *key, std::size_t &out) {
    if (tokens[at] != key)
      fail(std::string("expected '") + key + "', got '" + tokens[at] + "'");
    std::string const &value = tokens[at + 1];
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size())
      fail(std::string("bad value for '") + key + "': " + value);
  };
  field(0, "order", e.order);
  field(2, "id", e.id);
  field(4, "deg", e.degree);
  if (tokens.size() == 8) {
    std::size_t sub = 0;
    field(6, "sub", sub);
    e.expected_sub = sub;
  }
  if (e.order == 0 || e.degree == 0)
    fail("order and degree must be positive");

  std::string_view gens = body.substr(colon + 1);
  while (true) {
    auto semi = gens.find(';');
    auto piece = trim(gens.substr(0, semi));
    if (piece.empty())
      fail("empty generator");
    e.generators.emplace_back(piece);
    if (semi == std::string_view::npos)
      break;
    gens.remove_prefix(semi + 1);
  }
  return e;
}

} // namespace detail

/// Parses catalog text without building any group.
inline std::vector<CatalogEntry> parse_catalog_entries(std::string_view text)
{
  std::vector<CatalogEntry> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);

    auto hash = line.find('#');
    std::string_view body = detail::trim(line.substr(0, hash));
    std::string_view comment = hash == std::string_view::npos ? "" : line.substr(hash + 1);
    if (body.empty())
      continue;
    out.push_back(detail::parse_entry(body, comment, line_no));
  }
  return out;
}

/// Parses and validates catalog text.
inline std::vector<CatalogEntry> parse_catalog(std::string_view text, LoadOptions const &opt = {})
{
  auto entries = parse_catalog_entries(text);
  if (opt.check_order || opt.check_sub) {
    for (auto const &e : entries) {
      FiniteGroup G = build_group(e, std::max(opt.cap, e.order));
      if (opt.check_sub && e.expected_sub)
        check_expected_sub(e, sub_count(G, std::max(opt.cap, e.order)));
    }
  }
  return entries;
}

inline std::vector<CatalogEntry> load_catalog(std::string const &path, LoadOptions const &opt = {})
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot open catalog " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_catalog(buf.str(), opt);
}

inline CatalogEntry const *find_gid(std::vector<CatalogEntry> const &catalog, std::size_t order,
                                    std::size_t id)
{
  if (id == 0)
    return nullptr;
  for (auto const &e : catalog) {
    if (e.order == order && e.id == id)
      return &e;
  }
  return nullptr;
}

inline FiniteGroup resolve(GroupExpr const &e, std::vector<CatalogEntry> const &catalog,
                           std::size_t cap = kDefaultCap)
{
  using K = GroupExpr::Kind;
  switch (e.kind) {
  case K::Cyclic:
    return cyclic(e.n, cap);
  case K::Dihedral:
    return dihedral(e.n, cap);
  case K::Dicyclic:
    return dicyclic(e.n, cap);
  case K::Symmetric:
    return symmetric(e.n, cap);
  case K::Alternating:
    return alternating(e.n, cap);
  case K::SL2:
    return sl2(e.n, cap);
  case K::M16: {
    ActionSpec act;
    act.images.push_back({Word{WordFactor{0, 5}}});
    auto G = semidirect_product(cyclic(8), cyclic(2), act, cap);
    G.set_label("M16");
    return G;
  }
  case K::Gid: {
    auto const *entry = find_gid(catalog, e.n, e.id);
    if (!entry)
      throw UnknownGid(e.n, e.id);
    auto G = build_group(*entry, cap);
    G.set_label(to_string(e));
    return G;
  }
  case K::Product: {
    FiniteGroup G = resolve(e.children.front(), catalog, cap);
    for (std::size_t i = 1; i < e.children.size(); ++i)
      G = direct_product(G, resolve(e.children[i], catalog, cap), cap);
    G.set_label(to_string(e));
    return G;
  }
  case K::Semidirect: {
    FiniteGroup N = resolve(e.children[0], catalog, cap);
    FiniteGroup H = resolve(e.children[1], catalog, cap);
    // The clauses describe the automorphism for H's first generator.
    std::vector<Word> row;
    for (std::size_t j = 0; j < N.generators().size(); ++j)
      row.push_back(Word{WordFactor{j, 1}});
    for (auto const &c : e.action) {
      if (c.generator >= row.size())
        throw InvalidArgument(std::string("action names generator '") +
                              static_cast<char>('a' + c.generator) + "' but " + N.label() +
                              " has " + std::to_string(row.size()));
      row[c.generator] = c.image;
    }
    auto G = semidirect_product(N, H, ActionSpec{{row}}, cap);
    G.set_label(to_string(e));
    return G;
  }
  }
  throw InvalidArgument("unknown expression kind");
}

inline FiniteGroup resolve(std::string_view text, std::vector<CatalogEntry> const &catalog,
                           std::size_t cap = kDefaultCap)
{
  return resolve(parse_expr(text), catalog, cap);
}

} // namespace latticelab

#endif // LATTICELAB_CATALOG_HPP
