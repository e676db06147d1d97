#pragma once

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rees/polynomial.hpp"

namespace rees {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// A named `ideal` or `seq` statement.
struct NamedList {
  std::string kind;
  std::string name;
  std::vector<Polynomial> polys;
};

struct Document {
  RingDescriptor ring;
  std::vector<NamedList> lists;

  /// The list called `name`, or the first list when `name` is empty.
  const NamedList& find(const std::string& name = {}) const {
    if (lists.empty()) throw std::invalid_argument("input declares no ideal or seq");
    if (name.empty()) return lists.front();
    for (const auto& l : lists)
      if (l.name == name) return l;
    throw std::invalid_argument("no ideal or seq named '" + name + "'");
  }
};

namespace detail {

/// `*` matches any run of characters, `?` any single one; `a|b` alternates.
inline bool glob_match(const std::string& pattern, const std::string& text) {
  std::size_t bar = pattern.find('|');
  if (bar != std::string::npos)
    return glob_match(pattern.substr(0, bar), text) || glob_match(pattern.substr(bar + 1), text);
  std::size_t p = 0, t = 0, star = std::string::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  Document document(std::optional<Field> field_override) {
    Document doc;
    bool have_ring = false;
    skip_space();
    while (!at_end()) {
      std::string kw = peek_identifier();
      if (kw == "ring") {
        if (have_ring) fail("a second ring statement");
        doc.ring = ring_statement(field_override);
        have_ring = true;
      } else if (kw == "ideal" || kw == "seq") {
        if (!have_ring) fail("'" + kw + "' before any ring statement");
        doc.lists.push_back(list_statement(doc.ring.ring));
      } else {
        fail(kw.empty() ? "expected a statement" : "unknown statement '" + kw + "'");
      }
      skip_space();
    }
    if (!have_ring) fail("no ring statement");
    return doc;
  }

  RingDescriptor ring_only(std::optional<Field> field_override) {
    skip_space();
    RingDescriptor r = ring_statement(field_override);
    skip_space();
    if (!at_end()) fail("trailing input after ring statement");
    return r;
  }

  Polynomial polynomial_only(const RingPtr& ring) {
    skip_space();
    Polynomial p = expression(ring);
    skip_space();
    if (!at_end()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  RingDescriptor ring_statement(std::optional<Field> field_override) {
    int line = line_, col = col_;
    expect_identifier("ring");
    Field field = field_spec();
    if (field_override) field = *field_override;
    expect('[');
    std::vector<std::string> vars;
    int vline = line_, vcol = col_;
    do {
      variable_item(vars);
    } while (accept(','));
    expect(']');
    for (std::size_t i = 0; i < vars.size(); ++i)
      for (std::size_t j = i + 1; j < vars.size(); ++j)
        if (vars[i] == vars[j]) throw ParseError(vline, vcol, "duplicate variable '" + vars[i] + "'");

    std::vector<Bidegree> bideg(vars.size(), Bidegree{1, 0});
    if (peek_identifier() == "xdeg") {
      expect_identifier("xdeg");
      std::string xg = glob();
      expect_identifier("ydeg");
      std::string yg = glob();
      for (std::size_t i = 0; i < vars.size(); ++i) {
        bool inx = glob_match(xg, vars[i]), iny = glob_match(yg, vars[i]);
        if (inx && iny) fail("variable '" + vars[i] + "' matches both xdeg and ydeg");
        if (iny) bideg[i] = {0, 1};
      }
    }
    RingDescriptor desc;
    try {
      desc.ring = make_ring(vars, field, bideg);
    } catch (const std::exception& e) {
      throw ParseError(line, col, e.what());
    }
    if (peek_identifier() == "mod") {
      expect_identifier("mod");
      do {
        Polynomial q = expression(desc.ring);
        if (!q.is_zero()) desc.quotient.push_back(std::move(q));
      } while (accept(','));
    }
    expect(';');
    return desc;
  }

  NamedList list_statement(const RingPtr& ring) {
    NamedList l;
    l.kind = identifier();
    l.name = identifier();
    if (l.name.empty()) fail("expected a name");
    expect('=');
    do {
      l.polys.push_back(expression(ring));
    } while (accept(','));
    expect(';');
    return l;
  }

  Field field_spec() {
    int line = line_, col = col_;
    std::string f = identifier();
    if (f == "QQ") return Field::rationals();
    if (f == "GF") {
      expect('(');
      long p = integer();
      expect(')');
      if (p < 2 || p >= (1L << 31) || !Field::is_prime(static_cast<std::uint32_t>(p)))
        throw ParseError(line, col, "non-prime modulus " + std::to_string(p));
      return Field::prime(static_cast<std::uint32_t>(p));
    }
    throw ParseError(line, col, "expected field QQ or GF(p), got '" + f + "'");
  }

  // x1..x5 expands to x1, x2, ..., x5
  void variable_item(std::vector<std::string>& vars) {
    int line = line_, col = col_;
    std::string a = identifier();
    if (a.empty()) fail("expected a variable name");
    if (s_.compare(pos_, 2, "..") == 0) {
      advance(2);
      std::string b = identifier();
      auto split = [&](const std::string& v) {
        std::size_t k = v.size();
        while (k > 0 && std::isdigit(static_cast<unsigned char>(v[k - 1]))) --k;
        if (k == v.size() || k == 0) throw ParseError(line, col, "range endpoint '" + v + "' has no numeric suffix");
        return std::pair{v.substr(0, k), std::stol(v.substr(k))};
      };
      auto [pa, na] = split(a);
      auto [pb, nb] = split(b);
      if (pa != pb || na > nb) throw ParseError(line, col, "malformed range " + a + ".." + b);
      for (long k = na; k <= nb; ++k) vars.push_back(pa + std::to_string(k));
    } else {
      vars.push_back(a);
    }
  }

  std::string glob() {
    skip_space();
    std::string g;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' || s_[pos_] == '*' ||
                         s_[pos_] == '?' || s_[pos_] == '|'))
      g += s_[pos_], advance(1);
    if (g.empty()) fail("expected a variable pattern");
    return g;
  }

  Polynomial expression(const RingPtr& ring) {
    skip_space();
    Polynomial acc(ring);
    bool first = true;
    for (;;) {
      skip_space();
      bool negative = false;
      if (accept('-'))
        negative = true;
      else if (!accept('+') && !first)
        break;
      Polynomial t = product(ring);
      acc = negative ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }

  Polynomial product(const RingPtr& ring) {
    Polynomial acc = power(ring);
    while (accept('*')) acc *= power(ring);
    return acc;
  }

  Polynomial power(const RingPtr& ring) {
    Polynomial base = primary(ring);
    if (accept('^')) {
      skip_space();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("malformed exponent");
      long e = integer();
      if (e > 65535) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial primary(const RingPtr& ring) {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      advance(1);
      Polynomial p = expression(ring);
      expect(')');
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      int line = line_, col = col_;
      mpz_class num(digits());
      mpz_class den = 1;
      skip_space();
      if (!at_end() && s_[pos_] == '/') {
        advance(1);
        skip_space();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected a denominator");
        den = mpz_class(digits());
        if (den == 0) throw ParseError(line, col, "zero denominator");
      }
      try {
        return Polynomial::constant(ring, FieldElem::from_rational(mpq_class(num, den), ring->field()));
      } catch (const std::domain_error& e) {
        throw ParseError(line, col, e.what());
      }
    }
    int line = line_, col = col_;
    std::string id = identifier();
    if (id.empty()) fail("unexpected '" + std::string(1, c) + "'");
    auto idx = ring->index_of(id);
    if (!idx) throw ParseError(line, col, "unknown identifier '" + id + "'");
    return Polynomial::variable(ring, *idx);
  }

  // lexical helpers

  bool at_end() const { return pos_ >= s_.size(); }

  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n && pos_ < s_.size(); ++i, ++pos_) {
      if (s_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
    }
  }

  void skip_space() {
    while (!at_end()) {
      if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        advance(1);
      } else if (s_[pos_] == '#') {
        while (!at_end() && s_[pos_] != '\n') advance(1);
      } else {
        break;
      }
    }
  }

  std::string peek_identifier() {
    skip_space();
    std::size_t p = pos_;
    std::string id;
    if (p < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[p])) || s_[p] == '_'))
      while (p < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[p])) || s_[p] == '_')) id += s_[p++];
    return id;
  }

  std::string identifier() {
    std::string id = peek_identifier();
    advance(id.size());
    return id;
  }

  void expect_identifier(const std::string& kw) {
    if (identifier() != kw) fail("expected '" + kw + "'");
  }

  std::string digits() {
    std::string d;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) d += s_[pos_], advance(1);
    return d;
  }

  long integer() {
    skip_space();
    std::string d = digits();
    if (d.empty()) fail("expected an integer");
    if (d.size() > 12) fail("integer too large");
    return std::stol(d);
  }

  bool accept(char c) {
    skip_space();
    if (!at_end() && s_[pos_] == c) {
      advance(1);
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, col_, msg); }

  const std::string& s_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace detail

inline Document parse_document(const std::string& text, std::optional<Field> field_override = std::nullopt) {
  return detail::Parser(text).document(field_override);
}

inline RingDescriptor parse_ring(const std::string& text, std::optional<Field> field_override = std::nullopt) {
  return detail::Parser(text).ring_only(field_override);
}

inline Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
  return detail::Parser(text).polynomial_only(ring);
}

inline Polynomial parse_polynomial(const std::string& text, const RingDescriptor& ring) {
  return parse_polynomial(text, ring.ring);
}

inline std::vector<Polynomial> parse_polynomials(const std::vector<std::string>& texts, const RingPtr& ring) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(t, ring));
  return out;
}

/// Prints a ring statement that parses back to `desc`.
inline std::string ring_statement(const RingDescriptor& desc) {
  const Ring& r = *desc.ring;
  std::string s = "ring " + r.field().to_string() + "[";
  for (std::size_t i = 0; i < r.nvars(); ++i) s += (i ? ", " : "") + r.variable(i);
  s += "]";
  std::string xs, ys;
  for (std::size_t i = 0; i < r.nvars(); ++i) {
    Bidegree d = r.bidegree(i);
    if (d == Bidegree{0, 1})
      ys += (ys.empty() ? "" : "|") + r.variable(i);
    else if (d == Bidegree{1, 0})
      xs += (xs.empty() ? "" : "|") + r.variable(i);
    else
      throw std::invalid_argument("bidegree " + d.to_string() + " has no textual form");
  }
  if (!ys.empty()) s += " xdeg " + (xs.empty() ? std::string("_none_") : xs) + " ydeg " + ys;
  if (desc.has_quotient()) s += " mod " + to_string(desc.quotient);
  return s + ";";
}

inline std::string list_statement(const std::string& kind, const std::string& name,
                                  const std::vector<Polynomial>& polys) {
  return kind + " " + name + " = " + to_string(polys) + ";";
}

}  // namespace rees
