#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "findim/based_algebra.hpp"
#include "findim/errors.hpp"
#include "findim/linalg/rational.hpp"
#include "findim/quiver.hpp"

namespace findim::io {

/// One summand of a module expression.
struct SummandExpr {
  enum class Kind { simple, projective, ideal, quotient, named };

  Kind kind = Kind::simple;
  int vertex = 0;                                // simple, projective, quotient
  Path path;                                     // ideal
  std::vector<std::pair<Rational, Path>> element; // quotient: Λe_vertex / Λ(element)
  std::string name;                              // named

  friend bool operator==(const SummandExpr&, const SummandExpr&) = default;
};

struct ModuleExpr {
  std::vector<SummandExpr> summands;

  friend bool operator==(const ModuleExpr&, const ModuleExpr&) = default;
};

struct ModuleDecl {
  std::string name;
  ModuleExpr expr;

  friend bool operator==(const ModuleDecl&, const ModuleDecl&) = default;
};

/// Parsed `.qalg` file.
struct AlgebraDocument {
  std::string name;
  MonomialPresentation presentation;
  std::vector<ModuleDecl> modules;

  const ModuleDecl* find_module(const std::string& n) const {
    for (const auto& m : modules)
      if (m.name == n) return &m;
    return nullptr;
  }

  friend bool operator==(const AlgebraDocument&, const AlgebraDocument&) = default;
};

namespace detail {

struct Token {
  enum class Kind { word, symbol, end };
  Kind kind = Kind::end;
  std::string text;
  int column = 0;
};

inline bool word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

inline std::vector<Token> tokenize(const std::string& line, int line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (word_char(c)) {
      std::size_t j = i;
      while (j < line.size() && word_char(line[j])) ++j;
      out.push_back({Token::Kind::word, line.substr(i, j - i), static_cast<int>(i) + 1});
      i = j;
      continue;
    }
    if (std::string("*();+-/=,").find(c) != std::string::npos) {
      out.push_back({Token::Kind::symbol, std::string(1, c), static_cast<int>(i) + 1});
      ++i;
      continue;
    }
    throw SyntaxError(line_no, static_cast<int>(i) + 1, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Token::Kind::end, "", static_cast<int>(line.size()) + 1});
  return out;
}

inline bool is_number(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

inline bool is_identifier(const std::string& s) {
  return !s.empty() && (std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_');
}

inline const std::vector<std::string>& keywords() {
  static const std::vector<std::string> k{"algebra", "vertices", "arrow", "relations", "module"};
  return k;
}

inline bool is_keyword(const std::string& s) {
  for (const auto& k : keywords())
    if (k == s) return true;
  return false;
}

/// Recursive-descent reader over the tokens of one line.
class LineParser {
public:
  LineParser(std::vector<Token> tokens, int line, const Quiver& quiver,
             const std::vector<ModuleDecl>* modules)
      : tokens_(std::move(tokens)), line_(line), quiver_(quiver), modules_(modules) {}

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  bool at_end() const { return peek().kind == Token::Kind::end; }
  bool accept(const std::string& sym) {
    if (peek().kind == Token::Kind::symbol && peek().text == sym) {
      next();
      return true;
    }
    return false;
  }
  void expect(const std::string& sym) {
    if (!accept(sym)) fail(peek(), "expected '" + sym + "'");
  }
  std::string expect_word(const std::string& what) {
    if (peek().kind != Token::Kind::word) fail(peek(), "expected " + what);
    return next().text;
  }
  void expect_end() {
    if (!at_end()) fail(peek(), "unexpected '" + peek().text + "'");
  }
  [[noreturn]] void fail(const Token& t, const std::string& why) const { throw SyntaxError(line_, t.column, why); }
  int line() const { return line_; }

  int vertex() {
    const Token t = peek();
    const std::string id = expect_word("a vertex");
    auto v = quiver_.find_vertex(id);
    if (!v) throw ResolutionError(line_, t.column, "unknown vertex '" + id + "'");
    return *v;
  }

  /// `e(v)` or `a*b*...`; returns the path and the column where it started.
  Path path() {
    const Token start = peek();
    if (start.kind == Token::Kind::word && start.text == "e" && peek(1).kind == Token::Kind::symbol &&
        peek(1).text == "(") {
      next();
      next();
      const int v = vertex();
      expect(")");
      return Path::trivial(v);
    }
    std::vector<int> arrows;
    do {
      const Token t = peek();
      const std::string name = expect_word("an arrow name");
      auto a = quiver_.find_arrow(name);
      if (!a) throw ResolutionError(line_, t.column, "unknown arrow '" + name + "'");
      arrows.push_back(*a);
    } while (accept("*"));
    auto p = make_path(quiver_, arrows);
    if (!p) throw TypeError(line_, start.column, "arrows do not compose");
    return *p;
  }

  Rational rational() {
    const std::string num = next().text;
    Rational q(num);
    if (accept("/")) {
      const Token t = peek();
      const std::string den = expect_word("a denominator");
      if (!is_number(den) || den.find_first_not_of('0') == std::string::npos)
        fail(t, "invalid denominator");
      q /= Rational(den);
    }
    q.canonicalize();
    return q;
  }

  std::vector<std::pair<Rational, Path>> element(int source) {
    std::vector<std::pair<Rational, Path>> terms;
    const Token start = peek();
    bool negative = accept("-");
    while (true) {
      Rational c = 1;
      if (peek().kind == Token::Kind::word && is_number(peek().text)) {
        c = rational();
        accept("*");
      }
      if (negative) c = -c;
      const Token at = peek();
      Path p = path();
      if (p.source != source)
        throw TypeError(line_, at.column, "path does not start at the quotient vertex");
      if (!terms.empty() && (p.source != terms.front().second.source || p.target != terms.front().second.target))
        throw TypeError(line_, at.column, "linear combination of non-parallel paths");
      terms.emplace_back(c, std::move(p));
      if (accept("+"))
        negative = false;
      else if (accept("-"))
        negative = true;
      else
        break;
    }
    if (terms.empty()) fail(start, "empty element");
    return terms;
  }

  SummandExpr summand() {
    const Token t = peek();
    const std::string head = expect_word("a module summand");
    SummandExpr s;
    const bool call = peek().kind == Token::Kind::symbol && peek().text == "(";
    if (call && (head == "S" || head == "P")) {
      next();
      s.kind = head == "S" ? SummandExpr::Kind::simple : SummandExpr::Kind::projective;
      s.vertex = vertex();
      expect(")");
    } else if (call && head == "I") {
      next();
      s.kind = SummandExpr::Kind::ideal;
      s.path = path();
      expect(")");
    } else if (call && head == "Q") {
      next();
      s.kind = SummandExpr::Kind::quotient;
      s.vertex = vertex();
      expect(";");
      s.element = element(s.vertex);
      expect(")");
    } else if (!call && is_identifier(head)) {
      if (!modules_ || !find(head)) throw ResolutionError(line_, t.column, "unknown module '" + head + "'");
      s.kind = SummandExpr::Kind::named;
      s.name = head;
    } else {
      fail(t, "expected S(..), P(..), I(..), Q(..) or a module name");
    }
    return s;
  }

  ModuleExpr module_expr() {
    ModuleExpr m;
    m.summands.push_back(summand());
    while (accept("+")) m.summands.push_back(summand());
    return m;
  }

private:
  const ModuleDecl* find(const std::string& n) const {
    for (const auto& m : *modules_)
      if (m.name == n) return &m;
    return nullptr;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int line_;
  const Quiver& quiver_;
  const std::vector<ModuleDecl>* modules_;
};

inline std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      if (!cur.empty() && cur.back() == '\r') cur.pop_back();
      lines.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) lines.push_back(std::move(cur));
  return lines;
}

} // namespace detail

/// Parses the line-oriented algebra format:
///
///     algebra NAME              (optional)
///     vertices 1 2 3            (may repeat)
///     arrow NAME SOURCE TARGET
///     relations                 (followed by one path a*b*... per line)
///     module NAME = EXPR        (S(v), P(v), I(path), Q(v; element), NAME, joined by '+')
///
/// `#` starts a comment.
inline AlgebraDocument parse_algebra(const std::string& text) {
  using detail::Token;
  AlgebraDocument doc;
  bool in_relations = false;
  bool saw_content = false;
  std::vector<int> relation_lines;
  const auto lines = detail::split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const int line_no = static_cast<int>(ln) + 1;
    auto tokens = detail::tokenize(lines[ln], line_no);
    if (tokens.front().kind == Token::Kind::end) continue;
    saw_content = true;
    detail::LineParser p(tokens, line_no, doc.presentation.quiver, &doc.modules);
    const Token head = p.peek();
    const bool keyword = head.kind == Token::Kind::word && detail::is_keyword(head.text);
    if (in_relations && !keyword) {
      const Path r = p.path();
      p.expect_end();
      if (r.length() < 2) throw TypeError(line_no, head.column, "relations must have length at least 2");
      for (std::size_t k = 0; k < doc.presentation.relations.size(); ++k) {
        const Path& other = doc.presentation.relations[k];
        if (contains_factor(r.arrows, other.arrows) || contains_factor(other.arrows, r.arrows))
          throw TypeError(line_no, head.column,
                          "relation overlaps the relation on line " + std::to_string(relation_lines[k]));
      }
      doc.presentation.relations.push_back(r);
      relation_lines.push_back(line_no);
      continue;
    }
    if (!keyword) p.fail(head, "expected a declaration");
    in_relations = false;
    p.next();
    if (head.text == "algebra") {
      doc.name = p.expect_word("an algebra name");
      p.expect_end();
    } else if (head.text == "vertices") {
      if (p.at_end()) p.fail(p.peek(), "expected a vertex");
      while (!p.at_end()) {
        const Token t = p.peek();
        const std::string id = p.expect_word("a vertex");
        if (doc.presentation.quiver.find_vertex(id)) p.fail(t, "duplicate vertex '" + id + "'");
        doc.presentation.quiver.add_vertex(id);
      }
    } else if (head.text == "arrow") {
      const Token t = p.peek();
      const std::string name = p.expect_word("an arrow name");
      if (!detail::is_identifier(name) || detail::is_keyword(name) || name == "e")
        p.fail(t, "invalid arrow name '" + name + "'");
      if (doc.presentation.quiver.find_arrow(name)) p.fail(t, "duplicate arrow '" + name + "'");
      const int s = p.vertex();
      const int d = p.vertex();
      p.expect_end();
      doc.presentation.quiver.add_arrow(name, s, d);
    } else if (head.text == "relations") {
      p.expect_end();
      in_relations = true;
    } else if (head.text == "module") {
      const Token t = p.peek();
      const std::string name = p.expect_word("a module name");
      if (!detail::is_identifier(name) || detail::is_keyword(name) ||
          ((name == "S" || name == "P" || name == "I" || name == "Q")))
        p.fail(t, "invalid module name '" + name + "'");
      if (doc.find_module(name)) p.fail(t, "duplicate module '" + name + "'");
      p.expect("=");
      ModuleExpr e = p.module_expr();
      p.expect_end();
      doc.modules.push_back({name, std::move(e)});
    }
  }
  if (!saw_content) throw SyntaxError(1, 1, "empty document");
  if (doc.presentation.quiver.vertex_count() == 0) throw SyntaxError(1, 1, "no vertices declared");
  return doc;
}

/// Parses a standalone module expression against a quiver and optional named modules.
inline ModuleExpr parse_module_expr(const std::string& text, const Quiver& quiver,
                                    const std::vector<ModuleDecl>& modules = {}) {
  if (text.find('\n') != std::string::npos) throw SyntaxError(1, 1, "module expressions are single-line");
  detail::LineParser p(detail::tokenize(text, 1), 1, quiver, &modules);
  ModuleExpr e = p.module_expr();
  p.expect_end();
  return e;
}

inline std::string print_element(const Quiver& q, const std::vector<std::pair<Rational, Path>>& terms) {
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    Rational c = terms[i].first;
    if (i == 0) {
      if (c < 0) {
        s += "-";
        c = -c;
      }
    } else {
      s += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    if (c != 1) s += c.get_str() + " ";
    s += path_to_string(q, terms[i].second);
  }
  return s;
}

inline std::string print_module_expr(const Quiver& q, const ModuleExpr& e) {
  std::string s;
  for (std::size_t i = 0; i < e.summands.size(); ++i) {
    if (i) s += " + ";
    const auto& t = e.summands[i];
    switch (t.kind) {
    case SummandExpr::Kind::simple: s += "S(" + q.vertex_name(t.vertex) + ")"; break;
    case SummandExpr::Kind::projective: s += "P(" + q.vertex_name(t.vertex) + ")"; break;
    case SummandExpr::Kind::ideal: s += "I(" + path_to_string(q, t.path) + ")"; break;
    case SummandExpr::Kind::quotient:
      s += "Q(" + q.vertex_name(t.vertex) + "; " + print_element(q, t.element) + ")";
      break;
    case SummandExpr::Kind::named: s += t.name; break;
    }
  }
  return s;
}

/// Canonical text: parse_algebra(print_algebra(d)) == d.
inline std::string print_algebra(const AlgebraDocument& doc) {
  const Quiver& q = doc.presentation.quiver;
  std::ostringstream os;
  if (!doc.name.empty()) os << "algebra " << doc.name << '\n';
  os << "vertices";
  for (const auto& v : q.vertices()) os << ' ' << v;
  os << '\n';
  for (const auto& a : q.arrows()) os << "arrow " << a.name << ' ' << q.vertex_name(a.source) << ' ' << q.vertex_name(a.target) << '\n';
  os << "relations\n";
  for (const auto& r : doc.presentation.relations) os << path_to_string(q, r) << '\n';
  for (const auto& m : doc.modules) os << "module " << m.name << " = " << print_module_expr(q, m.expr) << '\n';
  return os.str();
}

/// Exponent matrix file: an optional first line holding n, then n rows of n integers.
inline ExponentMatrix parse_exponent_matrix(const std::string& text) {
  struct Row {
    int line;
    std::vector<std::pair<long, int>> values; // value, column
  };
  std::vector<Row> rows;
  const auto lines = detail::split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    const int line_no = static_cast<int>(ln) + 1;
    std::string body = lines[ln].substr(0, lines[ln].find('#'));
    Row row{line_no, {}};
    std::size_t i = 0;
    while (i < body.size()) {
      if (std::isspace(static_cast<unsigned char>(body[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      if (body[j] == '-') ++j;
      while (j < body.size() && std::isdigit(static_cast<unsigned char>(body[j]))) ++j;
      const bool digits = j > i + (body[i] == '-' ? 1 : 0);
      if (!digits || (j < body.size() && !std::isspace(static_cast<unsigned char>(body[j]))))
        throw SyntaxError(line_no, static_cast<int>(i) + 1, "expected an integer");
      if (j - i > 9) throw SyntaxError(line_no, static_cast<int>(i) + 1, "integer out of range");
      row.values.emplace_back(std::stol(body.substr(i, j - i)), static_cast<int>(i) + 1);
      i = j;
    }
    if (!row.values.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw SyntaxError(1, 1, "empty exponent matrix");
  std::size_t first = 0;
  if (rows[0].values.size() == 1 && rows[0].values[0].first >= 1 &&
      static_cast<std::size_t>(rows[0].values[0].first) == rows.size() - 1)
    first = 1;
  const int n = static_cast<int>(rows.size() - first);
  ExponentMatrix m;
  m.n = n;
  for (std::size_t r = first; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].values.size()) != n)
      throw SyntaxError(rows[r].line, 1, "expected " + std::to_string(n) + " entries, found " +
                                             std::to_string(rows[r].values.size()));
    std::vector<int> row;
    for (auto [v, col] : rows[r].values) row.push_back(static_cast<int>(v));
    m.lambda.push_back(std::move(row));
  }
  m.validate();
  return m;
}

inline std::string print_exponent_matrix(const ExponentMatrix& m) {
  std::ostringstream os;
  os << m.n << '\n';
  for (const auto& row : m.lambda) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
    os << '\n';
  }
  return os.str();
}

} // namespace findim::io
