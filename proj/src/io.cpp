#include "lsa/io.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace lsa::io {

std::string_view kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "syntax_error";
    case ErrorKind::UnknownName: return "unknown_name";
    case ErrorKind::DuplicateName: return "duplicate_name";
    case ErrorKind::ConflictingRelation: return "conflicting_relation";
    case ErrorKind::BadRational: return "bad_rational";
    case ErrorKind::Validation: return "validation_failure";
  }
  return "error";
}

ParseError::ParseError(ErrorKind kind, std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + std::string(kind_name(kind)) +
                         ": " + message),
      kind_(kind),
      line_(line),
      column_(column) {}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '\''; }

struct Term {
  Scalar coeff;
  std::string name;
  std::size_t column;
};

struct RawRelation {
  std::string left;
  std::string right;
  std::vector<Term> value;
  std::size_t line;
  std::size_t column;
};

// Cursor over a single line; columns are 1-based.
class LineCursor {
 public:
  LineCursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size() || text_[pos_] == '#';
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  std::size_t column() const { return pos_ + 1; }

  [[noreturn]] void fail(ErrorKind kind, const std::string& msg) const { throw ParseError(kind, line_, column(), msg); }

  void expect(char c) {
    if (peek() != c) fail(ErrorKind::Syntax, std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  std::string identifier() {
    skip_ws();
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) fail(ErrorKind::Syntax, "expected a basis name");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string quoted() {
    expect('"');
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '"') ++pos_;
    if (pos_ >= text_.size()) fail(ErrorKind::Syntax, "unterminated string");
    std::string out(text_.substr(start, pos_ - start));
    ++pos_;
    return out;
  }

  bool starts_number() {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  }

  Scalar rational() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0 || text_[pos_] == '/' || text_[pos_] == '.'))
      ++pos_;
    // A coefficient glued to letters other than a basis name start, e.g. "1/x".
    const std::string_view token = text_.substr(start, pos_ - start);
    const auto value = parse_rational(token);
    if (!value || (!token.empty() && token.back() == '/')) {
      pos_ = start;
      fail(ErrorKind::BadRational, "malformed rational '" + std::string(token) + "'");
    }
    return *value;
  }

  // sum := '0' | term (('+'|'-') term)*
  std::vector<Term> formal_sum() {
    std::vector<Term> terms;
    if (peek() == '0') {
      const std::size_t save = pos_;
      ++pos_;
      if (at_end()) return terms;
      pos_ = save;
    }
    bool first = true;
    while (true) {
      skip_ws();
      const std::size_t term_col = column();
      Scalar sgn_value = 1;
      if (accept('-')) {
        sgn_value = -1;
      } else if (accept('+')) {
        if (first) fail(ErrorKind::Syntax, "unexpected '+'");
      } else if (!first) {
        fail(ErrorKind::Syntax, "expected '+' or '-' between terms");
      }
      Scalar coeff = 1;
      if (starts_number()) coeff = rational();
      if (!ident_start(peek())) {
        if (std::isdigit(static_cast<unsigned char>(peek())) == 0 && peek() != '\0' && peek() != '#' &&
            peek() != '+' && peek() != '-')
          fail(ErrorKind::BadRational, std::string("unexpected character '") + peek() + "' in coefficient");
        fail(ErrorKind::Syntax, "expected a basis name");
      }
      Term t{sgn_value * coeff, identifier(), term_col};
      terms.push_back(std::move(t));
      first = false;
      if (at_end()) break;
    }
    return terms;
  }

  bool keyword(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    const std::size_t after = pos_ + word.size();
    if (after < text_.size() && ident_char(text_[after])) return false;
    pos_ = after;
    return true;
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::vector<std::string> name_list(LineCursor& cur) {
  std::vector<std::string> names;
  while (!cur.at_end()) names.push_back(cur.identifier());
  return names;
}

Row to_row(const LieSuperalgebra& L, const RawRelation& rel) {
  Row v(L.dim());
  for (const auto& t : rel.value) {
    const auto k = L.index_of(t.name);
    if (!k) throw ParseError(ErrorKind::UnknownName, rel.line, t.column, "unknown basis name '" + t.name + "'");
    v[*k] += t.coeff;
  }
  return v;
}

std::string format_term(const Scalar& c, const std::string& name, bool first) {
  const Scalar magnitude = abs(c);
  std::string out;
  if (first) {
    if (sgn(c) < 0) out = "-";
  } else {
    out = sgn(c) < 0 ? " - " : " + ";
  }
  if (magnitude != 1) out += to_string(magnitude) + " ";
  return out + name;
}

}  // namespace

LieSuperalgebra parse_algebra(std::string_view text, bool check_laws) {
  std::string name = "unnamed";
  std::optional<std::vector<std::string>> even;
  std::optional<std::vector<std::string>> odd;
  std::vector<RawRelation> relations;
  bool seen_name = false;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;

    LineCursor cur(line, line_no);
    if (cur.at_end()) {
      if (end == text.size()) break;
      continue;
    }
    const std::size_t col = cur.column();
    if (cur.keyword("algebra")) {
      if (seen_name) cur.fail(ErrorKind::Syntax, "duplicate 'algebra' line");
      if (even || odd || !relations.empty()) cur.fail(ErrorKind::Syntax, "'algebra' must come first");
      name = cur.quoted();
      seen_name = true;
    } else if (cur.keyword("even")) {
      if (even) cur.fail(ErrorKind::Syntax, "duplicate 'even:' line");
      if (!relations.empty()) cur.fail(ErrorKind::Syntax, "basis declarations must precede relations");
      cur.expect(':');
      even = name_list(cur);
    } else if (cur.keyword("odd")) {
      if (odd) cur.fail(ErrorKind::Syntax, "duplicate 'odd:' line");
      if (!relations.empty()) cur.fail(ErrorKind::Syntax, "basis declarations must precede relations");
      cur.expect(':');
      odd = name_list(cur);
    } else if (cur.peek() == '[') {
      RawRelation rel;
      rel.line = line_no;
      rel.column = col;
      cur.expect('[');
      rel.left = cur.identifier();
      cur.expect(',');
      rel.right = cur.identifier();
      cur.expect(']');
      cur.expect('=');
      if (cur.at_end()) cur.fail(ErrorKind::Syntax, "missing right-hand side");
      rel.value = cur.formal_sum();
      relations.push_back(std::move(rel));
      continue;
    } else {
      cur.fail(ErrorKind::Syntax, "expected 'algebra', 'even:', 'odd:' or a relation");
    }
    if (!cur.at_end()) cur.fail(ErrorKind::Syntax, "unexpected trailing text");
    if (end == text.size()) break;
  }

  std::vector<std::string> names = even.value_or(std::vector<std::string>{});
  const auto odd_names = odd.value_or(std::vector<std::string>{});
  names.insert(names.end(), odd_names.begin(), odd_names.end());
  {
    std::set<std::string> seen;
    for (const auto& n : names)
      if (!seen.insert(n).second) throw ParseError(ErrorKind::DuplicateName, 0, 0, "basis name '" + n + "' declared twice");
  }
  const SuperDim sdim{even ? even->size() : 0, odd_names.size()};
  LieSuperalgebra L(name, sdim, names);

  // Declared value per ordered pair.
  std::map<std::pair<std::size_t, std::size_t>, std::pair<Row, const RawRelation*>> declared;
  for (const auto& rel : relations) {
    const auto i = L.index_of(rel.left);
    if (!i) throw ParseError(ErrorKind::UnknownName, rel.line, rel.column, "unknown basis name '" + rel.left + "'");
    const auto j = L.index_of(rel.right);
    if (!j) throw ParseError(ErrorKind::UnknownName, rel.line, rel.column, "unknown basis name '" + rel.right + "'");
    Row v = to_row(L, rel);
    if (!declared.emplace(std::make_pair(*i, *j), std::make_pair(std::move(v), &rel)).second)
      throw ParseError(ErrorKind::ConflictingRelation, rel.line, rel.column,
                       "[" + rel.left + ", " + rel.right + "] declared twice");
  }

  for (const auto& [key, entry] : declared) {
    const auto [i, j] = key;
    const RawRelation& rel = *entry.second;
    const Row& v = entry.first;
    const int s = sign(L.parity(i), L.parity(j));
    if (i == j && s == 1) {
      for (const auto& x : v)
        if (sgn(x) != 0)
          throw ParseError(ErrorKind::ConflictingRelation, rel.line, rel.column,
                           "skew-symmetry forces [" + rel.left + ", " + rel.right + "] = 0");
    }
    if (i > j) {
      const auto mirror = declared.find({j, i});
      if (mirror != declared.end()) {
        for (std::size_t k = 0; k < L.dim(); ++k)
          if (v[k] != -s * mirror->second.first[k])
            throw ParseError(ErrorKind::ConflictingRelation, rel.line, rel.column,
                             "[" + rel.left + ", " + rel.right + "] contradicts the declared [" + rel.right + ", " +
                                 rel.left + "] under super-skew-symmetry");
        continue;
      }
    }
    const Parity target = L.parity(i) + L.parity(j);
    for (std::size_t k = 0; k < L.dim(); ++k)
      if (sgn(v[k]) != 0 && L.parity(k) != target)
        throw ParseError(ErrorKind::Validation, rel.line, rel.column,
                         "grading: [" + rel.left + ", " + rel.right + "] has a component along " + L.basis_name(k) +
                             " of the wrong parity");
    L.set_bracket(i, j, v);
  }

  if (check_laws) {
    const ValidationReport report = validate(L);
    if (const LawCheck* bad = report.first_failure()) throw ParseError(ErrorKind::Validation, 0, 0, bad->law + ": " + bad->detail);
  }
  return L;
}

std::string export_algebra(const LieSuperalgebra& L) {
  std::ostringstream out;
  out << "algebra \"" << L.name() << "\"\n";
  out << "even:";
  for (std::size_t i = 0; i < L.sdim().even; ++i) out << ' ' << L.basis_name(i);
  out << "\nodd:";
  for (std::size_t i = L.sdim().even; i < L.dim(); ++i) out << ' ' << L.basis_name(i);
  out << '\n';
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i; j < L.dim(); ++j) {
      bool first = true;
      std::string rhs;
      for (std::size_t k = 0; k < L.dim(); ++k) {
        const Scalar& c = L.structure_constant(i, j, k);
        if (sgn(c) == 0) continue;
        rhs += format_term(c, L.basis_name(k), first);
        first = false;
      }
      if (!first) out << '[' << L.basis_name(i) << ", " << L.basis_name(j) << "] = " << rhs << '\n';
    }
  return out.str();
}

}  // namespace lsa::io
