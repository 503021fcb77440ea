#include "preproj/presentation.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace preproj {

bool Presentation::is_quadratic() const {
  for (const auto& r : relations)
    if (r.min_degree() != 2 || r.max_degree() != 2) return false;
  return true;
}

int Presentation::max_relation_degree() const {
  int m = 0;
  for (const auto& r : relations) m = std::max(m, r.max_degree());
  return m;
}

Presentation Presentation::opposite() const {
  Presentation o;
  o.field = field;
  o.truncation = truncation;
  o.quiver.vertices = quiver.vertices;
  for (const auto& a : quiver.arrows) o.quiver.arrows.push_back(Arrow{a.name, a.tgt, a.src});
  for (const auto& r : relations) {
    Element e;
    for (const auto& [p, c] : r.terms()) {
      Path q{p.tgt, p.src, std::vector<int>(p.arrows.rbegin(), p.arrows.rend())};
      e.add(q, c);
    }
    o.relations.push_back(e);
  }
  return o;
}

bool operator==(const Presentation& a, const Presentation& b) {
  return a.quiver == b.quiver && a.field == b.field && a.relations == b.relations &&
         a.truncation == b.truncation;
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '!' || c == '\'' ||
         c == '^';
}

struct Cursor {
  const std::string& s;
  std::size_t i;
  int line;
  int col0;  // column offset of s[0]

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip();
    return i >= s.size();
  }
  int col() const { return col0 + static_cast<int>(i) + 1; }
  [[noreturn]] void fail(const std::string& m) const { throw ParseError(line, col(), m); }
};

mpq_class parse_number(Cursor& c) {
  std::size_t st = c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
  std::string num = c.s.substr(st, c.i - st);
  std::string den = "1";
  if (c.i < c.s.size() && c.s[c.i] == '/') {
    ++c.i;
    std::size_t d0 = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (d0 == c.i) c.fail("expected denominator");
    den = c.s.substr(d0, c.i - d0);
  }
  mpz_class dz(den);
  if (dz == 0) c.fail("zero denominator");
  mpq_class q{mpz_class(num), dz};
  q.canonicalize();
  return q;
}

// one signed term: [coef] [*] path (path = ident {* ident}) or e_v
Element parse_linear(const Quiver& q, const Field& f, Cursor& c) {
  Element out;
  bool first = true;
  int side = 1;  // flips after '='
  while (!c.done()) {
    int sign = 1;
    char ch = c.s[c.i];
    if (ch == '=') {
      if (side < 0) c.fail("second '='");
      side = -1;
      ++c.i;
      first = true;
      continue;
    }
    if (ch == '+' || ch == '-') {
      sign = ch == '-' ? -1 : 1;
      ++c.i;
    } else if (!first) {
      c.fail("expected '+' or '-'");
    }
    first = false;
    c.skip();
    mpq_class coef(1);
    bool have_path = false;
    Path path;
    bool expect_factor = true;
    while (expect_factor) {
      c.skip();
      if (c.i >= c.s.size()) c.fail("unexpected end of relation");
      ch = c.s[c.i];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        coef *= parse_number(c);
      } else if (ident_start(ch)) {
        int col = c.col();
        std::size_t st = c.i;
        while (c.i < c.s.size() && ident_char(c.s[c.i])) ++c.i;
        std::string name = c.s.substr(st, c.i - st);
        Path step;
        int a = q.arrow_index(name);
        if (a >= 0) {
          step = Path::arrow(q, a);
        } else if (name.size() > 2 && name.rfind("e_", 0) == 0 && q.vertex_index(name.substr(2)) >= 0) {
          step = Path::trivial(q.vertex_index(name.substr(2)));
        } else {
          throw ParseError(c.line, col, "unknown arrow '" + name + "'");
        }
        if (!have_path) {
          path = step;
          have_path = true;
        } else {
          if (path.tgt != step.src) throw ParseError(c.line, col, "non-composable path at '" + name + "'");
          path = path.then(step);
        }
      } else {
        c.fail(std::string("unexpected character '") + ch + "'");
      }
      c.skip();
      expect_factor = false;
      if (c.i < c.s.size() && c.s[c.i] == '*') {
        ++c.i;
        expect_factor = true;
      } else if (c.i < c.s.size() && !have_path &&
                 (std::isdigit(static_cast<unsigned char>(c.s[c.i])) || ident_start(c.s[c.i]))) {
        // "2 gamma*delta": coefficient followed by a path
        expect_factor = true;
      }
    }
    if (!have_path) c.fail("term without a path");
    out.add(path, f.make(coef * (sign * side)));
  }
  return out;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> v;
  std::string t;
  while (in >> t) v.push_back(t);
  return v;
}

}  // namespace

Element parse_element(const Quiver& q, const Field& f, const std::string& text) {
  Cursor c{text, 0, 1, 0};
  return parse_linear(q, f, c);
}

Presentation parse_presentation(const std::string& text) {
  Presentation p;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool vertices_seen = false;
  struct PendingRel {
    std::string body;
    int line, col0;
  };
  std::vector<PendingRel> rels;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    std::size_t st = line.find_first_not_of(" \t\r");
    if (st == std::string::npos) continue;
    std::size_t en = line.find_first_of(" \t", st);
    std::string kw = line.substr(st, en == std::string::npos ? std::string::npos : en - st);
    std::string rest = en == std::string::npos ? "" : line.substr(en);
    int rest_col = static_cast<int>(en == std::string::npos ? line.size() : en);
    if (kw == "field") {
      auto t = split_ws(rest);
      if (t.size() == 1 && t[0] == "Q") {
        p.field = Field{};
      } else if (t.size() == 2 && t[0] == "F") {
        std::uint64_t pr = 0;
        try {
          pr = std::stoull(t[1]);
        } catch (...) {
          throw ParseError(lineno, rest_col + 1, "bad prime");
        }
        if (!is_prime(pr) || pr >= (1ULL << 31)) throw ParseError(lineno, rest_col + 1, "field characteristic must be a prime below 2^31");
        p.field = Field{pr};
      } else {
        throw ParseError(lineno, rest_col + 1, "expected 'field Q' or 'field F <prime>'");
      }
    } else if (kw == "vertices") {
      for (const auto& v : split_ws(rest)) {
        if (p.quiver.vertex_index(v) >= 0) throw ParseError(lineno, rest_col + 1, "duplicate vertex '" + v + "'");
        p.quiver.add_vertex(v);
      }
      vertices_seen = true;
    } else if (kw == "arrow") {
      std::size_t colon = rest.find(':');
      std::size_t arr = rest.find("->");
      if (colon == std::string::npos || arr == std::string::npos || arr < colon)
        throw ParseError(lineno, rest_col + 1, "expected 'arrow name : source -> target'");
      auto nm = split_ws(rest.substr(0, colon));
      auto s = split_ws(rest.substr(colon + 1, arr - colon - 1));
      auto t = split_ws(rest.substr(arr + 2));
      if (nm.size() != 1 || s.size() != 1 || t.size() != 1)
        throw ParseError(lineno, rest_col + 1, "expected 'arrow name : source -> target'");
      const std::string& name = nm[0];
      if (!ident_start(name[0])) throw ParseError(lineno, rest_col + 1, "bad arrow name '" + name + "'");
      for (char ch : name)
        if (!ident_char(ch)) throw ParseError(lineno, rest_col + 1, "bad arrow name '" + name + "'");
      if (p.quiver.arrow_index(name) >= 0) throw ParseError(lineno, rest_col + 1, "duplicate arrow '" + name + "'");
      int si = p.quiver.vertex_index(s[0]), ti = p.quiver.vertex_index(t[0]);
      if (si < 0) throw ParseError(lineno, static_cast<int>(rest_col + colon + 2), "unknown vertex '" + s[0] + "'");
      if (ti < 0) throw ParseError(lineno, static_cast<int>(rest_col + arr + 3), "unknown vertex '" + t[0] + "'");
      p.quiver.add_arrow(name, si, ti);
    } else if (kw == "relation") {
      rels.push_back({rest, lineno, rest_col});
    } else if (kw == "truncate") {
      auto t = split_ws(rest);
      int n = 0;
      try {
        n = t.size() == 1 ? std::stoi(t[0]) : 0;
      } catch (...) {
      }
      if (n <= 0) throw ParseError(lineno, rest_col + 1, "truncate expects a positive integer");
      p.truncation = n;
    } else {
      throw ParseError(lineno, static_cast<int>(st) + 1, "unknown statement '" + kw + "'");
    }
  }
  (void)vertices_seen;
  for (const auto& r : rels) {
    Cursor c{r.body, 0, r.line, r.col0};
    if (c.done()) throw ParseError(r.line, r.col0 + 1, "empty relation");
    Element e = parse_linear(p.quiver, p.field, c);
    for (auto& piece : e.homogeneous_pieces()) {
      if (piece.max_degree() < 2) throw ParseError(r.line, r.col0 + 1, "relation of degree < 2");
      p.relations.push_back(piece);
    }
  }
  return p;
}

Presentation load_presentation(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_presentation(ss.str());
}

std::string print_presentation(const Presentation& p) {
  std::ostringstream o;
  o << "field " << p.field.str() << "\n";
  o << "vertices";
  for (const auto& v : p.quiver.vertices) o << ' ' << v;
  o << "\n";
  for (const auto& a : p.quiver.arrows)
    o << "arrow " << a.name << " : " << p.quiver.vertices[a.src] << " -> " << p.quiver.vertices[a.tgt] << "\n";
  for (const auto& r : p.relations) o << "relation " << r.str(p.quiver) << "\n";
  if (p.truncation) o << "truncate " << *p.truncation << "\n";
  return o.str();
}

}  // namespace preproj
