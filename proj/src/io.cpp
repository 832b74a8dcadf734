#include "sta/io.hpp"

#include <cctype>
#include <sstream>

#include "sta/errors.hpp"

namespace sta {

namespace {

struct Cursor {
  const std::string& text;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    int line = 1, col = 1;
    for (size_t i = 0; i < pos && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                     what);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() const { return pos < text.size() ? text[pos] : '\0'; }
  bool accept(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string until(char stop) {
    size_t start = pos;
    while (pos < text.size() && text[pos] != stop) ++pos;
    return text.substr(start, pos - start);
  }

  Rational rational() {
    skip_ws();
    bool neg = false;
    if (peek() == '-' || peek() == '+') {
      neg = peek() == '-';
      ++pos;
    }
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected a number");
    Integer num(text.substr(start, pos - start));
    if (neg) num = -num;
    Integer den = 1;
    if (peek() == '/') {
      ++pos;
      size_t dstart = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == dstart) fail("expected a denominator");
      den = Integer(text.substr(dstart, pos - dstart));
      if (den == 0) fail("zero denominator");
    }
    return Rational(num, den);
  }

  GaussianRational coeff() {
    Rational re = rational();
    skip_ws();
    if (peek() == 'i') {
      ++pos;
      return GaussianRational(Rational(0), re);
    }
    if (peek() == '+' || peek() == '-') {
      size_t mark = pos;
      Rational im = rational();
      skip_ws();
      if (peek() == 'i') {
        ++pos;
        return GaussianRational(re, im);
      }
      pos = mark;  // the sign belongs to the next term
    }
    return GaussianRational(re);
  }

  std::string name() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == '_' || text[pos] == '\''))
      ++pos;
    if (pos == start) fail("expected an identifier");
    return text.substr(start, pos - start);
  }
};

Path path_from_tokens(Cursor& c, const std::vector<std::string>& tokens, const Graph& g) {
  if (tokens.size() == 1) {
    int v = g.vertex_index(tokens[0]);
    if (v >= 0) return Path(&g, v);
  }
  Path p;
  bool first = true;
  for (const auto& tok : tokens) {
    int e = g.edge_index(tok);
    if (e < 0) c.fail("unknown edge '" + tok + "'");
    if (first) {
      p = Path(&g, g.edge(e).range);
      first = false;
    } else if (p.source_vertex() != g.edge(e).range) {
      c.fail("path breaks the composability chain at '" + tok + "'");
    }
    p = p.append(e);
  }
  return p;
}

// Path up to (not consuming) one of the stop characters.
Path path_until(Cursor& c, const char* stops, const Graph& g) {
  std::vector<std::string> tokens{c.name()};
  while (c.peek() == '.') {
    ++c.pos;
    tokens.push_back(c.name());
  }
  c.skip_ws();
  if (c.peek() != '\0' && std::string(stops).find(c.peek()) == std::string::npos)
    c.fail("unexpected character in path");
  return path_from_tokens(c, tokens, g);
}

BasicBisection basic(Cursor& c, const Graph& g) {
  c.expect('[');
  Path mu = path_until(c, "|", g);
  c.expect('|');
  Path nu = path_until(c, "]", g);
  c.expect(']');
  if (mu.source_vertex() != nu.source_vertex()) c.fail("paths have different sources");
  return BasicBisection(mu, nu);
}

Point point(Cursor& c, const Graph& g) {
  Path head = path_until(c, ":", g);
  c.expect(':');
  c.expect('(');
  Path cycle = path_until(c, ")", g);
  c.expect(')');
  return Point(head, cycle);
}

}  // namespace

Path parse_path(const std::string& text, const Graph& g) {
  Cursor c{text};
  Path p = path_until(c, "", g);
  if (!c.done()) c.fail("trailing input after path");
  return p;
}

AlgebraElement parse_element(const std::string& text, const Graph& g) {
  Cursor c{text};
  std::vector<Term> raw;
  c.skip_ws();
  if (c.peek() == '0') {
    ++c.pos;
    if (!c.done()) c.fail("trailing input after 0");
    return AlgebraElement();
  }
  bool first = true;
  while (!c.done()) {
    GaussianRational sign(1);
    if (c.accept('-'))
      sign = GaussianRational(-1);
    else if (!c.accept('+') && !first)
      c.fail("expected '+' or '-'");
    first = false;
    c.expect('(');
    GaussianRational a = c.coeff();
    c.expect(')');
    raw.emplace_back(basic(c, g), sign * a);
  }
  return normalize(raw);
}

std::string print_element(const AlgebraElement& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [b, a] : f.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + coeff_to_string(a) + ")" + b.str();
  }
  return out;
}

GaussianRational parse_coeff(const std::string& text) {
  Cursor c{text};
  GaussianRational z = c.coeff();
  if (!c.done()) c.fail("trailing input after coefficient");
  return z;
}

Point parse_point(const std::string& text, const Graph& g) {
  Cursor c{text};
  Point p = point(c, g);
  if (!c.done()) c.fail("trailing input after point");
  return p;
}

GroupoidElement parse_groupoid_element(const std::string& text, const Graph& g) {
  Cursor c{text};
  c.expect('(');
  Point x = point(c, g);
  c.expect(',');
  c.skip_ws();
  bool neg = c.accept('-');
  Rational nr = c.rational();
  std::int64_t n = static_cast<std::int64_t>(numerator(nr));
  if (denominator(nr) != 1) c.fail("degree must be an integer");
  if (neg) n = -n;
  c.expect(',');
  Point y = point(c, g);
  c.expect(')');
  if (!c.done()) c.fail("trailing input after groupoid element");

  int bound = x.head().length() + y.head().length() + static_cast<int>(std::abs(n)) +
              x.cycle().length() * y.cycle().length() + 2;
  for (int k = static_cast<int>(std::max<std::int64_t>(n, 0)); k <= bound; ++k) {
    int l = k - static_cast<int>(n);
    if (x.shift(k) == y.shift(l)) return GroupoidElement(x, n, y, k, l);
  }
  throw DomainError("points do not share a tail at degree " + std::to_string(n));
}

LpaExpr parse_lpa(const std::string& text, const Graph& g) {
  Cursor c{text};
  LpaExpr expr;
  bool first = true;
  while (!c.done()) {
    GaussianRational sign(1);
    if (c.accept('-'))
      sign = GaussianRational(-1);
    else if (!c.accept('+') && !first)
      c.fail("expected '+' or '-'");
    first = false;
    LpaWord w;
    w.coeff = sign;
    if (c.accept('(')) {
      w.coeff = sign * c.coeff();
      c.expect(')');
    }
    while (true) {
      c.skip_ws();
      if (c.peek() != 'p' && c.peek() != 's') break;
      size_t mark = c.pos;
      char kind = text[c.pos++];
      if (c.peek() != '_') {
        c.pos = mark;
        break;
      }
      ++c.pos;
      std::string id = c.name();
      if (kind == 'p') {
        int v = g.vertex_index(id);
        if (v < 0) c.fail("unknown vertex '" + id + "'");
        w.symbols.push_back({LpaSymbol::VertexIdem, v});
      } else {
        int e = g.edge_index(id);
        if (e < 0) c.fail("unknown edge '" + id + "'");
        bool starred = false;
        if (c.peek() == '^') {
          ++c.pos;
          if (c.peek() != '*') c.fail("expected '*' after '^'");
          ++c.pos;
          starred = true;
        } else if (c.peek() == '*') {
          ++c.pos;
          starred = true;
        }
        w.symbols.push_back({starred ? LpaSymbol::EdgeGenStar : LpaSymbol::EdgeGen, e});
      }
    }
    if (w.symbols.empty()) c.fail("expected a generator symbol");
    expr.push_back(std::move(w));
  }
  return expr;
}

std::string print_lpa(const LpaNormal& x) { return x.str(); }

GeneratorAssignment parse_rep(const std::string& text, const Graph& g) {
  GeneratorAssignment a;
  a.graph = &g;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& what) {
    throw ParseError("line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    if (kind == "dim") {
      if (!(ls >> a.dim) || a.dim < 1) fail("expected a positive dimension");
    } else if (kind == "cocycle") {
      std::string mode;
      ls >> mode;
      if (mode != "trivial" && mode != "canonical") fail("unknown cocycle mode '" + mode + "'");
      a.mode = mode == "trivial" ? CocycleMode::Trivial : CocycleMode::CanonicalZ;
    } else if (kind == "p" || kind == "s" || kind == "sstar") {
      if (a.dim == 0) fail("dim must come first");
      std::string id;
      if (!(ls >> id)) fail("expected an identifier");
      int idx = kind == "p" ? g.vertex_index(id) : g.edge_index(id);
      if (idx < 0) throw UnknownSymbol(id);
      Matrix m(a.dim, a.dim);
      for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
          std::string entry;
          if (!(ls >> entry)) fail("expected " + std::to_string(a.dim * a.dim) + " entries");
          m.at(i, j) = parse_coeff(entry);
        }
      (kind == "p" ? a.p : kind == "s" ? a.s : a.sstar)[idx] = m;
    } else {
      fail("unknown item '" + kind + "'");
    }
  }
  return a;
}

CylSet parse_cylset(const std::string& text, const Graph& g) {
  Cursor c{text};
  c.expect('{');
  std::vector<BasicBisection> members;
  if (!c.accept('}')) {
    do {
      members.push_back(basic(c, g));
    } while (c.accept(','));
    c.expect('}');
  }
  if (!c.done()) c.fail("trailing input after cylinder set");
  return CylSet(std::move(members));
}

std::string print_cylset(const CylSet& s) { return s.str(); }

Certificate parse_certificate(const std::string& text, const Graph& g) {
  Certificate cert;
  bool have_grade = false, have_x0 = false, have_y0 = false, have_c = false, have_k = false;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kind, rest;
    if (!(ls >> kind)) continue;
    std::getline(ls, rest);
    if (kind == "grade") {
      cert.grade = std::stoi(rest);
      have_grade = true;
    } else if (kind == "X0") {
      cert.x0 = parse_cylset(rest, g);
      have_x0 = true;
    } else if (kind == "Y0") {
      cert.y0 = parse_cylset(rest, g);
      have_y0 = true;
    } else if (kind == "c") {
      cert.c = parse_coeff(rest);
      have_c = true;
    } else if (kind == "K") {
      cert.k = parse_cylset(rest, g);
      have_k = true;
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown item '" + kind + "'");
    }
  }
  if (!have_x0 || !have_y0 || !have_c || !have_k)
    throw ParseError("certificate is missing a required line");
  cert.kind = have_grade ? CertKind::Graded : CertKind::CuntzKrieger;
  return cert;
}

std::string print_certificate(const Certificate& cert) {
  std::string out;
  if (cert.kind == CertKind::Graded) out += "grade " + std::to_string(cert.grade) + "\n";
  out += "X0 " + cert.x0.str() + "\n";
  out += "Y0 " + cert.y0.str() + "\n";
  out += "c " + coeff_to_string(cert.c) + "\n";
  out += "K " + cert.k.str() + "\n";
  return out;
}

namespace {

WordSet wordset(Cursor& c, const Sft& sft) {
  std::vector<Word> words;
  do {
    c.expect('[');
    Word w;
    c.skip_ws();
    if (c.peek() != ']') {
      w.push_back(sft.letter_index(c.name()));
      while (c.peek() == '.') {
        ++c.pos;
        w.push_back(sft.letter_index(c.name()));
      }
    }
    c.expect(']');
    if (!w.empty()) words.push_back(std::move(w));
  } while (c.accept('u'));
  return WordSet(&sft, std::move(words));
}

}  // namespace

WordSet parse_wordset(const std::string& text, const Sft& sft) {
  Cursor c{text};
  WordSet w = wordset(c, sft);
  if (!c.done()) c.fail("trailing input after cylinder union");
  return w;
}

DrBasic parse_dr_basic(const std::string& text, const Sft& sft) {
  Cursor c{text};
  c.skip_ws();
  if (c.peek() != 'Z') c.fail("expected 'Z('");
  ++c.pos;
  c.expect('(');
  WordSet u = wordset(c, sft);
  c.expect(',');
  WordSet v = wordset(c, sft);
  c.expect(',');
  Rational kr = c.rational();
  c.expect(',');
  Rational lr = c.rational();
  c.expect(')');
  if (!c.done()) c.fail("trailing input after Z(...)");
  if (denominator(kr) != 1 || denominator(lr) != 1 || kr < 0 || lr < 0)
    c.fail("exponents must be nonnegative integers");
  return dr_validate(u, v, static_cast<int>(numerator(kr)), static_cast<int>(numerator(lr)));
}

std::string print_norm(const NormValue& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return rational_to_string(*r);
  const auto& iv = std::get<Interval>(v);
  return "[" + rational_to_string(iv.lo) + "," + rational_to_string(iv.hi) + "]";
}

}  // namespace sta
