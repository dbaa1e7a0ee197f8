#include "cartan/dsl.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace cartan {

namespace {

std::string describe(const SourceSpan& at, const std::string& message, const std::set<std::string>& expected) {
  std::string out = std::to_string(at.line) + ":" + std::to_string(at.column) + ": " + message;
  if (!expected.empty()) {
    out += " (expected ";
    bool first = true;
    for (const auto& e : expected) {
      if (!first) out += ", ";
      first = false;
      out += e;
    }
    out += ")";
  }
  return out;
}

enum class Tok { Ident, Int, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourceSpan at;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const unsigned char c = static_cast<unsigned char>(src[i]);
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    const SourceSpan at{line, col};
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), at});
      advance(j - i);
    } else if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Int, std::string(src.substr(i, j - i)), at});
      advance(j - i);
    } else if (src.substr(i, 2) == "->") {
      out.push_back({Tok::Punct, "->", at});
      advance(2);
    } else if (std::string_view(":;=+-*^/(),").find(static_cast<char>(c)) != std::string_view::npos) {
      out.push_back({Tok::Punct, std::string(1, static_cast<char>(c)), at});
      advance(1);
    } else {
      throw ParseError(at, "unexpected character '" + std::string(1, static_cast<char>(c)) + "'");
    }
  }
  out.push_back({Tok::End, "", {line, col}});
  return out;
}

struct Node {
  enum Kind { Number, Name, Sum, Product, Power, Negate } kind = Number;
  Rational number;
  std::string name;
  int exponent = 1;
  SourceSpan at;
  std::vector<Node> kids;
};

void collect_names(const Node& n, std::vector<const Node*>& out) {
  if (n.kind == Node::Name) out.push_back(&n);
  for (const Node& k : n.kids) collect_names(k, out);
}

Element evaluate(const Node& n, const PresentationPtr& p) {
  switch (n.kind) {
    case Node::Number:
      return Element::scalar(p, n.number);
    case Node::Name: {
      const auto idx = p->find(n.name);
      if (!idx) throw ParseError(n.at, "undeclared generator '" + n.name + "'");
      return Element::generator(p, *idx);
    }
    case Node::Sum: {
      Element out(p);
      for (const Node& k : n.kids) out += evaluate(k, p);
      return out;
    }
    case Node::Product: {
      Element out = Element::scalar(p, 1);
      for (const Node& k : n.kids) out = multiply(out, evaluate(k, p));
      return out;
    }
    case Node::Power:
      return power(evaluate(n.kids.front(), p), n.exponent);
    case Node::Negate:
      return -evaluate(n.kids.front(), p);
  }
  return Element(p);
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at_punct(std::string_view p) const { return peek().kind == Tok::Punct && peek().text == p; }
  bool at_end() const { return peek().kind == Tok::End; }

  Token take() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(std::set<std::string> expected) const {
    const Token& t = peek();
    const std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.at, "unexpected " + got, std::move(expected));
  }

  void expect(std::string_view p) {
    if (!at_punct(p)) fail({"'" + std::string(p) + "'"});
    take();
  }

  Token ident(const std::string& what) {
    if (peek().kind != Tok::Ident) fail({what});
    return take();
  }

  void keyword(std::string_view kw) {
    if (peek().kind != Tok::Ident || peek().text != kw) fail({"'" + std::string(kw) + "'"});
    take();
  }

  int integer(bool allow_sign) {
    int sign = 1;
    if (allow_sign && (at_punct("-") || at_punct("+"))) sign = take().text == "-" ? -1 : 1;
    if (peek().kind != Tok::Int) fail({"integer"});
    const Token t = take();
    if (t.text.size() > 9) throw ParseError(t.at, "integer too large");
    return sign * std::stoi(t.text);
  }

  Node expression() {
    Node sum;
    sum.kind = Node::Sum;
    sum.at = peek().at;
    bool negative = false;
    if (at_punct("-") || at_punct("+")) negative = take().text == "-";
    sum.kids.push_back(signed_term(negative));
    while (at_punct("+") || at_punct("-")) {
      negative = take().text == "-";
      sum.kids.push_back(signed_term(negative));
    }
    return sum;
  }

 private:
  Node signed_term(bool negative) {
    Node t = term();
    if (!negative) return t;
    Node n;
    n.kind = Node::Negate;
    n.at = t.at;
    n.kids.push_back(std::move(t));
    return n;
  }

  bool starts_factor() const { return peek().kind == Tok::Ident || peek().kind == Tok::Int || at_punct("("); }

  Node term() {
    Node prod;
    prod.kind = Node::Product;
    prod.at = peek().at;
    prod.kids.push_back(factor());
    for (;;) {
      if (at_punct("*")) {
        take();
        prod.kids.push_back(factor());
      } else if (starts_factor()) {
        prod.kids.push_back(factor());
      } else {
        break;
      }
    }
    return prod;
  }

  Node factor() {
    Node base = primary();
    if (!at_punct("^")) return base;
    take();
    Node pw;
    pw.kind = Node::Power;
    pw.at = base.at;
    pw.exponent = integer(false);
    pw.kids.push_back(std::move(base));
    return pw;
  }

  Node primary() {
    Node n;
    n.at = peek().at;
    if (peek().kind == Tok::Ident) {
      n.kind = Node::Name;
      n.name = take().text;
      return n;
    }
    if (peek().kind == Tok::Int) {
      n.kind = Node::Number;
      const Token num = take();
      std::string text = num.text;
      if (at_punct("/")) {
        take();
        if (peek().kind != Tok::Int) fail({"integer"});
        const Token den = take();
        if (den.text.find_first_not_of('0') == std::string::npos) throw ParseError(den.at, "zero denominator");
        text += "/" + den.text;
      }
      n.number = parse_rational(text);
      return n;
    }
    if (at_punct("(")) {
      if (++depth_ > 200) throw ParseError(n.at, "parentheses nested too deeply");
      take();
      Node inner = expression();
      expect(")");
      --depth_;
      return inner;
    }
    fail({"generator name", "number", "'('"});
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

struct GenDecl {
  std::string name;
  int degree;
  SourceSpan at;
};
struct DiffDecl {
  std::string gen;
  Node value;
  SourceSpan at;
};
struct DerDecl {
  std::string name;
  std::vector<std::tuple<std::string, SourceSpan, Node>> values;
  int degree;
  SourceSpan at;
};
struct ElemDecl {
  std::string name;
  Node value;
  SourceSpan at;
};

void check_degree(const Element& x, int expected, const SourceSpan& at, const std::string& what) {
  if (x.is_zero()) return;
  if (!x.is_homogeneous())
    throw ParseError(at, "degree mismatch: " + what + " is inhomogeneous (" + x.to_string() + ")");
  const int got = *x.degree();
  if (got != expected)
    throw ParseError(at, "degree mismatch: " + what + " must have degree " + std::to_string(expected) + ", got " +
                             std::to_string(got));
}

}  // namespace

ParseError::ParseError(SourceSpan where, std::string message, std::set<std::string> expected)
    : Error(describe(where, message, expected)), where_(where), detail_(std::move(message)),
      expected_(std::move(expected)) {}

const Derivation* SourceDocument::derivation(std::string_view name) const {
  for (const auto& d : derivations)
    if (d.name == name) return &d.value;
  return nullptr;
}

const NamedElement* SourceDocument::element(std::string_view name) const {
  for (const auto& e : elements)
    if (e.name == name) return &e;
  return nullptr;
}

SourceDocument parse_document(std::string_view text) {
  Parser ps(lex(text));
  std::vector<GenDecl> gens;
  std::vector<DiffDecl> diffs;
  std::vector<DerDecl> ders;
  std::vector<ElemDecl> elems;
  std::set<std::string> names;
  auto claim = [&](const Token& t) {
    if (!names.insert(t.text).second) throw ParseError(t.at, "duplicate name '" + t.text + "'");
  };

  while (!ps.at_end()) {
    const Token& head = ps.peek();
    if (head.kind != Tok::Ident) ps.fail({"'gen'", "'d'", "'der'", "'elem'"});
    if (head.text == "gen") {
      ps.take();
      const Token name = ps.ident("generator name");
      claim(name);
      ps.expect(":");
      const int deg = ps.integer(true);
      if (deg < 1) throw ParseError(name.at, "generator '" + name.text + "' must have positive degree");
      gens.push_back({name.text, deg, name.at});
    } else if (head.text == "d") {
      ps.take();
      const Token name = ps.ident("generator name");
      ps.expect("=");
      diffs.push_back({name.text, ps.expression(), name.at});
    } else if (head.text == "der") {
      ps.take();
      const Token name = ps.ident("derivation name");
      claim(name);
      DerDecl decl{name.text, {}, 0, name.at};
      ps.expect("(");
      if (!ps.at_punct(")")) {
        for (;;) {
          const Token g = ps.ident("generator name");
          ps.expect("->");
          decl.values.emplace_back(g.text, g.at, ps.expression());
          if (ps.at_punct(",")) {
            ps.take();
            continue;
          }
          if (!ps.at_punct(")")) ps.fail({"','", "')'"});
          break;
        }
      }
      ps.expect(")");
      ps.keyword("deg");
      decl.degree = ps.integer(true);
      ders.push_back(std::move(decl));
    } else if (head.text == "elem") {
      ps.take();
      const Token name = ps.ident("element name");
      claim(name);
      ps.expect("=");
      elems.push_back({name.text, ps.expression(), name.at});
    } else {
      ps.fail({"'gen'", "'d'", "'der'", "'elem'"});
    }
    ps.expect(";");
  }

  if (gens.empty()) throw ParseError({1, 1}, "no generators declared", {"'gen'"});
  std::vector<Generator> gen_list;
  std::map<std::string, std::size_t> index;
  for (const auto& g : gens) {
    index.emplace(g.name, gen_list.size());
    gen_list.push_back({g.name, g.degree});
  }
  const PresentationPtr skeleton = Presentation::create(gen_list);

  std::vector<Terms> dv(gens.size());
  std::vector<SourceSpan> dv_at(gens.size());
  std::vector<bool> seen(gens.size(), false);
  for (const auto& d : diffs) {
    auto it = index.find(d.gen);
    if (it == index.end()) throw ParseError(d.at, "undeclared generator '" + d.gen + "'");
    if (seen[it->second]) throw ParseError(d.at, "differential of '" + d.gen + "' given twice");
    seen[it->second] = true;
    const Element value = evaluate(d.value, skeleton);
    check_degree(value, gens[it->second].degree + 1, d.at, "d " + d.gen);
    dv[it->second] = value.terms();
    dv_at[it->second] = d.at;
  }
  for (std::size_t g = 0; g < gens.size(); ++g) {
    Terms dd;
    for (const auto& [m, c] : dv[g]) add_terms(dd, leibniz(*skeleton, *skeleton, 1, dv, m), c);
    if (!dd.empty())
      throw ParseError(seen[g] ? dv_at[g] : gens[g].at,
                       "d^2 != 0 on generator '" + gens[g].name + "': d(d " + gens[g].name + ") = " +
                           format_terms(*skeleton, dd));
  }

  SourceDocument doc;
  doc.algebra = Presentation::create(gen_list, dv);
  const PresentationPtr& p = doc.algebra;

  for (const auto& decl : ders) {
    std::map<std::size_t, Element> values;
    for (const auto& [g, g_at, node] : decl.values) {
      auto it = index.find(g);
      if (it == index.end()) throw ParseError(g_at, "undeclared generator '" + g + "'");
      if (values.count(it->second)) throw ParseError(g_at, "value on '" + g + "' given twice");
      const Element v = evaluate(node, p);
      check_degree(v, gens[it->second].degree + decl.degree, g_at, "value on '" + g + "'");
      values.emplace(it->second, v);
    }
    doc.derivations.push_back({decl.name, Derivation::from_values(p, p, decl.degree, values)});
  }

  for (const auto& decl : elems) {
    std::vector<const Node*> used;
    collect_names(decl.value, used);
    bool barred = false;
    for (const Node* n : used) {
      if (p->find(n->name)) continue;
      const std::string suffix = "_bar";
      if (n->name.size() > suffix.size() && n->name.ends_with(suffix) &&
          p->find(n->name.substr(0, n->name.size() - suffix.size()))) {
        barred = true;
        continue;
      }
      throw ParseError(n->at, "undeclared generator '" + n->name + "'");
    }
    if (barred && !doc.loop) {
      try {
        doc.loop = LoopModel::build(p);
      } catch (const SimplyConnectedError& e) {
        throw ParseError(decl.at, std::string("barred generators need a simply connected algebra: ") + e.what());
      }
    }
    const PresentationPtr& target = barred ? doc.loop->extended() : p;
    doc.elements.push_back({decl.name, evaluate(decl.value, target), barred});
  }
  return doc;
}

SourceDocument parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

Element parse_polynomial(const PresentationPtr& p, std::string_view text) {
  Parser ps(lex(text));
  const Node n = ps.expression();
  if (!ps.at_end()) ps.fail({"operator", "end of input"});
  return evaluate(n, p);
}

std::string serialize_document(const SourceDocument& doc) {
  std::ostringstream os;
  const Presentation& p = *doc.algebra;
  for (const auto& g : p.generators()) os << "gen " << g.name << ":" << g.degree << ";\n";
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!p.differential(i).empty()) os << "d " << p.generator(i).name << " = " << format_terms(p, p.differential(i)) << ";\n";
  for (const auto& [name, der] : doc.derivations) {
    os << "der " << name << " (";
    bool first = true;
    for (std::size_t g = 0; g < p.size(); ++g) {
      if (der.value_terms(g).empty()) continue;
      if (!first) os << ", ";
      first = false;
      os << p.generator(g).name << " -> " << format_terms(*der.codomain(), der.value_terms(g));
    }
    os << ") deg " << der.degree() << ";\n";
  }
  for (const auto& e : doc.elements) os << "elem " << e.name << " = " << e.value.to_string() << ";\n";
  return os.str();
}

bool structurally_equal(const SourceDocument& a, const SourceDocument& b) {
  const Presentation& pa = *a.algebra;
  const Presentation& pb = *b.algebra;
  if (!pa.same_generators(pb)) return false;
  for (std::size_t i = 0; i < pa.size(); ++i)
    if (pa.differential(i) != pb.differential(i)) return false;
  if (a.derivations.size() != b.derivations.size() || a.elements.size() != b.elements.size()) return false;
  for (std::size_t i = 0; i < a.derivations.size(); ++i) {
    const auto& x = a.derivations[i];
    const auto& y = b.derivations[i];
    if (x.name != y.name || x.value.degree() != y.value.degree() || x.value.values() != y.value.values()) return false;
  }
  for (std::size_t i = 0; i < a.elements.size(); ++i) {
    const auto& x = a.elements[i];
    const auto& y = b.elements[i];
    if (x.name != y.name || x.in_loop != y.in_loop || !(x.value == y.value)) return false;
  }
  return true;
}

}  // namespace cartan
