#include "kcontact/cli/dsl.hpp"

#include <cctype>
#include <set>

namespace kc::dsl {

namespace {

enum class Tok { ident, dual, integer, string, punct, arrow, newline, end };

struct Token {
  Tok type = Tok::end;
  std::string text;
  int line = 1, column = 1;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  int line = 1, col = 1, depth = 0;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < s.size()) {
    const char c = s[i];
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
      continue;
    }
    if (c == '\n') {
      if (depth == 0) out.push_back({Tok::newline, "\n", line, col});
      advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token t{Tok::end, "", line, col};
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      t.text = s.substr(i, j - i);
      t.type = Tok::ident;
      // NAME* is a dual covector unless the '*' is followed by something a product could start with.
      if (j < s.size() && s[j] == '*' && !(j + 1 < s.size() && (ident_char(s[j + 1]) || s[j + 1] == '('))) {
        t.type = Tok::dual;
        advance(j + 1 - i);
      } else {
        advance(j - i);
      }
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      t.type = Tok::integer;
      t.text = s.substr(i, j - i);
      advance(j - i);
    } else if (c == '"') {
      std::size_t j = i + 1;
      while (j < s.size() && s[j] != '"' && s[j] != '\n') ++j;
      if (j >= s.size() || s[j] != '"') throw ParseError("syntax-error", line, col, "unterminated string");
      t.type = Tok::string;
      t.text = s.substr(i + 1, j - i - 1);
      advance(j + 1 - i);
    } else if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      t.type = Tok::arrow;
      t.text = "->";
      advance(2);
    } else if (std::string("{}[](),:;=+-*/^").find(c) != std::string::npos) {
      t.type = Tok::punct;
      t.text = std::string(1, c);
      if (c == '(' || c == '[') ++depth;
      if ((c == ')' || c == ']') && depth > 0) --depth;
      advance(1);
    } else {
      throw ParseError("syntax-error", line, col, std::string("unexpected character '") + c + "'");
    }
    out.push_back(std::move(t));
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Document document() {
    Document doc;
    skip_newlines();
    while (peek().type != Tok::end) {
      const Token& t = peek();
      if (is_word("algebra")) {
        doc.algebras.push_back(algebra());
      } else if (is_word("morphism")) {
        doc.morphisms.push_back(morphism());
      } else {
        fail(t, "expected 'algebra' or 'morphism'");
      }
      skip_newlines();
    }
    return doc;
  }

  Expr lone_expression() {
    skip_newlines();
    Expr e = expr();
    skip_newlines();
    if (peek().type != Tok::end) fail(peek(), "trailing input after expression");
    return e;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  Token next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

  [[noreturn]] static void fail(const Token& t, const std::string& msg) {
    throw ParseError("syntax-error", t.line, t.column, msg + (t.type == Tok::end ? " at end of input" : " near '" + (t.type == Tok::newline ? std::string("newline") : t.text) + "'"));
  }

  bool is_punct(const char* p) const { return peek().type == Tok::punct && peek().text == p; }
  bool is_word(const char* w) const { return peek().type == Tok::ident && peek().text == w; }
  bool is_item(const char* w) const {
    return is_word(w) && peek(1).type == Tok::punct && peek(1).text == ":";
  }

  void expect_punct(const char* p) {
    if (!is_punct(p)) fail(peek(), std::string("expected '") + p + "'");
    next();
  }
  std::string expect_ident() {
    if (peek().type != Tok::ident) fail(peek(), "expected an identifier");
    return next().text;
  }
  int expect_int() {
    if (peek().type != Tok::integer) fail(peek(), "expected an integer");
    const Token t = next();
    if (t.text.size() > 6) fail(t, "integer too large");
    return std::stoi(t.text);
  }
  void skip_newlines() {
    while (peek().type == Tok::newline) next();
  }
  void end_of_item() {
    if (peek().type == Tok::newline) {
      skip_newlines();
      return;
    }
    if (is_punct("}") || peek().type == Tok::end) return;
    fail(peek(), "expected end of line");
  }

  // expr := term (('+' | '-') term)*
  Expr expr() {
    Expr left = term();
    while (is_punct("+") || is_punct("-")) {
      const Token op = next();
      Expr right = term();
      left = binary(op.text == "+" ? Expr::Kind::add : Expr::Kind::sub, std::move(left), std::move(right), op);
    }
    return left;
  }

  bool starts_atom() const {
    const Token& t = peek();
    return t.type == Tok::ident || t.type == Tok::dual || t.type == Tok::integer || (t.type == Tok::punct && t.text == "(");
  }

  // term := unary (('*' | '/' | '^') unary | unary)*   -- juxtaposition multiplies
  Expr term() {
    Expr left = unary();
    for (;;) {
      if (is_punct("*") || is_punct("/") || is_punct("^")) {
        const Token op = next();
        Expr right = unary();
        const Expr::Kind k = op.text == "*" ? Expr::Kind::mul : op.text == "/" ? Expr::Kind::div : Expr::Kind::wedge;
        left = binary(k, std::move(left), std::move(right), op);
      } else if (starts_atom()) {
        const Token at = peek();
        Expr right = unary();
        left = binary(Expr::Kind::mul, std::move(left), std::move(right), at);
      } else {
        return left;
      }
    }
  }

  Expr unary() {
    if (is_punct("-")) {
      const Token op = next();
      Expr e;
      e.kind = Expr::Kind::neg;
      e.line = op.line;
      e.column = op.column;
      e.args.push_back(unary());
      return e;
    }
    return power();
  }

  // power := atom ('^' INT)*
  Expr power() {
    Expr base = atom();
    while (is_punct("^") && peek(1).type == Tok::integer) {
      const Token op = next();
      const int n = expect_int();
      Expr e;
      e.kind = Expr::Kind::pow;
      e.exponent = n;
      e.line = op.line;
      e.column = op.column;
      e.args.push_back(std::move(base));
      base = std::move(e);
    }
    return base;
  }

  Expr atom() {
    const Token t = peek();
    Expr e;
    e.line = t.line;
    e.column = t.column;
    if (t.type == Tok::integer) {
      next();
      e.kind = Expr::Kind::number;
      e.value = Integer(t.text);
      return e;
    }
    if (t.type == Tok::ident || t.type == Tok::dual) {
      next();
      e.kind = t.type == Tok::ident ? Expr::Kind::ident : Expr::Kind::dual;
      e.name = t.text;
      return e;
    }
    if (is_punct("(")) {
      next();
      Expr inner = expr();
      expect_punct(")");
      return inner;
    }
    fail(t, "expected a number, name or '('");
  }

  static Expr binary(Expr::Kind k, Expr a, Expr b, const Token& at) {
    Expr e;
    e.kind = k;
    e.line = at.line;
    e.column = at.column;
    e.args.push_back(std::move(a));
    e.args.push_back(std::move(b));
    return e;
  }

  AlgebraDecl algebra() {
    next();  // 'algebra'
    AlgebraDecl a;
    a.name = expect_ident();
    skip_newlines();
    expect_punct("{");
    skip_newlines();
    std::set<std::pair<std::string, std::string>> seen;
    while (!is_punct("}")) {
      const Token start = peek();
      if (start.type == Tok::end) fail(start, "missing '}'");
      if (is_item("params")) {
        next();
        next();
        if (a.parameter) fail(start, "parameters declared twice");
        a.parameter = expect_ident();
        if (is_punct(",") || peek().type == Tok::ident)
          throw ParseError("multi-parameter", start.line, start.column, "only one formal parameter is supported");
        end_of_item();
      } else if (is_item("basis")) {
        next();
        next();
        if (!a.basis.empty()) fail(start, "basis declared twice");
        while (peek().type == Tok::ident) {
          a.basis.push_back(next().text);
          if (is_punct(",")) next();
        }
        if (a.basis.empty()) fail(peek(), "expected basis names");
        end_of_item();
      } else if (is_item("brackets")) {
        next();
        next();
        skip_newlines();
      } else if (is_punct("[")) {
        BracketDecl b;
        b.line = start.line;
        next();
        b.left = expect_ident();
        expect_punct(",");
        b.right = expect_ident();
        expect_punct("]");
        expect_punct("=");
        b.value = expr();
        if (b.left == b.right && !(b.value.kind == Expr::Kind::number && b.value.value == 0))
          throw ParseError("illegal-bracket", start.line, start.column,
                           "[" + b.left + ", " + b.left + "] must be absent or 0");
        const auto key = std::minmax(b.left, b.right);
        if (!seen.insert(key).second)
          throw ParseError("duplicate-bracket", start.line, start.column,
                           "bracket [" + b.left + ", " + b.right + "] given twice");
        a.brackets.push_back(std::move(b));
        end_of_item();
      } else if (is_item("contact")) {
        next();
        next();
        a.contact = expr();
        end_of_item();
      } else if (is_item("phi")) {
        next();
        next();
        for (;;) {
          skip_newlines();
          std::string from = expect_ident();
          if (peek().type != Tok::arrow) fail(peek(), "expected '->'");
          next();
          a.phi.emplace_back(std::move(from), expr());
          if (!is_punct(",")) break;
          next();
        }
        end_of_item();
      } else if (is_item("metric")) {
        next();
        next();
        MetricDecl m;
        if (is_word("identity")) {
          next();
        } else {
          m.identity = false;
          expect_punct("[");
          std::vector<Expr> row;
          for (;;) {
            row.push_back(expr());
            if (is_punct(",")) {
              next();
            } else if (is_punct(";")) {
              next();
              m.rows.push_back(std::move(row));
              row.clear();
            } else {
              break;
            }
          }
          m.rows.push_back(std::move(row));
          expect_punct("]");
        }
        a.metric = std::move(m);
        end_of_item();
      } else if (is_item("symplectic")) {
        next();
        next();
        a.symplectic = expr();
        end_of_item();
      } else {
        fail(start, "expected an algebra item (params, basis, [X,Y] = ..., contact, phi, metric, symplectic)");
      }
    }
    next();  // '}'
    return a;
  }

  MorphismDecl morphism() {
    next();  // 'morphism'
    MorphismDecl m;
    m.name = expect_ident();
    skip_newlines();
    expect_punct("{");
    skip_newlines();
    while (!is_punct("}")) {
      const Token start = peek();
      if (start.type == Tok::end) fail(start, "missing '}'");
      if (is_item("source")) {
        next();
        next();
        if (!is_word("exterior")) fail(peek(), "expected 'exterior'");
        next();
        while (peek().type == Tok::ident) {
          SourceGenerator g;
          g.name = next().text;
          expect_punct(":");
          g.degree = expect_int();
          if (is_punct("^")) {
            next();
            g.nilpotency = expect_int();
          }
          m.source.push_back(std::move(g));
          if (is_punct(",")) next();
        }
        end_of_item();
      } else if (is_item("target")) {
        next();
        next();
        m.target_kind = expect_ident();
        if (m.target_kind != "ce" && m.target_kind != "tievsky") fail(start, "target must be 'ce' or 'tievsky'");
        if (peek().type != Tok::string) fail(peek(), "expected a quoted file name");
        m.target_path = next().text;
        end_of_item();
      } else if (is_item("identify")) {
        next();
        next();
        for (;;) {
          skip_newlines();
          std::string name = expect_ident();
          expect_punct("=");
          m.identify.emplace_back(std::move(name), expr());
          if (!is_punct(",")) break;
          next();
        }
        end_of_item();
      } else if (peek().type == Tok::ident && peek(1).type == Tok::arrow) {
        std::string name = next().text;
        next();
        m.images.emplace_back(std::move(name), expr());
        end_of_item();
      } else {
        fail(start, "expected a morphism item (source, target, identify, NAME -> ...)");
      }
    }
    next();
    return m;
  }
};

// Name checks. An unknown plain identifier inside a product is reported as an
// undeclared parameter, elsewhere as an unknown identifier.
struct NameCheck {
  std::set<std::string> names;  // plain identifiers allowed
  std::set<std::string> duals;  // NAME* allowed
  std::optional<std::string> parameter;

  void run(const Expr& e, bool in_product = false) const {
    switch (e.kind) {
      case Expr::Kind::ident:
        if (parameter && e.name == *parameter) return;
        if (names.count(e.name)) return;
        if (in_product)
          throw ParseError("parameter-used-but-not-declared", e.line, e.column,
                           "'" + e.name + "' is used as a coefficient but is not a declared parameter");
        throw ParseError("unknown-identifier", e.line, e.column, "unknown name '" + e.name + "'");
      case Expr::Kind::dual:
        if (duals.count(e.name)) return;
        throw ParseError("unknown-identifier", e.line, e.column, "unknown covector '" + e.name + "*'");
      case Expr::Kind::mul:
      case Expr::Kind::div:
      case Expr::Kind::wedge:
        for (const auto& a : e.args) run(a, true);
        return;
      default:
        for (const auto& a : e.args) run(a, in_product);
    }
  }
};

void check_names(const AlgebraDecl& a) {
  std::set<std::string> basis;
  for (const auto& b : a.basis) {
    if (!basis.insert(b).second) throw ParseError("duplicate-name", 0, 0, "basis name '" + b + "' repeated");
    if (a.parameter && b == *a.parameter)
      throw ParseError("duplicate-name", 0, 0, "'" + b + "' is both a basis name and the parameter");
  }
  const NameCheck vectors{basis, {}, a.parameter};
  const NameCheck covectors{{}, basis, a.parameter};
  const NameCheck scalars{{}, {}, a.parameter};
  for (const auto& br : a.brackets) {
    for (const auto* side : {&br.left, &br.right})
      if (!basis.count(*side))
        throw ParseError("unknown-identifier", br.line, 1, "bracket uses unknown basis name '" + *side + "'");
    vectors.run(br.value);
  }
  if (a.contact) covectors.run(*a.contact);
  if (a.symplectic) covectors.run(*a.symplectic);
  std::set<std::string> phi_seen;
  for (const auto& [from, to] : a.phi) {
    if (!basis.count(from)) throw ParseError("unknown-identifier", to.line, to.column, "phi of unknown name '" + from + "'");
    if (!phi_seen.insert(from).second) throw ParseError("duplicate-name", to.line, to.column, "phi(" + from + ") given twice");
    vectors.run(to);
  }
  if (a.metric)
    for (const auto& row : a.metric->rows)
      for (const auto& e : row) scalars.run(e);
}

enum Prec { kAdd = 1, kMul = 2, kNeg = 3, kPow = 4, kAtom = 5 };

int prec(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::add:
    case Expr::Kind::sub: return kAdd;
    case Expr::Kind::mul:
    case Expr::Kind::wedge:
    case Expr::Kind::div: return kMul;
    case Expr::Kind::neg: return kNeg;
    case Expr::Kind::pow: return kPow;
    default: return kAtom;
  }
}

std::string show(const Expr& e, int need) {
  std::string s;
  switch (e.kind) {
    case Expr::Kind::number: s = e.value.get_str(); break;
    case Expr::Kind::ident: s = e.name; break;
    case Expr::Kind::dual: s = e.name + "*"; break;
    case Expr::Kind::neg: s = "-" + show(e.args[0], kNeg); break;
    case Expr::Kind::pow: s = show(e.args[0], kAtom) + "^" + std::to_string(e.exponent); break;
    case Expr::Kind::add:
    case Expr::Kind::sub:
      s = show(e.args[0], kAdd) + (e.kind == Expr::Kind::add ? " + " : " - ") + show(e.args[1], kAdd + 1);
      break;
    case Expr::Kind::mul:
    case Expr::Kind::div:
    case Expr::Kind::wedge: {
      std::string right = show(e.args[1], kMul + 1);
      // "x ^ 2" would read as a power
      if (e.kind == Expr::Kind::wedge && std::isdigit(static_cast<unsigned char>(right[0]))) right = "(" + right + ")";
      const char* op = e.kind == Expr::Kind::mul ? " * " : e.kind == Expr::Kind::div ? " / " : " ^ ";
      s = show(e.args[0], kMul) + op + right;
      break;
    }
  }
  return prec(e) < need ? "(" + s + ")" : s;
}

}  // namespace

Document parse(const std::string& text) {
  Parser p(lex(text));
  Document doc = p.document();
  for (const auto& a : doc.algebras) check_names(a);
  for (const auto& m : doc.morphisms) {
    std::set<std::string> gens;
    for (const auto& g : m.source) {
      if (!gens.insert(g.name).second) throw ParseError("duplicate-name", 0, 0, "source generator '" + g.name + "' repeated");
      if (g.degree <= 0) throw ParseError("invalid-degree", 0, 0, "generator '" + g.name + "' needs positive degree");
    }
    if (m.target_kind.empty()) throw ParseError("syntax-error", 0, 0, "morphism '" + m.name + "' has no target");
    std::set<std::string> mapped;
    for (const auto& [name, e] : m.images) {
      if (!gens.count(name)) throw ParseError("unknown-identifier", e.line, e.column, "'" + name + "' is not a source generator");
      if (!mapped.insert(name).second) throw ParseError("duplicate-name", e.line, e.column, "image of '" + name + "' given twice");
    }
  }
  return doc;
}

Expr parse_expression(const std::string& text) { return Parser(lex(text)).lone_expression(); }

std::string print(const Expr& e) { return show(e, 0); }

std::string print(const Document& doc) {
  std::string out;
  for (const auto& a : doc.algebras) {
    out += "algebra " + a.name + " {\n";
    if (a.parameter) out += "  params: " + *a.parameter + "\n";
    out += "  basis:";
    for (const auto& b : a.basis) out += " " + b;
    out += "\n";
    if (!a.brackets.empty()) out += "  brackets:\n";
    for (const auto& b : a.brackets) out += "    [" + b.left + ", " + b.right + "] = " + print(b.value) + "\n";
    if (a.contact) out += "  contact: " + print(*a.contact) + "\n";
    if (!a.phi.empty()) {
      out += "  phi:";
      for (std::size_t i = 0; i < a.phi.size(); ++i)
        out += (i ? ", " : " ") + a.phi[i].first + " -> " + print(a.phi[i].second);
      out += "\n";
    }
    if (a.metric) {
      out += "  metric: ";
      if (a.metric->identity) {
        out += "identity";
      } else {
        out += "[";
        for (std::size_t r = 0; r < a.metric->rows.size(); ++r) {
          if (r) out += "; ";
          for (std::size_t c = 0; c < a.metric->rows[r].size(); ++c) out += (c ? ", " : "") + print(a.metric->rows[r][c]);
        }
        out += "]";
      }
      out += "\n";
    }
    if (a.symplectic) out += "  symplectic: " + print(*a.symplectic) + "\n";
    out += "}\n";
  }
  for (const auto& m : doc.morphisms) {
    out += "morphism " + m.name + " {\n  source: exterior";
    for (const auto& g : m.source) {
      out += " " + g.name + ":" + std::to_string(g.degree);
      if (g.nilpotency) out += "^" + std::to_string(g.nilpotency);
    }
    out += "\n  target: " + m.target_kind + " \"" + m.target_path + "\"\n";
    if (!m.identify.empty()) {
      out += "  identify:";
      for (std::size_t i = 0; i < m.identify.size(); ++i)
        out += (i ? ", " : " ") + m.identify[i].first + " = " + print(m.identify[i].second);
      out += "\n";
    }
    for (const auto& [name, e] : m.images) out += "  " + name + " -> " + print(e) + "\n";
    out += "}\n";
  }
  return out;
}

}  // namespace kc::dsl
