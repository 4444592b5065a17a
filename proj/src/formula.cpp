#include "pts/formula.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "pts/error.hpp"

namespace pts {

namespace {

bool isRegularAtomName(std::string_view s) {
  if (s.empty() || !(std::islower(static_cast<unsigned char>(s[0])))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return s != "top" && s != "bot";
}

}  // namespace

bool isFlatteningAtomName(std::string_view s) {
  if (s.size() < 2 || s[0] != '#') return false;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

bool isValidAtomName(std::string_view s) {
  return isRegularAtomName(s) || isFlatteningAtomName(s);
}

FormulaRef Formula::atom(std::string name) {
  if (!isValidAtomName(name)) throw Error("invalid atom name '" + name + "'");
  return FormulaRef(new Formula(Conn::Atom, std::move(name), nullptr, nullptr));
}
FormulaRef Formula::top() { return FormulaRef(new Formula(Conn::Top, "", nullptr, nullptr)); }
FormulaRef Formula::bot() { return FormulaRef(new Formula(Conn::Bot, "", nullptr, nullptr)); }
FormulaRef Formula::conj(FormulaRef l, FormulaRef r) {
  return FormulaRef(new Formula(Conn::And, "", std::move(l), std::move(r)));
}
FormulaRef Formula::disj(FormulaRef l, FormulaRef r) {
  return FormulaRef(new Formula(Conn::Or, "", std::move(l), std::move(r)));
}
FormulaRef Formula::imp(FormulaRef l, FormulaRef r) {
  return FormulaRef(new Formula(Conn::Imp, "", std::move(l), std::move(r)));
}

int compare(const Formula& a, const Formula& b) {
  if (a.conn() != b.conn()) return static_cast<int>(a.conn()) < static_cast<int>(b.conn()) ? -1 : 1;
  switch (a.conn()) {
    case Conn::Atom:
      return a.atomName().compare(b.atomName()) < 0   ? -1
             : a.atomName().compare(b.atomName()) > 0 ? 1
                                                      : 0;
    case Conn::Top:
    case Conn::Bot:
      return 0;
    default: {
      int c = compare(*a.lhs(), *b.lhs());
      if (c != 0) return c;
      return compare(*a.rhs(), *b.rhs());
    }
  }
}

bool equal(const Formula& a, const Formula& b) { return compare(a, b) == 0; }

namespace {

// Shared scanner for formulas and sequents.
struct FormulaLexer {
  std::string_view src;
  std::size_t pos = 0;

  void skipWs() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }
  bool eof() {
    skipWs();
    return pos >= src.size();
  }
  char peek() {
    skipWs();
    return pos < src.size() ? src[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

  // Token kinds: "atom", "top", "bot", "&", "|", "->", "(", ")", ",", "|-", ""
  std::string next(std::string* atomOut = nullptr) {
    skipWs();
    if (pos >= src.size()) return "";
    char c = src[pos];
    if (c == '#') fail("atom names may not use the reserved flattening prefix '#'");
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
        ++pos;
      std::string word(src.substr(start, pos - start));
      if (word == "top" || word == "bot") return word;
      if (!isRegularAtomName(word)) {
        pos = start;
        fail("invalid atom name '" + word + "'");
      }
      if (atomOut) *atomOut = word;
      return "atom";
    }
    switch (c) {
      case '&': ++pos; return "&";
      case '(': ++pos; return "(";
      case ')': ++pos; return ")";
      case ',': ++pos; return ",";
      case '|':
        if (pos + 1 < src.size() && src[pos + 1] == '-') {
          pos += 2;
          return "|-";
        }
        ++pos;
        return "|";
      case '-':
        if (pos + 1 < src.size() && src[pos + 1] == '>') {
          pos += 2;
          return "->";
        }
        fail("expected '->'");
      default:
        fail(std::string("unexpected character '") + c + "'");
    }
  }

  std::string peekToken() {
    std::size_t save = pos;
    std::string t = next();
    pos = save;
    return t;
  }
};

struct FormulaParser {
  FormulaLexer lex;

  FormulaRef parseUnit() {
    std::string atom;
    std::string t = lex.next(&atom);
    if (t == "atom") return Formula::atom(atom);
    if (t == "top") return Formula::top();
    if (t == "bot") return Formula::bot();
    if (t == "(") {
      FormulaRef f = parseImp();
      if (lex.next() != ")") lex.fail("expected ')'");
      return f;
    }
    lex.fail(t.empty() ? "unexpected end of input" : "expected a formula");
  }
  FormulaRef parseAnd() {
    FormulaRef f = parseUnit();
    while (lex.peekToken() == "&") {
      lex.next();
      f = Formula::conj(f, parseUnit());
    }
    return f;
  }
  FormulaRef parseOr() {
    FormulaRef f = parseAnd();
    while (lex.peekToken() == "|") {
      lex.next();
      f = Formula::disj(f, parseAnd());
    }
    return f;
  }
  FormulaRef parseImp() {
    FormulaRef f = parseOr();
    if (lex.peekToken() == "->") {
      lex.next();
      return Formula::imp(f, parseImp());
    }
    return f;
  }
};

}  // namespace

FormulaRef parseFormula(std::string_view text) {
  FormulaParser p{FormulaLexer{text}};
  FormulaRef f = p.parseImp();
  if (!p.lex.eof()) p.lex.fail("trailing input after formula");
  return f;
}

Sequent parseSequent(std::string_view text) {
  FormulaParser p{FormulaLexer{text}};
  Sequent s;
  if (p.lex.peekToken() != "|-") {
    s.antecedents.push_back(p.parseImp());
    while (p.lex.peekToken() == ",") {
      p.lex.next();
      s.antecedents.push_back(p.parseImp());
    }
  }
  if (p.lex.next() != "|-") p.lex.fail("expected '|-'");
  s.succedent = p.parseImp();
  if (!p.lex.eof()) p.lex.fail("trailing input after sequent");
  // Antecedents form a set.
  std::vector<FormulaRef> dedup;
  for (const auto& f : s.antecedents) {
    bool seen = false;
    for (const auto& g : dedup) seen = seen || equal(f, g);
    if (!seen) dedup.push_back(f);
  }
  s.antecedents = std::move(dedup);
  return s;
}

namespace {

int precedence(Conn c) {
  switch (c) {
    case Conn::Imp: return 1;
    case Conn::Or: return 2;
    case Conn::And: return 3;
    default: return 4;
  }
}

void printInto(const Formula& f, std::string& out, int parentPrec, bool rightOfSame) {
  int prec = precedence(f.conn());
  bool parens = prec < parentPrec || (prec == parentPrec && !rightOfSame && f.conn() == Conn::Imp) ||
                (prec == parentPrec && rightOfSame && f.conn() != Conn::Imp);
  switch (f.conn()) {
    case Conn::Atom: out += f.atomName(); return;
    case Conn::Top: out += "top"; return;
    case Conn::Bot: out += "bot"; return;
    default: break;
  }
  const char* op = f.conn() == Conn::And ? " & " : f.conn() == Conn::Or ? " | " : " -> ";
  if (parens) out += "(";
  printInto(*f.lhs(), out, prec, false);
  out += op;
  printInto(*f.rhs(), out, prec, true);
  if (parens) out += ")";
}

}  // namespace

std::string printFormula(const Formula& f) {
  std::string out;
  printInto(f, out, 0, true);
  return out;
}

std::string printSequent(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.antecedents.size(); ++i) {
    if (i) out += ", ";
    out += printFormula(s.antecedents[i]);
  }
  if (!s.antecedents.empty()) out += " ";
  out += "|- ";
  out += printFormula(s.succedent);
  return out;
}

namespace {

void collectPostOrder(const FormulaRef& f, std::vector<FormulaRef>& out,
                      std::unordered_set<std::string>& seen) {
  if (f->conn() == Conn::And || f->conn() == Conn::Or || f->conn() == Conn::Imp) {
    collectPostOrder(f->lhs(), out, seen);
    collectPostOrder(f->rhs(), out, seen);
  }
  std::string key = printFormula(f);
  if (seen.insert(key).second) out.push_back(f);
}

}  // namespace

std::vector<FormulaRef> subformulas(const Sequent& s) {
  std::vector<FormulaRef> out;
  std::unordered_set<std::string> seen;
  for (const auto& f : s.antecedents) collectPostOrder(f, out, seen);
  collectPostOrder(s.succedent, out, seen);
  return out;
}

std::vector<FormulaRef> subformulas(const FormulaRef& f) {
  std::vector<FormulaRef> out;
  std::unordered_set<std::string> seen;
  collectPostOrder(f, out, seen);
  return out;
}

}  // namespace pts
