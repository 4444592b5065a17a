#include "pts/lambda.hpp"

#include <cctype>
#include <map>

#include "pts/error.hpp"

namespace pts {

TermRef Term::var(std::string name) {
  return TermRef(new Term(TermKind::Var, std::move(name), nullptr, nullptr, nullptr));
}
TermRef Term::con(std::string name) {
  return TermRef(new Term(TermKind::Con, std::move(name), nullptr, nullptr, nullptr));
}
TermRef Term::lam(std::string binder, TermRef body) {
  return TermRef(new Term(TermKind::Lam, std::move(binder), std::move(body), nullptr, nullptr));
}
TermRef Term::app(TermRef fun, TermRef arg) {
  return TermRef(new Term(TermKind::App, "", nullptr, std::move(fun), std::move(arg)));
}

namespace {

struct TermLexer {
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

  std::string ident() {
    skipWs();
    std::size_t start = pos;
    while (pos < src.size() &&
           (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_' ||
            src[pos] == '\''))
      ++pos;
    if (start == pos) fail("expected an identifier");
    return std::string(src.substr(start, pos - start));
  }
};

struct TermParser {
  TermLexer lex;

  TermRef parseAtomic() {
    char c = lex.peek();
    if (c == '(') {
      ++lex.pos;
      TermRef t = parseTermExpr();
      if (lex.peek() != ')') lex.fail("expected ')'");
      ++lex.pos;
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id = lex.ident();
      if (std::isupper(static_cast<unsigned char>(id[0]))) return Term::con(id);
      return Term::var(id);
    }
    lex.fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c +
                                                         "'");
  }

  TermRef parseTermExpr() {
    if (lex.peek() == '\\') {
      ++lex.pos;
      std::vector<std::string> binders;
      binders.push_back(lex.ident());
      while (lex.peek() != '.') binders.push_back(lex.ident());
      ++lex.pos;  // '.'
      TermRef body = parseTermExpr();
      for (auto it = binders.rbegin(); it != binders.rend(); ++it) {
        if (std::isupper(static_cast<unsigned char>((*it)[0])))
          lex.fail("binder '" + *it + "' must be a lowercase variable");
        body = Term::lam(*it, std::move(body));
      }
      return body;
    }
    TermRef t = parseAtomic();
    for (;;) {
      char c = lex.peek();
      if (c == '(' || std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        t = Term::app(std::move(t), parseAtomic());
      } else if (c == '\\') {
        t = Term::app(std::move(t), parseTermExpr());
        return t;  // a trailing lambda swallows the rest
      } else {
        return t;
      }
    }
  }
};

void printInto(const TermRef& t, std::string& out, bool funPos, bool argPos) {
  switch (t->kind()) {
    case TermKind::Var:
    case TermKind::Con:
      out += t->name();
      return;
    case TermKind::Lam: {
      bool parens = funPos || argPos;
      if (parens) out += "(";
      out += "\\" + t->name() + ". ";
      printInto(t->body(), out, false, false);
      if (parens) out += ")";
      return;
    }
    case TermKind::App: {
      bool parens = argPos;
      if (parens) out += "(";
      printInto(t->fun(), out, true, false);
      out += " ";
      printInto(t->arg(), out, false, true);
      if (parens) out += ")";
      return;
    }
  }
}

}  // namespace

TermRef parseTerm(std::string_view text) {
  TermParser p{TermLexer{text}};
  TermRef t = p.parseTermExpr();
  if (!p.lex.eof()) p.lex.fail("trailing input after term");
  return t;
}

std::string printTerm(const TermRef& t) {
  std::string out;
  printInto(t, out, false, false);
  return out;
}

namespace {

void collectFree(const TermRef& t, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (t->kind()) {
    case TermKind::Var:
      if (!bound.contains(t->name())) out.insert(t->name());
      return;
    case TermKind::Con:
      return;
    case TermKind::Lam: {
      bool inserted = bound.insert(t->name()).second;
      collectFree(t->body(), bound, out);
      if (inserted) bound.erase(t->name());
      return;
    }
    case TermKind::App:
      collectFree(t->fun(), bound, out);
      collectFree(t->arg(), bound, out);
      return;
  }
}

void collectNames(const TermRef& t, std::set<std::string>& out) {
  switch (t->kind()) {
    case TermKind::Var:
    case TermKind::Con:
      out.insert(t->name());
      return;
    case TermKind::Lam:
      out.insert(t->name());
      collectNames(t->body(), out);
      return;
    case TermKind::App:
      collectNames(t->fun(), out);
      collectNames(t->arg(), out);
      return;
  }
}

}  // namespace

std::set<std::string> freeVars(const TermRef& t) {
  std::set<std::string> bound, out;
  collectFree(t, bound, out);
  return out;
}

std::set<std::string> allNames(const TermRef& t) {
  std::set<std::string> out;
  collectNames(t, out);
  return out;
}

bool isClosed(const TermRef& t) { return freeVars(t).empty(); }

std::string NameSupply::next() {
  for (;;) {
    std::string candidate = prefix_ + std::to_string(counter_++);
    if (!avoid_.contains(candidate)) return candidate;
  }
}

TermRef substitute(const TermRef& t, const std::string& x, const TermRef& v) {
  switch (t->kind()) {
    case TermKind::Var:
      return t->name() == x ? v : t;
    case TermKind::Con:
      return t;
    case TermKind::App:
      return Term::app(substitute(t->fun(), x, v), substitute(t->arg(), x, v));
    case TermKind::Lam: {
      if (t->name() == x) return t;
      std::set<std::string> fv = freeVars(v);
      if (fv.contains(t->name())) {
        // Rename the binder away from the free variables of v.
        std::set<std::string> avoid = fv;
        for (const auto& n : allNames(t->body())) avoid.insert(n);
        avoid.insert(x);
        NameSupply fresh(t->name() + "_", std::move(avoid));
        std::string renamed = fresh.next();
        TermRef body = substitute(t->body(), t->name(), Term::var(renamed));
        return Term::lam(renamed, substitute(body, x, v));
      }
      return Term::lam(t->name(), substitute(t->body(), x, v));
    }
  }
  throw Error("unreachable term kind");
}

namespace {

bool alphaEq(const TermRef& a, const TermRef& b, std::map<std::string, int>& la,
             std::map<std::string, int>& lb, int depth) {
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case TermKind::Con:
      return a->name() == b->name();
    case TermKind::Var: {
      auto ia = la.find(a->name());
      auto ib = lb.find(b->name());
      if ((ia == la.end()) != (ib == lb.end())) return false;
      if (ia == la.end()) return a->name() == b->name();
      return ia->second == ib->second;
    }
    case TermKind::Lam: {
      auto savedA = la.find(a->name()) == la.end() ? -1 : la[a->name()];
      auto savedB = lb.find(b->name()) == lb.end() ? -1 : lb[b->name()];
      la[a->name()] = depth;
      lb[b->name()] = depth;
      bool ok = alphaEq(a->body(), b->body(), la, lb, depth + 1);
      if (savedA < 0) la.erase(a->name()); else la[a->name()] = savedA;
      if (savedB < 0) lb.erase(b->name()); else lb[b->name()] = savedB;
      return ok;
    }
    case TermKind::App:
      return alphaEq(a->fun(), b->fun(), la, lb, depth) &&
             alphaEq(a->arg(), b->arg(), la, lb, depth);
  }
  return false;
}

}  // namespace

bool alphaEqual(const TermRef& a, const TermRef& b) {
  std::map<std::string, int> la, lb;
  return alphaEq(a, b, la, lb, 0);
}

}  // namespace pts
