#include "pts/base.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "pts/error.hpp"
#include "pts/formula.hpp"

namespace pts {

namespace {

bool clauseLess(const RuleClause& a, const RuleClause& b) {
  if (a.premises != b.premises) return a.premises < b.premises;
  return a.conclusion < b.conclusion;
}

void sortUnique(std::vector<std::string>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

void AtomicRule::canonicalize() {
  for (auto& c : antecedents) sortUnique(c.premises);
  std::sort(antecedents.begin(), antecedents.end(), clauseLess);
  antecedents.erase(std::unique(antecedents.begin(), antecedents.end()), antecedents.end());
}

std::string printRule(const AtomicRule& r) {
  std::string out;
  for (std::size_t i = 0; i < r.antecedents.size(); ++i) {
    if (i) out += ", ";
    out += "([";
    const auto& c = r.antecedents[i];
    for (std::size_t j = 0; j < c.premises.size(); ++j) {
      if (j) out += ", ";
      out += c.premises[j];
    }
    out += "] => " + c.conclusion + ")";
  }
  if (!r.antecedents.empty()) out += " ";
  out += "=> " + r.conclusion;
  return out;
}

namespace {

// Scanner for the rule syntax; also accepts reserved "#k" atoms so that
// flattened bases can be re-ingested.
struct RuleLexer {
  std::string_view src;
  std::size_t pos = 0;

  void skipWs() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }
  bool eof() {
    skipWs();
    return pos >= src.size();
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

  bool tryConsume(std::string_view tok) {
    skipWs();
    if (src.substr(pos, tok.size()) == tok) {
      pos += tok.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view tok) {
    if (!tryConsume(tok)) fail("expected '" + std::string(tok) + "'");
  }

  std::string atom() {
    skipWs();
    std::size_t start = pos;
    if (pos < src.size() && src[pos] == '#') {
      ++pos;
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
    } else {
      while (pos < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
        ++pos;
    }
    std::string name(src.substr(start, pos - start));
    if (!isValidAtomName(name)) {
      pos = start;
      fail(name.empty() ? "expected an atom" : "invalid atom name '" + name + "'");
    }
    return name;
  }
};

}  // namespace

AtomicRule parseRule(std::string_view text) {
  RuleLexer lex{text};
  AtomicRule r;
  if (!lex.tryConsume("=>")) {
    for (;;) {
      lex.expect("(");
      lex.expect("[");
      RuleClause c;
      if (!lex.tryConsume("]")) {
        c.premises.push_back(lex.atom());
        while (lex.tryConsume(",")) c.premises.push_back(lex.atom());
        lex.expect("]");
      }
      lex.expect("=>");
      c.conclusion = lex.atom();
      lex.expect(")");
      r.antecedents.push_back(std::move(c));
      if (!lex.tryConsume(",")) break;
    }
    lex.expect("=>");
  }
  r.conclusion = lex.atom();
  if (!lex.eof()) lex.fail("trailing input after rule");
  r.canonicalize();
  return r;
}

Base::Base(std::vector<std::string> atomUniverse, std::vector<AtomicRule> rules)
    : atoms_(std::move(atomUniverse)), rules_(std::move(rules)) {
  sortUnique(atoms_);
  for (const auto& a : atoms_)
    if (!isValidAtomName(a)) throw Error("invalid atom name '" + a + "' in atom universe");
  for (auto& r : rules_) r.canonicalize();
  std::sort(rules_.begin(), rules_.end(),
            [](const AtomicRule& a, const AtomicRule& b) { return printRule(a) < printRule(b); });
  rules_.erase(std::unique(rules_.begin(), rules_.end()), rules_.end());
  for (const auto& r : rules_) {
    auto check = [&](const std::string& a) {
      if (!hasAtom(a))
        throw Error("rule '" + printRule(r) + "' mentions atom '" + a +
                    "' outside the atom universe");
    };
    check(r.conclusion);
    for (const auto& c : r.antecedents) {
      check(c.conclusion);
      for (const auto& p : c.premises) check(p);
    }
  }
}

bool Base::hasAtom(const std::string& name) const {
  return std::binary_search(atoms_.begin(), atoms_.end(), name);
}

std::size_t Base::atomIndex(const std::string& name) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), name);
  if (it == atoms_.end() || *it != name) throw Error("unknown atom '" + name + "'");
  return static_cast<std::size_t>(it - atoms_.begin());
}

bool Base::subsetOf(const Base& other) const {
  for (const auto& r : rules_) {
    if (std::find(other.rules_.begin(), other.rules_.end(), r) == other.rules_.end())
      return false;
  }
  return true;
}

Base Base::withRules(std::vector<AtomicRule> extra) const {
  std::vector<AtomicRule> all = rules_;
  for (auto& r : extra) all.push_back(std::move(r));
  return Base(atoms_, std::move(all));
}

Bits Base::atomSet(const std::vector<std::string>& names) const {
  Bits b(atoms_.size());
  for (const auto& n : names) b.set(atomIndex(n));
  return b;
}

Base promoteContext(const Base& b, const std::vector<std::string>& promoted) {
  std::vector<AtomicRule> axioms;
  for (const auto& p : promoted) {
    if (!b.hasAtom(p)) throw Error("unknown atom '" + p + "'");
    axioms.push_back(AtomicRule{{}, p});
  }
  return b.withRules(std::move(axioms));
}

namespace {

std::vector<std::string> parseAtomList(std::string_view text, std::size_t lineOffset) {
  std::vector<std::string> atoms;
  std::size_t pos = 0;
  auto skipWs = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skipWs();
  while (pos < text.size()) {
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != ',') ++pos;
    std::string name(text.substr(start, pos - start));
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
    std::size_t lead = 0;
    while (lead < name.size() && std::isspace(static_cast<unsigned char>(name[lead]))) ++lead;
    name = name.substr(lead);
    if (!isValidAtomName(name))
      throw ParseError("invalid atom name '" + name + "'", lineOffset + start);
    atoms.push_back(name);
    if (pos < text.size()) ++pos;  // the comma
    skipWs();
  }
  return atoms;
}

}  // namespace

Base parseBaseFile(std::string_view text) {
  std::optional<std::vector<std::string>> atoms;
  std::vector<AtomicRule> rules;
  std::size_t lineStart = 0;
  while (lineStart <= text.size()) {
    std::size_t lineEnd = text.find('\n', lineStart);
    if (lineEnd == std::string_view::npos) lineEnd = text.size();
    std::string_view line = text.substr(lineStart, lineEnd - lineStart);
    std::size_t first = 0;
    while (first < line.size() && std::isspace(static_cast<unsigned char>(line[first]))) ++first;
    if (first < line.size() && line[first] != '#') {
      std::string_view body = line.substr(first);
      if (body.starts_with("atoms:")) {
        if (atoms) throw ParseError("duplicate 'atoms:' line", lineStart + first);
        atoms = parseAtomList(body.substr(6), lineStart + first + 6);
      } else {
        if (!atoms) throw ParseError("expected 'atoms:' line before rules", lineStart + first);
        rules.push_back(parseRule(body));
      }
    }
    if (lineEnd == text.size()) break;
    lineStart = lineEnd + 1;
  }
  if (!atoms) throw ParseError("missing 'atoms:' line", 0);
  return Base(std::move(*atoms), std::move(rules));
}

std::string printBaseFile(const Base& b) {
  std::string out = "atoms: ";
  for (std::size_t i = 0; i < b.atoms().size(); ++i) {
    if (i) out += ", ";
    out += b.atoms()[i];
  }
  out += "\n";
  for (const auto& r : b.rules()) out += printRule(r) + "\n";
  return out;
}

}  // namespace pts
