#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace pts {

enum class TermKind { Var, Lam, App, Con };

class Term;
using TermRef = std::shared_ptr<const Term>;

// Untyped lambda term. Constants (uppercase-initial identifiers) are
// opaque values, inert under application.
class Term {
public:
  static TermRef var(std::string name);
  static TermRef con(std::string name);
  static TermRef lam(std::string binder, TermRef body);
  static TermRef app(TermRef fun, TermRef arg);

  TermKind kind() const { return kind_; }
  const std::string& name() const { return name_; }    // Var/Con/Lam binder
  const TermRef& body() const { return body_; }        // Lam
  const TermRef& fun() const { return fun_; }          // App
  const TermRef& arg() const { return arg_; }          // App

  bool isValue() const { return kind_ == TermKind::Lam || kind_ == TermKind::Con; }

private:
  TermKind kind_;
  std::string name_;
  TermRef body_, fun_, arg_;
  Term(TermKind k, std::string n, TermRef b, TermRef f, TermRef a)
      : kind_(k), name_(std::move(n)), body_(std::move(b)), fun_(std::move(f)),
        arg_(std::move(a)) {}
};

// Syntax: `\x. e` for abstraction (body extends right), juxtaposition
// for application (left-associative), parentheses. Lowercase-initial
// identifiers are variables, uppercase-initial are constants.
TermRef parseTerm(std::string_view text);
std::string printTerm(const TermRef& t);

std::set<std::string> freeVars(const TermRef& t);
std::set<std::string> allNames(const TermRef& t);
bool isClosed(const TermRef& t);

// Capture-avoiding substitution t[x := v].
TermRef substitute(const TermRef& t, const std::string& x, const TermRef& v);

bool alphaEqual(const TermRef& a, const TermRef& b);

// Deterministic fresh-name source: prefix0, prefix1, ... skipping any
// name in the avoid set.
class NameSupply {
public:
  NameSupply(std::string prefix, std::set<std::string> avoid)
      : prefix_(std::move(prefix)), avoid_(std::move(avoid)) {}
  std::string next();

private:
  std::string prefix_;
  std::set<std::string> avoid_;
  unsigned counter_ = 0;
};

}  // namespace pts
