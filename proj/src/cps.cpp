#include "pts/cps.hpp"

#include <cctype>

#include "pts/error.hpp"

namespace pts {

TypeRef SimpleType::base(std::string name) {
  return TypeRef(new SimpleType(TypeKind::Base, std::move(name), nullptr, nullptr));
}
TypeRef SimpleType::result() {
  return TypeRef(new SimpleType(TypeKind::Result, "", nullptr, nullptr));
}
TypeRef SimpleType::arrow(TypeRef from, TypeRef to) {
  return TypeRef(new SimpleType(TypeKind::Arrow, "", std::move(from), std::move(to)));
}

bool typeEqual(const TypeRef& a, const TypeRef& b) {
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case TypeKind::Base: return a->name() == b->name();
    case TypeKind::Result: return true;
    case TypeKind::Arrow:
      return typeEqual(a->from(), b->from()) && typeEqual(a->to(), b->to());
  }
  return false;
}

namespace {

struct TypeParser {
  std::string_view src;
  std::size_t pos = 0;

  void skipWs() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }
  char peek() {
    skipWs();
    return pos < src.size() ? src[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

  TypeRef parseAtomic() {
    char c = peek();
    if (c == '(') {
      ++pos;
      TypeRef t = parse();
      if (peek() != ')') fail("expected ')'");
      ++pos;
      return t;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("expected a type");
    std::size_t start = pos;
    while (pos < src.size() &&
           (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
      ++pos;
    std::string name(src.substr(start, pos - start));
    if (name == "R") return SimpleType::result();
    if (!std::islower(static_cast<unsigned char>(name[0])))
      fail("base types are lowercase names ('" + name + "')");
    return SimpleType::base(name);
  }

  TypeRef parse() {
    TypeRef t = parseAtomic();
    skipWs();
    if (pos + 1 < src.size() && src[pos] == '-' && src[pos + 1] == '>') {
      pos += 2;
      return SimpleType::arrow(std::move(t), parse());
    }
    return t;
  }
};

}  // namespace

TypeRef parseType(std::string_view text) {
  TypeParser p{text};
  TypeRef t = p.parse();
  p.skipWs();
  if (p.pos != text.size()) p.fail("trailing input after type");
  return t;
}

std::string printType(const TypeRef& t) {
  switch (t->kind()) {
    case TypeKind::Base: return t->name();
    case TypeKind::Result: return "R";
    case TypeKind::Arrow: {
      std::string from = printType(t->from());
      if (t->from()->kind() == TypeKind::Arrow) from = "(" + from + ")";
      return from + " -> " + printType(t->to());
    }
  }
  return "?";
}

TypeEnv parseTypeEnv(std::string_view text) {
  TypeEnv env;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t colon = text.find(':', pos);
    if (colon == std::string_view::npos) {
      // allow trailing whitespace
      for (std::size_t i = pos; i < text.size(); ++i)
        if (!std::isspace(static_cast<unsigned char>(text[i])))
          throw ParseError("expected 'name: type'", i);
      break;
    }
    std::string name;
    for (std::size_t i = pos; i < colon; ++i)
      if (!std::isspace(static_cast<unsigned char>(text[i]))) name += text[i];
    if (name.empty()) throw ParseError("missing name before ':'", pos);
    std::size_t comma = text.find(',', colon);
    if (comma == std::string_view::npos) comma = text.size();
    env[name] = parseType(text.substr(colon + 1, comma - colon - 1));
    pos = comma + 1;
  }
  return env;
}

// --- CPS transform --------------------------------------------------------

namespace {

TermRef cpsGo(const TermRef& t, NameSupply& ks, NameSupply& vs) {
  switch (t->kind()) {
    case TermKind::Var:
    case TermKind::Con: {
      std::string k = ks.next();
      return Term::lam(k, Term::app(Term::var(k), t));
    }
    case TermKind::Lam: {
      std::string k = ks.next();
      return Term::lam(k, Term::app(Term::var(k), Term::lam(t->name(), cpsGo(t->body(), ks, vs))));
    }
    case TermKind::App: {
      std::string k = ks.next();
      TermRef tf = cpsGo(t->fun(), ks, vs);
      std::string vf = vs.next();
      TermRef te = cpsGo(t->arg(), ks, vs);
      std::string ve = vs.next();
      TermRef inner = Term::app(Term::app(Term::var(vf), Term::var(ve)), Term::var(k));
      return Term::lam(
          k, Term::app(std::move(tf), Term::lam(vf, Term::app(std::move(te),
                                                              Term::lam(ve, std::move(inner))))));
    }
  }
  throw Error("unreachable term kind");
}

}  // namespace

TermRef cpsTransform(const TermRef& t) {
  std::set<std::string> avoid = allNames(t);
  NameSupply ks("k", avoid), vs("v", avoid);
  return cpsGo(t, ks, vs);
}

// --- Evaluation -----------------------------------------------------------

namespace {

// One leftmost CBV step; nullopt when t is a value or stuck.
std::optional<TermRef> stepCbv(const TermRef& t, bool& stuck, std::string& why) {
  if (t->kind() != TermKind::App) {
    if (t->kind() == TermKind::Var) {
      stuck = true;
      why = "free variable '" + t->name() + "'";
    }
    return std::nullopt;
  }
  if (!t->fun()->isValue()) {
    auto s = stepCbv(t->fun(), stuck, why);
    if (s) return Term::app(std::move(*s), t->arg());
    return std::nullopt;
  }
  if (!t->arg()->isValue()) {
    auto s = stepCbv(t->arg(), stuck, why);
    if (s) return Term::app(t->fun(), std::move(*s));
    return std::nullopt;
  }
  if (t->fun()->kind() == TermKind::Lam)
    return substitute(t->fun()->body(), t->fun()->name(), t->arg());
  stuck = true;
  why = "constant '" + t->fun()->name() + "' applied to an argument";
  return std::nullopt;
}

}  // namespace

EvalOutcome evalCbv(const TermRef& t, std::size_t budget, std::vector<std::string>* trace) {
  if (!isClosed(t)) throw Error("evalCbv requires a closed term");
  TermRef cur = t;
  std::size_t steps = 0;
  if (trace) trace->push_back(printTerm(cur));
  for (;;) {
    if (cur->isValue()) return {EvalOutcome::Status::Value, cur, steps, ""};
    if (steps >= budget) return {EvalOutcome::Status::Timeout, cur, steps, "budget exhausted"};
    bool stuck = false;
    std::string why;
    auto next = stepCbv(cur, stuck, why);
    if (!next) return {EvalOutcome::Status::Stuck, cur, steps, why};
    cur = std::move(*next);
    ++steps;
    if (trace) trace->push_back(printTerm(cur));
  }
}

EvalOutcome runCps(const TermRef& t, std::size_t budget, std::vector<std::string>* trace) {
  if (!isClosed(t)) throw Error("runCps requires a closed term");
  std::string halt = "Halt";
  std::set<std::string> names = allNames(t);
  while (names.contains(halt)) halt += "_";
  TermRef cur = Term::app(cpsTransform(t),
                          Term::lam("x", Term::app(Term::con(halt), Term::var("x"))));
  std::size_t steps = 0;
  if (trace) trace->push_back(printTerm(cur));
  for (;;) {
    if (cur->kind() == TermKind::App && cur->fun()->kind() == TermKind::Con &&
        cur->fun()->name() == halt && cur->arg()->isValue())
      return {EvalOutcome::Status::Value, cur->arg(), steps, ""};
    if (steps >= budget) return {EvalOutcome::Status::Timeout, cur, steps, "budget exhausted"};
    bool stuck = false;
    std::string why;
    auto next = stepCbv(cur, stuck, why);
    if (!next) return {EvalOutcome::Status::Stuck, cur, steps, why};
    cur = std::move(*next);
    ++steps;
    if (trace) trace->push_back(printTerm(cur));
  }
}

std::size_t visibleRedexCount(const TermRef& t) {
  switch (t->kind()) {
    case TermKind::Var:
    case TermKind::Con:
    case TermKind::Lam:
      return 0;  // no evaluation under lambda
    case TermKind::App: {
      std::size_t n = visibleRedexCount(t->fun()) + visibleRedexCount(t->arg());
      if (t->fun()->kind() == TermKind::Lam && t->arg()->isValue()) ++n;
      return n;
    }
  }
  return 0;
}

// --- Type transform and inference ------------------------------------------

namespace {

bool mentionsResult(const TypeRef& t) {
  switch (t->kind()) {
    case TypeKind::Result: return true;
    case TypeKind::Base: return false;
    case TypeKind::Arrow: return mentionsResult(t->from()) || mentionsResult(t->to());
  }
  return false;
}

}  // namespace

TypeRef cpsValueType(const TypeRef& t) {
  switch (t->kind()) {
    case TypeKind::Base:
      return t;
    case TypeKind::Arrow: {
      TypeRef a = cpsValueType(t->from());
      TypeRef b = cpsValueType(t->to());
      TypeRef r = SimpleType::result();
      return SimpleType::arrow(a, SimpleType::arrow(SimpleType::arrow(b, r), r));
    }
    case TypeKind::Result:
      throw Error("value-type transform is undefined on R");
  }
  throw Error("unreachable type kind");
}

TypeRef cpsType(const TypeRef& t) {
  if (mentionsResult(t)) throw Error("cpsType input may not mention the result type R");
  TypeRef r = SimpleType::result();
  return SimpleType::arrow(SimpleType::arrow(cpsValueType(t), r), r);
}

namespace {

// Plain unification over a small node pool. Base names and R are rigid;
// only fresh variables bind.
struct Infer {
  struct Node {
    enum class K { Var, Base, Res, Arr } k;
    std::string name;
    int a = -1, b = -1;
    int link = -1;  // Var only
  };
  std::vector<Node> pool;
  std::string error;

  int mk(Node n) {
    pool.push_back(std::move(n));
    return static_cast<int>(pool.size()) - 1;
  }
  int mkVar() { return mk({Node::K::Var, "", -1, -1, -1}); }
  int fromType(const TypeRef& t) {
    switch (t->kind()) {
      case TypeKind::Base: return mk({Node::K::Base, t->name(), -1, -1, -1});
      case TypeKind::Result: return mk({Node::K::Res, "", -1, -1, -1});
      case TypeKind::Arrow: {
        int a = fromType(t->from());
        int b = fromType(t->to());
        return mk({Node::K::Arr, "", a, b, -1});
      }
    }
    return -1;
  }

  int find(int t) {
    while (pool[t].k == Node::K::Var && pool[t].link >= 0) t = pool[t].link;
    return t;
  }

  bool occurs(int var, int t) {
    t = find(t);
    if (t == var) return true;
    if (pool[t].k == Node::K::Arr) return occurs(var, pool[t].a) || occurs(var, pool[t].b);
    return false;
  }

  bool unify(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return true;
    if (pool[x].k == Node::K::Var) {
      if (occurs(x, y)) {
        error = "infinite type";
        return false;
      }
      pool[x].link = y;
      return true;
    }
    if (pool[y].k == Node::K::Var) return unify(y, x);
    if (pool[x].k != pool[y].k) {
      error = "type mismatch";
      return false;
    }
    if (pool[x].k == Node::K::Base) {
      if (pool[x].name != pool[y].name) {
        error = "type mismatch: " + pool[x].name + " vs " + pool[y].name;
        return false;
      }
      return true;
    }
    if (pool[x].k == Node::K::Arr)
      return unify(pool[x].a, pool[y].a) && unify(pool[x].b, pool[y].b);
    return true;  // Res vs Res
  }

  int inferTerm(const TermRef& t, const TypeEnv& env,
                std::vector<std::pair<std::string, int>>& scope) {
    switch (t->kind()) {
      case TermKind::Var:
      case TermKind::Con: {
        for (auto it = scope.rbegin(); it != scope.rend(); ++it)
          if (it->first == t->name()) return it->second;
        auto found = env.find(t->name());
        if (found == env.end()) {
          error = "unbound identifier '" + t->name() + "'";
          return -1;
        }
        return fromType(found->second);
      }
      case TermKind::Lam: {
        auto found = env.find(t->name());
        int binder = found != env.end() ? fromType(found->second) : mkVar();
        scope.emplace_back(t->name(), binder);
        int body = inferTerm(t->body(), env, scope);
        scope.pop_back();
        if (body < 0) return -1;
        return mk({Node::K::Arr, "", binder, body, -1});
      }
      case TermKind::App: {
        int f = inferTerm(t->fun(), env, scope);
        if (f < 0) return -1;
        int a = inferTerm(t->arg(), env, scope);
        if (a < 0) return -1;
        int r = mkVar();
        int want = mk({Node::K::Arr, "", a, r, -1});
        if (!unify(f, want)) return -1;
        return r;
      }
    }
    error = "unreachable term kind";
    return -1;
  }

  std::optional<TypeRef> resolve(int t) {
    t = find(t);
    switch (pool[t].k) {
      case Node::K::Var: return std::nullopt;  // not ground
      case Node::K::Base: return SimpleType::base(pool[t].name);
      case Node::K::Res: return SimpleType::result();
      case Node::K::Arr: {
        auto a = resolve(pool[t].a);
        if (!a) return std::nullopt;
        auto b = resolve(pool[t].b);
        if (!b) return std::nullopt;
        return SimpleType::arrow(std::move(*a), std::move(*b));
      }
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<TypeRef> typecheck(const TypeEnv& env, const TermRef& t, std::string* error) {
  Infer inf;
  std::vector<std::pair<std::string, int>> scope;
  int root = inf.inferTerm(t, env, scope);
  if (root < 0) {
    if (error) *error = inf.error;
    return std::nullopt;
  }
  auto resolved = inf.resolve(root);
  if (!resolved && error)
    *error = "type is not uniquely determined; add bindings for the binders";
  return resolved;
}

bool typechecksAt(const TypeEnv& env, const TermRef& t, const TypeRef& expected) {
  Infer inf;
  std::vector<std::pair<std::string, int>> scope;
  int root = inf.inferTerm(t, env, scope);
  if (root < 0) return false;
  return inf.unify(root, inf.fromType(expected));
}

}  // namespace pts
