#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pts/lambda.hpp"

namespace pts {

// --- Simple types ---------------------------------------------------------

enum class TypeKind { Base, Arrow, Result };

class SimpleType;
using TypeRef = std::shared_ptr<const SimpleType>;

// Base types are lowercase names; the distinguished answer type R is its
// own constructor, not a base name.
class SimpleType {
public:
  static TypeRef base(std::string name);
  static TypeRef result();
  static TypeRef arrow(TypeRef from, TypeRef to);

  TypeKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const TypeRef& from() const { return from_; }
  const TypeRef& to() const { return to_; }

private:
  TypeKind kind_;
  std::string name_;
  TypeRef from_, to_;
  SimpleType(TypeKind k, std::string n, TypeRef f, TypeRef t)
      : kind_(k), name_(std::move(n)), from_(std::move(f)), to_(std::move(t)) {}
};

bool typeEqual(const TypeRef& a, const TypeRef& b);
// "a -> b" right-associative; "R" is the result type.
TypeRef parseType(std::string_view text);
std::string printType(const TypeRef& t);

using TypeEnv = std::map<std::string, TypeRef>;
// "C: a, f: a -> b"
TypeEnv parseTypeEnv(std::string_view text);

// --- CPS transform --------------------------------------------------------

// Call-by-value transform:
//   [x]     = \k. k x            (likewise for constants)
//   [\x. e] = \k. k (\x. [e])
//   [f e]   = \k. [f] (\vf. [e] (\ve. vf ve k))
// Continuation binders k0, k1, ... and value binders v0, v1, ... are
// fresh against every name in the input.
TermRef cpsTransform(const TermRef& t);

// --- Call-by-value evaluation ---------------------------------------------

struct EvalOutcome {
  enum class Status { Value, Timeout, Stuck };
  Status status = Status::Value;
  TermRef term;       // final value, or the term where evaluation stopped
  std::size_t steps = 0;
  std::string detail;  // stuck reason
};

// Leftmost call-by-value reduction, never under a lambda. The budget
// bounds the number of beta steps. An optional trace receives the term
// after every step.
EvalOutcome evalCbv(const TermRef& t, std::size_t budget,
                    std::vector<std::string>* trace = nullptr);

// Runs [t] applied to a halting continuation \x. Halt x and reports the
// value delivered to Halt.
EvalOutcome runCps(const TermRef& t, std::size_t budget,
                   std::vector<std::string>* trace = nullptr);

// CBV redexes reachable without descending under a lambda.
std::size_t visibleRedexCount(const TermRef& t);

// --- Type transform and checking ------------------------------------------

// Value-type transform: base* = base, (A -> B)* = A* -> (B* -> R) -> R.
TypeRef cpsValueType(const TypeRef& t);
// A maps to (A* -> R) -> R; rejects types mentioning R.
TypeRef cpsType(const TypeRef& t);

// Principal-type inference for simple types. The environment types
// constants and free variables; binder names present in the environment
// are taken at their declared (rigid) type. Fails when no type exists or
// when the principal type is not ground.
std::optional<TypeRef> typecheck(const TypeEnv& env, const TermRef& t,
                                 std::string* error = nullptr);
// Checks the term against an expected type (the expected type is rigid).
bool typechecksAt(const TypeEnv& env, const TermRef& t, const TypeRef& expected);

}  // namespace pts
