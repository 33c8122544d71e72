#ifndef TSA_KERNEL_ENV_H
#define TSA_KERNEL_ENV_H

#include <map>

#include "json.hpp"
#include "tsa/kernel/nat.h"
#include "tsa/syntax/ast.h"

namespace tsa {

// Binds function variables to closed functors of the object language.
// Closedness keeps environments serializable and evaluation well-defined.
class Environment {
 public:
  // Throws UnboundVariableError if the functor has free variables.
  void bind(const FunVar& v, FunctorPtr functor);
  bool contains(const FunVar& v) const { return entries_.count(v) != 0; }
  // Throws UnboundVariableError when absent.
  const FunctorPtr& lookup(const FunVar& v) const;
  const std::map<FunVar, FunctorPtr>& entries() const { return entries_; }

 private:
  std::map<FunVar, FunctorPtr> entries_;
};

// Binds number variables to naturals.
class Assignment {
 public:
  void bind(const NumVar& v, Nat value) { entries_[v] = std::move(value); }
  bool contains(const NumVar& v) const { return entries_.count(v) != 0; }
  // Throws UnboundVariableError when absent.
  const Nat& lookup(const NumVar& v) const;
  const std::map<NumVar, Nat>& entries() const { return entries_; }

 private:
  std::map<NumVar, Nat> entries_;
};

// Joint serialization:
//   {"funvars": {"alpha": "lam x. x + 1"}, "numvars": {"x": 3, "y": "12"}}
// Functors are canonical text; numbers may be JSON integers or digit strings
// (strings carry values beyond the integer range of JSON readers).
struct Bindings {
  Environment env;
  Assignment asg;
};

Bindings bindings_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Bindings& b);

}  // namespace tsa

#endif  // TSA_KERNEL_ENV_H
