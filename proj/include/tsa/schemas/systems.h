#ifndef TSA_SCHEMAS_SYSTEMS_H
#define TSA_SCHEMAS_SYSTEMS_H

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "tsa/kernel/eval.h"
#include "tsa/schemas/schemas.h"
#include "tsa/syntax/ast.h"
#include "tsa/syntax/constants.h"

namespace tsa {

// Which pairing apparatus a system's presentation centers on. Coded pairs
// render as products of prime powers in the shared language either way; the
// tag records the flavor for descriptions.
enum class Pairing { None, Jkl, LowerJ };

const char* pairing_name(Pairing p);
std::optional<Pairing> pairing_by_name(const std::string& name);

struct SystemFeatures {
  bool has_lambda = false;
  bool has_rec = false;
  bool has_function_vars = false;
  Pairing pairing = Pairing::None;

  bool operator==(const SystemFeatures&) const = default;
};

// One rewrite rule produced by define_prim_rec: occurrences of the named
// binary constant expand to a recursor term.
struct DefRule {
  std::string name;
  NumVar x;      // the parameter both defining terms may mention
  TermPtr base;  // value at zero, over {x}
  NumVar z0;     // previous-value variable of the step term
  NumVar z1;     // stage variable of the step term
  TermPtr step;  // next value, over {z0, z1, x}
};

// An immutable description of one formal system: which constants, term
// formers, and axiom schemata its language licenses. Extension operations
// return a new descriptor rather than mutating.
struct SystemDescriptor {
  std::string name;
  std::set<Const> constants;
  // When set, the language admits every registry-defined constant, not just
  // the ones listed in extension_names.
  bool open_registry = false;
  std::set<std::string> extension_names;
  SystemFeatures features;
  std::set<SchemaId> schemata;

  bool operator==(const SystemDescriptor&) const = default;
};

// The bundled descriptors, in presentation order:
// ia0, ha, ia1, ha1, m, el, bim, h, wkv.
const std::vector<SystemDescriptor>& builtin_systems();
std::optional<SystemDescriptor> system_by_name(const std::string& name);

// JSON round-trip for descriptors (the shape data/systems.json ships).
nlohmann::json to_json(const SystemDescriptor& sys);
SystemDescriptor system_from_json(const nlohmann::json& j);

// Whether every constant, term former, and binder in the expression is
// licensed by the descriptor.
bool term_in_language(const TermPtr& t, const SystemDescriptor& sys);
bool functor_in_language(const FunctorPtr& u, const SystemDescriptor& sys);
bool formula_in_language(const FormulaPtr& f, const SystemDescriptor& sys);
bool expr_in_language(const Expr& e, const SystemDescriptor& sys);

// Result of a definitional extension: the extended descriptor plus the
// rewrite rule for the new constant.
struct Extension {
  SystemDescriptor system;
  DefRule rule;
};

// Adds a binary constant name(a, b), defined by primitive recursion on b:
//   name(a, 0)     = base[x := a]
//   name(a, b + 1) = step[z0 := name(a, b), z1 := b, x := a]
// Requires the recursor and lambda abstraction in sys, defining terms inside
// sys's language over the allowed variables only, and an unused valid name.
// Throws LanguageError on any violation.
Extension define_prim_rec(const SystemDescriptor& sys, const std::string& name,
                          const NumVar& x, const TermPtr& base,
                          const NumVar& z0, const NumVar& z1,
                          const TermPtr& step);

// The recursor term a defined-constant application expands to, with the
// given arguments substituted in.
TermPtr expansion_term(const DefRule& rule, const TermPtr& a, const TermPtr& b);

// Rewrites every occurrence of the rules' constants (recursively, so rules
// may build on earlier ones) into base-language recursor terms. Throws
// LanguageError when a defined constant has no rule.
TermPtr expand_defined(const TermPtr& t, const std::vector<DefRule>& rules);
FunctorPtr expand_defined(const FunctorPtr& u,
                          const std::vector<DefRule>& rules);
FormulaPtr expand_defined(const FormulaPtr& f,
                          const std::vector<DefRule>& rules);

// Direct evaluation of a defined constant by running its recursion in the
// host; an independent route against evaluating the expansion. The rule list
// grounds defining terms that mention earlier defined constants.
Nat eval_defined(const DefRule& rule, const std::vector<DefRule>& rules,
                 const Nat& a, const Nat& b, const EvalLimits& limits = {});

}  // namespace tsa

#endif  // TSA_SCHEMAS_SYSTEMS_H
