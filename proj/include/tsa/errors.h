#ifndef TSA_ERRORS_H
#define TSA_ERRORS_H

#include <stdexcept>
#include <string>

namespace tsa {

// Base for all library errors. CLI maps subclasses to exit codes:
// input errors -> 1, semantic errors -> 2, internal invariant violations -> 3.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text, JSON, or flags.
struct ParseError : Error {
  using Error::Error;
};

// Expression of the wrong sort where a term/functor/formula was expected,
// or an arity mismatch in constant application.
struct SortError : Error {
  using Error::Error;
};

// Evaluation reached a variable with no binding in the environment/assignment.
struct UnboundVariableError : Error {
  using Error::Error;
};

// Evaluation reached a constant that has a signature but no semantics.
struct UnsupportedConstantError : Error {
  using Error::Error;
};

// A decidable-fragment operation was applied outside the decidable fragment.
struct DecidabilityError : Error {
  using Error::Error;
};

// A witness search exhausted its cap.
struct CapExceededError : Error {
  using Error::Error;
};

// A schema instantiation violated a side condition; `condition` names it.
struct SideConditionError : Error {
  explicit SideConditionError(const std::string& condition)
      : Error("side condition violated: " + condition), condition(condition) {}
  std::string condition;
};

// A formula or operation is not available in the requested system's language.
struct LanguageError : Error {
  using Error::Error;
};

// Broken internal invariant; indicates a bug, not bad input.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace tsa

#endif  // TSA_ERRORS_H
