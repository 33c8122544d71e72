#ifndef TSA_SYNTAX_NAMES_H
#define TSA_SYNTAX_NAMES_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace tsa {

// Identifier policy shared by the parser, printer, and JSON reader.
//
// A variable is identified by (base, index) and displayed as the base with
// the index appended when nonzero. Bases contain lowercase letters and
// underscores only; a trailing digit run in source text is the index.
// Function variables are written with a leading apostrophe, except for a
// fixed word list accepted (and printed) bare.

// True for alpha..theta, the bare function-variable names.
bool is_fun_var_word(std::string_view name);

// Keywords and constant names; not usable as number-variable bases.
bool is_reserved_word(std::string_view name);

// Splits an identifier into (base, index); nullopt when the identifier is
// not a valid variable spelling (bad charset, empty base, index overflow).
struct SplitName {
  std::string base;
  std::uint32_t index;
};
std::optional<SplitName> split_var_name(std::string_view ident);

// Validity of an already-split variable name, e.g. from JSON input.
bool valid_var_base(std::string_view base);

}  // namespace tsa

#endif  // TSA_SYNTAX_NAMES_H
