#include "tsa/syntax/names.h"

#include <array>
#include <cctype>

#include "tsa/syntax/constants.h"

namespace tsa {

namespace {

constexpr std::array<std::string_view, 8> kFunVarWords = {
    "alpha", "beta", "gamma", "delta", "epsilon", "zeta", "eta", "theta"};

constexpr std::array<std::string_view, 4> kKeywords = {"lam", "rec", "forall",
                                                       "exists"};

}  // namespace

bool is_fun_var_word(std::string_view name) {
  for (auto w : kFunVarWords) {
    if (w == name) return true;
  }
  return false;
}

bool is_reserved_word(std::string_view name) {
  for (auto w : kKeywords) {
    if (w == name) return true;
  }
  return const_by_name(name).has_value();
}

bool valid_var_base(std::string_view base) {
  if (base.empty()) return false;
  for (char c : base) {
    if (!std::islower(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return std::islower(static_cast<unsigned char>(base[0])) != 0;
}

std::optional<SplitName> split_var_name(std::string_view ident) {
  std::size_t digits = 0;
  while (digits < ident.size() &&
         std::isdigit(static_cast<unsigned char>(ident[ident.size() - 1 - digits]))) {
    ++digits;
  }
  if (digits >= ident.size()) return std::nullopt;  // all digits or empty
  std::string_view base = ident.substr(0, ident.size() - digits);
  std::string_view suffix = ident.substr(ident.size() - digits);
  if (!valid_var_base(base)) return std::nullopt;
  std::uint64_t index = 0;
  for (char c : suffix) {
    index = index * 10 + static_cast<std::uint64_t>(c - '0');
    if (index > 0xffffffffULL) return std::nullopt;
  }
  // Disallow spellings the printer never produces ("x0", "x01"), so that
  // display names and (base, index) pairs correspond one to one.
  if (!suffix.empty() && (suffix[0] == '0' || index == 0)) return std::nullopt;
  return SplitName{std::string(base), static_cast<std::uint32_t>(index)};
}

}  // namespace tsa
