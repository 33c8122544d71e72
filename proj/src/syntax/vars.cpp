#include "tsa/syntax/vars.h"

#include <algorithm>

#include "tsa/errors.h"

namespace tsa {

std::string display_name(const NumVar& v) {
  return v.index == 0 ? v.name : v.name + std::to_string(v.index);
}

std::string display_name(const FunVar& v) {
  return v.index == 0 ? v.name : v.name + std::to_string(v.index);
}

void VarSets::merge(const VarSets& other) {
  nums.insert(other.nums.begin(), other.nums.end());
  funs.insert(other.funs.begin(), other.funs.end());
}

VarOrdering::VarOrdering(std::vector<NumVar> vars) : vars_(std::move(vars)) {
  for (std::size_t i = 1; i < vars_.size(); ++i) {
    if (!(vars_[i - 1] < vars_[i])) {
      throw InternalError("variable ordering must be strictly ascending");
    }
  }
}

VarOrdering VarOrdering::of(const std::set<NumVar>& vars) {
  return VarOrdering(std::vector<NumVar>(vars.begin(), vars.end()));
}

std::size_t VarOrdering::position(const NumVar& v) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
  if (it == vars_.end() || *it != v) return npos;
  return static_cast<std::size_t>(it - vars_.begin());
}

NumVar fresh_num_var(const std::string& base, const std::set<NumVar>& used) {
  for (std::uint32_t i = 0;; ++i) {
    NumVar candidate{base, i};
    if (used.count(candidate) == 0) return candidate;
  }
}

FunVar fresh_fun_var(const std::string& base, const std::set<FunVar>& used) {
  for (std::uint32_t i = 0;; ++i) {
    FunVar candidate{base, i};
    if (used.count(candidate) == 0) return candidate;
  }
}

}  // namespace tsa
