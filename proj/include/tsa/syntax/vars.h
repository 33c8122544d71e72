#ifndef TSA_SYNTAX_VARS_H
#define TSA_SYNTAX_VARS_H

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace tsa {

// A variable ranging over natural numbers. Identified by (name, index);
// the total order on that pair is the canonical variable ordering used
// everywhere (orderings, freshness, determinism).
struct NumVar {
  std::string name;
  std::uint32_t index = 0;

  auto operator<=>(const NumVar&) const = default;
};

// A variable ranging over one-place number-theoretic functions.
// Same identification scheme as NumVar, but a disjoint namespace.
struct FunVar {
  std::string name;
  std::uint32_t index = 0;

  auto operator<=>(const FunVar&) const = default;
};

// Display name: index 0 prints bare, otherwise the index is appended.
std::string display_name(const NumVar& v);
std::string display_name(const FunVar& v);

// Sets of variables of both sorts, as produced by free/all-variable scans.
struct VarSets {
  std::set<NumVar> nums;
  std::set<FunVar> funs;

  bool contains(const NumVar& v) const { return nums.count(v) != 0; }
  bool contains(const FunVar& v) const { return funs.count(v) != 0; }
  void merge(const VarSets& other);
  bool operator==(const VarSets&) const = default;
};

// A duplicate-free list of number variables in ascending (name, index) order.
// Used to fix the coding order x_0,...,x_k of free variables.
class VarOrdering {
 public:
  VarOrdering() = default;
  // Throws InternalError unless `vars` is strictly ascending.
  explicit VarOrdering(std::vector<NumVar> vars);

  // Canonical ordering of a set: ascending (name, index).
  static VarOrdering of(const std::set<NumVar>& vars);

  const std::vector<NumVar>& vars() const { return vars_; }
  std::size_t size() const { return vars_.size(); }
  const NumVar& operator[](std::size_t i) const { return vars_[i]; }
  // Position of `v`, or npos when absent.
  std::size_t position(const NumVar& v) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<NumVar> vars_;
};

// Smallest-index fresh variable with the given base name: the first of
// (base,0), (base,1), ... whose (name,index) pair is not in `used`.
NumVar fresh_num_var(const std::string& base, const std::set<NumVar>& used);
FunVar fresh_fun_var(const std::string& base, const std::set<FunVar>& used);

}  // namespace tsa

#endif  // TSA_SYNTAX_VARS_H
