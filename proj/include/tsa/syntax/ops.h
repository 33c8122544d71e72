#ifndef TSA_SYNTAX_OPS_H
#define TSA_SYNTAX_OPS_H

#include <map>

#include "tsa/syntax/ast.h"

namespace tsa {

// Free variables of both sorts. Lambda binds its number variable;
// quantifiers bind their respective sort.
VarSets free_vars(const TermPtr& t);
VarSets free_vars(const FunctorPtr& u);
VarSets free_vars(const FormulaPtr& f);
VarSets free_vars(const Expr& e);

// Every variable occurring anywhere, free or bound (binders included).
// Used as the "variable supply" for deterministic freshness.
VarSets all_vars(const Expr& e);
VarSets all_vars(const TermPtr& t);
VarSets all_vars(const FunctorPtr& u);
VarSets all_vars(const FormulaPtr& f);

// Simultaneous substitutions. Capture-avoiding: a binder is renamed (same
// name, smallest fresh index) exactly when it would capture a free variable
// of an incoming replacement.
using NumSubst = std::map<NumVar, TermPtr>;
using FunSubst = std::map<FunVar, FunctorPtr>;

TermPtr substitute(const TermPtr& t, const NumSubst& ns, const FunSubst& fs = {});
FunctorPtr substitute(const FunctorPtr& u, const NumSubst& ns, const FunSubst& fs = {});
FormulaPtr substitute(const FormulaPtr& f, const NumSubst& ns, const FunSubst& fs = {});

TermPtr substitute_num(const TermPtr& t, const NumVar& v, const TermPtr& by);
FunctorPtr substitute_num(const FunctorPtr& u, const NumVar& v, const TermPtr& by);
FormulaPtr substitute_num(const FormulaPtr& f, const NumVar& v, const TermPtr& by);
TermPtr substitute_fun(const TermPtr& t, const FunVar& v, const FunctorPtr& by);
FunctorPtr substitute_fun(const FunctorPtr& u, const FunVar& v, const FunctorPtr& by);
FormulaPtr substitute_fun(const FormulaPtr& f, const FunVar& v, const FunctorPtr& by);

// Whether replacing every free occurrence of the variable by the replacement
// leaves all of the replacement's free variables free (no binder capture).
bool is_free_for(const TermPtr& replacement, const NumVar& target, const Expr& in);
bool is_free_for(const FunctorPtr& replacement, const FunVar& target, const Expr& in);

// Alpha-equivalence: equal up to consistent renaming of bound variables.
bool congruent(const TermPtr& a, const TermPtr& b);
bool congruent(const FunctorPtr& a, const FunctorPtr& b);
bool congruent(const FormulaPtr& a, const FormulaPtr& b);
bool congruent(const Expr& a, const Expr& b);

// Replace each free occurrence of ordering[i] by expof(w, i) — the i-th
// coded component of w. Throws Error if w occurs (anywhere) in the input or
// the ordering misses a free number variable.
TermPtr coded_tuple_view(const TermPtr& t, const NumVar& w, const VarOrdering& ordering);
FunctorPtr coded_tuple_view(const FunctorPtr& u, const NumVar& w, const VarOrdering& ordering);
FormulaPtr coded_tuple_view(const FormulaPtr& f, const NumVar& w, const VarOrdering& ordering);
Expr coded_tuple_view(const Expr& e, const NumVar& w, const VarOrdering& ordering);

// True when the expression contains a RecApp / Lambda node anywhere.
bool contains_rec(const Expr& e);
bool contains_lambda(const Expr& e);

}  // namespace tsa

#endif  // TSA_SYNTAX_OPS_H
