// First-order assertions over program variables: quantifiers, the built-in
// sorted/perm interval predicates, substitution, and free variables.
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "rpv/ast.hpp"

namespace rpv {

enum class AssnKind {
  Atom,         // boolean expression
  ArrayEq,      // a = b for whole arrays
  Not, And, Or, Implies,
  Forall,       // ∀ var : body   (integer var, unbounded)
  Exists,       // ∃ var : body
  ForallIn,     // ∀ var ∈ [lo:hi] : body
  ExistsIn,     // ∃ var ∈ [lo:hi] : body
  ExistsArray,  // ∃ array-var : body
  Sorted,       // sorted(arr[lo:hi])
  Perm,         // perm(arr1, arr2, [lo:hi])
};

struct Assertion;
using AssnPtr = std::shared_ptr<const Assertion>;

struct Assertion {
  AssnKind kind;
  SourceLoc loc;

  ExprPtr atom;     // Atom
  AssnPtr a, b;     // Not/quantifiers use a; binary connectives a,b
  std::string var;  // binder name
  ExprPtr lo, hi;   // interval bounds (ForallIn/ExistsIn/Sorted/Perm)
  ArrayRef arr1, arr2;
};

AssnPtr mk_atom(ExprPtr e);
AssnPtr mk_array_eq(ArrayRef a, ArrayRef b, SourceLoc loc = {});
AssnPtr mk_not(AssnPtr a);
AssnPtr mk_and(AssnPtr a, AssnPtr b);
AssnPtr mk_or(AssnPtr a, AssnPtr b);
AssnPtr mk_implies(AssnPtr a, AssnPtr b);
AssnPtr mk_forall(std::string var, AssnPtr body, SourceLoc loc = {});
AssnPtr mk_exists(std::string var, AssnPtr body, SourceLoc loc = {});
AssnPtr mk_forall_in(std::string var, ExprPtr lo, ExprPtr hi, AssnPtr body, SourceLoc loc = {});
AssnPtr mk_exists_in(std::string var, ExprPtr lo, ExprPtr hi, AssnPtr body, SourceLoc loc = {});
AssnPtr mk_exists_array(std::string var, AssnPtr body, SourceLoc loc = {});
AssnPtr mk_sorted(ArrayRef arr, ExprPtr lo, ExprPtr hi, SourceLoc loc = {});
AssnPtr mk_perm(ArrayRef a, ArrayRef b, ExprPtr lo, ExprPtr hi, SourceLoc loc = {});

AssnPtr mk_true();

bool equal(const AssnPtr& a, const AssnPtr& b);
std::string to_string(const Assertion& a);

// Flattens nested conjunctions (left-to-right).
std::vector<AssnPtr> conjuncts(const AssnPtr& a);
AssnPtr conjoin(const std::vector<AssnPtr>& parts);

// Simultaneous substitution. Simple variables map to expressions; array
// names map to array refs (a plain name or a name with point updates, the
// latter encoding the assignment a[s] := t).
struct SubstMap {
  std::map<std::string, ExprPtr> scalars;
  std::map<std::string, ArrayRef> arrays;

  bool empty() const { return scalars.empty() && arrays.empty(); }
  // Targets of the substitution plus all variables of the replacements.
  VarSet domain() const;
  VarSet range_vars() const;
};

// Builds the substitution for assignment u := t (u simple or subscripted).
SubstMap subst_for_assign(const Stmt& assign);
SubstMap subst_for_par_assign(const std::vector<std::string>& names,
                              const std::vector<ExprPtr>& rhs);

ExprPtr substitute(const ExprPtr& e, const SubstMap& m);
AssnPtr substitute(const AssnPtr& p, const SubstMap& m);

// Reads a[e] out of an array term, lowering point updates to conditionals.
ExprPtr mk_select(const ArrayRef& arr, const ExprPtr& index, SourceLoc loc = {});

void collect_free_vars(const ExprPtr& e, VarSet& out);
VarSet free_vars(const ExprPtr& e);
VarSet free_vars(const AssnPtr& p);

// Renames bound variables so they are pairwise distinct and distinct from
// every free variable of the formula.
AssnPtr alpha_normalize(const AssnPtr& p);

// Type environment: simple and array variable names to types.
using TypeEnv = std::map<std::string, Type>;

// Infers/checks variable types used by an assertion against (and extending)
// the environment. Unknown new variables default to integer unless used as
// arrays. Converts `=` atoms over two arrays into ArrayEq. Throws TypeError.
AssnPtr assertion_typecheck(const AssnPtr& p, TypeEnv& env);

// Statements occurring in assertions' expressions never exist; exprs in
// programs are typechecked by the program loader.
ExprPtr expr_typecheck(const ExprPtr& e, TypeEnv& env, Type expected);

}  // namespace rpv
