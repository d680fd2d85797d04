// Static variable-set functions var/change used by rule side conditions.
#pragma once

#include "rpv/ast.hpp"

namespace rpv {

// All simple and array names occurring in the unit.
VarSet var_of(const ExprPtr& e);
VarSet var_of(const StmtPtr& s);
VarSet var_of(const Decl& d);
VarSet var_of(const std::vector<Decl>& decls);

// Variables a unit can modify:
//   change(block local x̄ := t̄; S end) = change(S) \ {x̄}
//   change(P(ū)::S)                    = change(S) \ {ū}
//   change(decl set)                   = union over declarations
//   change(P(t̄))                       = ∅
VarSet change_of(const StmtPtr& s);
VarSet change_of(const Decl& d);
VarSet change_of(const std::vector<Decl>& decls);

// change(S) ∪ change of every procedure reachable from S; the set outside
// which execution provably leaves the state untouched.
VarSet change_closure(const StmtPtr& s, const std::vector<Decl>& decls);

// Block-local names declared anywhere inside the unit.
VarSet block_locals(const StmtPtr& s);

bool disjoint(const VarSet& a, const VarSet& b);
VarSet set_union(const VarSet& a, const VarSet& b);
VarSet intersect(const VarSet& a, const VarSet& b);

}  // namespace rpv
