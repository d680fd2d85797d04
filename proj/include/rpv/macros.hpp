// swap(u, v) macro expansion with a program-fresh temporary.
#pragma once

#include "rpv/ast.hpp"

namespace rpv {

// Replaces every swap(u, v) by
//   begin local _swK := u; u := v; v := _swK end
// where _swK is fresh with respect to the whole program. Temporaries are
// numbered per enclosing body in traversal order, so expanding the same
// body text twice yields identical trees.
StmtPtr expand_macros(const StmtPtr& stmt, const VarSet& avoid);
// Variant that also checks operand types, raising MacroError on mismatch.
StmtPtr expand_macros(const StmtPtr& stmt, const VarSet& avoid,
                      const std::map<std::string, Type>& types);
Program expand_macros(const Program& program);

}  // namespace rpv
