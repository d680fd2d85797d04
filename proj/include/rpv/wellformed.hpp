// Well-formedness checking: unique declarations, distinct formals, call
// arity/typing, block shape, and the local/global name-clash restriction.
#pragma once

#include <string>
#include <vector>

#include "rpv/ast.hpp"

namespace rpv {

struct Violation {
  SourceLoc loc;
  std::string rule;  // short tag, e.g. "name-clash", "arity"
  std::string message;
};

struct WellFormedness {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

WellFormedness well_formed(const Program& program);

}  // namespace rpv
