#include "rpv/wellformed.hpp"

#include <set>

#include "rpv/parser.hpp"
#include "rpv/varsets.hpp"

namespace rpv {

namespace {

struct Checker {
  const Program& prog;
  std::vector<Violation>& out;

  void add(const SourceLoc& loc, const std::string& rule, const std::string& msg) {
    out.push_back({loc, rule, msg});
  }

  void check_distinct(const std::vector<std::string>& names, const SourceLoc& loc,
                      const std::string& what) {
    std::set<std::string> seen;
    for (const auto& n : names)
      if (!seen.insert(n).second)
        add(loc, "distinct-vars", what + " lists variable '" + n + "' twice");
  }

  void check_list_shape(const Stmt& s, const std::string& what) {
    if (s.names.empty()) add(s.loc, "non-empty", what + " must bind at least one variable");
    if (s.names.size() != s.exprs.size())
      add(s.loc, "arity", what + " binds " + std::to_string(s.names.size()) +
                              " variables to " + std::to_string(s.exprs.size()) + " values");
    check_distinct(s.names, s.loc, what);
    for (const auto& n : s.names) {
      auto it = prog.types.find(n);
      if (it != prog.types.end() && it->second == Type::IntArray)
        add(s.loc, "simple-vars", what + " variable '" + n + "' must be a simple variable");
    }
  }

  void walk(const StmtPtr& s) {
    if (!s) return;
    switch (s->kind) {
      case StmtKind::ParAssign:
        check_list_shape(*s, "parallel assignment");
        break;
      case StmtKind::Block:
        check_list_shape(*s, "block declaration");
        walk(s->s1);
        break;
      case StmtKind::Seq:
      case StmtKind::If:
        walk(s->s1);
        walk(s->s2);
        break;
      case StmtKind::While:
        walk(s->s1);
        break;
      case StmtKind::Call: {
        const Decl* d = prog.find_decl(s->callee);
        if (!d) {
          add(s->loc, "undeclared", "call to undeclared procedure '" + s->callee + "'");
        } else if (d->formals.size() != s->exprs.size()) {
          add(s->loc, "arity",
              "call to '" + s->callee + "' passes " + std::to_string(s->exprs.size()) +
                  " actuals to " + std::to_string(d->formals.size()) + " formals");
        }
        break;
      }
      case StmtKind::Swap: {
        Type t0 = s->exprs[0]->kind == ExprKind::Subscript
                      ? Type::Int
                      : prog.types.count(s->exprs[0]->name)
                            ? prog.types.at(s->exprs[0]->name)
                            : Type::Int;
        Type t1 = s->exprs[1]->kind == ExprKind::Subscript
                      ? Type::Int
                      : prog.types.count(s->exprs[1]->name)
                            ? prog.types.at(s->exprs[1]->name)
                            : Type::Int;
        if (t0 != t1)
          add(s->loc, "swap-types", "swap operands have different types");
        break;
      }
      default:
        break;
    }
  }
};

}  // namespace

WellFormedness well_formed(const Program& program) {
  WellFormedness report;
  Checker ck{program, report.violations};

  // type conflicts from inference
  std::vector<std::pair<SourceLoc, std::string>> conflicts;
  Program copy = program;
  infer_program_types(copy, &conflicts);
  std::set<std::string> seen_msgs;
  for (const auto& [loc, msg] : conflicts)
    if (seen_msgs.insert(loc.str() + msg).second)
      report.violations.push_back({loc, "typing", msg});

  // unique declarations, distinct formals
  std::set<std::string> names;
  for (const auto& d : program.decls) {
    if (!names.insert(d.name).second)
      ck.add(d.loc, "unique-decl", "procedure '" + d.name + "' declared more than once");
    ck.check_distinct(d.formals, d.loc, "formal parameter list of '" + d.name + "'");
    for (const auto& f : d.formals) {
      auto it = program.types.find(f);
      if (it != program.types.end() && it->second == Type::IntArray)
        ck.add(d.loc, "simple-vars",
               "formal parameter '" + f + "' of '" + d.name + "' must be a simple variable");
    }
  }

  for (const auto& d : program.decls) ck.walk(d.body);
  if (program.main) ck.walk(program.main);

  // name-clash restriction: no local variable of the main program occurs in
  // the declaration set
  if (program.main) {
    VarSet locals = block_locals(program.main);
    VarSet dvars = var_of(program.decls);
    for (const auto& x : intersect(locals, dvars))
      ck.add(program.main->loc, "name-clash",
             "local variable '" + x +
                 "' of the main program also occurs in the procedure declarations");
  }

  return report;
}

std::string WellFormedness::summary() const {
  if (violations.empty()) return "well-formed";
  std::string s;
  for (const auto& v : violations) {
    s += v.loc.str() + ": [" + v.rule + "] " + v.message + "\n";
  }
  return s;
}

}  // namespace rpv
