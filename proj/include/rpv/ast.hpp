// Abstract syntax of the while-language with blocks and call-by-value
// procedures: expressions, statements, declarations, programs.
#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "rpv/diagnostics.hpp"

namespace rpv {

enum class Type { Unknown, Int, Bool, IntArray };

std::string type_name(Type t);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// An array-valued term: a named array plus a (possibly empty) sequence of
// point updates. Updates apply left to right; later updates win.
struct ArrayStore {
  ExprPtr index;
  ExprPtr value;
};

struct ArrayRef {
  std::string base;
  std::vector<ArrayStore> stores;

  bool is_name() const { return stores.empty(); }
};

enum class ExprKind {
  IntLit,
  BoolLit,
  Var,        // simple variable
  Subscript,  // arr[index], arr an ArrayRef
  Unary,      // op in {Neg, Not}
  Binary,     // arithmetic / comparison / connective / Max
  Cond,       // internal conditional term (c ? t1 : t2), substitution output
};

enum class UnOp { Neg, Not };

enum class BinOp {
  Add, Sub, Mul, Max,
  Lt, Le, Eq,
  And, Or, Implies,
};

bool is_comparison(BinOp op);
std::string binop_name(BinOp op);

struct Expr {
  ExprKind kind;
  Type type = Type::Unknown;
  SourceLoc loc;

  long long int_val = 0;
  bool bool_val = false;
  std::string name;        // Var
  ArrayRef array;          // Subscript
  UnOp un_op = UnOp::Neg;
  BinOp bin_op = BinOp::Add;
  ExprPtr a, b, c;         // children: unary uses a; binary a,b; cond a,b,c; subscript index in a
};

ExprPtr mk_int(long long v, SourceLoc loc = {});
ExprPtr mk_bool(bool v, SourceLoc loc = {});
ExprPtr mk_var(const std::string& name, Type t = Type::Unknown, SourceLoc loc = {});
ExprPtr mk_subscript(ArrayRef arr, ExprPtr index, SourceLoc loc = {});
ExprPtr mk_unary(UnOp op, ExprPtr a, SourceLoc loc = {});
ExprPtr mk_binary(BinOp op, ExprPtr a, ExprPtr b, SourceLoc loc = {});
ExprPtr mk_cond(ExprPtr c, ExprPtr t1, ExprPtr t2, SourceLoc loc = {});

bool equal(const ExprPtr& a, const ExprPtr& b);
bool equal(const ArrayRef& a, const ArrayRef& b);
std::string to_string(const Expr& e);
std::string to_string(const ArrayRef& a);

enum class StmtKind {
  Skip,
  Assign,     // u := t, u simple or subscripted
  ParAssign,  // x1,..,xn := t1,..,tn
  Seq,
  If,
  While,
  Block,      // begin local x̄ := t̄; S end
  Call,       // P(t1,..,tn)
  Swap,       // swap(u, v) macro; removed by expand_macros
};

struct Stmt;
using StmtPtr = std::shared_ptr<const Stmt>;

struct Stmt {
  StmtKind kind;
  SourceLoc loc;

  // Assign: lhs_name / lhs_index (index null for simple); rhs in exprs[0].
  // Swap: the two operands in exprs[0], exprs[1] (each Var or Subscript).
  std::string lhs_name;
  ExprPtr lhs_index;
  std::vector<std::string> names;  // ParAssign targets / Block locals
  std::vector<ExprPtr> exprs;      // rhs values / init values / call actuals / condition
  StmtPtr s1, s2;                  // Seq both; If both; While body in s1; Block body in s1
  std::string callee;              // Call
};

StmtPtr mk_skip(SourceLoc loc = {});
StmtPtr mk_assign(std::string name, ExprPtr index, ExprPtr rhs, SourceLoc loc = {});
StmtPtr mk_par_assign(std::vector<std::string> names, std::vector<ExprPtr> rhs, SourceLoc loc = {});
StmtPtr mk_seq(StmtPtr a, StmtPtr b, SourceLoc loc = {});
StmtPtr mk_if(ExprPtr cond, StmtPtr then_s, StmtPtr else_s, SourceLoc loc = {});
StmtPtr mk_while(ExprPtr cond, StmtPtr body, SourceLoc loc = {});
StmtPtr mk_block(std::vector<std::string> locals, std::vector<ExprPtr> inits, StmtPtr body,
                 SourceLoc loc = {});
StmtPtr mk_call(std::string callee, std::vector<ExprPtr> actuals, SourceLoc loc = {});
StmtPtr mk_swap(ExprPtr u, ExprPtr v, SourceLoc loc = {});

bool equal(const StmtPtr& a, const StmtPtr& b);
std::string to_string(const Stmt& s);

struct Decl {
  std::string name;
  std::vector<std::string> formals;
  StmtPtr body;
  SourceLoc loc;
};

struct Program {
  std::vector<Decl> decls;
  StmtPtr main;  // may be null for pure declaration sets
  std::map<std::string, Type> types;  // every simple/array name in the program

  const Decl* find_decl(const std::string& name) const;
};

using VarSet = std::set<std::string>;

std::string to_string(const VarSet& s);

}  // namespace rpv
