#include "rpv/ast.hpp"

#include <sstream>

namespace rpv {

std::string type_name(Type t) {
  switch (t) {
    case Type::Int: return "integer";
    case Type::Bool: return "boolean";
    case Type::IntArray: return "integer array";
    default: return "unknown";
  }
}

bool is_comparison(BinOp op) {
  return op == BinOp::Lt || op == BinOp::Le || op == BinOp::Eq;
}

std::string binop_name(BinOp op) {
  switch (op) {
    case BinOp::Add: return "+";
    case BinOp::Sub: return "-";
    case BinOp::Mul: return "*";
    case BinOp::Max: return "max";
    case BinOp::Lt: return "<";
    case BinOp::Le: return "<=";
    case BinOp::Eq: return "=";
    case BinOp::And: return "and";
    case BinOp::Or: return "or";
    case BinOp::Implies: return "->";
  }
  return "?";
}

ExprPtr mk_int(long long v, SourceLoc loc) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::IntLit;
  e->type = Type::Int;
  e->int_val = v;
  e->loc = loc;
  return e;
}

ExprPtr mk_bool(bool v, SourceLoc loc) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::BoolLit;
  e->type = Type::Bool;
  e->bool_val = v;
  e->loc = loc;
  return e;
}

ExprPtr mk_var(const std::string& name, Type t, SourceLoc loc) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Var;
  e->type = t;
  e->name = name;
  e->loc = loc;
  return e;
}

ExprPtr mk_subscript(ArrayRef arr, ExprPtr index, SourceLoc loc) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Subscript;
  e->type = Type::Int;
  e->array = std::move(arr);
  e->a = std::move(index);
  e->loc = loc;
  return e;
}

ExprPtr mk_unary(UnOp op, ExprPtr a, SourceLoc loc) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Unary;
  e->un_op = op;
  e->type = op == UnOp::Neg ? Type::Int : Type::Bool;
  e->a = std::move(a);
  e->loc = loc;
  return e;
}

ExprPtr mk_binary(BinOp op, ExprPtr a, ExprPtr b, SourceLoc loc) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Binary;
  e->bin_op = op;
  switch (op) {
    case BinOp::Add: case BinOp::Sub: case BinOp::Mul: case BinOp::Max:
      e->type = Type::Int;
      break;
    default:
      e->type = Type::Bool;
      break;
  }
  e->a = std::move(a);
  e->b = std::move(b);
  e->loc = loc;
  return e;
}

ExprPtr mk_cond(ExprPtr c, ExprPtr t1, ExprPtr t2, SourceLoc loc) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::Cond;
  e->type = t1 ? t1->type : Type::Unknown;
  e->a = std::move(c);
  e->b = std::move(t1);
  e->c = std::move(t2);
  e->loc = loc;
  return e;
}

bool equal(const ArrayRef& a, const ArrayRef& b) {
  if (a.base != b.base || a.stores.size() != b.stores.size()) return false;
  for (size_t i = 0; i < a.stores.size(); ++i) {
    if (!equal(a.stores[i].index, b.stores[i].index)) return false;
    if (!equal(a.stores[i].value, b.stores[i].value)) return false;
  }
  return true;
}

bool equal(const ExprPtr& a, const ExprPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case ExprKind::IntLit: return a->int_val == b->int_val;
    case ExprKind::BoolLit: return a->bool_val == b->bool_val;
    case ExprKind::Var: return a->name == b->name;
    case ExprKind::Subscript:
      return equal(a->array, b->array) && equal(a->a, b->a);
    case ExprKind::Unary: return a->un_op == b->un_op && equal(a->a, b->a);
    case ExprKind::Binary:
      return a->bin_op == b->bin_op && equal(a->a, b->a) && equal(a->b, b->b);
    case ExprKind::Cond:
      return equal(a->a, b->a) && equal(a->b, b->b) && equal(a->c, b->c);
  }
  return false;
}

namespace {

int precedence(const Expr& e) {
  if (e.kind != ExprKind::Binary) return 100;
  switch (e.bin_op) {
    case BinOp::Implies: return 1;
    case BinOp::Or: return 2;
    case BinOp::And: return 3;
    case BinOp::Lt: case BinOp::Le: case BinOp::Eq: return 4;
    case BinOp::Add: case BinOp::Sub: return 5;
    case BinOp::Mul: return 6;
    default: return 100;
  }
}

void print_expr(std::ostringstream& os, const Expr& e, int parent_prec) {
  int prec = precedence(e);
  bool paren = prec < parent_prec;
  if (paren) os << "(";
  switch (e.kind) {
    case ExprKind::IntLit: os << e.int_val; break;
    case ExprKind::BoolLit: os << (e.bool_val ? "true" : "false"); break;
    case ExprKind::Var: os << e.name; break;
    case ExprKind::Subscript:
      os << to_string(e.array) << "[";
      print_expr(os, *e.a, 0);
      os << "]";
      break;
    case ExprKind::Unary:
      os << (e.un_op == UnOp::Neg ? "-" : "not ");
      print_expr(os, *e.a, 7);
      break;
    case ExprKind::Binary:
      if (e.bin_op == BinOp::Max) {
        os << "max(";
        print_expr(os, *e.a, 0);
        os << ", ";
        print_expr(os, *e.b, 0);
        os << ")";
      } else {
        print_expr(os, *e.a, prec + 1);
        os << " " << binop_name(e.bin_op) << " ";
        print_expr(os, *e.b, e.bin_op == BinOp::Implies ? prec : prec + 1);
      }
      break;
    case ExprKind::Cond:
      os << "(";
      print_expr(os, *e.a, 0);
      os << " ? ";
      print_expr(os, *e.b, 0);
      os << " : ";
      print_expr(os, *e.c, 0);
      os << ")";
      break;
  }
  if (paren) os << ")";
}

}  // namespace

std::string to_string(const ArrayRef& a) {
  std::string out = a.base;
  for (const auto& st : a.stores) {
    out = "store(" + out + ", " + to_string(*st.index) + ", " + to_string(*st.value) + ")";
  }
  return out;
}

std::string to_string(const Expr& e) {
  std::ostringstream os;
  print_expr(os, e, 0);
  return os.str();
}

StmtPtr mk_skip(SourceLoc loc) {
  auto s = std::make_shared<Stmt>();
  s->kind = StmtKind::Skip;
  s->loc = loc;
  return s;
}

StmtPtr mk_assign(std::string name, ExprPtr index, ExprPtr rhs, SourceLoc loc) {
  auto s = std::make_shared<Stmt>();
  s->kind = StmtKind::Assign;
  s->lhs_name = std::move(name);
  s->lhs_index = std::move(index);
  s->exprs.push_back(std::move(rhs));
  s->loc = loc;
  return s;
}

StmtPtr mk_par_assign(std::vector<std::string> names, std::vector<ExprPtr> rhs, SourceLoc loc) {
  auto s = std::make_shared<Stmt>();
  s->kind = StmtKind::ParAssign;
  s->names = std::move(names);
  s->exprs = std::move(rhs);
  s->loc = loc;
  return s;
}

StmtPtr mk_seq(StmtPtr a, StmtPtr b, SourceLoc loc) {
  auto s = std::make_shared<Stmt>();
  s->kind = StmtKind::Seq;
  s->s1 = std::move(a);
  s->s2 = std::move(b);
  s->loc = loc;
  return s;
}

StmtPtr mk_if(ExprPtr cond, StmtPtr then_s, StmtPtr else_s, SourceLoc loc) {
  auto s = std::make_shared<Stmt>();
  s->kind = StmtKind::If;
  s->exprs.push_back(std::move(cond));
  s->s1 = std::move(then_s);
  s->s2 = std::move(else_s);
  s->loc = loc;
  return s;
}

StmtPtr mk_while(ExprPtr cond, StmtPtr body, SourceLoc loc) {
  auto s = std::make_shared<Stmt>();
  s->kind = StmtKind::While;
  s->exprs.push_back(std::move(cond));
  s->s1 = std::move(body);
  s->loc = loc;
  return s;
}

StmtPtr mk_block(std::vector<std::string> locals, std::vector<ExprPtr> inits, StmtPtr body,
                 SourceLoc loc) {
  auto s = std::make_shared<Stmt>();
  s->kind = StmtKind::Block;
  s->names = std::move(locals);
  s->exprs = std::move(inits);
  s->s1 = std::move(body);
  s->loc = loc;
  return s;
}

StmtPtr mk_call(std::string callee, std::vector<ExprPtr> actuals, SourceLoc loc) {
  auto s = std::make_shared<Stmt>();
  s->kind = StmtKind::Call;
  s->callee = std::move(callee);
  s->exprs = std::move(actuals);
  s->loc = loc;
  return s;
}

StmtPtr mk_swap(ExprPtr u, ExprPtr v, SourceLoc loc) {
  auto s = std::make_shared<Stmt>();
  s->kind = StmtKind::Swap;
  s->exprs.push_back(std::move(u));
  s->exprs.push_back(std::move(v));
  s->loc = loc;
  return s;
}

bool equal(const StmtPtr& a, const StmtPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  if (a->lhs_name != b->lhs_name || a->callee != b->callee) return false;
  if (a->names != b->names) return false;
  if (!equal(a->lhs_index, b->lhs_index) && (a->lhs_index || b->lhs_index)) return false;
  if (a->exprs.size() != b->exprs.size()) return false;
  for (size_t i = 0; i < a->exprs.size(); ++i)
    if (!equal(a->exprs[i], b->exprs[i])) return false;
  if (!equal(a->s1, b->s1) && (a->s1 || b->s1)) return false;
  if (!equal(a->s2, b->s2) && (a->s2 || b->s2)) return false;
  return true;
}

namespace {

void print_stmt(std::ostringstream& os, const Stmt& s) {
  switch (s.kind) {
    case StmtKind::Skip: os << "skip"; break;
    case StmtKind::Assign:
      os << s.lhs_name;
      if (s.lhs_index) os << "[" << to_string(*s.lhs_index) << "]";
      os << " := " << to_string(*s.exprs[0]);
      break;
    case StmtKind::ParAssign: {
      for (size_t i = 0; i < s.names.size(); ++i) os << (i ? ", " : "") << s.names[i];
      os << " := ";
      for (size_t i = 0; i < s.exprs.size(); ++i)
        os << (i ? ", " : "") << to_string(*s.exprs[i]);
      break;
    }
    case StmtKind::Seq:
      print_stmt(os, *s.s1);
      os << "; ";
      print_stmt(os, *s.s2);
      break;
    case StmtKind::If:
      os << "if " << to_string(*s.exprs[0]) << " then ";
      print_stmt(os, *s.s1);
      if (s.s2) {
        os << " else ";
        print_stmt(os, *s.s2);
      }
      os << " fi";
      break;
    case StmtKind::While:
      os << "while " << to_string(*s.exprs[0]) << " do ";
      print_stmt(os, *s.s1);
      os << " od";
      break;
    case StmtKind::Block: {
      os << "begin local ";
      for (size_t i = 0; i < s.names.size(); ++i) os << (i ? ", " : "") << s.names[i];
      os << " := ";
      for (size_t i = 0; i < s.exprs.size(); ++i)
        os << (i ? ", " : "") << to_string(*s.exprs[i]);
      os << "; ";
      print_stmt(os, *s.s1);
      os << " end";
      break;
    }
    case StmtKind::Call: {
      os << s.callee << "(";
      for (size_t i = 0; i < s.exprs.size(); ++i)
        os << (i ? ", " : "") << to_string(*s.exprs[i]);
      os << ")";
      break;
    }
    case StmtKind::Swap:
      os << "swap(" << to_string(*s.exprs[0]) << ", " << to_string(*s.exprs[1]) << ")";
      break;
  }
}

}  // namespace

std::string to_string(const Stmt& s) {
  std::ostringstream os;
  print_stmt(os, s);
  return os.str();
}

const Decl* Program::find_decl(const std::string& name) const {
  for (const auto& d : decls)
    if (d.name == name) return &d;
  return nullptr;
}

std::string to_string(const VarSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& n : s) {
    if (!first) out += ", ";
    out += n;
    first = false;
  }
  return out + "}";
}

}  // namespace rpv
