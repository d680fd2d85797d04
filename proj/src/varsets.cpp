#include "rpv/varsets.hpp"

#include "rpv/assertions.hpp"

namespace rpv {

VarSet var_of(const ExprPtr& e) { return free_vars(e); }

namespace {

void collect_var(const StmtPtr& s, VarSet& out) {
  if (!s) return;
  switch (s->kind) {
    case StmtKind::Skip: break;
    case StmtKind::Assign:
      out.insert(s->lhs_name);
      collect_free_vars(s->lhs_index, out);
      collect_free_vars(s->exprs[0], out);
      break;
    case StmtKind::ParAssign:
    case StmtKind::Block:
      for (const auto& n : s->names) out.insert(n);
      for (const auto& e : s->exprs) collect_free_vars(e, out);
      collect_var(s->s1, out);
      break;
    case StmtKind::Seq:
      collect_var(s->s1, out);
      collect_var(s->s2, out);
      break;
    case StmtKind::If:
      collect_free_vars(s->exprs[0], out);
      collect_var(s->s1, out);
      collect_var(s->s2, out);
      break;
    case StmtKind::While:
      collect_free_vars(s->exprs[0], out);
      collect_var(s->s1, out);
      break;
    case StmtKind::Call:
    case StmtKind::Swap:
      for (const auto& e : s->exprs) collect_free_vars(e, out);
      break;
  }
}

void collect_change(const StmtPtr& s, VarSet& out) {
  if (!s) return;
  switch (s->kind) {
    case StmtKind::Skip: break;
    case StmtKind::Assign:
      out.insert(s->lhs_name);
      break;
    case StmtKind::ParAssign:
      for (const auto& n : s->names) out.insert(n);
      break;
    case StmtKind::Block: {
      VarSet inner;
      collect_change(s->s1, inner);
      for (const auto& n : s->names) inner.erase(n);
      out.insert(inner.begin(), inner.end());
      break;
    }
    case StmtKind::Seq:
      collect_change(s->s1, out);
      collect_change(s->s2, out);
      break;
    case StmtKind::If:
      collect_change(s->s1, out);
      collect_change(s->s2, out);
      break;
    case StmtKind::While:
      collect_change(s->s1, out);
      break;
    case StmtKind::Call:
      break;  // change(P(t̄)) = ∅
    case StmtKind::Swap:
      // swap(u, v) writes both operands
      for (const auto& e : s->exprs) {
        if (e->kind == ExprKind::Var) out.insert(e->name);
        if (e->kind == ExprKind::Subscript) out.insert(e->array.base);
      }
      break;
  }
}

void collect_callees(const StmtPtr& s, std::set<std::string>& out) {
  if (!s) return;
  if (s->kind == StmtKind::Call) out.insert(s->callee);
  collect_callees(s->s1, out);
  collect_callees(s->s2, out);
}

}  // namespace

VarSet var_of(const StmtPtr& s) {
  VarSet out;
  collect_var(s, out);
  return out;
}

VarSet var_of(const Decl& d) {
  VarSet out = var_of(d.body);
  for (const auto& f : d.formals) out.insert(f);
  return out;
}

VarSet var_of(const std::vector<Decl>& decls) {
  VarSet out;
  for (const auto& d : decls) {
    VarSet v = var_of(d);
    out.insert(v.begin(), v.end());
  }
  return out;
}

VarSet change_of(const StmtPtr& s) {
  VarSet out;
  collect_change(s, out);
  return out;
}

VarSet change_of(const Decl& d) {
  VarSet out = change_of(d.body);
  for (const auto& f : d.formals) out.erase(f);
  return out;
}

VarSet change_of(const std::vector<Decl>& decls) {
  VarSet out;
  for (const auto& d : decls) {
    VarSet c = change_of(d);
    out.insert(c.begin(), c.end());
  }
  return out;
}

VarSet change_closure(const StmtPtr& s, const std::vector<Decl>& decls) {
  VarSet out = change_of(s);
  std::set<std::string> todo, seen;
  collect_callees(s, todo);
  while (!todo.empty()) {
    std::string name = *todo.begin();
    todo.erase(todo.begin());
    if (!seen.insert(name).second) continue;
    for (const auto& d : decls) {
      if (d.name != name) continue;
      VarSet c = change_of(d);
      out.insert(c.begin(), c.end());
      collect_callees(d.body, todo);
    }
  }
  return out;
}

VarSet block_locals(const StmtPtr& s) {
  VarSet out;
  if (!s) return out;
  if (s->kind == StmtKind::Block)
    for (const auto& n : s->names) out.insert(n);
  VarSet a = block_locals(s->s1), b = block_locals(s->s2);
  out.insert(a.begin(), a.end());
  out.insert(b.begin(), b.end());
  return out;
}

bool disjoint(const VarSet& a, const VarSet& b) {
  for (const auto& x : a)
    if (b.count(x)) return false;
  return true;
}

VarSet set_union(const VarSet& a, const VarSet& b) {
  VarSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

VarSet intersect(const VarSet& a, const VarSet& b) {
  VarSet out;
  for (const auto& x : a)
    if (b.count(x)) out.insert(x);
  return out;
}

}  // namespace rpv
