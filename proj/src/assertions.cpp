#include "rpv/assertions.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace rpv {

namespace {

std::shared_ptr<Assertion> node(AssnKind k) {
  auto a = std::make_shared<Assertion>();
  a->kind = k;
  return a;
}

}  // namespace

AssnPtr mk_atom(ExprPtr e) {
  auto a = node(AssnKind::Atom);
  a->loc = e ? e->loc : SourceLoc{};
  a->atom = std::move(e);
  return a;
}

AssnPtr mk_array_eq(ArrayRef x, ArrayRef y, SourceLoc loc) {
  auto a = node(AssnKind::ArrayEq);
  a->arr1 = std::move(x);
  a->arr2 = std::move(y);
  a->loc = loc;
  return a;
}

AssnPtr mk_not(AssnPtr x) {
  auto a = node(AssnKind::Not);
  a->loc = x ? x->loc : SourceLoc{};
  a->a = std::move(x);
  return a;
}

AssnPtr mk_and(AssnPtr x, AssnPtr y) {
  auto a = node(AssnKind::And);
  a->loc = x ? x->loc : SourceLoc{};
  a->a = std::move(x);
  a->b = std::move(y);
  return a;
}

AssnPtr mk_or(AssnPtr x, AssnPtr y) {
  auto a = node(AssnKind::Or);
  a->loc = x ? x->loc : SourceLoc{};
  a->a = std::move(x);
  a->b = std::move(y);
  return a;
}

AssnPtr mk_implies(AssnPtr x, AssnPtr y) {
  auto a = node(AssnKind::Implies);
  a->loc = x ? x->loc : SourceLoc{};
  a->a = std::move(x);
  a->b = std::move(y);
  return a;
}

AssnPtr mk_forall(std::string var, AssnPtr body, SourceLoc loc) {
  auto a = node(AssnKind::Forall);
  a->var = std::move(var);
  a->a = std::move(body);
  a->loc = loc;
  return a;
}

AssnPtr mk_exists(std::string var, AssnPtr body, SourceLoc loc) {
  auto a = node(AssnKind::Exists);
  a->var = std::move(var);
  a->a = std::move(body);
  a->loc = loc;
  return a;
}

AssnPtr mk_forall_in(std::string var, ExprPtr lo, ExprPtr hi, AssnPtr body, SourceLoc loc) {
  auto a = node(AssnKind::ForallIn);
  a->var = std::move(var);
  a->lo = std::move(lo);
  a->hi = std::move(hi);
  a->a = std::move(body);
  a->loc = loc;
  return a;
}

AssnPtr mk_exists_in(std::string var, ExprPtr lo, ExprPtr hi, AssnPtr body, SourceLoc loc) {
  auto a = node(AssnKind::ExistsIn);
  a->var = std::move(var);
  a->lo = std::move(lo);
  a->hi = std::move(hi);
  a->a = std::move(body);
  a->loc = loc;
  return a;
}

AssnPtr mk_exists_array(std::string var, AssnPtr body, SourceLoc loc) {
  auto a = node(AssnKind::ExistsArray);
  a->var = std::move(var);
  a->a = std::move(body);
  a->loc = loc;
  return a;
}

AssnPtr mk_sorted(ArrayRef arr, ExprPtr lo, ExprPtr hi, SourceLoc loc) {
  auto a = node(AssnKind::Sorted);
  a->arr1 = std::move(arr);
  a->lo = std::move(lo);
  a->hi = std::move(hi);
  a->loc = loc;
  return a;
}

AssnPtr mk_perm(ArrayRef x, ArrayRef y, ExprPtr lo, ExprPtr hi, SourceLoc loc) {
  auto a = node(AssnKind::Perm);
  a->arr1 = std::move(x);
  a->arr2 = std::move(y);
  a->lo = std::move(lo);
  a->hi = std::move(hi);
  a->loc = loc;
  return a;
}

AssnPtr mk_true() { return mk_atom(mk_bool(true)); }

bool equal(const AssnPtr& a, const AssnPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  if (a->var != b->var) return false;
  switch (a->kind) {
    case AssnKind::Atom: return equal(a->atom, b->atom);
    case AssnKind::ArrayEq: return equal(a->arr1, b->arr1) && equal(a->arr2, b->arr2);
    case AssnKind::Sorted:
      return equal(a->arr1, b->arr1) && equal(a->lo, b->lo) && equal(a->hi, b->hi);
    case AssnKind::Perm:
      return equal(a->arr1, b->arr1) && equal(a->arr2, b->arr2) && equal(a->lo, b->lo) &&
             equal(a->hi, b->hi);
    case AssnKind::ForallIn:
    case AssnKind::ExistsIn:
      if (!equal(a->lo, b->lo) || !equal(a->hi, b->hi)) return false;
      return equal(a->a, b->a);
    default:
      if ((a->a != nullptr) != (b->a != nullptr)) return false;
      if ((b->b != nullptr) != (b->b != nullptr)) return false;
      if (a->a && !equal(a->a, b->a)) return false;
      if (a->b && !equal(a->b, b->b)) return false;
      return true;
  }
}

std::string to_string(const Assertion& a) {
  std::ostringstream os;
  switch (a.kind) {
    case AssnKind::Atom: os << to_string(*a.atom); break;
    case AssnKind::ArrayEq: os << to_string(a.arr1) << " = " << to_string(a.arr2); break;
    case AssnKind::Not: os << "not (" << to_string(*a.a) << ")"; break;
    case AssnKind::And:
      os << "(" << to_string(*a.a) << " and " << to_string(*a.b) << ")";
      break;
    case AssnKind::Or:
      os << "(" << to_string(*a.a) << " or " << to_string(*a.b) << ")";
      break;
    case AssnKind::Implies:
      os << "(" << to_string(*a.a) << " -> " << to_string(*a.b) << ")";
      break;
    case AssnKind::Forall: os << "forall " << a.var << " : " << to_string(*a.a); break;
    case AssnKind::Exists: os << "exists " << a.var << " : " << to_string(*a.a); break;
    case AssnKind::ForallIn:
      os << "forall " << a.var << " in [" << to_string(*a.lo) << ":" << to_string(*a.hi)
         << "] : " << to_string(*a.a);
      break;
    case AssnKind::ExistsIn:
      os << "exists " << a.var << " in [" << to_string(*a.lo) << ":" << to_string(*a.hi)
         << "] : " << to_string(*a.a);
      break;
    case AssnKind::ExistsArray:
      os << "exists " << a.var << " : " << to_string(*a.a);
      break;
    case AssnKind::Sorted:
      os << "sorted(" << to_string(a.arr1) << "[" << to_string(*a.lo) << ":"
         << to_string(*a.hi) << "])";
      break;
    case AssnKind::Perm:
      os << "perm(" << to_string(a.arr1) << ", " << to_string(a.arr2) << ", ["
         << to_string(*a.lo) << ":" << to_string(*a.hi) << "])";
      break;
  }
  return os.str();
}

std::vector<AssnPtr> conjuncts(const AssnPtr& a) {
  std::vector<AssnPtr> out;
  if (!a) return out;
  if (a->kind == AssnKind::And) {
    auto l = conjuncts(a->a);
    auto r = conjuncts(a->b);
    out.insert(out.end(), l.begin(), l.end());
    out.insert(out.end(), r.begin(), r.end());
  } else {
    out.push_back(a);
  }
  return out;
}

AssnPtr conjoin(const std::vector<AssnPtr>& parts) {
  if (parts.empty()) return mk_true();
  AssnPtr out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) out = mk_and(out, parts[i]);
  return out;
}

VarSet SubstMap::domain() const {
  VarSet s;
  for (const auto& [k, v] : scalars) s.insert(k);
  for (const auto& [k, v] : arrays) s.insert(k);
  return s;
}

VarSet SubstMap::range_vars() const {
  VarSet s;
  for (const auto& [k, v] : scalars) collect_free_vars(v, s);
  for (const auto& [k, r] : arrays) {
    s.insert(r.base);
    for (const auto& st : r.stores) {
      collect_free_vars(st.index, s);
      collect_free_vars(st.value, s);
    }
  }
  return s;
}

SubstMap subst_for_assign(const Stmt& assign) {
  SubstMap m;
  if (assign.lhs_index) {
    ArrayRef r;
    r.base = assign.lhs_name;
    r.stores.push_back({assign.lhs_index, assign.exprs[0]});
    m.arrays[assign.lhs_name] = std::move(r);
  } else {
    m.scalars[assign.lhs_name] = assign.exprs[0];
  }
  return m;
}

SubstMap subst_for_par_assign(const std::vector<std::string>& names,
                              const std::vector<ExprPtr>& rhs) {
  SubstMap m;
  for (size_t i = 0; i < names.size(); ++i) m.scalars[names[i]] = rhs[i];
  return m;
}

ExprPtr mk_select(const ArrayRef& arr, const ExprPtr& index, SourceLoc loc) {
  if (arr.stores.empty()) {
    ArrayRef plain;
    plain.base = arr.base;
    return mk_subscript(plain, index, loc);
  }
  ArrayRef rest = arr;
  ArrayStore last = rest.stores.back();
  rest.stores.pop_back();
  // later update wins: (index = last.index ? last.value : rest[index])
  return mk_cond(mk_binary(BinOp::Eq, index, last.index, loc), last.value,
                 mk_select(rest, index, loc), loc);
}

namespace {

ArrayRef substitute_ref(const ArrayRef& r, const SubstMap& m) {
  ArrayRef out;
  auto it = m.arrays.find(r.base);
  if (it != m.arrays.end()) {
    out = it->second;
  } else {
    out.base = r.base;
  }
  for (const auto& st : r.stores) {
    out.stores.push_back({substitute(st.index, m), substitute(st.value, m)});
  }
  return out;
}

}  // namespace

ExprPtr substitute(const ExprPtr& e, const SubstMap& m) {
  if (!e || m.empty()) return e;
  switch (e->kind) {
    case ExprKind::IntLit:
    case ExprKind::BoolLit:
      return e;
    case ExprKind::Var: {
      auto it = m.scalars.find(e->name);
      return it != m.scalars.end() ? it->second : e;
    }
    case ExprKind::Subscript: {
      ArrayRef r = substitute_ref(e->array, m);
      ExprPtr idx = substitute(e->a, m);
      return mk_select(r, idx, e->loc);
    }
    case ExprKind::Unary: {
      ExprPtr a = substitute(e->a, m);
      return a == e->a ? e : mk_unary(e->un_op, a, e->loc);
    }
    case ExprKind::Binary: {
      ExprPtr a = substitute(e->a, m);
      ExprPtr b = substitute(e->b, m);
      return (a == e->a && b == e->b) ? e : mk_binary(e->bin_op, a, b, e->loc);
    }
    case ExprKind::Cond: {
      ExprPtr a = substitute(e->a, m);
      ExprPtr b = substitute(e->b, m);
      ExprPtr c = substitute(e->c, m);
      return (a == e->a && b == e->b && c == e->c) ? e : mk_cond(a, b, c, e->loc);
    }
  }
  return e;
}

namespace {

std::string fresh_name(const std::string& base, const VarSet& avoid) {
  std::string n = base;
  while (avoid.count(n)) n += "'";
  return n;
}

// Substitution under a binder: drops the bound name from the map and
// renames the binder when it would capture a replacement variable.
AssnPtr subst_binder(const Assertion& q, const SubstMap& m, bool array_binder) {
  SubstMap inner = m;
  inner.scalars.erase(q.var);
  inner.arrays.erase(q.var);

  VarSet range = inner.range_vars();
  std::string var = q.var;
  AssnPtr body = q.a;
  if (range.count(var)) {
    VarSet avoid = range;
    auto bodyfree = free_vars(body);
    avoid.insert(bodyfree.begin(), bodyfree.end());
    for (const auto& [k, v] : inner.scalars) avoid.insert(k);
    for (const auto& [k, v] : inner.arrays) avoid.insert(k);
    std::string renamed = fresh_name(var, avoid);
    SubstMap rn;
    if (array_binder) {
      ArrayRef r;
      r.base = renamed;
      rn.arrays[var] = r;
    } else {
      rn.scalars[var] = mk_var(renamed, array_binder ? Type::IntArray : Type::Int, q.loc);
    }
    body = substitute(body, rn);
    var = renamed;
  }
  body = inner.empty() ? body : substitute(body, inner);

  auto out = std::make_shared<Assertion>(q);
  out->var = var;
  out->a = body;
  if (q.lo) out->lo = substitute(q.lo, inner);
  if (q.hi) out->hi = substitute(q.hi, inner);
  return out;
}

}  // namespace

AssnPtr substitute(const AssnPtr& p, const SubstMap& m) {
  if (!p || m.empty()) return p;
  switch (p->kind) {
    case AssnKind::Atom: {
      ExprPtr e = substitute(p->atom, m);
      return e == p->atom ? p : mk_atom(e);
    }
    case AssnKind::ArrayEq:
      return mk_array_eq(substitute_ref(p->arr1, m), substitute_ref(p->arr2, m), p->loc);
    case AssnKind::Not: return mk_not(substitute(p->a, m));
    case AssnKind::And: return mk_and(substitute(p->a, m), substitute(p->b, m));
    case AssnKind::Or: return mk_or(substitute(p->a, m), substitute(p->b, m));
    case AssnKind::Implies: return mk_implies(substitute(p->a, m), substitute(p->b, m));
    case AssnKind::Forall:
    case AssnKind::Exists:
    case AssnKind::ForallIn:
    case AssnKind::ExistsIn:
      return subst_binder(*p, m, false);
    case AssnKind::ExistsArray:
      return subst_binder(*p, m, true);
    case AssnKind::Sorted:
      return mk_sorted(substitute_ref(p->arr1, m), substitute(p->lo, m), substitute(p->hi, m),
                       p->loc);
    case AssnKind::Perm:
      return mk_perm(substitute_ref(p->arr1, m), substitute_ref(p->arr2, m),
                     substitute(p->lo, m), substitute(p->hi, m), p->loc);
  }
  return p;
}

void collect_free_vars(const ExprPtr& e, VarSet& out) {
  if (!e) return;
  switch (e->kind) {
    case ExprKind::Var: out.insert(e->name); break;
    case ExprKind::Subscript:
      out.insert(e->array.base);
      for (const auto& st : e->array.stores) {
        collect_free_vars(st.index, out);
        collect_free_vars(st.value, out);
      }
      collect_free_vars(e->a, out);
      break;
    default:
      collect_free_vars(e->a, out);
      collect_free_vars(e->b, out);
      collect_free_vars(e->c, out);
      break;
  }
}

VarSet free_vars(const ExprPtr& e) {
  VarSet s;
  collect_free_vars(e, s);
  return s;
}

namespace {

void collect_ref(const ArrayRef& r, VarSet& out) {
  out.insert(r.base);
  for (const auto& st : r.stores) {
    collect_free_vars(st.index, out);
    collect_free_vars(st.value, out);
  }
}

void collect_assn(const AssnPtr& p, VarSet& out) {
  if (!p) return;
  switch (p->kind) {
    case AssnKind::Atom: collect_free_vars(p->atom, out); break;
    case AssnKind::ArrayEq:
      collect_ref(p->arr1, out);
      collect_ref(p->arr2, out);
      break;
    case AssnKind::Sorted:
      collect_ref(p->arr1, out);
      collect_free_vars(p->lo, out);
      collect_free_vars(p->hi, out);
      break;
    case AssnKind::Perm:
      collect_ref(p->arr1, out);
      collect_ref(p->arr2, out);
      collect_free_vars(p->lo, out);
      collect_free_vars(p->hi, out);
      break;
    case AssnKind::Forall:
    case AssnKind::Exists:
    case AssnKind::ExistsArray: {
      VarSet inner;
      collect_assn(p->a, inner);
      inner.erase(p->var);
      out.insert(inner.begin(), inner.end());
      break;
    }
    case AssnKind::ForallIn:
    case AssnKind::ExistsIn: {
      collect_free_vars(p->lo, out);
      collect_free_vars(p->hi, out);
      VarSet inner;
      collect_assn(p->a, inner);
      inner.erase(p->var);
      out.insert(inner.begin(), inner.end());
      break;
    }
    default:
      collect_assn(p->a, out);
      collect_assn(p->b, out);
      break;
  }
}

}  // namespace

VarSet free_vars(const AssnPtr& p) {
  VarSet s;
  collect_assn(p, s);
  return s;
}

namespace {

AssnPtr alpha_walk(const AssnPtr& p, VarSet& used) {
  if (!p) return p;
  switch (p->kind) {
    case AssnKind::Atom:
    case AssnKind::ArrayEq:
    case AssnKind::Sorted:
    case AssnKind::Perm:
      return p;
    case AssnKind::Not: return mk_not(alpha_walk(p->a, used));
    case AssnKind::And: return mk_and(alpha_walk(p->a, used), alpha_walk(p->b, used));
    case AssnKind::Or: return mk_or(alpha_walk(p->a, used), alpha_walk(p->b, used));
    case AssnKind::Implies:
      return mk_implies(alpha_walk(p->a, used), alpha_walk(p->b, used));
    default: {
      // binder node
      std::string var = p->var;
      AssnPtr body = p->a;
      if (used.count(var)) {
        std::string renamed = fresh_name(var, used);
        SubstMap rn;
        if (p->kind == AssnKind::ExistsArray) {
          ArrayRef r;
          r.base = renamed;
          rn.arrays[var] = r;
        } else {
          rn.scalars[var] = mk_var(renamed, Type::Int, p->loc);
        }
        body = substitute(body, rn);
        var = renamed;
      }
      used.insert(var);
      body = alpha_walk(body, used);
      auto out = std::make_shared<Assertion>(*p);
      out->var = var;
      out->a = body;
      return out;
    }
  }
}

}  // namespace

AssnPtr alpha_normalize(const AssnPtr& p) {
  VarSet used = free_vars(p);
  return alpha_walk(p, used);
}

// ---- typing ----

namespace {

struct AssnTyper {
  TypeEnv& env;

  Type type_of(const ExprPtr& e) {
    if (!e) return Type::Unknown;
    switch (e->kind) {
      case ExprKind::IntLit: return Type::Int;
      case ExprKind::BoolLit: return Type::Bool;
      case ExprKind::Var: {
        auto it = env.find(e->name);
        return it == env.end() ? Type::Unknown : it->second;
      }
      case ExprKind::Subscript: return Type::Int;
      case ExprKind::Unary: return e->un_op == UnOp::Neg ? Type::Int : Type::Bool;
      case ExprKind::Binary:
        switch (e->bin_op) {
          case BinOp::Add: case BinOp::Sub: case BinOp::Mul: case BinOp::Max:
            return Type::Int;
          default: return Type::Bool;
        }
      case ExprKind::Cond: {
        Type t = type_of(e->b);
        return t == Type::Unknown ? type_of(e->c) : t;
      }
    }
    return Type::Unknown;
  }

  void bind(const std::string& name, Type t, const SourceLoc& loc) {
    auto it = env.find(name);
    if (it == env.end() || it->second == Type::Unknown) {
      env[name] = t;
    } else if (t != Type::Unknown && it->second != t) {
      throw TypeError(loc, "variable '" + name + "' used as " + type_name(t) +
                               " but has type " + type_name(it->second));
    }
  }

  void check_ref(const ArrayRef& r, const SourceLoc& loc) {
    bind(r.base, Type::IntArray, loc);
    for (const auto& st : r.stores) {
      check_expr(st.index, Type::Int);
      check_expr(st.value, Type::Int);
    }
  }

  void check_expr(const ExprPtr& e, Type expected) {
    if (!e) return;
    switch (e->kind) {
      case ExprKind::IntLit:
        if (expected == Type::Bool)
          throw TypeError(e->loc, "integer literal used as boolean");
        break;
      case ExprKind::BoolLit:
        if (expected == Type::Int)
          throw TypeError(e->loc, "boolean literal used as integer");
        break;
      case ExprKind::Var:
        if (expected != Type::Unknown) bind(e->name, expected, e->loc);
        break;
      case ExprKind::Subscript:
        check_ref(e->array, e->loc);
        check_expr(e->a, Type::Int);
        if (expected == Type::Bool)
          throw TypeError(e->loc, "array element used as boolean");
        break;
      case ExprKind::Unary:
        check_expr(e->a, e->un_op == UnOp::Neg ? Type::Int : Type::Bool);
        break;
      case ExprKind::Binary:
        switch (e->bin_op) {
          case BinOp::Add: case BinOp::Sub: case BinOp::Mul: case BinOp::Max:
            check_expr(e->a, Type::Int);
            check_expr(e->b, Type::Int);
            if (expected == Type::Bool)
              throw TypeError(e->loc, "integer expression used as boolean");
            break;
          case BinOp::Lt: case BinOp::Le:
            check_expr(e->a, Type::Int);
            check_expr(e->b, Type::Int);
            break;
          case BinOp::Eq: {
            Type ta = type_of(e->a);
            Type tb = type_of(e->b);
            Type t = ta != Type::Unknown ? ta : tb;
            if (t == Type::Unknown) t = Type::Int;
            check_expr(e->a, t);
            check_expr(e->b, t);
            break;
          }
          default:  // connectives
            check_expr(e->a, Type::Bool);
            check_expr(e->b, Type::Bool);
            break;
        }
        break;
      case ExprKind::Cond:
        check_expr(e->a, Type::Bool);
        check_expr(e->b, expected);
        check_expr(e->c, expected);
        break;
    }
  }
};

bool uses_as_array(const std::string& name, const AssnPtr& p);

bool uses_as_array_expr(const std::string& name, const ExprPtr& e) {
  if (!e) return false;
  if (e->kind == ExprKind::Subscript) {
    if (e->array.base == name) return true;
    for (const auto& st : e->array.stores)
      if (uses_as_array_expr(name, st.index) || uses_as_array_expr(name, st.value)) return true;
  }
  return uses_as_array_expr(name, e->a) || uses_as_array_expr(name, e->b) ||
         uses_as_array_expr(name, e->c);
}

bool ref_uses(const std::string& name, const ArrayRef& r) {
  if (r.base == name) return true;
  for (const auto& st : r.stores)
    if (uses_as_array_expr(name, st.index) || uses_as_array_expr(name, st.value)) return true;
  return false;
}

bool uses_as_array(const std::string& name, const AssnPtr& p) {
  if (!p) return false;
  switch (p->kind) {
    case AssnKind::Atom: return uses_as_array_expr(name, p->atom);
    case AssnKind::ArrayEq: return ref_uses(name, p->arr1) || ref_uses(name, p->arr2);
    case AssnKind::Sorted: return ref_uses(name, p->arr1);
    case AssnKind::Perm: return ref_uses(name, p->arr1) || ref_uses(name, p->arr2);
    default:
      if (!p->var.empty() && p->var == name) return false;  // shadowed
      return uses_as_array(name, p->a) || uses_as_array(name, p->b) ||
             uses_as_array_expr(name, p->lo) || uses_as_array_expr(name, p->hi);
  }
}

}  // namespace

AssnPtr assertion_typecheck(const AssnPtr& p, TypeEnv& env) {
  if (!p) return p;
  AssnTyper ty{env};
  switch (p->kind) {
    case AssnKind::Atom: {
      // `a = a0` over two arrays becomes a whole-array equality
      const ExprPtr& e = p->atom;
      if (e->kind == ExprKind::Binary && e->bin_op == BinOp::Eq &&
          e->a->kind == ExprKind::Var && e->b->kind == ExprKind::Var) {
        Type ta = ty.type_of(e->a);
        Type tb = ty.type_of(e->b);
        if (ta == Type::IntArray || tb == Type::IntArray) {
          ty.bind(e->a->name, Type::IntArray, e->loc);
          ty.bind(e->b->name, Type::IntArray, e->loc);
          ArrayRef r1, r2;
          r1.base = e->a->name;
          r2.base = e->b->name;
          return mk_array_eq(r1, r2, p->loc);
        }
      }
      ty.check_expr(e, Type::Bool);
      return p;
    }
    case AssnKind::ArrayEq:
      ty.check_ref(p->arr1, p->loc);
      ty.check_ref(p->arr2, p->loc);
      return p;
    case AssnKind::Not: return mk_not(assertion_typecheck(p->a, env));
    case AssnKind::And:
      return mk_and(assertion_typecheck(p->a, env), assertion_typecheck(p->b, env));
    case AssnKind::Or:
      return mk_or(assertion_typecheck(p->a, env), assertion_typecheck(p->b, env));
    case AssnKind::Implies:
      return mk_implies(assertion_typecheck(p->a, env), assertion_typecheck(p->b, env));
    case AssnKind::Forall:
    case AssnKind::Exists: {
      bool as_array = uses_as_array(p->var, p->a);
      if (as_array && p->kind == AssnKind::Forall)
        throw TypeError(p->loc, "universal quantification over arrays is not supported");
      auto saved = env.find(p->var) != env.end()
                       ? std::optional<Type>(env[p->var])
                       : std::nullopt;
      env[p->var] = as_array ? Type::IntArray : Type::Int;
      AssnPtr body = assertion_typecheck(p->a, env);
      if (saved) env[p->var] = *saved; else env.erase(p->var);
      if (as_array) return mk_exists_array(p->var, body, p->loc);
      return p->kind == AssnKind::Forall ? mk_forall(p->var, body, p->loc)
                                         : mk_exists(p->var, body, p->loc);
    }
    case AssnKind::ForallIn:
    case AssnKind::ExistsIn: {
      ty.check_expr(p->lo, Type::Int);
      ty.check_expr(p->hi, Type::Int);
      auto saved = env.find(p->var) != env.end()
                       ? std::optional<Type>(env[p->var])
                       : std::nullopt;
      env[p->var] = Type::Int;
      AssnPtr body = assertion_typecheck(p->a, env);
      if (saved) env[p->var] = *saved; else env.erase(p->var);
      return p->kind == AssnKind::ForallIn
                 ? mk_forall_in(p->var, p->lo, p->hi, body, p->loc)
                 : mk_exists_in(p->var, p->lo, p->hi, body, p->loc);
    }
    case AssnKind::ExistsArray: {
      auto saved = env.find(p->var) != env.end()
                       ? std::optional<Type>(env[p->var])
                       : std::nullopt;
      env[p->var] = Type::IntArray;
      AssnPtr body = assertion_typecheck(p->a, env);
      if (saved) env[p->var] = *saved; else env.erase(p->var);
      return mk_exists_array(p->var, body, p->loc);
    }
    case AssnKind::Sorted:
      ty.check_ref(p->arr1, p->loc);
      ty.check_expr(p->lo, Type::Int);
      ty.check_expr(p->hi, Type::Int);
      return p;
    case AssnKind::Perm:
      ty.check_ref(p->arr1, p->loc);
      ty.check_ref(p->arr2, p->loc);
      ty.check_expr(p->lo, Type::Int);
      ty.check_expr(p->hi, Type::Int);
      return p;
  }
  return p;
}

ExprPtr expr_typecheck(const ExprPtr& e, TypeEnv& env, Type expected) {
  AssnTyper ty{env};
  ty.check_expr(e, expected);
  return e;
}

}  // namespace rpv
