#include "rpv/macros.hpp"

#include "rpv/varsets.hpp"

namespace rpv {

namespace {

struct Expander {
  const VarSet& avoid;
  const std::map<std::string, Type>* types = nullptr;
  int counter = 0;

  Type operand_type(const ExprPtr& e) const {
    if (e->kind == ExprKind::Subscript) return Type::Int;
    if (types) {
      auto it = types->find(e->name);
      if (it != types->end()) return it->second;
    }
    return Type::Unknown;
  }

  std::string fresh() {
    for (;;) {
      std::string name = "_sw" + std::to_string(counter++);
      if (!avoid.count(name)) return name;
    }
  }

  StmtPtr expand(const StmtPtr& s) {
    if (!s) return s;
    switch (s->kind) {
      case StmtKind::Swap: {
        const ExprPtr& u = s->exprs[0];
        const ExprPtr& v = s->exprs[1];
        for (const ExprPtr& e : {u, v}) {
          if (e->kind != ExprKind::Var && e->kind != ExprKind::Subscript)
            throw MacroError(s->loc, "swap operand must be a simple or subscripted variable");
        }
        Type tu = operand_type(u), tv = operand_type(v);
        if (tu == Type::IntArray || tv == Type::IntArray)
          throw MacroError(s->loc, "swap operands must hold basic values");
        if (tu != Type::Unknown && tv != Type::Unknown && tu != tv)
          throw MacroError(s->loc, "swap operands have different types");
        std::string tmp = fresh();
        auto assign_to = [&](const ExprPtr& lhs, ExprPtr rhs) -> StmtPtr {
          if (lhs->kind == ExprKind::Var)
            return mk_assign(lhs->name, nullptr, std::move(rhs), s->loc);
          return mk_assign(lhs->array.base, lhs->a, std::move(rhs), s->loc);
        };
        // begin local tmp := u; u := v; v := tmp end
        StmtPtr body = mk_seq(assign_to(u, v),
                              assign_to(v, mk_var(tmp, Type::Int, s->loc)), s->loc);
        return mk_block({tmp}, {u}, body, s->loc);
      }
      case StmtKind::Seq:
        return mk_seq(expand(s->s1), expand(s->s2), s->loc);
      case StmtKind::If:
        return mk_if(s->exprs[0], expand(s->s1), expand(s->s2), s->loc);
      case StmtKind::While:
        return mk_while(s->exprs[0], expand(s->s1), s->loc);
      case StmtKind::Block:
        return mk_block(s->names, s->exprs, expand(s->s1), s->loc);
      default:
        return s;
    }
  }
};

bool has_swap(const StmtPtr& s) {
  if (!s) return false;
  if (s->kind == StmtKind::Swap) return true;
  return has_swap(s->s1) || has_swap(s->s2);
}

}  // namespace

StmtPtr expand_macros(const StmtPtr& stmt, const VarSet& avoid) {
  if (!has_swap(stmt)) return stmt;
  Expander ex{avoid};
  return ex.expand(stmt);
}

StmtPtr expand_macros(const StmtPtr& stmt, const VarSet& avoid,
                      const std::map<std::string, Type>& types) {
  if (!has_swap(stmt)) return stmt;
  Expander ex{avoid};
  ex.types = &types;
  return ex.expand(stmt);
}

Program expand_macros(const Program& program) {
  // freshness is with respect to every name of the whole program
  VarSet avoid = var_of(program.decls);
  if (program.main) {
    VarSet mv = var_of(program.main);
    avoid.insert(mv.begin(), mv.end());
  }
  for (const auto& [name, t] : program.types) avoid.insert(name);

  Program out = program;
  for (auto& d : out.decls) d.body = expand_macros(d.body, avoid, out.types);
  if (out.main) out.main = expand_macros(out.main, avoid, out.types);
  for (const auto& d : out.decls) {
    VarSet locals = block_locals(d.body);
    for (const auto& l : locals)
      if (!out.types.count(l)) out.types[l] = Type::Int;
  }
  return out;
}

}  // namespace rpv
