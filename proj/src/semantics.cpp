#include "rpv/semantics.hpp"

#include <algorithm>

namespace rpv {

namespace {

struct StuckError : Error {
  using Error::Error;
};

}  // namespace

Value eval_value(const ExprPtr& e, const State& s) {
  switch (e->kind) {
    case ExprKind::IntLit: return e->int_val;
    case ExprKind::BoolLit: return e->bool_val;
    case ExprKind::Var: {
      auto it = s.scalars.find(e->name);
      if (it != s.scalars.end()) return it->second;
      return e->type == Type::Bool ? Value(false) : Value(0LL);
    }
    case ExprKind::Subscript: {
      if (!e->array.stores.empty())
        throw StuckError(e->loc, "subscript carries unlowered array updates");
      return s.get_array(e->array.base).get(eval_int(e->a, s));
    }
    case ExprKind::Unary:
      return e->un_op == UnOp::Neg ? Value(-eval_int(e->a, s)) : Value(!eval_bool(e->a, s));
    case ExprKind::Binary:
      switch (e->bin_op) {
        case BinOp::Add: return eval_int(e->a, s) + eval_int(e->b, s);
        case BinOp::Sub: return eval_int(e->a, s) - eval_int(e->b, s);
        case BinOp::Mul: return eval_int(e->a, s) * eval_int(e->b, s);
        case BinOp::Max: return std::max(eval_int(e->a, s), eval_int(e->b, s));
        case BinOp::Lt: return eval_int(e->a, s) < eval_int(e->b, s);
        case BinOp::Le: return eval_int(e->a, s) <= eval_int(e->b, s);
        case BinOp::Eq: {
          Value a = eval_value(e->a, s);
          Value b = eval_value(e->b, s);
          if (a.index() != b.index())
            throw StuckError(e->loc, "equality between values of different types");
          return a == b;
        }
        case BinOp::And: return eval_bool(e->a, s) && eval_bool(e->b, s);
        case BinOp::Or: return eval_bool(e->a, s) || eval_bool(e->b, s);
        case BinOp::Implies: return !eval_bool(e->a, s) || eval_bool(e->b, s);
      }
      break;
    case ExprKind::Cond:
      return eval_bool(e->a, s) ? eval_value(e->b, s) : eval_value(e->c, s);
  }
  throw StuckError(e->loc, "unevaluable expression");
}

long long eval_int(const ExprPtr& e, const State& s) {
  Value v = eval_value(e, s);
  if (const long long* i = std::get_if<long long>(&v)) return *i;
  throw StuckError(e->loc, "boolean value where integer expected");
}

bool eval_bool(const ExprPtr& e, const State& s) {
  Value v = eval_value(e, s);
  if (const bool* b = std::get_if<bool>(&v)) return *b;
  throw StuckError(e->loc, "integer value where boolean expected");
}

namespace {

ExprPtr literal_of(const Value& v, SourceLoc loc) {
  if (const long long* i = std::get_if<long long>(&v)) return mk_int(*i, loc);
  return mk_bool(std::get<bool>(v), loc);
}

// One step of the statement in isolation; Seq recombines.
Configuration step_stmt(const StmtPtr& s, const State& sigma, const std::vector<Decl>& decls) {
  switch (s->kind) {
    case StmtKind::Skip:
      return {nullptr, sigma};
    case StmtKind::Assign: {
      State tau = sigma;
      if (s->lhs_index) {
        long long i = eval_int(s->lhs_index, sigma);
        tau.set_array_elem(s->lhs_name, i, eval_int(s->exprs[0], sigma));
      } else {
        tau.scalars[s->lhs_name] = eval_value(s->exprs[0], sigma);
      }
      return {nullptr, std::move(tau)};
    }
    case StmtKind::ParAssign: {
      std::vector<Value> vals;
      vals.reserve(s->exprs.size());
      for (const auto& e : s->exprs) vals.push_back(eval_value(e, sigma));
      State tau = sigma;
      for (size_t i = 0; i < s->names.size(); ++i) tau.scalars[s->names[i]] = vals[i];
      return {nullptr, std::move(tau)};
    }
    case StmtKind::Seq: {
      Configuration c = step_stmt(s->s1, sigma, decls);
      if (c.terminated()) return {s->s2, std::move(c.state)};
      return {mk_seq(c.stmt, s->s2, s->loc), std::move(c.state)};
    }
    case StmtKind::If:
      return {eval_bool(s->exprs[0], sigma) ? s->s1 : s->s2, sigma};
    case StmtKind::While:
      if (eval_bool(s->exprs[0], sigma))
        return {mk_seq(s->s1, s, s->loc), sigma};
      return {nullptr, sigma};
    case StmtKind::Block: {
      // <begin local x̄:=t̄; S end, σ> → <x̄:=t̄; S; x̄:=σ(x̄), σ>
      std::vector<ExprPtr> saved;
      saved.reserve(s->names.size());
      for (size_t i = 0; i < s->names.size(); ++i) {
        auto it = sigma.scalars.find(s->names[i]);
        Value v;
        if (it != sigma.scalars.end()) {
          v = it->second;
        } else {
          // unmapped local reads as the type default; the initializer's
          // type tells us which
          Value probe = eval_value(s->exprs[i], sigma);
          v = std::holds_alternative<bool>(probe) ? Value(false) : Value(0LL);
        }
        saved.push_back(literal_of(v, s->loc));
      }
      StmtPtr restore = mk_par_assign(s->names, std::move(saved), s->loc);
      StmtPtr init = mk_par_assign(s->names, s->exprs, s->loc);
      return {mk_seq(init, mk_seq(s->s1, restore, s->loc), s->loc), sigma};
    }
    case StmtKind::Call: {
      // <P(t̄), σ> → <begin local ū:=t̄; body end, σ>  where P(ū)::body ∈ D
      for (const auto& d : decls) {
        if (d.name != s->callee) continue;
        if (d.formals.size() != s->exprs.size())
          throw StuckError(s->loc, "arity mismatch in call to '" + s->callee + "'");
        if (d.formals.empty()) return {d.body, sigma};
        return {mk_block(d.formals, s->exprs, d.body, s->loc), sigma};
      }
      throw StuckError(s->loc, "call to undeclared procedure '" + s->callee + "'");
    }
    case StmtKind::Swap:
      throw StuckError(s->loc, "swap macro must be expanded before execution");
  }
  throw StuckError(s->loc, "no transition");
}

}  // namespace

Configuration step(const Configuration& config, const std::vector<Decl>& decls) {
  if (config.terminated()) throw Error("step on a terminated configuration");
  return step_stmt(config.stmt, config.state, decls);
}

Outcome run(const StmtPtr& stmt, const State& initial, const std::vector<Decl>& decls,
            long long fuel) {
  Outcome out;
  Configuration c{stmt, initial};
  long long used = 0;
  try {
    while (!c.terminated()) {
      if (used >= fuel) {
        out.kind = OutcomeKind::OutOfFuel;
        out.last = std::move(c);
        out.steps_used = used;
        return out;
      }
      c = step(c, decls);
      ++used;
    }
  } catch (const Error& e) {
    out.kind = OutcomeKind::Stuck;
    out.stuck_reason = e.what();
    out.steps_used = used;
    return out;
  }
  out.kind = OutcomeKind::Terminated;
  out.final_state = std::move(c.state);
  out.steps_used = used;
  return out;
}

std::vector<Configuration> trace(const StmtPtr& stmt, const State& initial,
                                 const std::vector<Decl>& decls, long long fuel) {
  std::vector<Configuration> out;
  Configuration c{stmt, initial};
  out.push_back(c);
  long long used = 0;
  while (!c.terminated() && used < fuel) {
    c = step(c, decls);
    out.push_back(c);
    ++used;
  }
  return out;
}

}  // namespace rpv
