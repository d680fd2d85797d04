#include "rpv/assert_eval.hpp"

#include <algorithm>
#include <set>

namespace rpv {

std::optional<Value> EvalEnv::lookup_scalar(const std::string& name) const {
  for (auto it = ints.rbegin(); it != ints.rend(); ++it)
    if (it->first == name) return it->second;
  if (base) {
    auto it = base->scalars.find(name);
    if (it != base->scalars.end()) return it->second;
  }
  return std::nullopt;
}

const ArrayVal* EvalEnv::lookup_array(const std::string& name) const {
  for (auto it = arrays.rbegin(); it != arrays.rend(); ++it)
    if (it->first == name) return it->second;
  if (base) {
    auto it = base->arrays.find(name);
    if (it != base->arrays.end()) return &it->second;
  }
  return nullptr;
}

namespace {

const ArrayVal kEmpty{};

struct EvalError : Error {
  using Error::Error;
};

}  // namespace

ArrayVal resolve_array(const ArrayRef& r, const EvalEnv& env) {
  const ArrayVal* base = env.lookup_array(r.base);
  ArrayVal out = base ? *base : kEmpty;
  for (const auto& st : r.stores)
    out.set(eval_int_env(st.index, env), eval_int_env(st.value, env));
  return out;
}

Value eval_value_env(const ExprPtr& e, const EvalEnv& env) {
  switch (e->kind) {
    case ExprKind::IntLit: return e->int_val;
    case ExprKind::BoolLit: return e->bool_val;
    case ExprKind::Var: {
      auto v = env.lookup_scalar(e->name);
      if (v) return *v;
      if (env.lookup_array(e->name))
        throw EvalError(e->loc, "array variable '" + e->name + "' used as a scalar");
      return e->type == Type::Bool ? Value(false) : Value(0LL);
    }
    case ExprKind::Subscript: {
      long long i = eval_int_env(e->a, env);
      if (e->array.stores.empty()) {
        const ArrayVal* a = env.lookup_array(e->array.base);
        return a ? a->get(i) : 0LL;
      }
      return resolve_array(e->array, env).get(i);
    }
    case ExprKind::Unary:
      return e->un_op == UnOp::Neg ? Value(-eval_int_env(e->a, env))
                                   : Value(!eval_bool_env(e->a, env));
    case ExprKind::Binary:
      switch (e->bin_op) {
        case BinOp::Add: return eval_int_env(e->a, env) + eval_int_env(e->b, env);
        case BinOp::Sub: return eval_int_env(e->a, env) - eval_int_env(e->b, env);
        case BinOp::Mul: return eval_int_env(e->a, env) * eval_int_env(e->b, env);
        case BinOp::Max:
          return std::max(eval_int_env(e->a, env), eval_int_env(e->b, env));
        case BinOp::Lt: return eval_int_env(e->a, env) < eval_int_env(e->b, env);
        case BinOp::Le: return eval_int_env(e->a, env) <= eval_int_env(e->b, env);
        case BinOp::Eq: {
          Value a = eval_value_env(e->a, env);
          Value b = eval_value_env(e->b, env);
          if (a.index() != b.index())
            throw EvalError(e->loc, "equality between values of different types");
          return a == b;
        }
        case BinOp::And:
          return eval_bool_env(e->a, env) && eval_bool_env(e->b, env);
        case BinOp::Or:
          return eval_bool_env(e->a, env) || eval_bool_env(e->b, env);
        case BinOp::Implies:
          return !eval_bool_env(e->a, env) || eval_bool_env(e->b, env);
      }
      break;
    case ExprKind::Cond:
      return eval_bool_env(e->a, env) ? eval_value_env(e->b, env)
                                      : eval_value_env(e->c, env);
  }
  throw EvalError(e->loc, "unevaluable expression");
}

long long eval_int_env(const ExprPtr& e, const EvalEnv& env) {
  Value v = eval_value_env(e, env);
  if (const long long* i = std::get_if<long long>(&v)) return *i;
  throw EvalError(e->loc, "boolean value where integer expected");
}

bool eval_bool_env(const ExprPtr& e, const EvalEnv& env) {
  Value v = eval_value_env(e, env);
  if (const bool* b = std::get_if<bool>(&v)) return *b;
  throw EvalError(e->loc, "integer value where boolean expected");
}

std::vector<ArrayVal> enumerate_arrays(int max_len, long long val_lo, long long val_hi) {
  std::vector<ArrayVal> out;
  long long span = val_hi - val_lo + 1;
  if (span <= 0) span = 1;
  for (int len = 0; len <= max_len; ++len) {
    std::vector<long long> digits(static_cast<size_t>(len), 0);
    long long total = 1;
    for (int i = 0; i < len; ++i) {
      if (total > 2000000) throw Error("array window too large to enumerate");
      total *= span;
    }
    for (long long idx = 0; idx < total; ++idx) {
      long long rest = idx;
      ArrayVal a;
      for (int i = 0; i < len; ++i) {
        a.set(i, val_lo + rest % span);
        rest /= span;
      }
      out.push_back(std::move(a));
    }
  }
  return out;
}

namespace {

struct Evaluator {
  EvalEnv& env;
  const std::optional<EvalWindow>& window;
  bool used_window = false;

  std::vector<long long> unbounded_domain() {
    if (!window)
      throw WindowRequired("unbounded quantifier requires an evaluation window");
    used_window = true;
    std::set<long long> dom;
    for (long long v = window->lo; v <= window->hi; ++v) dom.insert(v);
    if (window->include_mentioned) {
      auto note_state = [&](const State* s) {
        if (!s) return;
        for (const auto& [k, v] : s->scalars)
          if (const long long* i = std::get_if<long long>(&v)) dom.insert(*i);
        for (const auto& [k, a] : s->arrays) {
          for (const auto& [i, v] : a.elems) {
            dom.insert(i);
            dom.insert(v);
          }
        }
      };
      note_state(env.base);
      for (const auto& [k, v] : env.ints)
        if (const long long* i = std::get_if<long long>(&v)) dom.insert(*i);
      for (const auto& [k, a] : env.arrays) {
        if (!a) continue;
        for (const auto& [i, v] : a->elems) {
          dom.insert(i);
          dom.insert(v);
        }
      }
    }
    return {dom.begin(), dom.end()};
  }

  bool eval(const AssnPtr& p) {
    switch (p->kind) {
      case AssnKind::Atom: return eval_bool_env(p->atom, env);
      case AssnKind::ArrayEq: {
        ArrayVal a = resolve_array(p->arr1, env);
        ArrayVal b = resolve_array(p->arr2, env);
        return a == b;
      }
      case AssnKind::Not: return !eval(p->a);
      case AssnKind::And: return eval(p->a) && eval(p->b);
      case AssnKind::Or: return eval(p->a) || eval(p->b);
      case AssnKind::Implies: return !eval(p->a) || eval(p->b);
      case AssnKind::ForallIn:
      case AssnKind::ExistsIn: {
        long long lo = eval_int_env(p->lo, env);
        long long hi = eval_int_env(p->hi, env);
        bool universal = p->kind == AssnKind::ForallIn;
        env.ints.emplace_back(p->var, 0LL);
        bool result = universal;
        for (long long v = lo; v <= hi; ++v) {
          env.ints.back().second = v;
          bool b = eval(p->a);
          if (universal && !b) { result = false; break; }
          if (!universal && b) { result = true; break; }
        }
        env.ints.pop_back();
        return result;
      }
      case AssnKind::Forall:
      case AssnKind::Exists: {
        bool universal = p->kind == AssnKind::Forall;
        std::vector<long long> dom = unbounded_domain();
        env.ints.emplace_back(p->var, 0LL);
        bool result = universal;
        for (long long v : dom) {
          env.ints.back().second = v;
          bool b = eval(p->a);
          if (universal && !b) { result = false; break; }
          if (!universal && b) { result = true; break; }
        }
        env.ints.pop_back();
        return result;
      }
      case AssnKind::ExistsArray: {
        if (!window)
          throw WindowRequired("array existential requires a window or witness");
        used_window = true;
        std::vector<ArrayVal> pool =
            enumerate_arrays(window->arr_max_len, window->val_lo, window->val_hi);
        env.arrays.emplace_back(p->var, nullptr);
        bool result = false;
        for (const auto& a : pool) {
          env.arrays.back().second = &a;
          if (eval(p->a)) { result = true; break; }
        }
        env.arrays.pop_back();
        return result;
      }
      case AssnKind::Sorted: {
        ArrayVal a = resolve_array(p->arr1, env);
        long long lo = eval_int_env(p->lo, env);
        long long hi = eval_int_env(p->hi, env);
        for (long long i = lo; i < hi; ++i)
          if (a.get(i) > a.get(i + 1)) return false;
        return true;
      }
      case AssnKind::Perm: {
        ArrayVal a = resolve_array(p->arr1, env);
        ArrayVal b = resolve_array(p->arr2, env);
        long long lo = eval_int_env(p->lo, env);
        long long hi = eval_int_env(p->hi, env);
        if (hi - lo > 100000)
          throw EvalError(p->loc, "permutation interval too wide to evaluate");
        // multiset equality on [lo:hi]
        if (lo <= hi) {
          std::vector<long long> va, vb;
          va.reserve(static_cast<size_t>(hi - lo + 1));
          for (long long i = lo; i <= hi; ++i) {
            va.push_back(a.get(i));
            vb.push_back(b.get(i));
          }
          std::sort(va.begin(), va.end());
          std::sort(vb.begin(), vb.end());
          if (va != vb) return false;
        }
        // pointwise equality outside [lo:hi]
        if (a.dflt != b.dflt) return false;
        auto outside_equal = [&](const ArrayVal& x, const ArrayVal& y) {
          for (const auto& [i, v] : x.elems) {
            if (lo <= i && i <= hi) continue;
            if (y.get(i) != v) return false;
          }
          return true;
        };
        return outside_equal(a, b) && outside_equal(b, a);
      }
    }
    throw EvalError(p->loc, "unevaluable assertion");
  }
};

}  // namespace

EvalResult eval_assertion_env(const AssnPtr& p, EvalEnv& env,
                              const std::optional<EvalWindow>& window) {
  Evaluator ev{env, window};
  EvalResult r;
  r.value = ev.eval(p);
  r.exact = !ev.used_window;
  return r;
}

EvalResult eval_assertion(const AssnPtr& p, const State& sigma,
                          const std::optional<EvalWindow>& window) {
  EvalEnv env;
  env.base = &sigma;
  return eval_assertion_env(p, env, window);
}

}  // namespace rpv
