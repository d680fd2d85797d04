#include "doctest.h"
#include "rpv/assert_eval.hpp"
#include "rpv/parser.hpp"
#include "rpv/semantics.hpp"

using namespace rpv;

namespace {

AssnPtr A(const std::string& text, const DefineTable* defs = nullptr) {
  Parser p(text, "<assn>");
  return p.parse_assertion(defs);
}

ExprPtr E(const std::string& text) {
  Parser p(text, "<expr>");
  return p.parse_condition();
}

}  // namespace

TEST_CASE("free variable sets") {
  CHECK(free_vars(A("forall i : a[i] = a0[i]")) == VarSet{"a", "a0"});
  CHECK(free_vars(A("sorted(a[x:y])")) == VarSet{"a", "x", "y"});
  CHECK(free_vars(A("perm(a, a0, [x':y'])")) == VarSet{"a", "a0", "x'", "y'"});
  CHECK(free_vars(A("exists i : i = x and (forall i : a[i] = 0)")) == VarSet{"x", "a"});
}

TEST_CASE("simple substitution") {
  SubstMap m;
  m.scalars["x"] = E("y + 1");
  // x > 0 is canonicalized to 0 < x at parse time
  AssnPtr s = substitute(A("x > 0"), m);
  CHECK(to_string(*s) == "0 < y + 1");
}

TEST_CASE("array component substitution uses conditional terms") {
  // (a[i] = 1)[a[j] := 2]  ->  (i = j ? 2 : a[i]) = 1
  StmtPtr assign = mk_assign("a", E("j"), E("2"));
  SubstMap m = subst_for_assign(*assign);
  AssnPtr s = substitute(A("a[i] = 1"), m);
  REQUIRE(s->kind == AssnKind::Atom);
  const Expr& eq = *s->atom;
  REQUIRE(eq.bin_op == BinOp::Eq);
  REQUIRE(eq.a->kind == ExprKind::Cond);
  CHECK(to_string(*eq.a) == "(i = j ? 2 : a[i])");
  CHECK(to_string(*eq.b) == "1");
}

TEST_CASE("whole-array substitution reaches the built-ins") {
  SubstMap m;
  ArrayRef r;
  r.base = "a0";
  m.arrays["a"] = r;
  AssnPtr s = substitute(A("sorted(a[x:y]) and perm(a, b, [x:y])"), m);
  CHECK(s->a->arr1.base == "a0");
  CHECK(s->b->arr1.base == "a0");
  CHECK(s->b->arr2.base == "b");
}

TEST_CASE("substitution is capture avoiding") {
  SubstMap m;
  m.scalars["x"] = E("i + 1");
  AssnPtr p = A("forall i : a[i] = x");
  AssnPtr s = substitute(p, m);
  // the binder must have been renamed away from i
  CHECK(s->var != "i");
  VarSet fv = free_vars(s);
  CHECK(fv.count("i"));  // the free i of the replacement
  CHECK(!fv.count("x"));
}

TEST_CASE("parallel substitution is simultaneous") {
  SubstMap m = subst_for_par_assign({"v", "w"}, {E("w"), E("v")});
  AssnPtr s = substitute(A("v < w"), m);
  CHECK(to_string(*s) == "w < v");
}

TEST_CASE("substitution lemma by window enumeration") {
  // eval(p[x := t], sigma) == eval(p, sigma[x := eval(t, sigma)])
  std::vector<AssnPtr> formulas = {
      A("x > 0"),
      A("a[x] = x"),
      A("forall i in [0:2] : a[i] <= x"),
      A("exists i in [x:3] : a[i] = x + 1"),
      A("sorted(a[0:x])"),
      A("perm(a, a0, [0:x])"),
  };
  ExprPtr t = E("x + y - 1");
  SubstMap m;
  m.scalars["x"] = t;

  EvalWindow w;
  for (const AssnPtr& p : formulas) {
    AssnPtr ps = substitute(p, m);
    for (long long xv = -2; xv <= 2; ++xv) {
      for (long long yv = -1; yv <= 2; ++yv) {
        State s;
        s.set_int("x", xv);
        s.set_int("y", yv);
        s.set_array("a", make_array({1, 0, 2}));
        s.set_array("a0", make_array({0, 1, 2}));
        State updated = s;
        long long tv = eval_int(t, s);
        updated.set_int("x", tv);
        CHECK(eval_assertion(ps, s, w).value == eval_assertion(p, updated, w).value);
      }
    }
  }
}

TEST_CASE("substitution lemma for subscripted targets") {
  // p[a[s] := t] evaluated at sigma equals p at sigma with a[eval(s)] := eval(t)
  std::vector<AssnPtr> formulas = {
      A("a[i] = 1"),
      A("sorted(a[0:2])"),
      A("perm(a, a0, [0:2])"),
      A("forall k in [0:2] : a[k] <= 9"),
  };
  ExprPtr idx = E("i + 1");
  ExprPtr val = E("a[i] + 2");
  StmtPtr assign = mk_assign("a", idx, val);
  SubstMap m = subst_for_assign(*assign);

  EvalWindow w;
  for (const AssnPtr& p : formulas) {
    AssnPtr ps = substitute(p, m);
    for (long long iv = -1; iv <= 2; ++iv) {
      State s;
      s.set_int("i", iv);
      s.set_array("a", make_array({2, 1, 0}));
      s.set_array("a0", make_array({0, 1, 2}));
      State updated = s;
      updated.set_array_elem("a", eval_int(idx, s), eval_int(val, s));
      CHECK(eval_assertion(ps, s, w).value == eval_assertion(p, updated, w).value);
    }
  }
}

TEST_CASE("alpha invariance of evaluation") {
  AssnPtr p = A("forall i : a[i] <= 5");
  AssnPtr q = A("forall j : a[j] <= 5");
  EvalWindow w;
  for (int t = 0; t < 3; ++t) {
    State s;
    s.set_array("a", make_array({static_cast<long long>(t), 3}));
    CHECK(eval_assertion(p, s, w).value == eval_assertion(q, s, w).value);
  }
}

TEST_CASE("conjuncts flattening") {
  AssnPtr p = A("x = 1 and y = 2 and z = 3");
  auto cs = conjuncts(p);
  REQUIRE(cs.size() == 3);
  CHECK(to_string(*cs[0]) == "x = 1");
  CHECK(to_string(*cs[2]) == "z = 3");
}
