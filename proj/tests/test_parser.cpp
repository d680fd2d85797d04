#include <string>

#include "doctest.h"
#include "rpv/parser.hpp"

using namespace rpv;

TEST_CASE("smallest program") {
  Program p = parse_program("program skip");
  REQUIRE(p.main != nullptr);
  CHECK(p.main->kind == StmtKind::Skip);
  CHECK(p.decls.empty());
}

static const char* kQuicksortSrc = R"(
Quicksort(m, n) ::
  if m < n then
    Partition(m, n);
    begin local v, w := ri, le;
      Quicksort(m, v);
      Quicksort(w, n)
    end
  fi

Partition(m, n) ::
  pi := a[m];
  le, ri := m, n;
  while le <= ri do
    while a[le] < pi do le := le + 1 od;
    while pi < a[ri] do ri := ri - 1 od;
    if le <= ri then
      swap(a[le], a[ri]);
      le, ri := le + 1, ri - 1
    fi
  od

program Quicksort(x, y)
)";

TEST_CASE("quicksort source parses to the expected shape") {
  Program p = parse_program(kQuicksortSrc, "quicksort.whp");
  REQUIRE(p.decls.size() == 2);
  const Decl* qs = p.find_decl("Quicksort");
  REQUIRE(qs != nullptr);
  CHECK(qs->formals == std::vector<std::string>{"m", "n"});

  // body = If(m<n, Seq(Call Partition, Block(v,w := ri,le; Seq(Call, Call))))
  const Stmt& body = *qs->body;
  REQUIRE(body.kind == StmtKind::If);
  REQUIRE(body.s1->kind == StmtKind::Seq);
  CHECK(body.s2->kind == StmtKind::Skip);  // implicit else from `fi`
  const Stmt& seq = *body.s1;
  REQUIRE(seq.s1->kind == StmtKind::Call);
  CHECK(seq.s1->callee == "Partition");
  REQUIRE(seq.s2->kind == StmtKind::Block);
  const Stmt& blk = *seq.s2;
  CHECK(blk.names == std::vector<std::string>{"v", "w"});
  REQUIRE(blk.s1->kind == StmtKind::Seq);
  CHECK(blk.s1->s1->kind == StmtKind::Call);
  CHECK(blk.s1->s1->callee == "Quicksort");
  CHECK(blk.s1->s2->callee == "Quicksort");

  // inferred types
  CHECK(p.types.at("a") == Type::IntArray);
  CHECK(p.types.at("le") == Type::Int);
  CHECK(p.types.at("m") == Type::Int);
}

TEST_CASE("empty local list is rejected") {
  CHECK_THROWS_AS(parse_program("program begin local ; skip end"), ParseError);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_program("program x := ");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find(":") != std::string::npos);
  }
}

TEST_CASE("zero-ary declarations and bare calls") {
  Program p = parse_program(R"(
P :: if x = 1 then b := true else b := false fi
program begin local y := 1; P end
)");
  REQUIRE(p.decls.size() == 1);
  CHECK(p.decls[0].formals.empty());
  REQUIRE(p.main->kind == StmtKind::Block);
  CHECK(p.main->s1->kind == StmtKind::Call);
  CHECK(p.main->s1->callee == "P");
  CHECK(p.types.at("b") == Type::Bool);
  CHECK(p.types.at("x") == Type::Int);
}

TEST_CASE("boolean operators and sugar in expressions") {
  Program p = parse_program("program if x >= 1 and not (y != 2) then skip fi");
  const Stmt& s = *p.main;
  REQUIRE(s.kind == StmtKind::If);
  const Expr& cond = *s.exprs[0];
  CHECK(cond.bin_op == BinOp::And);
  // x >= 1 becomes 1 <= x
  CHECK(cond.a->bin_op == BinOp::Le);
  CHECK(cond.a->a->kind == ExprKind::IntLit);
}

TEST_CASE("assertion parsing: quantifiers and built-ins") {
  Parser p("forall i in [x:y] : a[i] <= pi", "<test>");
  AssnPtr q = p.parse_assertion();
  REQUIRE(q->kind == AssnKind::ForallIn);
  CHECK(q->var == "i");
  CHECK(q->a->kind == AssnKind::Atom);

  Parser p2("sorted(a[x:y]) and perm(a, a0, [x':y'])", "<test>");
  AssnPtr q2 = p2.parse_assertion();
  REQUIRE(q2->kind == AssnKind::And);
  CHECK(q2->a->kind == AssnKind::Sorted);
  CHECK(q2->b->kind == AssnKind::Perm);
  CHECK(q2->b->arr2.base == "a0");
  CHECK(free_vars(q2) == VarSet{"a", "a0", "x", "y", "x'", "y'"});
}

TEST_CASE("assertion parsing: defines with substitution") {
  DefineTable defs;
  {
    Parser pd("v < w and (forall i in [m:v] : a[i] <= pi)", "<d>");
    defs["K"] = pd.parse_assertion();
  }
  {
    Parser pj("m = x and n = y", "<d>");
    defs["J"] = pj.parse_assertion();
  }
  Parser p("J and K[v, w := ri, le]", "<test>");
  AssnPtr q = p.parse_assertion(&defs);
  REQUIRE(q->kind == AssnKind::And);
  // K[v,w := ri,le] = ri < le and forall i in [m:ri] : a[i] <= pi
  const Assertion& k = *q->b;
  REQUIRE(k.kind == AssnKind::And);
  CHECK(to_string(*k.a) == "ri < le");
  CHECK(k.b->kind == AssnKind::ForallIn);
  CHECK(to_string(*k.b->hi) == "ri");
}

TEST_CASE("alpha normalization keeps binders distinct") {
  Parser p("(forall i : a[i] <= x) and (forall i : a[i] <= y)", "<test>");
  AssnPtr q = p.parse_assertion();
  REQUIRE(q->kind == AssnKind::And);
  CHECK(q->a->var != q->b->var);
}

TEST_CASE("array equality becomes ArrayEq under typing") {
  Parser p("a = a0 and a[1] = 2", "<test>");
  AssnPtr q = p.parse_assertion();
  TypeEnv env;
  env["a"] = Type::IntArray;
  AssnPtr t = assertion_typecheck(q, env);
  REQUIRE(t->kind == AssnKind::And);
  CHECK(t->a->kind == AssnKind::ArrayEq);
  CHECK(env.at("a0") == Type::IntArray);
}
