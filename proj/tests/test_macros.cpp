#include "doctest.h"
#include "rpv/macros.hpp"
#include "rpv/parser.hpp"
#include "rpv/semantics.hpp"

using namespace rpv;

TEST_CASE("swap expands to a block with a fresh temporary") {
  Program p = parse_program("program swap(a[le], a[ri])");
  Program e = expand_macros(p);
  const Stmt& s = *e.main;
  REQUIRE(s.kind == StmtKind::Block);
  REQUIRE(s.names == std::vector<std::string>{"_sw0"});
  CHECK(to_string(*s.exprs[0]) == "a[le]");
  REQUIRE(s.s1->kind == StmtKind::Seq);
  CHECK(to_string(*s.s1->s1) == "a[le] := a[ri]");
  CHECK(to_string(*s.s1->s2) == "a[ri] := _sw0");
}

TEST_CASE("temporary avoids names already in the program") {
  Program p = parse_program("program _sw0 := 7; swap(x, y)");
  Program e = expand_macros(p);
  const Stmt& blk = *e.main->s2;
  REQUIRE(blk.kind == StmtKind::Block);
  CHECK(blk.names[0] == "_sw1");
}

TEST_CASE("swap satisfies its specification at runtime") {
  Program p = parse_program("program swap(x, y)");
  Program e = expand_macros(p);
  State s;
  s.set_int("x", 3);
  s.set_int("y", 9);
  Outcome o = run(e.main, s, e.decls);
  REQUIRE(o.terminated());
  CHECK(o.final_state.get_int("x") == 9);
  CHECK(o.final_state.get_int("y") == 3);
  // the temporary is restored, leaving no trace
  CHECK(o.final_state.get_int("_sw0") == 0);
}

TEST_CASE("swap of a variable with itself is the identity") {
  Program p = parse_program("program swap(x, x)");
  Program e = expand_macros(p);
  State s;
  s.set_int("x", 5);
  Outcome o = run(e.main, s, e.decls);
  REQUIRE(o.terminated());
  CHECK(o.final_state.same_valuation(s));
}

TEST_CASE("array swap exchanges the elements") {
  Program p = parse_program("program swap(a[i], a[j])");
  Program e = expand_macros(p);
  State s;
  s.set_array("a", make_array({5, 7}));
  s.set_int("i", 0);
  s.set_int("j", 1);
  Outcome o = run(e.main, s, e.decls);
  REQUIRE(o.terminated());
  CHECK(o.final_state.get_array("a").get(0) == 7);
  CHECK(o.final_state.get_array("a").get(1) == 5);
}

TEST_CASE("ill-typed swap operands raise MacroError") {
  Program p = parse_program("program a[0] := 1; swap(a, x)");
  CHECK_THROWS_AS(expand_macros(p), MacroError);
  // non-lvalue operands never get past the parser
  CHECK_THROWS_AS(parse_program("program swap(x, 1 + 2)"), ParseError);
}

TEST_CASE("expansion is deterministic per body") {
  Program p1 = parse_program("program swap(x, y); swap(u, v)");
  Program p2 = parse_program("program swap(x, y); swap(u, v)");
  CHECK(equal(expand_macros(p1).main, expand_macros(p2).main));
}
