#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "rpv/macros.hpp"
#include "rpv/parser.hpp"
#include "rpv/semantics.hpp"
#include "rpv/varsets.hpp"

using namespace rpv;

namespace {

const char* kQuicksortSrc = R"(
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
)";

Program quicksort_program() { return expand_macros(parse_program(kQuicksortSrc)); }

}  // namespace

TEST_CASE("call transition rewrites to an initialized block") {
  Program p = parse_program("P(u) :: u := u\nprogram P(x + 1)");
  Configuration c{p.main, State{}};
  Configuration c2 = step(c, p.decls);
  REQUIRE(c2.stmt != nullptr);
  CHECK(to_string(*c2.stmt) == "begin local u := x + 1; u := u end");
  CHECK(c2.state.same_valuation(c.state));
}

TEST_CASE("block transition captures current values as literals") {
  Program p = parse_program("program begin local x := 1; skip end");
  State s;
  s.set_int("x", 5);
  Configuration c2 = step({p.main, s}, p.decls);
  CHECK(to_string(*c2.stmt) == "x := 1; skip; x := 5");
}

TEST_CASE("parallel assignment is simultaneous") {
  Program p = parse_program("program x, y := y, x");
  State s;
  s.set_int("x", 1);
  s.set_int("y", 2);
  Configuration c2 = step({p.main, s}, p.decls);
  CHECK(c2.terminated());
  CHECK(c2.state.get_int("x") == 2);
  CHECK(c2.state.get_int("y") == 1);
}

TEST_CASE("quicksort sorts against the library oracle") {
  Program p = quicksort_program();
  std::vector<long long> data{3, 1, 4, 1, 5};
  State s;
  s.set_array("a", make_array(data));
  s.set_int("x", 0);
  s.set_int("y", 4);
  StmtPtr call = mk_call("Quicksort", {mk_var("x"), mk_var("y")});
  Outcome o = run(call, s, p.decls);
  REQUIRE(o.terminated());
  std::vector<long long> expect = data;
  std::sort(expect.begin(), expect.end());
  for (size_t i = 0; i < expect.size(); ++i)
    CHECK(o.final_state.get_array("a").get(static_cast<long long>(i)) == expect[i]);
}

TEST_CASE("static scope example: the call sees the global x") {
  Program p = parse_program(R"(
P :: if x = 1 then b := true else b := false fi
program begin local y := 1; P end
)");
  State s;
  s.set_int("x", 0);
  Outcome o = run(p.main, s, p.decls);
  REQUIRE(o.terminated());
  CHECK(o.final_state.get_bool("b") == false);
}

TEST_CASE("diverging loop runs out of fuel") {
  Program p = parse_program("program while true do skip od");
  Outcome o = run(p.main, State{}, p.decls, 100);
  CHECK(o.kind == OutcomeKind::OutOfFuel);
  CHECK(o.steps_used == 100);
}

TEST_CASE("trace shapes") {
  Program p = parse_program("program skip");
  auto t = trace(p.main, State{}, p.decls);
  REQUIRE(t.size() == 2);
  CHECK(t.back().terminated());

  Program p2 = parse_program("program x := 1; x := 2");
  auto t2 = trace(p2.main, State{}, p2.decls);
  REQUIRE(t2.size() == 3);
  CHECK(t2.back().state.get_int("x") == 2);
}

TEST_CASE("trace of a partition run ends with le > ri") {
  Program p = quicksort_program();
  State s;
  s.set_array("a", make_array({2, 1, 3}));
  StmtPtr call = mk_call("Partition", {mk_int(0), mk_int(2)});
  auto t = trace(call, s, p.decls, 100000);
  REQUIRE(t.back().terminated());
  const State& fin = t.back().state;
  CHECK(fin.get_int("le") > fin.get_int("ri"));
}

TEST_CASE("determinism: step and trace are functions of the configuration") {
  Program p = quicksort_program();
  State s;
  s.set_array("a", make_array({3, 1, 2}));
  StmtPtr call = mk_call("Quicksort", {mk_int(0), mk_int(2)});
  auto t1 = trace(call, s, p.decls);
  auto t2 = trace(call, s, p.decls);
  REQUIRE(t1.size() == t2.size());
  for (size_t i = 0; i < t1.size(); ++i) {
    CHECK(equal(t1[i].stmt, t2[i].stmt));
    CHECK(t1[i].state.same_valuation(t2[i].state));
  }
}

TEST_CASE("block restoration: locals regain their outer values") {
  Program p = parse_program("program begin local x, y := 7, 8; x := 9; y := 0 end");
  State s;
  s.set_int("x", 3);
  s.set_int("y", 4);
  Outcome o = run(p.main, s, p.decls);
  REQUIRE(o.terminated());
  CHECK(o.final_state.get_int("x") == 3);
  CHECK(o.final_state.get_int("y") == 4);
}

TEST_CASE("call-by-value: formals restored, aliasing is benign") {
  Program p = parse_program(R"(
P(u, w) :: u := 1; w := 2
program P(x, x)
)");
  State s;
  s.set_int("x", 5);
  Outcome o = run(p.main, s, p.decls);
  REQUIRE(o.terminated());
  CHECK(o.final_state.get_int("x") == 5);
  CHECK(o.final_state.get_int("u") == 0);
  CHECK(o.final_state.get_int("w") == 0);
}

TEST_CASE("frame: runs only touch the change closure") {
  Program p = quicksort_program();
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 50; ++trial) {
    State s;
    std::vector<long long> data;
    int len = static_cast<int>(rng() % 5);
    for (int i = 0; i < len; ++i) data.push_back(static_cast<long long>(rng() % 4));
    s.set_array("a", make_array(data));
    s.set_int("x", static_cast<long long>(rng() % 5) - 1);
    s.set_int("y", static_cast<long long>(rng() % 5) - 1);
    s.set_int("unrelated", 42);
    s.set_int("pi", 17);
    StmtPtr call = mk_call("Quicksort", {mk_var("x"), mk_var("y")});
    Outcome o = run(call, s, p.decls, 100000);
    REQUIRE(o.terminated());
    VarSet frame = change_closure(call, p.decls);
    for (const auto& [name, val] : s.scalars) {
      if (!frame.count(name)) CHECK(o.final_state.scalars.at(name) == val);
    }
    CHECK(o.final_state.get_int("unrelated") == 42);
  }
}

TEST_CASE("renaming block locals preserves meaning on globals") {
  Program p1 = parse_program(R"(
P(u) :: g := u + 1
program begin local t := 3; P(t) end
)");
  Program p2 = parse_program(R"(
P(u) :: g := u + 1
program begin local s := 3; P(s) end
)");
  Outcome o1 = run(p1.main, State{}, p1.decls);
  Outcome o2 = run(p2.main, State{}, p2.decls);
  REQUIRE(o1.terminated());
  REQUIRE(o2.terminated());
  CHECK(o1.final_state.get_int("g") == o2.final_state.get_int("g"));
}

TEST_CASE("stuck only on type-level impossibilities") {
  // hand-built ill-typed tree: 1 + true
  ExprPtr bad = mk_binary(BinOp::Add, mk_int(1), mk_bool(true));
  StmtPtr s = mk_assign("x", nullptr, bad);
  Outcome o = run(s, State{}, {});
  CHECK(o.kind == OutcomeKind::Stuck);
  CHECK_FALSE(o.stuck_reason.empty());
}
