#include "doctest.h"
#include "rpv/macros.hpp"
#include "rpv/parser.hpp"
#include "rpv/varsets.hpp"

using namespace rpv;

namespace {

const char* kSrc = R"(
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

}  // namespace

TEST_CASE("change sets follow the defining equations") {
  Program p = expand_macros(parse_program(kSrc));

  // hand-applied equations: change of the declaration set
  CHECK(change_of(p.decls) == VarSet{"pi", "le", "ri", "a"});

  // block-locals and formals are subtracted; calls contribute nothing
  const Decl* qs = p.find_decl("Quicksort");
  REQUIRE(qs);
  CHECK(change_of(*qs) == VarSet{});

  StmtPtr call = mk_call("Partition", {mk_var("m"), mk_var("n")});
  CHECK(change_of(call) == VarSet{});

  const Decl* part = p.find_decl("Partition");
  REQUIRE(part);
  CHECK(change_of(*part) == VarSet{"pi", "le", "ri", "a"});
  // before removing formals, the body changes m-free set too
  CHECK(change_of(part->body) == VarSet{"pi", "le", "ri", "a"});
}

TEST_CASE("var collects every occurring name") {
  Program p = parse_program("program x := a[i] + y");
  CHECK(var_of(p.main) == VarSet{"x", "a", "i", "y"});
}

TEST_CASE("block change is disjoint from its locals") {
  Program p = parse_program("program begin local t := x; t := t + 1; y := t end");
  REQUIRE(p.main->kind == StmtKind::Block);
  VarSet ch = change_of(p.main);
  CHECK(ch == VarSet{"y"});
  CHECK(disjoint(ch, VarSet{"t"}));
}

TEST_CASE("change closure follows calls") {
  Program p = expand_macros(parse_program(kSrc));
  StmtPtr call = mk_call("Quicksort", {mk_var("x"), mk_var("y")});
  CHECK(change_of(call) == VarSet{});
  CHECK(change_closure(call, p.decls) == VarSet{"pi", "le", "ri", "a"});
}

TEST_CASE("program_sets is pure") {
  Program p = expand_macros(parse_program(kSrc));
  CHECK(change_of(p.decls) == change_of(p.decls));
  CHECK(var_of(p.decls) == var_of(p.decls));
}
