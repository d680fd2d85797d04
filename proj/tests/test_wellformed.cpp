#include "doctest.h"
#include "rpv/parser.hpp"
#include "rpv/wellformed.hpp"

using namespace rpv;

namespace {

bool has_rule(const WellFormedness& r, const std::string& rule) {
  for (const auto& v : r.violations)
    if (v.rule == rule) return true;
  return false;
}

}  // namespace

TEST_CASE("local of the main program clashing with the declarations is rejected") {
  Program p = parse_program(R"(
P :: if x = 1 then b := true else b := false fi
program begin local x := 1; P end
)");
  WellFormedness r = well_formed(p);
  CHECK_FALSE(r.ok());
  CHECK(has_rule(r, "name-clash"));
}

TEST_CASE("renamed local is accepted") {
  Program p = parse_program(R"(
P :: if x = 1 then b := true else b := false fi
program begin local y := 1; P end
)");
  CHECK(well_formed(p).ok());
}

TEST_CASE("arity mismatch is rejected") {
  Program p = parse_program(R"(
Quicksort(m, n) :: skip
program Quicksort(m)
)");
  WellFormedness r = well_formed(p);
  CHECK_FALSE(r.ok());
  CHECK(has_rule(r, "arity"));
}

TEST_CASE("undeclared procedure is rejected") {
  Program p = parse_program("program Foo(1)");
  CHECK(has_rule(well_formed(p), "undeclared"));
}

TEST_CASE("duplicate declarations are rejected") {
  Program p = parse_program("P :: skip\nP :: skip\nprogram P");
  CHECK(has_rule(well_formed(p), "unique-decl"));
}

TEST_CASE("duplicate formals are rejected") {
  Program p = parse_program("P(u, u) :: skip\nprogram P(1, 2)");
  CHECK(has_rule(well_formed(p), "distinct-vars"));
}

TEST_CASE("duplicate parallel assignment targets are rejected") {
  Program p = parse_program("program x, x := 1, 2");
  CHECK(has_rule(well_formed(p), "distinct-vars"));
}

TEST_CASE("type conflicts are reported") {
  Program p = parse_program("program x := 1; x := true");
  WellFormedness r = well_formed(p);
  CHECK(has_rule(r, "typing"));
}

TEST_CASE("ill-typed call actuals are reported") {
  Program p = parse_program(R"(
P(u) :: u := u + 1
program P(true)
)");
  CHECK(has_rule(well_formed(p), "typing"));
}

TEST_CASE("acceptance is stable under local renaming") {
  Program p1 = parse_program(R"(
P :: x := 1
program begin local u := 0; P end
)");
  Program p2 = parse_program(R"(
P :: x := 1
program begin local v := 0; P end
)");
  CHECK(well_formed(p1).ok() == well_formed(p2).ok());
}
