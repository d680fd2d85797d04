#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "rpv/assert_eval.hpp"
#include "rpv/parser.hpp"
#include "rpv/semantics.hpp"

using namespace rpv;

namespace {

AssnPtr A(const std::string& text) {
  Parser p(text, "<assn>");
  return p.parse_assertion();
}

ExprPtr E(const std::string& text) {
  Parser p(text, "<expr>");
  return p.parse_condition();
}

// Independent oracle: perm via explicit bijections on Z that are the
// identity outside [lo:hi]; such a bijection permutes the interval.
bool perm_by_bijection(const ArrayVal& a, const ArrayVal& b, long long lo, long long hi) {
  // indices whose values must match outside the interval
  auto outside_ok = [&]() {
    if (a.dflt != b.dflt) return false;
    for (const auto& [i, v] : a.elems)
      if ((i < lo || i > hi) && b.get(i) != v) return false;
    for (const auto& [i, v] : b.elems)
      if ((i < lo || i > hi) && a.get(i) != v) return false;
    return true;
  };
  if (lo > hi) return outside_ok();
  if (!outside_ok()) return false;
  std::vector<long long> idx(static_cast<size_t>(hi - lo + 1));
  std::iota(idx.begin(), idx.end(), lo);
  std::vector<long long> f = idx;
  std::sort(f.begin(), f.end());
  do {
    bool ok = true;
    for (size_t k = 0; k < idx.size(); ++k) {
      if (a.get(idx[k]) != b.get(f[k])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(f.begin(), f.end()));
  return false;
}

}  // namespace

TEST_CASE("expression evaluation basics") {
  State s;
  s.set_int("n", 5);
  s.set_int("m", 2);
  CHECK(eval_int(E("n - m"), s) == 3);

  State s2;
  s2.set_array("a", make_array({7, 9}));
  s2.set_int("le", 1);
  CHECK(eval_int(E("a[le]"), s2) == 9);

  State s3;
  s3.set_int("x", 4);
  s3.set_int("y", 1);
  CHECK(eval_int(E("max(y - x, 0)"), s3) == 0);
}

TEST_CASE("sorted on a concrete section") {
  State s;
  s.set_array("a", make_array({1, 2, 2}));
  CHECK(eval_assertion(A("sorted(a[0:2])"), s, std::nullopt).value);
  s.set_array_elem("a", 1, 3);
  CHECK_FALSE(eval_assertion(A("sorted(a[0:2])"), s, std::nullopt).value);
  // empty and single-element sections are sorted
  CHECK(eval_assertion(A("sorted(a[2:1])"), s, std::nullopt).value);
  CHECK(eval_assertion(A("sorted(a[1:1])"), s, std::nullopt).value);
}

TEST_CASE("perm agrees with the bijection oracle on a window") {
  auto pool = enumerate_arrays(3, 0, 2);
  AssnPtr perm = A("perm(a, a0, [x:y])");
  int checked = 0;
  for (const auto& a : pool) {
    for (const auto& b : pool) {
      for (long long lo = -1; lo <= 2; ++lo) {
        for (long long hi = lo - 1; hi <= 3; ++hi) {
          State s;
          s.set_array("a", a);
          s.set_array("a0", b);
          s.set_int("x", lo);
          s.set_int("y", hi);
          bool mine = eval_assertion(perm, s, std::nullopt).value;
          bool oracle = perm_by_bijection(a, b, lo, hi);
          if (mine != oracle) {
            CAPTURE(a.elems.size());
            CAPTURE(lo);
            CAPTURE(hi);
            REQUIRE(mine == oracle);
          }
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 10000);
}

TEST_CASE("perm spec example") {
  // a=[2,1,...], a0=[1,2,...], equal elsewhere -> perm(a,a0,[0:1])
  State s;
  s.set_array("a", make_array({2, 1, 5}));
  s.set_array("a0", make_array({1, 2, 5}));
  CHECK(eval_assertion(A("perm(a, a0, [0:1])"), s, std::nullopt).value);
  CHECK_FALSE(eval_assertion(A("perm(a, a0, [0:0])"), s, std::nullopt).value);
}

TEST_CASE("sorted is monotone in the section") {
  auto pool = enumerate_arrays(4, 0, 3);
  AssnPtr inner = A("sorted(a[x':y'])");
  AssnPtr outer = A("sorted(a[x:y])");
  for (const auto& a : pool) {
    for (long long x = 0; x <= 3; ++x)
      for (long long y = x; y <= 3; ++y) {
        State s;
        s.set_array("a", a);
        s.set_int("x", x);
        s.set_int("y", y);
        if (!eval_assertion(outer, s, std::nullopt).value) continue;
        for (long long x2 = x; x2 <= y; ++x2)
          for (long long y2 = x2; y2 <= y; ++y2) {
            s.set_int("x'", x2);
            s.set_int("y'", y2);
            CHECK(eval_assertion(inner, s, std::nullopt).value);
          }
      }
  }
}

TEST_CASE("window-relative flag and WindowRequired") {
  State s;
  s.set_array("a", make_array({1, 2}));
  AssnPtr p = A("forall i : a[i] >= 0");
  CHECK_THROWS_AS(eval_assertion(p, s, std::nullopt), WindowRequired);
  EvalResult r = eval_assertion(p, s, EvalWindow{});
  CHECK(r.value);
  CHECK_FALSE(r.exact);
  // interval-bounded quantifiers stay exact
  EvalResult r2 = eval_assertion(A("forall i in [0:1] : a[i] >= 0"), s, EvalWindow{});
  CHECK(r2.value);
  CHECK(r2.exact);
}

TEST_CASE("the implicit-else shape evaluates true on the boundary") {
  // J and m >= n -> sorted(a[x:y]) at m=n=x=y
  AssnPtr p = A("m = x and n = y and m >= n -> sorted(a[x:y])");
  State s;
  s.set_int("m", 1);
  s.set_int("n", 1);
  s.set_int("x", 1);
  s.set_int("y", 1);
  s.set_array("a", make_array({9, 3, 7}));
  CHECK(eval_assertion(p, s, EvalWindow{}).value);
}

TEST_CASE("array equality is exact") {
  State s;
  s.set_array("a", make_array({1, 2}));
  s.set_array("a0", make_array({1, 2}));
  TypeEnv env{{"a", Type::IntArray}, {"a0", Type::IntArray}};
  AssnPtr eq = assertion_typecheck(A("a = a0"), env);
  REQUIRE(eq->kind == AssnKind::ArrayEq);
  EvalResult r = eval_assertion(eq, s, std::nullopt);
  CHECK(r.value);
  CHECK(r.exact);
  s.set_array_elem("a0", 7, 5);
  CHECK_FALSE(eval_assertion(eq, s, std::nullopt).value);
}

TEST_CASE("array existential enumerates the window") {
  State s;
  s.set_array("a", make_array({1, 0}));
  // some array b sorted on [0:1] and a permutation of a there
  AssnPtr p = A("exists b : (perm(a, b, [0:1]) and sorted(b[0:1]))");
  TypeEnv env;
  env["a"] = Type::IntArray;
  p = assertion_typecheck(p, env);
  EvalWindow w;
  w.arr_max_len = 2;
  w.val_lo = 0;
  w.val_hi = 1;
  EvalResult r = eval_assertion(p, s, w);
  CHECK(r.value);
  CHECK_FALSE(r.exact);
}
