// Assertion evaluation over concrete states, with finite windows for
// unbounded quantifiers. Interval-bounded constructs evaluate exactly;
// windowed ones mark the verdict window-relative.
#pragma once

#include <optional>

#include "rpv/assertions.hpp"
#include "rpv/state.hpp"

namespace rpv {

struct EvalWindow {
  long long lo = -8;
  long long hi = 8;
  // array enumeration bounds for array existentials without witnesses
  int arr_max_len = 3;
  long long val_lo = -2;
  long long val_hi = 2;
  // when true, the quantifier domain also includes every index and value
  // mentioned by the state
  bool include_mentioned = true;
};

struct EvalResult {
  bool value = false;
  bool exact = true;  // false when any quantifier was cut to the window
};

struct WindowRequired : Error {
  using Error::Error;
};

// Binding overlay used for quantified variables during evaluation.
struct EvalEnv {
  const State* base = nullptr;
  std::vector<std::pair<std::string, Value>> ints;
  std::vector<std::pair<std::string, const ArrayVal*>> arrays;

  std::optional<Value> lookup_scalar(const std::string& name) const;
  const ArrayVal* lookup_array(const std::string& name) const;
};

Value eval_value_env(const ExprPtr& e, const EvalEnv& env);
long long eval_int_env(const ExprPtr& e, const EvalEnv& env);
bool eval_bool_env(const ExprPtr& e, const EvalEnv& env);

// Materializes an array term (base plus point updates) in the environment.
ArrayVal resolve_array(const ArrayRef& r, const EvalEnv& env);

EvalResult eval_assertion(const AssnPtr& p, const State& sigma,
                          const std::optional<EvalWindow>& window);

// Variant reusing an existing environment (used by the VC enumerator).
EvalResult eval_assertion_env(const AssnPtr& p, EvalEnv& env,
                              const std::optional<EvalWindow>& window);

// All array values at or between enumeration bounds: every arrangement of
// values in [val_lo, val_hi] at indices 0..len-1 for len <= arr_max_len.
std::vector<ArrayVal> enumerate_arrays(int max_len, long long val_lo, long long val_hi);

}  // namespace rpv
