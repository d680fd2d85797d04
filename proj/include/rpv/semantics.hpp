// Small-step structural operational semantics, with block and call
// transition axioms that avoid substitution via parallel assignment.
#pragma once

#include <optional>
#include <vector>

#include "rpv/ast.hpp"
#include "rpv/state.hpp"

namespace rpv {

struct Configuration {
  StmtPtr stmt;  // null means the empty continuation E (termination)
  State state;

  bool terminated() const { return stmt == nullptr; }
};

enum class OutcomeKind { Terminated, OutOfFuel, Stuck };

struct Outcome {
  OutcomeKind kind;
  State final_state;         // Terminated
  Configuration last;        // OutOfFuel
  std::string stuck_reason;  // Stuck
  long long steps_used = 0;

  bool terminated() const { return kind == OutcomeKind::Terminated; }
};

// Total expression evaluation. Throws Error only on type-level
// impossibilities that well_formed excludes.
long long eval_int(const ExprPtr& e, const State& s);
bool eval_bool(const ExprPtr& e, const State& s);
Value eval_value(const ExprPtr& e, const State& s);

// One deterministic transition. Precondition: !config.terminated().
Configuration step(const Configuration& config, const std::vector<Decl>& decls);

constexpr long long kDefaultFuel = 1000000;

Outcome run(const StmtPtr& stmt, const State& initial, const std::vector<Decl>& decls,
            long long fuel = kDefaultFuel);

// Full configuration sequence from <S, sigma>, truncated at fuel.
std::vector<Configuration> trace(const StmtPtr& stmt, const State& initial,
                                 const std::vector<Decl>& decls,
                                 long long fuel = kDefaultFuel);

}  // namespace rpv
