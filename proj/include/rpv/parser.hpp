// Recursive-descent parser for program sources and assertions.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rpv/assertions.hpp"
#include "rpv/ast.hpp"
#include "rpv/lexer.hpp"

namespace rpv {

// Named assertion abbreviations usable in assertion positions, optionally
// with a substitution suffix: NAME[v,w := ri,le].
using DefineTable = std::map<std::string, AssnPtr>;

// A substitution as written: target names paired with replacement
// expressions, before array/scalar classification.
using RawSubst = std::vector<std::pair<std::string, ExprPtr>>;

// Classifies targets using a type environment (script substitutions).
SubstMap resolve_subst(const RawSubst& raw, const TypeEnv& env, SourceLoc loc = {});
// Classifies targets by how the substituted formula uses them (defines,
// which are expanded before types are known).
SubstMap resolve_subst_for_assertion(const RawSubst& raw, const AssnPtr& body, SourceLoc loc = {});

class Parser {
 public:
  Parser(std::string source, std::string filename);

  // Whole source file: declarations then an optional `program S` entry.
  Program parse_program_file();

  // Sub-parsers, public so the proof-file loader can drive one instance.
  ExprPtr parse_condition();  // full boolean expression grammar
  ExprPtr parse_arith();      // arithmetic level (no connectives)
  StmtPtr parse_stmt_seq();
  StmtPtr parse_stmt();
  AssnPtr parse_assertion(const DefineTable* defines = nullptr);
  RawSubst parse_subst_body(const DefineTable* defines);  // between [ and ]

  Lexer& lexer() { return lex_; }

  bool at_ident(const std::string& kw);
  void expect_ident(const std::string& kw);
  bool accept_ident(const std::string& kw);
  Token expect(Tok k, const std::string& what);
  std::string expect_name();
  bool looks_like_decl_header(int offset = 0);

  static bool is_reserved(const std::string& id);

 private:
  ExprPtr parse_impl();
  ExprPtr parse_or();
  ExprPtr parse_and();
  ExprPtr parse_not();
  ExprPtr parse_cmp();
  ExprPtr parse_add();
  ExprPtr parse_mul();
  ExprPtr parse_unary();
  ExprPtr parse_primary();

  AssnPtr parse_assn_impl(const DefineTable* d);
  AssnPtr parse_assn_or(const DefineTable* d);
  AssnPtr parse_assn_and(const DefineTable* d);
  AssnPtr parse_assn_not(const DefineTable* d);
  AssnPtr parse_assn_atom(const DefineTable* d);
  AssnPtr parse_quantifier(const DefineTable* d);
  ExprPtr parse_lvalue();

  Lexer lex_;
};

// Parses and runs type inference (conflicts are re-derived by well_formed).
// Macros stay unexpanded. Throws ParseError on malformed input.
Program parse_program(const std::string& text, const std::string& filename = "<input>");

// Walks every expression of the program, unifying variable types into
// prog.types. Conflicts are appended to `conflicts` when non-null.
void infer_program_types(Program& prog,
                         std::vector<std::pair<SourceLoc, std::string>>* conflicts);

}  // namespace rpv
