#include "rpv/parser.hpp"

#include <array>
#include <optional>

namespace rpv {

namespace {

const char* kReserved[] = {
    "skip", "begin", "local", "end", "if", "then", "else", "fi",
    "while", "do", "od", "swap", "program", "true", "false",
    "and", "or", "not", "max", "forall", "exists", "in", "sorted", "perm",
};

}  // namespace

bool Parser::is_reserved(const std::string& id) {
  for (const char* k : kReserved)
    if (id == k) return true;
  return false;
}

Parser::Parser(std::string source, std::string filename)
    : lex_(std::move(source), std::move(filename)) {}

bool Parser::at_ident(const std::string& kw) {
  const Token& t = lex_.peek();
  return t.kind == Tok::Ident && t.text == kw;
}

void Parser::expect_ident(const std::string& kw) {
  if (!at_ident(kw)) throw ParseError(lex_.loc(), "expected '" + kw + "'");
  lex_.next();
}

bool Parser::accept_ident(const std::string& kw) {
  if (!at_ident(kw)) return false;
  lex_.next();
  return true;
}

Token Parser::expect(Tok k, const std::string& what) {
  Token t = lex_.next();
  if (t.kind != k) throw ParseError(t.loc, "expected " + what);
  return t;
}

std::string Parser::expect_name() {
  Token t = lex_.next();
  if (t.kind != Tok::Ident) throw ParseError(t.loc, "expected identifier");
  if (is_reserved(t.text))
    throw ParseError(t.loc, "'" + t.text + "' is a reserved word");
  return t.text;
}

// ---- expressions ----

ExprPtr Parser::parse_condition() { return parse_impl(); }
ExprPtr Parser::parse_arith() { return parse_add(); }

ExprPtr Parser::parse_impl() {
  ExprPtr a = parse_or();
  if (lex_.peek().kind == Tok::Arrow) {
    SourceLoc loc = lex_.next().loc;
    return mk_binary(BinOp::Implies, a, parse_impl(), loc);
  }
  return a;
}

ExprPtr Parser::parse_or() {
  ExprPtr a = parse_and();
  while (at_ident("or")) {
    SourceLoc loc = lex_.next().loc;
    a = mk_binary(BinOp::Or, a, parse_and(), loc);
  }
  return a;
}

ExprPtr Parser::parse_and() {
  ExprPtr a = parse_not();
  while (at_ident("and")) {
    SourceLoc loc = lex_.next().loc;
    a = mk_binary(BinOp::And, a, parse_not(), loc);
  }
  return a;
}

ExprPtr Parser::parse_not() {
  if (at_ident("not")) {
    SourceLoc loc = lex_.next().loc;
    return mk_unary(UnOp::Not, parse_not(), loc);
  }
  return parse_cmp();
}

ExprPtr Parser::parse_cmp() {
  ExprPtr a = parse_add();
  const Token& t = lex_.peek();
  switch (t.kind) {
    case Tok::Lt: {
      SourceLoc loc = lex_.next().loc;
      return mk_binary(BinOp::Lt, a, parse_add(), loc);
    }
    case Tok::Le: {
      SourceLoc loc = lex_.next().loc;
      return mk_binary(BinOp::Le, a, parse_add(), loc);
    }
    case Tok::Gt: {
      SourceLoc loc = lex_.next().loc;
      return mk_binary(BinOp::Lt, parse_add(), a, loc);
    }
    case Tok::Ge: {
      SourceLoc loc = lex_.next().loc;
      return mk_binary(BinOp::Le, parse_add(), a, loc);
    }
    case Tok::EqSym: {
      SourceLoc loc = lex_.next().loc;
      return mk_binary(BinOp::Eq, a, parse_add(), loc);
    }
    case Tok::Ne: {
      SourceLoc loc = lex_.next().loc;
      return mk_unary(UnOp::Not, mk_binary(BinOp::Eq, a, parse_add(), loc), loc);
    }
    default:
      return a;
  }
}

ExprPtr Parser::parse_add() {
  ExprPtr a = parse_mul();
  for (;;) {
    if (lex_.peek().kind == Tok::Plus) {
      SourceLoc loc = lex_.next().loc;
      a = mk_binary(BinOp::Add, a, parse_mul(), loc);
    } else if (lex_.peek().kind == Tok::Minus) {
      SourceLoc loc = lex_.next().loc;
      a = mk_binary(BinOp::Sub, a, parse_mul(), loc);
    } else {
      return a;
    }
  }
}

ExprPtr Parser::parse_mul() {
  ExprPtr a = parse_unary();
  while (lex_.peek().kind == Tok::Star) {
    SourceLoc loc = lex_.next().loc;
    a = mk_binary(BinOp::Mul, a, parse_unary(), loc);
  }
  return a;
}

ExprPtr Parser::parse_unary() {
  if (lex_.peek().kind == Tok::Minus) {
    SourceLoc loc = lex_.next().loc;
    ExprPtr a = parse_unary();
    if (a->kind == ExprKind::IntLit) return mk_int(-a->int_val, loc);
    return mk_unary(UnOp::Neg, a, loc);
  }
  return parse_primary();
}

ExprPtr Parser::parse_primary() {
  const Token& t = lex_.peek();
  switch (t.kind) {
    case Tok::Int: {
      Token tok = lex_.next();
      return mk_int(tok.value, tok.loc);
    }
    case Tok::LParen: {
      lex_.next();
      ExprPtr e = parse_impl();
      expect(Tok::RParen, "')'");
      return e;
    }
    case Tok::Ident: {
      if (t.text == "true" || t.text == "false") {
        Token tok = lex_.next();
        return mk_bool(tok.text == "true", tok.loc);
      }
      if (t.text == "max") {
        Token tok = lex_.next();
        expect(Tok::LParen, "'(' after max");
        ExprPtr a = parse_impl();
        expect(Tok::Comma, "','");
        ExprPtr b = parse_impl();
        expect(Tok::RParen, "')'");
        return mk_binary(BinOp::Max, a, b, tok.loc);
      }
      if (is_reserved(t.text))
        throw ParseError(t.loc, "unexpected '" + t.text + "' in expression");
      Token tok = lex_.next();
      if (lex_.peek().kind == Tok::LBracket) {
        lex_.next();
        ExprPtr idx = parse_impl();
        expect(Tok::RBracket, "']'");
        ArrayRef r;
        r.base = tok.text;
        return mk_subscript(r, idx, tok.loc);
      }
      return mk_var(tok.text, Type::Unknown, tok.loc);
    }
    default:
      throw ParseError(t.loc, "expected expression");
  }
}

// ---- statements ----

ExprPtr Parser::parse_lvalue() {
  Token t = lex_.next();
  if (t.kind != Tok::Ident || is_reserved(t.text))
    throw ParseError(t.loc, "expected a simple or subscripted variable");
  if (lex_.peek().kind == Tok::LBracket) {
    lex_.next();
    ExprPtr idx = parse_impl();
    expect(Tok::RBracket, "']'");
    ArrayRef r;
    r.base = t.text;
    return mk_subscript(r, idx, t.loc);
  }
  return mk_var(t.text, Type::Unknown, t.loc);
}

bool Parser::looks_like_decl_header(int offset) {
  if (lex_.peek(offset).kind != Tok::Ident) return false;
  if (is_reserved(lex_.peek(offset).text)) return false;
  int i = offset + 1;
  if (lex_.peek(i).kind == Tok::DoubleColon) return true;
  if (lex_.peek(i).kind != Tok::LParen) return false;
  ++i;
  if (lex_.peek(i).kind == Tok::RParen) return lex_.peek(i + 1).kind == Tok::DoubleColon;
  for (;;) {
    if (lex_.peek(i).kind != Tok::Ident || is_reserved(lex_.peek(i).text)) return false;
    ++i;
    if (lex_.peek(i).kind == Tok::Comma) {
      ++i;
      continue;
    }
    if (lex_.peek(i).kind == Tok::RParen)
      return lex_.peek(i + 1).kind == Tok::DoubleColon;
    return false;
  }
}

StmtPtr Parser::parse_stmt() {
  const Token& t = lex_.peek();
  SourceLoc loc = t.loc;
  if (t.kind != Tok::Ident) throw ParseError(loc, "expected statement");

  if (t.text == "skip") {
    lex_.next();
    return mk_skip(loc);
  }
  if (t.text == "swap") {
    lex_.next();
    expect(Tok::LParen, "'(' after swap");
    ExprPtr u = parse_lvalue();
    expect(Tok::Comma, "','");
    ExprPtr v = parse_lvalue();
    expect(Tok::RParen, "')'");
    return mk_swap(u, v, loc);
  }
  if (t.text == "begin") {
    lex_.next();
    expect_ident("local");
    std::vector<std::string> names;
    if (lex_.peek().kind == Tok::Semi)
      throw ParseError(lex_.loc(), "block must declare at least one local variable");
    names.push_back(expect_name());
    while (lex_.peek().kind == Tok::Comma) {
      lex_.next();
      names.push_back(expect_name());
    }
    expect(Tok::Assign, "':=' in local declaration");
    std::vector<ExprPtr> inits;
    inits.push_back(parse_impl());
    while (lex_.peek().kind == Tok::Comma) {
      lex_.next();
      inits.push_back(parse_impl());
    }
    expect(Tok::Semi, "';' after local initialization");
    StmtPtr body = parse_stmt_seq();
    expect_ident("end");
    return mk_block(std::move(names), std::move(inits), body, loc);
  }
  if (t.text == "if") {
    lex_.next();
    ExprPtr cond = parse_impl();
    expect_ident("then");
    StmtPtr then_s = parse_stmt_seq();
    StmtPtr else_s;
    if (accept_ident("else")) {
      else_s = parse_stmt_seq();
    } else {
      else_s = mk_skip(loc);  // if B then S fi abbreviates if B then S else skip fi
    }
    expect_ident("fi");
    return mk_if(cond, then_s, else_s, loc);
  }
  if (t.text == "while") {
    lex_.next();
    ExprPtr cond = parse_impl();
    expect_ident("do");
    StmtPtr body = parse_stmt_seq();
    expect_ident("od");
    return mk_while(cond, body, loc);
  }
  if (is_reserved(t.text)) throw ParseError(loc, "unexpected '" + t.text + "'");

  // assignment, parallel assignment, or call
  Token name = lex_.next();
  switch (lex_.peek().kind) {
    case Tok::LBracket: {
      lex_.next();
      ExprPtr idx = parse_impl();
      expect(Tok::RBracket, "']'");
      expect(Tok::Assign, "':=' in assignment");
      ExprPtr rhs = parse_impl();
      return mk_assign(name.text, idx, rhs, loc);
    }
    case Tok::Assign: {
      lex_.next();
      ExprPtr rhs = parse_impl();
      return mk_assign(name.text, nullptr, rhs, loc);
    }
    case Tok::Comma: {
      std::vector<std::string> names{name.text};
      while (lex_.peek().kind == Tok::Comma) {
        lex_.next();
        names.push_back(expect_name());
      }
      expect(Tok::Assign, "':=' in parallel assignment");
      std::vector<ExprPtr> rhs;
      rhs.push_back(parse_impl());
      while (lex_.peek().kind == Tok::Comma) {
        lex_.next();
        rhs.push_back(parse_impl());
      }
      return mk_par_assign(std::move(names), std::move(rhs), loc);
    }
    case Tok::LParen: {
      lex_.next();
      std::vector<ExprPtr> actuals;
      if (lex_.peek().kind != Tok::RParen) {
        actuals.push_back(parse_impl());
        while (lex_.peek().kind == Tok::Comma) {
          lex_.next();
          actuals.push_back(parse_impl());
        }
      }
      expect(Tok::RParen, "')'");
      return mk_call(name.text, std::move(actuals), loc);
    }
    default:
      // bare identifier: zero-ary procedure call
      return mk_call(name.text, {}, loc);
  }
}

StmtPtr Parser::parse_stmt_seq() {
  StmtPtr s = parse_stmt();
  std::vector<StmtPtr> rest;
  while (lex_.peek().kind == Tok::Semi) {
    // a declaration header or `program` after ';' ends this sequence
    if (looks_like_decl_header(1)) break;
    if (lex_.peek(1).kind == Tok::Ident && lex_.peek(1).text == "program") break;
    if (lex_.peek(1).kind == Tok::End) break;
    lex_.next();
    rest.push_back(parse_stmt());
  }
  for (auto it = rest.rbegin(); it != rest.rend(); ++it) {
    // right-nest: s1; (s2; (...))
  }
  StmtPtr out = nullptr;
  for (auto it = rest.rbegin(); it != rest.rend(); ++it)
    out = out ? mk_seq(*it, out, (*it)->loc) : *it;
  return out ? mk_seq(s, out, s->loc) : s;
}

Program Parser::parse_program_file() {
  Program prog;
  for (;;) {
    if (lex_.peek().kind == Tok::End) break;
    if (lex_.peek().kind == Tok::Semi) {  // stray separator between items
      lex_.next();
      continue;
    }
    if (at_ident("program")) {
      Token t = lex_.next();
      if (prog.main) throw ParseError(t.loc, "duplicate 'program' entry");
      prog.main = parse_stmt_seq();
      continue;
    }
    // declaration: Name(params) :: body  or  Name :: body
    Token name = lex_.next();
    if (name.kind != Tok::Ident || is_reserved(name.text))
      throw ParseError(name.loc, "expected procedure declaration or 'program'");
    Decl d;
    d.name = name.text;
    d.loc = name.loc;
    if (lex_.peek().kind == Tok::LParen) {
      lex_.next();
      if (lex_.peek().kind != Tok::RParen) {
        d.formals.push_back(expect_name());
        while (lex_.peek().kind == Tok::Comma) {
          lex_.next();
          d.formals.push_back(expect_name());
        }
      }
      expect(Tok::RParen, "')'");
    }
    expect(Tok::DoubleColon, "'::' after procedure header");
    d.body = parse_stmt_seq();
    prog.decls.push_back(std::move(d));
  }
  return prog;
}

// ---- assertions ----

AssnPtr Parser::parse_assertion(const DefineTable* defines) {
  AssnPtr a = parse_assn_impl(defines);
  return alpha_normalize(a);
}

AssnPtr Parser::parse_assn_impl(const DefineTable* d) {
  AssnPtr a = parse_assn_or(d);
  if (lex_.peek().kind == Tok::Arrow) {
    lex_.next();
    return mk_implies(a, parse_assn_impl(d));
  }
  return a;
}

AssnPtr Parser::parse_assn_or(const DefineTable* d) {
  AssnPtr a = parse_assn_and(d);
  while (at_ident("or")) {
    lex_.next();
    a = mk_or(a, parse_assn_and(d));
  }
  return a;
}

AssnPtr Parser::parse_assn_and(const DefineTable* d) {
  AssnPtr a = parse_assn_not(d);
  while (at_ident("and")) {
    lex_.next();
    a = mk_and(a, parse_assn_not(d));
  }
  return a;
}

AssnPtr Parser::parse_assn_not(const DefineTable* d) {
  if (at_ident("not")) {
    lex_.next();
    return mk_not(parse_assn_not(d));
  }
  return parse_assn_atom(d);
}

AssnPtr Parser::parse_quantifier(const DefineTable* d) {
  Token kw = lex_.next();  // forall | exists
  bool universal = kw.text == "forall";
  std::string var = expect_name();
  if (accept_ident("in")) {
    expect(Tok::LBracket, "'['");
    ExprPtr lo = parse_add();
    expect(Tok::Colon, "':'");
    ExprPtr hi = parse_add();
    expect(Tok::RBracket, "']'");
    expect(Tok::Colon, "':' before quantifier body");
    AssnPtr body = parse_assn_impl(d);
    return universal ? mk_forall_in(var, lo, hi, body, kw.loc)
                     : mk_exists_in(var, lo, hi, body, kw.loc);
  }
  expect(Tok::Colon, "':' before quantifier body");
  AssnPtr body = parse_assn_impl(d);
  return universal ? mk_forall(var, body, kw.loc) : mk_exists(var, body, kw.loc);
}

AssnPtr Parser::parse_assn_atom(const DefineTable* d) {
  const Token& t = lex_.peek();
  if (t.kind == Tok::Ident) {
    if (t.text == "forall" || t.text == "exists") return parse_quantifier(d);
    if (t.text == "sorted") {
      Token kw = lex_.next();
      expect(Tok::LParen, "'('");
      std::string arr = expect_name();
      expect(Tok::LBracket, "'['");
      ExprPtr lo = parse_add();
      expect(Tok::Colon, "':'");
      ExprPtr hi = parse_add();
      expect(Tok::RBracket, "']'");
      expect(Tok::RParen, "')'");
      ArrayRef r;
      r.base = arr;
      return mk_sorted(r, lo, hi, kw.loc);
    }
    if (t.text == "perm") {
      Token kw = lex_.next();
      expect(Tok::LParen, "'('");
      std::string a1 = expect_name();
      expect(Tok::Comma, "','");
      std::string a2 = expect_name();
      expect(Tok::Comma, "','");
      expect(Tok::LBracket, "'['");
      ExprPtr lo = parse_add();
      expect(Tok::Colon, "':'");
      ExprPtr hi = parse_add();
      expect(Tok::RBracket, "']'");
      expect(Tok::RParen, "')'");
      ArrayRef r1, r2;
      r1.base = a1;
      r2.base = a2;
      return mk_perm(r1, r2, lo, hi, kw.loc);
    }
    if (d && d->count(t.text)) {
      // abbreviation use, optionally NAME[targets := exprs]
      Token name = lex_.next();
      AssnPtr body = d->at(name.text);
      if (lex_.peek().kind == Tok::LBracket) {
        lex_.next();
        RawSubst raw = parse_subst_body(d);
        expect(Tok::RBracket, "']'");
        SubstMap m = resolve_subst_for_assertion(raw, body, name.loc);
        body = substitute(body, m);
      }
      return body;
    }
  }
  if (t.kind == Tok::LParen) {
    // Either a parenthesized assertion or a parenthesized arithmetic
    // subexpression; try the assertion reading and fall back when the
    // closing paren is followed by an expression continuation.
    Lexer snapshot = lex_;
    bool ok = true;
    AssnPtr inner;
    try {
      lex_.next();  // (
      inner = parse_assn_impl(d);
      expect(Tok::RParen, "')'");
    } catch (const ParseError&) {
      ok = false;
    }
    if (ok) {
      Tok k = lex_.peek().kind;
      bool expr_continues = k == Tok::Plus || k == Tok::Minus || k == Tok::Star ||
                            k == Tok::Lt || k == Tok::Le || k == Tok::Gt || k == Tok::Ge ||
                            k == Tok::EqSym || k == Tok::Ne;
      if (!(inner->kind == AssnKind::Atom && expr_continues)) return inner;
    }
    lex_ = snapshot;
  }
  // plain boolean expression atom (comparison level; the assertion grammar
  // owns the connectives)
  return mk_atom(parse_cmp());
}

RawSubst Parser::parse_subst_body(const DefineTable* d) {
  (void)d;
  RawSubst raw;
  std::vector<std::string> targets;
  targets.push_back(expect_name());
  while (lex_.peek().kind == Tok::Comma) {
    lex_.next();
    targets.push_back(expect_name());
  }
  expect(Tok::Assign, "':=' in substitution");
  std::vector<ExprPtr> exprs;
  exprs.push_back(parse_impl());
  while (lex_.peek().kind == Tok::Comma) {
    lex_.next();
    exprs.push_back(parse_impl());
  }
  if (targets.size() != exprs.size())
    throw ParseError(lex_.loc(), "substitution target/replacement count mismatch");
  for (size_t i = 0; i < targets.size(); ++i) raw.emplace_back(targets[i], exprs[i]);
  return raw;
}

SubstMap resolve_subst(const RawSubst& raw, const TypeEnv& env, SourceLoc loc) {
  SubstMap m;
  for (const auto& [name, e] : raw) {
    auto it = env.find(name);
    bool is_array = it != env.end() && it->second == Type::IntArray;
    if (is_array) {
      if (e->kind != ExprKind::Var)
        throw SubstError(loc, "array variable '" + name + "' must be replaced by an array name");
      ArrayRef r;
      r.base = e->name;
      m.arrays[name] = r;
    } else {
      m.scalars[name] = e;
    }
  }
  return m;
}

SubstMap resolve_subst_for_assertion(const RawSubst& raw, const AssnPtr& body, SourceLoc loc) {
  // classify each target by how the formula uses it
  TypeEnv env;
  for (const auto& [name, e] : raw) {
    TypeEnv probe;
    AssnPtr copy = body;
    try {
      assertion_typecheck(copy, probe);
    } catch (const TypeError&) {
      probe.clear();
    }
    auto it = probe.find(name);
    env[name] = it != probe.end() ? it->second : Type::Int;
  }
  return resolve_subst(raw, env, loc);
}

// ---- program-level type inference ----

namespace {

struct ProgTyper {
  TypeEnv env;
  std::vector<std::pair<SourceLoc, std::string>>* conflicts;
  bool changed = false;

  void conflict(const SourceLoc& loc, const std::string& msg) {
    if (conflicts) conflicts->emplace_back(loc, msg);
  }

  void bind(const std::string& name, Type t, const SourceLoc& loc) {
    if (t == Type::Unknown) return;
    auto it = env.find(name);
    if (it == env.end() || it->second == Type::Unknown) {
      env[name] = t;
      changed = true;
    } else if (it->second != t) {
      conflict(loc, "variable '" + name + "' used as " + type_name(t) + " but has type " +
                        type_name(it->second));
    }
  }

  Type type_of(const ExprPtr& e) {
    if (!e) return Type::Unknown;
    switch (e->kind) {
      case ExprKind::IntLit: return Type::Int;
      case ExprKind::BoolLit: return Type::Bool;
      case ExprKind::Var: {
        auto it = env.find(e->name);
        return it == env.end() ? Type::Unknown : it->second;
      }
      case ExprKind::Subscript: return Type::Int;
      case ExprKind::Unary: return e->un_op == UnOp::Neg ? Type::Int : Type::Bool;
      case ExprKind::Binary:
        switch (e->bin_op) {
          case BinOp::Add: case BinOp::Sub: case BinOp::Mul: case BinOp::Max:
            return Type::Int;
          default: return Type::Bool;
        }
      case ExprKind::Cond: {
        Type t = type_of(e->b);
        return t != Type::Unknown ? t : type_of(e->c);
      }
    }
    return Type::Unknown;
  }

  void note_var(const ExprPtr& e) {
    if (!e) return;
    if (e->kind == ExprKind::Var && !env.count(e->name)) env[e->name] = Type::Unknown;
    if (e->kind == ExprKind::Subscript) bind(e->array.base, Type::IntArray, e->loc);
    note_var(e->a);
    note_var(e->b);
    note_var(e->c);
  }

  void constrain(const ExprPtr& e, Type expected) {
    if (!e) return;
    note_var(e);
    switch (e->kind) {
      case ExprKind::IntLit:
        if (expected == Type::Bool) conflict(e->loc, "integer literal used as boolean");
        break;
      case ExprKind::BoolLit:
        if (expected == Type::Int) conflict(e->loc, "boolean literal used as integer");
        break;
      case ExprKind::Var:
        bind(e->name, expected, e->loc);
        break;
      case ExprKind::Subscript:
        bind(e->array.base, Type::IntArray, e->loc);
        constrain(e->a, Type::Int);
        if (expected == Type::Bool) conflict(e->loc, "array element used as boolean");
        break;
      case ExprKind::Unary:
        constrain(e->a, e->un_op == UnOp::Neg ? Type::Int : Type::Bool);
        if (e->un_op == UnOp::Neg && expected == Type::Bool)
          conflict(e->loc, "integer expression used as boolean");
        break;
      case ExprKind::Binary:
        switch (e->bin_op) {
          case BinOp::Add: case BinOp::Sub: case BinOp::Mul: case BinOp::Max:
            constrain(e->a, Type::Int);
            constrain(e->b, Type::Int);
            if (expected == Type::Bool)
              conflict(e->loc, "integer expression used as boolean");
            break;
          case BinOp::Lt: case BinOp::Le:
            constrain(e->a, Type::Int);
            constrain(e->b, Type::Int);
            break;
          case BinOp::Eq: {
            Type ta = type_of(e->a);
            Type tb = type_of(e->b);
            Type t = ta != Type::Unknown ? ta : tb;
            constrain(e->a, t);
            constrain(e->b, t);
            break;
          }
          default:
            constrain(e->a, Type::Bool);
            constrain(e->b, Type::Bool);
            break;
        }
        break;
      case ExprKind::Cond:
        constrain(e->a, Type::Bool);
        constrain(e->b, expected);
        constrain(e->c, expected);
        break;
    }
  }

  void walk(const StmtPtr& s, const Program& prog) {
    if (!s) return;
    switch (s->kind) {
      case StmtKind::Skip: break;
      case StmtKind::Assign:
        if (s->lhs_index) {
          bind(s->lhs_name, Type::IntArray, s->loc);
          constrain(s->lhs_index, Type::Int);
          constrain(s->exprs[0], Type::Int);
        } else {
          if (!env.count(s->lhs_name)) env[s->lhs_name] = Type::Unknown;
          Type t = type_of(s->exprs[0]);
          bind(s->lhs_name, t, s->loc);
          auto it = env.find(s->lhs_name);
          if (it != env.end() && it->second != Type::Unknown) {
            if (it->second == Type::IntArray)
              conflict(s->loc, "array variable '" + s->lhs_name + "' assigned as scalar");
            else
              constrain(s->exprs[0], it->second);
          }
        }
        break;
      case StmtKind::ParAssign:
      case StmtKind::Block:
        for (size_t i = 0; i < s->names.size() && i < s->exprs.size(); ++i) {
          if (!env.count(s->names[i])) env[s->names[i]] = Type::Unknown;
          Type t = type_of(s->exprs[i]);
          bind(s->names[i], t, s->loc);
          auto it = env.find(s->names[i]);
          if (it != env.end() && it->second != Type::Unknown)
            constrain(s->exprs[i], it->second);
        }
        if (s->kind == StmtKind::Block) walk(s->s1, prog);
        break;
      case StmtKind::Seq:
        walk(s->s1, prog);
        walk(s->s2, prog);
        break;
      case StmtKind::If:
        constrain(s->exprs[0], Type::Bool);
        walk(s->s1, prog);
        walk(s->s2, prog);
        break;
      case StmtKind::While:
        constrain(s->exprs[0], Type::Bool);
        walk(s->s1, prog);
        break;
      case StmtKind::Call: {
        const Decl* d = prog.find_decl(s->callee);
        if (d && d->formals.size() == s->exprs.size()) {
          for (size_t i = 0; i < s->exprs.size(); ++i) {
            auto it = env.find(d->formals[i]);
            Type tf = it == env.end() ? Type::Unknown : it->second;
            if (tf != Type::Unknown) constrain(s->exprs[i], tf);
            Type ta = type_of(s->exprs[i]);
            bind(d->formals[i], ta, s->loc);
          }
        } else {
          for (const auto& e : s->exprs) constrain(e, Type::Unknown);
        }
        break;
      }
      case StmtKind::Swap: {
        Type t0 = type_of(s->exprs[0]);
        Type t1 = type_of(s->exprs[1]);
        Type t = t0 != Type::Unknown ? t0 : t1;
        constrain(s->exprs[0], t);
        constrain(s->exprs[1], t);
        break;
      }
    }
  }
};

}  // namespace

void infer_program_types(Program& prog,
                         std::vector<std::pair<SourceLoc, std::string>>* conflicts) {
  ProgTyper ty;
  ty.conflicts = nullptr;  // suppress during fixpoint, report in final pass
  for (const auto& d : prog.decls)
    for (const auto& f : d.formals)
      if (!ty.env.count(f)) ty.env[f] = Type::Unknown;

  for (int round = 0; round < 64; ++round) {
    ty.changed = false;
    for (const auto& d : prog.decls) ty.walk(d.body, prog);
    if (prog.main) ty.walk(prog.main, prog);
    if (!ty.changed) break;
  }
  // default unresolved names to integer, then one reporting pass
  for (auto& [name, t] : ty.env)
    if (t == Type::Unknown) t = Type::Int;
  ty.conflicts = conflicts;
  for (const auto& d : prog.decls) ty.walk(d.body, prog);
  if (prog.main) ty.walk(prog.main, prog);
  prog.types = ty.env;
}

Program parse_program(const std::string& text, const std::string& filename) {
  Parser p(text, filename);
  Program prog = p.parse_program_file();
  infer_program_types(prog, nullptr);
  return prog;
}

}  // namespace rpv
