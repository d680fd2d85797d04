// Hand-written lexer for program sources, assertions, and proof files.
#pragma once

#include <string>
#include <vector>

#include "rpv/diagnostics.hpp"

namespace rpv {

enum class Tok {
  End,
  Ident,
  Int,
  // punctuation
  LParen, RParen, LBracket, RBracket, LBrace, RBrace,
  Comma, Semi, Colon, Assign,       // := vs : disambiguated by lexer
  DoubleColon,                      // ::
  Plus, Minus, Star, Arrow,         // -> (implication)
  Lt, Le, Gt, Ge, EqSym, Ne,
};

struct Token {
  Tok kind;
  std::string text;   // identifier text or literal digits
  long long value = 0;
  SourceLoc loc;
};

class Lexer {
 public:
  Lexer(std::string source, std::string filename);

  const Token& peek(int ahead = 0);
  Token next();
  SourceLoc loc();

 private:
  void ensure(size_t n);
  Token lex_one();

  std::string src_;
  std::string file_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  std::vector<Token> buffer_;
};

}  // namespace rpv
