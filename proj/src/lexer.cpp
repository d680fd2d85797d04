#include "rpv/lexer.hpp"

#include <cctype>

namespace rpv {

Lexer::Lexer(std::string source, std::string filename)
    : src_(std::move(source)), file_(std::move(filename)) {}

const Token& Lexer::peek(int ahead) {
  ensure(static_cast<size_t>(ahead) + 1);
  return buffer_[static_cast<size_t>(ahead)];
}

Token Lexer::next() {
  ensure(1);
  Token t = buffer_.front();
  buffer_.erase(buffer_.begin());
  return t;
}

SourceLoc Lexer::loc() { return peek().loc; }

void Lexer::ensure(size_t n) {
  while (buffer_.size() < n) buffer_.push_back(lex_one());
}

Token Lexer::lex_one() {
  // skip whitespace and // comments
  for (;;) {
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t' ||
                                  src_[pos_] == '\r' || src_[pos_] == '\n')) {
      if (src_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
    if (pos_ + 1 < src_.size() && src_[pos_] == '/' && src_[pos_ + 1] == '/') {
      while (pos_ < src_.size() && src_[pos_] != '\n') {
        ++pos_;
        ++col_;
      }
      continue;
    }
    break;
  }

  Token t;
  t.loc = SourceLoc{line_, col_, file_};
  if (pos_ >= src_.size()) {
    t.kind = Tok::End;
    return t;
  }

  char c = src_[pos_];
  auto advance = [&](int n) {
    pos_ += static_cast<size_t>(n);
    col_ += n;
  };

  if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
    size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_' ||
            src_[pos_] == '\'')) {
      ++pos_;
      ++col_;
    }
    t.kind = Tok::Ident;
    t.text = src_.substr(start, pos_ - start);
    return t;
  }

  if (std::isdigit(static_cast<unsigned char>(c))) {
    size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
      ++col_;
    }
    t.kind = Tok::Int;
    t.text = src_.substr(start, pos_ - start);
    t.value = std::stoll(t.text);
    return t;
  }

  auto two = [&](char c2) { return pos_ + 1 < src_.size() && src_[pos_ + 1] == c2; };

  switch (c) {
    case '(': t.kind = Tok::LParen; advance(1); return t;
    case ')': t.kind = Tok::RParen; advance(1); return t;
    case '[': t.kind = Tok::LBracket; advance(1); return t;
    case ']': t.kind = Tok::RBracket; advance(1); return t;
    case '{': t.kind = Tok::LBrace; advance(1); return t;
    case '}': t.kind = Tok::RBrace; advance(1); return t;
    case ',': t.kind = Tok::Comma; advance(1); return t;
    case ';': t.kind = Tok::Semi; advance(1); return t;
    case '+': t.kind = Tok::Plus; advance(1); return t;
    case '*': t.kind = Tok::Star; advance(1); return t;
    case '-':
      if (two('>')) { t.kind = Tok::Arrow; advance(2); return t; }
      t.kind = Tok::Minus; advance(1); return t;
    case ':':
      if (two('=')) { t.kind = Tok::Assign; advance(2); return t; }
      if (two(':')) { t.kind = Tok::DoubleColon; advance(2); return t; }
      t.kind = Tok::Colon; advance(1); return t;
    case '<':
      if (two('=')) { t.kind = Tok::Le; advance(2); return t; }
      t.kind = Tok::Lt; advance(1); return t;
    case '>':
      if (two('=')) { t.kind = Tok::Ge; advance(2); return t; }
      t.kind = Tok::Gt; advance(1); return t;
    case '=': t.kind = Tok::EqSym; advance(1); return t;
    case '!':
      if (two('=')) { t.kind = Tok::Ne; advance(2); return t; }
      break;
    default: break;
  }
  throw ParseError(t.loc, std::string("unexpected character '") + c + "'");
}

}  // namespace rpv
