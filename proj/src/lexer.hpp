#ifndef ILX_SRC_LEXER_HPP
#define ILX_SRC_LEXER_HPP

#include <string>
#include <string_view>
#include <vector>

namespace ilx::detail {

enum class Tok {
  Name,
  Number,
  Iri,
  AtPrefix,
  Bang,
  Question,
  LParen,
  RParen,
  Arrow,
  Less,
  Amp,
  Pipe,
  Equals,
  LBrace,
  RBrace,
  Colon,
  Slash,
  Newline,
  Invalid,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1;
  int column = 1;
  int length = 1;  // in code points, at least 1
};

// `#` comments are dropped; CR is whitespace. Newlines are significant.
std::vector<Token> tokenize(std::string_view text);

const char* describe(Tok t);

}  // namespace ilx::detail

#endif  // ILX_SRC_LEXER_HPP
