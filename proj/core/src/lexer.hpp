#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace fecheck::detail {

enum class TokenKind { number, ident, lparen, rparen, lbrack, rbrack, comma, semicolon, plus, minus, star, slash, caret, end };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

/// Splits source text into tokens; the last token is always `end`.
/// Throws ParseError on a character outside the language.
std::vector<Token> tokenize(std::string_view src, std::size_t first_line = 1, std::size_t first_column = 1);

std::string describe(TokenKind kind);

}  // namespace fecheck::detail
