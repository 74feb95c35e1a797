#include "lexer.hpp"

#include <cctype>

#include "fecheck/errors.hpp"

namespace fecheck::detail {

std::vector<Token> tokenize(std::string_view src, std::size_t first_line, std::size_t first_column) {
  std::vector<Token> out;
  std::size_t line = first_line;
  std::size_t column = first_column;
  std::size_t i = 0;
  auto advance = [&] {
    if (src[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    ++i;
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      continue;
    }
    const std::size_t l = line;
    const std::size_t col = column;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string text;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
        text += src[i];
        advance();
      }
      out.push_back({TokenKind::number, std::move(text), l, col});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string text;
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
        text += src[i];
        advance();
      }
      out.push_back({TokenKind::ident, std::move(text), l, col});
      continue;
    }
    TokenKind kind;
    switch (c) {
      case '(': kind = TokenKind::lparen; break;
      case ')': kind = TokenKind::rparen; break;
      case '[': kind = TokenKind::lbrack; break;
      case ']': kind = TokenKind::rbrack; break;
      case ',': kind = TokenKind::comma; break;
      case ';': kind = TokenKind::semicolon; break;
      case '+': kind = TokenKind::plus; break;
      case '-': kind = TokenKind::minus; break;
      case '*': kind = TokenKind::star; break;
      case '/': kind = TokenKind::slash; break;
      case '^': kind = TokenKind::caret; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", l, col);
    }
    out.push_back({kind, std::string(1, c), l, col});
    advance();
  }
  out.push_back({TokenKind::end, "", line, column});
  return out;
}

std::string describe(TokenKind kind) {
  switch (kind) {
    case TokenKind::number: return "number";
    case TokenKind::ident: return "identifier";
    case TokenKind::lparen: return "'('";
    case TokenKind::rparen: return "')'";
    case TokenKind::lbrack: return "'['";
    case TokenKind::rbrack: return "']'";
    case TokenKind::comma: return "','";
    case TokenKind::semicolon: return "';'";
    case TokenKind::plus: return "'+'";
    case TokenKind::minus: return "'-'";
    case TokenKind::star: return "'*'";
    case TokenKind::slash: return "'/'";
    case TokenKind::caret: return "'^'";
    case TokenKind::end: return "end of input";
  }
  return "token";
}

}  // namespace fecheck::detail
