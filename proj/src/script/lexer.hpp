#pragma once

#include <kirby/script.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace kirby::script::detail {

enum class TokenKind { Word, Integer, Plus, Minus, String, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  SourcePos pos;
};

/// Splits one source line into tokens, dropping a trailing '#' comment. The
/// returned vector always ends with an End token.
std::vector<Token> lex_line(std::string_view line, std::size_t line_no);

bool is_identifier(std::string_view s);

}  // namespace kirby::script::detail
