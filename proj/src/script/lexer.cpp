#include "lexer.hpp"

namespace kirby::script::detail {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

bool is_integer(std::string_view s) {
  if (!s.empty() && s[0] == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!is_digit(c)) return false;
  return true;
}

}  // namespace

bool is_identifier(std::string_view s) {
  if (s.empty() || !(is_alpha(s[0]) || s[0] == '_')) return false;
  for (char c : s)
    if (!(is_alpha(c) || is_digit(c) || c == '_')) return false;
  return true;
}

std::vector<Token> lex_line(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (is_space(c)) {
      ++i;
      continue;
    }
    if (c == '#') break;
    const SourcePos pos{line_no, i + 1};
    if (c == '"') {
      const std::size_t close = line.find('"', i + 1);
      if (close == std::string_view::npos)
        throw ParseError(pos, {"closing '\"'"}, "end of line");
      out.push_back({TokenKind::String, std::string(line.substr(i + 1, close - i - 1)), pos});
      i = close + 1;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j]) && line[j] != '#' && line[j] != '"') ++j;
    std::string text(line.substr(i, j - i));
    TokenKind kind = TokenKind::Word;
    if (text == "+")
      kind = TokenKind::Plus;
    else if (text == "-")
      kind = TokenKind::Minus;
    else if (is_integer(text))
      kind = TokenKind::Integer;
    out.push_back({kind, std::move(text), pos});
    i = j;
  }
  out.push_back({TokenKind::End, "", SourcePos{line_no, line.size() + 1}});
  return out;
}

}  // namespace kirby::script::detail
