#include "lexer.hpp"

#include <algorithm>

namespace kirby::script {

using detail::Token;
using detail::TokenKind;

namespace {

std::string describe(const Token& t) {
  switch (t.kind) {
    case TokenKind::End: return "end of line";
    case TokenKind::String: return "\"" + t.text + "\"";
    default: return "'" + t.text + "'";
  }
}

std::string join_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (const auto& e : expected) out += (out.empty() ? "" : ", ") + e;
  return out;
}

class LineParser {
 public:
  explicit LineParser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  bool at_end() const { return peek().kind == TokenKind::End; }
  const Token& peek() const { return tokens_[pos_]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw ParseError(peek().pos, std::move(expected), describe(peek()));
  }

  std::string keyword(const std::vector<std::string>& options) {
    const Token& t = peek();
    if (t.kind == TokenKind::Word && std::find(options.begin(), options.end(), t.text) != options.end()) {
      ++pos_;
      return t.text;
    }
    fail(options);
  }

  bool accept(const std::string& word) {
    if (peek().kind == TokenKind::Word && peek().text == word) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string label() {
    const Token& t = peek();
    if (t.kind != TokenKind::Word || !detail::is_identifier(t.text)) fail({"label"});
    ++pos_;
    return t.text;
  }

  std::optional<std::string> optional_label() {
    if (at_end()) return std::nullopt;
    return label();
  }

  Integer integer() {
    const Token& t = peek();
    if (t.kind != TokenKind::Integer) fail({"integer"});
    ++pos_;
    return Integer(t.text);
  }

  std::vector<Integer> integers() {
    std::vector<Integer> out;
    while (!at_end()) out.push_back(integer());
    return out;
  }

  Sign sign() {
    const Token& t = peek();
    if (t.kind == TokenKind::Plus || t.kind == TokenKind::Minus) {
      ++pos_;
      return t.kind == TokenKind::Plus ? Sign::Plus : Sign::Minus;
    }
    fail({"'+'", "'-'"});
  }

  std::string path() {
    const Token& t = peek();
    if (!((t.kind == TokenKind::Word || t.kind == TokenKind::String || t.kind == TokenKind::Integer) &&
          !t.text.empty()))
      fail({"path"});
    ++pos_;
    return t.text;
  }

  void end() {
    if (!at_end()) fail({"end of line"});
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

const std::vector<std::string> kCommands = {
    "load",   "slide", "blowup",     "blowdown", "cancel12", "add3", "add4",
    "rbd",    "logt",  "invariants", "counts",   "assert",   "save"};

Command parse_command(LineParser& in) {
  const std::string cmd = in.keyword(kCommands);
  if (cmd == "load") {
    const std::string what = in.keyword({"cp", "bp", "chain", "file", "en_p"});
    Command out;
    if (what == "cp") {
      out = LoadCp{in.integer()};
    } else if (what == "bp") {
      out = LoadBp{in.integer()};
    } else if (what == "chain") {
      out = LoadChain{in.integers()};
    } else if (what == "file") {
      out = LoadFile{in.path()};
    } else {
      LoadEnp e;
      e.n = in.integer();
      e.p = in.integer();
      if (!in.at_end()) {
        in.keyword({"conjectural"});
        e.conjectural = true;
      }
      out = e;
    }
    in.end();
    return out;
  }
  if (cmd == "slide") {
    Slide s;
    s.handle = in.label();
    in.keyword({"over"});
    s.over = in.label();
    if (!in.at_end()) s.sign = in.sign();
    in.end();
    return s;
  }
  if (cmd == "blowup") {
    BlowUp b{in.sign()};
    in.end();
    return b;
  }
  if (cmd == "blowdown") {
    BlowDown b;
    b.handle = in.label();
    if (!in.at_end()) {
      in.keyword({"strict"});
      b.strict = true;
    }
    in.end();
    return b;
  }
  if (cmd == "cancel12") {
    Cancel12 c;
    c.dotted = in.label();
    c.meridian = in.label();
    in.end();
    return c;
  }
  if (cmd == "add3") {
    Add3 a{in.integer()};
    in.end();
    return a;
  }
  if (cmd == "add4") {
    in.end();
    return Add4{};
  }
  if (cmd == "rbd") {
    RationalBlowdown r;
    r.p = in.integer();
    r.attachment = in.optional_label();
    in.end();
    return r;
  }
  if (cmd == "logt") {
    LogTransform l;
    l.p = in.integer();
    if (!in.at_end()) {
      l.cusp = in.label();
      l.attachment = in.label();
    }
    in.end();
    return l;
  }
  if (cmd == "invariants") {
    in.end();
    return Invariants{};
  }
  if (cmd == "counts") {
    in.end();
    return Counts{};
  }
  if (cmd == "save") {
    Save s{in.path()};
    in.end();
    return s;
  }

  const std::string what = in.keyword({"counts", "chi", "h1", "lens", "det", "signature"});
  Command out;
  if (what == "counts") {
    AssertCounts a;
    for (int i = 0; i < 5; ++i) a.counts.push_back(in.integer());
    out = a;
  } else if (what == "chi") {
    out = AssertChi{in.integer()};
  } else if (what == "h1") {
    AssertH1 a;
    a.free_rank = in.integer();
    a.torsion = in.integers();
    out = a;
  } else if (what == "lens") {
    AssertLens a;
    a.p = in.integer();
    a.q = in.integer();
    out = a;
  } else if (what == "det") {
    out = AssertDet{in.integer()};
  } else {
    AssertSignature a;
    a.positive = in.integer();
    a.zero = in.integer();
    a.negative = in.integer();
    out = a;
  }
  in.end();
  return out;
}

}  // namespace

ParseError::ParseError(SourcePos pos, std::vector<std::string> expected, std::string found)
    : std::runtime_error("line " + std::to_string(pos.line) + ", column " +
                         std::to_string(pos.column) + ": expected " + join_expected(expected) +
                         ", found " + found),
      pos_(pos),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

bool same_program(const MoveScript& a, const MoveScript& b) {
  if (a.statements.size() != b.statements.size()) return false;
  for (std::size_t i = 0; i < a.statements.size(); ++i)
    if (!(a.statements[i].command == b.statements[i].command)) return false;
  return true;
}

MoveScript parse(const std::string& text, std::size_t first_line) {
  MoveScript out;
  std::size_t start = 0;
  std::size_t line_no = first_line;
  while (start <= text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string::npos) stop = text.size();
    auto tokens = detail::lex_line(std::string_view(text).substr(start, stop - start), line_no);
    if (tokens.front().kind != TokenKind::End) {
      const SourcePos pos = tokens.front().pos;
      LineParser line(std::move(tokens));
      out.statements.push_back({pos, parse_command(line)});
    }
    start = stop + 1;
    ++line_no;
  }
  return out;
}

}  // namespace kirby::script
