#include "script_gen.hpp"

#include <kirby/decomposition_io.hpp>
#include <kirby/plumbing.hpp>

#include <doctest.h>

#include <filesystem>
#include <sstream>

using namespace kirby;
using namespace kirby::script;
using namespace kirby::test;

namespace {

ParseError parse_error(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no parse error for: " << text);
  return ParseError({}, {}, "");
}

Transcript run(const std::string& text) { return execute(parse(text)); }

}  // namespace

TEST_CASE("parse examples") {
  const auto s = parse("load cp 5\nassert det 25");
  REQUIRE(s.statements.size() == 2);
  CHECK(std::get<LoadCp>(s.statements[0].command).p == 5);
  CHECK(std::get<AssertDet>(s.statements[1].command).det == 25);
  CHECK(s.statements[1].pos.line == 2);
  CHECK(s.statements[1].pos.column == 1);

  CHECK(parse("").statements.empty());
  CHECK(parse("\n\n  # only a comment\n").statements.empty());

  const auto e = parse_error("slide a over");
  CHECK(e.pos().line == 1);
  CHECK(e.pos().column == 13);
  CHECK(e.expected() == std::vector<std::string>{"label"});
  CHECK(e.found() == "end of line");
}

TEST_CASE("parse errors carry positions and expected sets") {
  auto e = parse_error("load cp 3\n  frobnicate");
  CHECK(e.pos().line == 2);
  CHECK(e.pos().column == 3);
  CHECK(e.expected().size() == 13);

  e = parse_error("load xyz");
  CHECK(e.expected() == std::vector<std::string>{"cp", "bp", "chain", "file", "en_p"});

  e = parse_error("blowup");
  CHECK(e.expected() == std::vector<std::string>{"'+'", "'-'"});

  e = parse_error("add4 7");
  CHECK(e.expected() == std::vector<std::string>{"end of line"});

  e = parse_error("assert counts 1 0 2");
  CHECK(e.expected() == std::vector<std::string>{"integer"});

  e = parse_error("save \"unterminated");
  CHECK(e.pos().column == 6);

  e = parse_error("slide 9a over b");
  CHECK(e.expected() == std::vector<std::string>{"label"});
}

TEST_CASE("format examples") {
  CHECK(format(parse("load  cp   5")) == "load cp 5\n");
  CHECK(format(parse("load cp 5 # five\n# gone\n")) == "load cp 5\n");
  CHECK(format(parse("slide a over b")) == "slide a over b +\n");
  CHECK(format(parse("save out.json")) == "save \"out.json\"\n");
  for (const char* text : {"load cp 5\nassert det 25", "load cp 3\nassert det 9\nassert signature 0 0 2"}) {
    const auto once = parse(text);
    CHECK(same_program(parse(format(once)), once));
    CHECK(format(parse(format(once))) == format(once));
  }
}

TEST_CASE("format/parse round trip on generated scripts") {
  Rng rng(71);
  for (int t = 0; t < 1000; ++t) {
    const MoveScript s = random_script(rng);
    const auto text = noisy_text(rng, s);
    const auto parsed = parse(text);
    CHECK(same_program(parsed, s));
    CHECK(same_program(parse(format(parsed)), parsed));
  }
}

TEST_CASE("fuzzed input yields structured errors only") {
  Rng rng(72);
  std::size_t errors = 0;
  for (int t = 0; t < 3000; ++t) {
    const std::string text = fuzz_input(rng);
    try {
      parse(text);
    } catch (const ParseError& e) {
      ++errors;
      CHECK(e.pos().line >= 1);
      CHECK(e.pos().column >= 1);
      CHECK(!e.expected().empty());
    }
  }
  CHECK(errors > 0);
}

TEST_CASE("execute examples") {
  SUBCASE("C_3 determinant and signature") {
    const auto t = run("load cp 3\nassert det 9\nassert signature 0 0 2");
    CHECK(t.ok());
    CHECK(t.entries.size() == 3);
    CHECK(t.entries[1].assertion == true);
  }
  SUBCASE("main theorem, (n, p, q) = (1, 2, 3)") {
    const auto t = run("load en_p 1 2\nlogt 3\nassert counts 1 0 12 2 1");
    CHECK(t.ok());
    CHECK(t.entries.back().counts == HandleCounts{1, 0, 12, 2, 1});
  }
  SUBCASE("blowdown of a -4 framed handle") {
    const auto t = run("load cp 2\nblowdown k1");
    REQUIRE(!t.ok());
    CHECK(t.entries.size() == 1);
    CHECK(t.failure->pos.line == 2);
    CHECK(t.failure->message.find("framing -4 is not ±1") != std::string::npos);
    CHECK(t.failure->message.find("framing-not-unit") == 0);
  }
  SUBCASE("failed assertion stops execution with a diff") {
    const auto t = run("load cp 3\nassert chi 4\ncounts");
    REQUIRE(!t.ok());
    CHECK(t.entries.size() == 2);
    CHECK(t.entries[1].expected == "4");
    CHECK(t.entries[1].actual == "3");
    CHECK(t.failure->message == "assert FAIL: expected 4, got 3");
  }
}

TEST_CASE("execute covers every command") {
  CHECK(run("load bp 5\nassert h1 0 5\nassert chi 1\ncancel12 d1 k1").ok() == false);  // incidence 5
  CHECK(run("load bp 3\nassert counts 1 1 1 0 0\ninvariants").ok());
  CHECK(run("load chain -5 -2\nassert lens 9 2\nassert lens 9 5\nblowup -\nassert signature 0 0 3").ok());
  CHECK(run("blowup +\nslide k1 over k1").ok() == false);
  CHECK(run("blowup +\nblowup -\nslide k1 over k2 -\nassert det -1\nblowdown k2 strict\nassert counts 1 0 1 0 0").ok());
  CHECK(run("load en_p 1 3\nlogt 4 cusp att\nadd3 0\nassert h1 0\nassert chi 12").ok());
  CHECK(run("load en_p 1 3\nlogt 4 nope att").ok() == false);
  CHECK(run("load chain -6 -2 -2 -1\nrbd 4 k4\nassert counts 1 0 1 0 0\nadd3 1\nadd4\nassert chi 2").ok());
  CHECK(run("load chain -6 -2 -2\nrbd 4").ok() == false);
  CHECK(run("load en_p 1 5").ok() == false);
  CHECK(run("load en_p 1 5 conjectural\ncounts").ok());
  CHECK(run("add3 -1").ok() == false);
  CHECK(run("add4\nadd4").ok() == false);
  CHECK(run("load bp 3\nassert det 1").ok() == false);  // unknown entries
}

TEST_CASE("execute is deterministic") {
  const std::string text = "load en_p 2 2\nlogt 5\ninvariants\nassert counts 1 0 24 2 1\n";
  const auto a = run(text), b = run(text);
  CHECK(a.to_text() == b.to_text());
  CHECK(a.to_json().dump() == b.to_json().dump());
}

TEST_CASE("load and save decomposition files") {
  const auto dir = std::filesystem::temp_directory_path() / "kirby_script_test";
  std::filesystem::create_directories(dir);
  ExecuteOptions opts;
  opts.base_dir = dir;
  auto t = execute(parse("load cp 4\nsave \"c4.json\""), std::nullopt, opts);
  REQUIRE(t.ok());
  CHECK(load_decomposition_file((dir / "c4.json").string()).identical(c_p(4)));
  t = execute(parse("load file c4.json\nassert det -16"), std::nullopt, opts);
  CHECK(t.ok());
  t = execute(parse("load file missing.json"), std::nullopt, opts);
  CHECK(!t.ok());
  std::filesystem::remove_all(dir);
}

TEST_CASE("initial decomposition") {
  const auto t = execute(parse("assert counts 1 0 2 0 0"), c_p(3));
  CHECK(t.ok());
}

TEST_CASE("transcript output") {
  const auto t = run("load cp 2\ncounts");
  const std::string text = t.to_text();
  CHECK(text.find("[1:1] load cp 2") != std::string::npos);
  CHECK(text.find("one 0-handle ∪ one 2-handle") != std::string::npos);
  CHECK(text.find("OK (2 statements)") != std::string::npos);
  const auto j = t.to_json();
  CHECK(j["entries"].size() == 2);
  CHECK(j["ok"] == true);
  CHECK(j["failure"].is_null());
}

TEST_CASE("repl") {
  std::istringstream in("load cp 3\nslide a over\nblowdown k1\nassert det 9\n");
  std::ostringstream out;
  CHECK(run_repl(in, out) == 0);
  const std::string text = out.str();
  CHECK(text.find("(1, 0, 2, 0, 0) chi 3> ") != std::string::npos);
  CHECK(text.find("syntax error: line 2, column 13") != std::string::npos);
  CHECK(text.find("error: framing-not-unit") != std::string::npos);
  CHECK(text.find("assert pass") != std::string::npos);

  std::istringstream failing("assert chi 2\n");
  std::ostringstream sink;
  CHECK(run_repl(failing, sink) == 1);
}
