#pragma once

// Move scripts (.ks): one statement per line, '#' comments.
//
//   load cp P | load bp P | load chain W... | load file PATH | load en_p N P [conjectural]
//   slide LABEL over LABEL [+|-]
//   blowup +|-
//   blowdown LABEL [strict]
//   cancel12 DOTTED LABEL
//   add3 K
//   add4
//   rbd P [ATTACHMENT]
//   logt P [CUSP ATTACHMENT]
//   invariants
//   counts
//   assert counts H0 H1 H2 H3 H4 | assert chi N | assert h1 RANK [TORSION...]
//   assert lens P Q | assert det N | assert signature N+ N0 N-
//   save PATH
//
// Integers are arbitrary precision. Paths are bare words or "quoted".

#include <kirby/certificate.hpp>
#include <kirby/handlebody.hpp>

#include <json.hpp>

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace kirby::script {

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

struct LoadCp { Integer p; bool operator==(const LoadCp&) const = default; };
struct LoadBp { Integer p; bool operator==(const LoadBp&) const = default; };
struct LoadChain { std::vector<Integer> weights; bool operator==(const LoadChain&) const = default; };
struct LoadFile { std::string path; bool operator==(const LoadFile&) const = default; };
struct LoadEnp { Integer n; Integer p; bool conjectural = false; bool operator==(const LoadEnp&) const = default; };
struct Slide { std::string handle; std::string over; Sign sign = Sign::Plus; bool operator==(const Slide&) const = default; };
struct BlowUp { Sign sign = Sign::Minus; bool operator==(const BlowUp&) const = default; };
struct BlowDown { std::string handle; bool strict = false; bool operator==(const BlowDown&) const = default; };
struct Cancel12 { std::string dotted; std::string meridian; bool operator==(const Cancel12&) const = default; };
struct Add3 { Integer k; bool operator==(const Add3&) const = default; };
struct Add4 {bool operator==(const Add4&) const = default; };
struct RationalBlowdown { Integer p; std::optional<std::string> attachment; bool operator==(const RationalBlowdown&) const = default; };
struct LogTransform { Integer p; std::optional<std::string> cusp; std::optional<std::string> attachment; bool operator==(const LogTransform&) const = default; };
struct Invariants {bool operator==(const Invariants&) const = default; };
struct Counts {bool operator==(const Counts&) const = default; };
struct AssertCounts { std::vector<Integer> counts; bool operator==(const AssertCounts&) const = default; };  // exactly five
struct AssertChi { Integer chi; bool operator==(const AssertChi&) const = default; };
struct AssertH1 { Integer free_rank; std::vector<Integer> torsion; bool operator==(const AssertH1&) const = default; };
struct AssertLens { Integer p; Integer q; bool operator==(const AssertLens&) const = default; };
struct AssertDet { Integer det; bool operator==(const AssertDet&) const = default; };
struct AssertSignature { Integer positive; Integer zero; Integer negative; bool operator==(const AssertSignature&) const = default; };
struct Save { std::string path; bool operator==(const Save&) const = default; };

using Command =
    std::variant<LoadCp, LoadBp, LoadChain, LoadFile, LoadEnp, Slide, BlowUp, BlowDown, Cancel12,
                 Add3, Add4, RationalBlowdown, LogTransform, Invariants, Counts, AssertCounts,
                 AssertChi, AssertH1, AssertLens, AssertDet, AssertSignature, Save>;

struct Statement {
  SourcePos pos;
  Command command;
};

struct MoveScript {
  std::vector<Statement> statements;
};

/// Compares commands only; source positions are ignored.
bool same_program(const MoveScript& a, const MoveScript& b);

class ParseError : public std::runtime_error {
 public:
  ParseError(SourcePos pos, std::vector<std::string> expected, std::string found);

  SourcePos pos() const { return pos_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  SourcePos pos_;
  std::vector<std::string> expected_;
  std::string found_;
};

/// Throws ParseError, and nothing else, on any input.
MoveScript parse(const std::string& text, std::size_t first_line = 1);

/// Canonical text: one statement per line, single spaces, paths quoted,
/// comments dropped.
std::string format(const MoveScript& s);
std::string format(const Command& c);

struct TranscriptEntry {
  SourcePos pos;
  std::string echo;
  HandleCounts counts;
  long long chi = 0;
  std::string report;             // invariants / counts / certificate output
  std::optional<bool> assertion;  // set for assert statements
  std::string expected, actual;   // assertion operands, as printed
  std::optional<Certificate> certificate;  // rbd / logt
};

struct Failure {
  SourcePos pos;
  std::string message;
};

struct Transcript {
  std::vector<TranscriptEntry> entries;
  std::optional<Failure> failure;  // runtime error or failed assertion

  bool ok() const { return !failure.has_value(); }
  std::string to_text() const;
  nlohmann::ordered_json to_json() const;
};

struct ExecuteOptions {
  std::filesystem::path base_dir = ".";  // for load file / save
};

/// Interpreter state: one decomposition.
class Session {
 public:
  explicit Session(HandleDecomposition initial = {}, ExecuteOptions options = {});

  const HandleDecomposition& state() const { return state_; }

  /// Applies one statement. Throws kirby::Error on operation failures; a
  /// failed assertion is reported through the entry, not thrown.
  TranscriptEntry apply(const Statement& s);

 private:
  HandleDecomposition state_;
  ExecuteOptions options_;
};

/// Runs statements in order and stops at the first runtime error or failed
/// assertion. Deterministic.
Transcript execute(const MoveScript& s, std::optional<HandleDecomposition> initial = std::nullopt,
                   ExecuteOptions options = {});

/// Line-by-line interpreter loop with a counts/chi prompt. Errors are printed
/// and the session continues. Returns 0 when no assertion failed.
int run_repl(std::istream& in, std::ostream& out, ExecuteOptions options = {});

}  // namespace kirby::script
