#pragma once

#include <kirby/handlebody.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace kirby {

enum class CheckStatus { Pass, Fail, Indeterminate };

/// Where an expected value comes from: a statement of the published result,
/// or a value derived from it by arithmetic.
enum class Basis { Published, Derived };

const char* to_string(CheckStatus s);
const char* to_string(Basis b);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Indeterminate;
  std::string expected;
  std::string actual;
  Basis basis = Basis::Derived;
};

/// Machine-checkable record of a pipeline run: the moves performed, the
/// resulting handle counts and every invariant check with its outcome.
struct Certificate {
  std::string construction;
  std::vector<std::string> moves;
  HandleCounts counts;
  long long chi = 0;
  std::vector<Check> checks;
  bool conjectural = false;

  /// Records a check that passes iff expected == actual.
  const Check& expect(std::string name, const std::string& expected, const std::string& actual,
                      Basis basis);
  const Check& expect(std::string name, long long expected, long long actual, Basis basis) {
    return expect(std::move(name), std::to_string(expected), std::to_string(actual), basis);
  }
  void move(std::string description) { moves.push_back(std::move(description)); }
  /// Appends another certificate's moves and checks.
  void absorb(const Certificate& other);

  bool passed() const;

  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

nlohmann::ordered_json counts_to_json(const HandleCounts& c);

}  // namespace kirby
